// Copyright 2026 The dmix Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <vector>

#include "dmix/context_mix.h"
#include "dmix/pipeline.h"

namespace dmix {

inline constexpr int kGridSeparator = 2;
inline constexpr double kGridSeparatorValue = 0.5;

// Settings that stay fixed across the tiles of a parameter grid.
struct GridOptions {
  double lambda_delta = 1.0;
  PhaseSource phase_source = PhaseSource::kFirst;
  // Context mode; all-foreground when absent.
  std::optional<MaskTensor> mask_i;
  std::optional<MaskTensor> mask_j;
  // Style mode: t = style_t_fraction * lambda_v.
  double style_t_fraction = 0.5;
  // CutMix box placement.
  std::uint64_t seed = 0;
};

// Tiles mixed images in a |lambdas| x |alphas| grid: row r, column c is the
// operator at lambda_v = lambdas[r], alpha = alphas[c]. Tiles are separated
// and framed by kGridSeparator-pixel borders of kGridSeparatorValue, so the
// output is (R H + (R + 1) 2) x (C W + (C + 1) 2). Throws ParameterError on
// an empty list.
ImageTensor render_grid(const ImageTensor& x_i, const ImageTensor& x_j,
                        const std::vector<double>& lambdas,
                        const std::vector<double>& alphas, MixMode mode,
                        const GridOptions& options = {});

}  // namespace dmix
