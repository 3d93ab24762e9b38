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

#include <vector>

#include "dmix/core_mix.h"

namespace dmix {

// Per-channel spatial mean and population standard deviation.
struct ChannelStats {
  std::vector<double> mean;
  std::vector<double> std;
};

ChannelStats channel_stats(const ImageTensor& u);

inline constexpr double kAdainEpsilon = 1e-5;

// Adaptive instance normalisation: content of u_i, per-channel statistics of
// u_j.
//   out = sigma(u_j) * (u_i - mu(u_i)) / max(sigma(u_i), eps) + mu(u_j)
// eps floors the content deviation, so a constant content channel maps to
// the constant mu(u_j) while adain(u, u) reproduces u up to rounding.
ImageTensor adain(const ImageTensor& u_i, const ImageTensor& u_j);

// The four content/style recombinations of a pair. `ij` carries the content
// of u_i and the style of u_j.
struct StyleFeatures {
  ImageTensor ii;
  ImageTensor jj;
  ImageTensor ij;
  ImageTensor ji;
};

StyleFeatures style_features(const ImageTensor& u_i, const ImageTensor& u_j);

// Common pattern t u_ii + (lambda_v - t) u_ij + (1 - lambda_v) u_jj.
ImageTensor style_common(const StyleFeatures& f, double lambda_v, double t);

// Noise-prone style residual u_ji - u_jj. Both operands of its mix are this
// same tensor, so its lambda_delta-mix is the tensor itself.
ImageTensor style_residual(const StyleFeatures& f);

// Style-based decoupled mix. The image is
//   common + (1 - alpha) * residual, clamped to [0, 1];
// with alpha = 1 the residual is fully suppressed. The label is
// decoupled_label(y_i, y_j, lambda_v, lambda_delta, alpha). Throws
// ParameterError if style_t > lambda_v.
MixResult style_mixup(const ImageTensor& u_i, const ImageTensor& u_j,
                      const SoftLabel& y_i, const SoftLabel& y_j,
                      const MixParams& params);

}  // namespace dmix
