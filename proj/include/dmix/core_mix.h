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

#include "dmix/rng.h"
#include "dmix/tensor.h"

namespace dmix {

// Every free scalar of a decoupled mix.
//   lambda_v      mixing ratio for the common (discriminative) pattern
//   lambda_delta  mixing ratio for the noise-prone component
//   alpha         label weight of the common pattern; in frequency mode also
//                 the fraction of the spectrum treated as low frequency
//   beta_shape    shape of the symmetric Beta used to draw lambda_v
//   style_t       share of lambda_v given to the un-restyled content (style
//                 mode only), 0 <= style_t <= lambda_v
struct MixParams {
  double lambda_v = 0.5;
  double lambda_delta = 0.5;
  double alpha = 1.0;
  double beta_shape = 1.0;
  double style_t = 0.0;

  // Throws ParameterError on any out-of-range field.
  void validate() const;
};

// Output of every mixing operator: the synthetic image and its fused label.
struct MixResult {
  ImageTensor image;
  SoftLabel label;
};

// Throws ParameterError unless lo <= value <= hi.
void require_in_range(double value, double lo, double hi, const char* name);

// lambda * x_i + (1 - lambda) * x_j, elementwise. Not clamped: a convex
// combination of in-range images is already in range.
ImageTensor convex_mix(const ImageTensor& x_i, const ImageTensor& x_j,
                       double lambda);

SoftLabel mix_labels(const SoftLabel& y_i, const SoftLabel& y_j,
                     double lambda);

// M_{lambda_v}(v_i, v_j) + M_{lambda_delta}(delta_i, delta_j) without the
// final clamp. With v = x and delta = 0 this is bitwise convex_mix.
ImageTensor decoupled_mix_unclamped(const ImageTensor& v_i,
                                   const ImageTensor& delta_i,
                                   const ImageTensor& v_j,
                                   const ImageTensor& delta_j,
                                   double lambda_v, double lambda_delta);

// decoupled_mix_unclamped followed by a clamp to [0, 1]. Clamping happens
// once, after the two terms are summed.
ImageTensor decoupled_mix(const ImageTensor& v_i, const ImageTensor& delta_i,
                          const ImageTensor& v_j, const ImageTensor& delta_j,
                          double lambda_v, double lambda_delta);

// alpha * M_{lambda_v}(y_i, y_j) + (1 - alpha) * M_{lambda_delta}(y_i, y_j).
SoftLabel decoupled_label(const SoftLabel& y_i, const SoftLabel& y_j,
                          double lambda_v, double lambda_delta, double alpha);

// Draw from Beta(beta_shape, beta_shape). Advances `rng`.
double sample_lambda(RngStream& rng, double beta_shape);

// Half-open pixel rectangle [x0, x1) x [y0, y1).
struct Box {
  int x0 = 0;
  int y0 = 0;
  int x1 = 0;
  int y1 = 0;

  long area() const {
    return static_cast<long>(x1 - x0) * static_cast<long>(y1 - y0);
  }
};

struct CutMixResult {
  ImageTensor image;
  SoftLabel label;
  Box box;
  // 1 - box area / (H * W); the weight actually given to y_i.
  double lambda_actual = 1.0;
};

// CutMix baseline: a box with side ratio sqrt(1 - lambda), centred at a
// uniformly drawn pixel and clipped to the image, is pasted from x_j into
// x_i. The label uses the realised area ratio.
CutMixResult cutmix(const ImageTensor& x_i, const ImageTensor& x_j,
                    const SoftLabel& y_i, const SoftLabel& y_j, double lambda,
                    RngStream& rng);

}  // namespace dmix
