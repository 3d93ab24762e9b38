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

#include "dmix/context_mix.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "dmix/errors.h"

namespace dmix {

MaskTensor::MaskTensor(int height, int width, double fill)
    : MaskTensor(height, width,
                 std::vector<double>(static_cast<std::size_t>(
                                         std::max(height, 0)) *
                                         std::max(width, 0),
                                     fill)) {}

MaskTensor::MaskTensor(int height, int width, std::vector<double> values)
    : height_(height), width_(width), values_(std::move(values)) {
  if (height < 1 || width < 1 ||
      values_.size() != static_cast<std::size_t>(height) * width) {
    throw MaskError("mask data does not match " + std::to_string(height) +
                    "x" + std::to_string(width));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw MaskError("mask contains non-finite values");
  }
}

MaskTensor validate_mask(const MaskTensor& mask, const ImageTensor& x) {
  if (mask.height() != x.height() || mask.width() != x.width()) {
    throw MaskError("mask is " + std::to_string(mask.height()) + "x" +
                    std::to_string(mask.width()) + " but image is " +
                    std::to_string(x.height()) + "x" +
                    std::to_string(x.width()));
  }
  std::vector<double> values(mask.values().begin(), mask.values().end());
  for (double& v : values) {
    if (v < -kMaskClampTolerance || v > 1.0 + kMaskClampTolerance) {
      throw MaskError("mask value " + std::to_string(v) + " outside [0, 1]");
    }
    v = std::clamp(v, 0.0, 1.0);
  }
  return MaskTensor(mask.height(), mask.width(), std::move(values));
}

ImageTensor cd_mix_unclamped(const ImageTensor& x_i, const MaskTensor& m_i,
                             const ImageTensor& x_j, const MaskTensor& m_j,
                             double lambda_v, double lambda_delta) {
  require_same_shape(x_i, x_j, "cd_mixup");
  require_in_range(lambda_v, 0.0, 1.0, "lambda_v");
  require_in_range(lambda_delta, 0.0, 1.0, "lambda_delta");
  const MaskTensor fg_i = validate_mask(m_i, x_i);
  const MaskTensor fg_j = validate_mask(m_j, x_j);

  ImageTensor out(x_i.height(), x_i.width(), x_i.channels());
  for (int c = 0; c < x_i.channels(); ++c) {
    for (int y = 0; y < x_i.height(); ++y) {
      for (int x = 0; x < x_i.width(); ++x) {
        const double a = x_i.at(c, y, x);
        const double b = x_j.at(c, y, x);
        const double mi = fg_i.at(y, x);
        const double mj = fg_j.at(y, x);
        const double foreground =
            lambda_v * mi * a + (1.0 - lambda_v) * mj * b;
        const double background = lambda_delta * (1.0 - mi) * a +
                                  (1.0 - lambda_delta) * (1.0 - mj) * b;
        out.at(c, y, x) = foreground + background;
      }
    }
  }
  return out;
}

MixResult cd_mixup(const ImageTensor& x_i, const MaskTensor& m_i,
                   const ImageTensor& x_j, const MaskTensor& m_j,
                   const SoftLabel& y_i, const SoftLabel& y_j,
                   const MixParams& params) {
  params.validate();
  ImageTensor image = cd_mix_unclamped(x_i, m_i, x_j, m_j, params.lambda_v,
                                       params.lambda_delta);
  image.clamp();
  return {std::move(image),
          decoupled_label(y_i, y_j, params.lambda_v, params.lambda_delta,
                          params.alpha)};
}

}  // namespace dmix
