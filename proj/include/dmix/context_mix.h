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

#include <span>
#include <vector>

#include "dmix/core_mix.h"

namespace dmix {

// Soft H x W foreground mask, 1 = foreground. Construction only checks the
// shape and finiteness; validate_mask() establishes the [0, 1] range.
class MaskTensor {
 public:
  MaskTensor() = default;
  MaskTensor(int height, int width, double fill);
  MaskTensor(int height, int width, std::vector<double> values);

  static MaskTensor ones(int height, int width) {
    return MaskTensor(height, width, 1.0);
  }

  int height() const { return height_; }
  int width() const { return width_; }
  double at(int y, int x) const { return values_[y * width_ + x]; }
  double& at(int y, int x) { return values_[y * width_ + x]; }
  std::span<const double> values() const { return values_; }

  friend bool operator==(const MaskTensor&, const MaskTensor&) = default;

 private:
  int height_ = 0;
  int width_ = 0;
  std::vector<double> values_;
};

// Values may stray this far outside [0, 1] and still be clamped back in.
inline constexpr double kMaskClampTolerance = 1e-3;

// Returns the mask with near-range values clamped into [0, 1]. Throws
// MaskError when the mask does not match x spatially or a value lies more
// than kMaskClampTolerance outside [0, 1].
MaskTensor validate_mask(const MaskTensor& mask, const ImageTensor& x);

// Context-aware decoupled mix before clamping:
//   [lambda_v m_i x_i + (1 - lambda_v) m_j x_j]
// + [lambda_delta (1 - m_i) x_i + (1 - lambda_delta) (1 - m_j) x_j]
ImageTensor cd_mix_unclamped(const ImageTensor& x_i, const MaskTensor& m_i,
                             const ImageTensor& x_j, const MaskTensor& m_j,
                             double lambda_v, double lambda_delta);

// Clamped image plus decoupled_label(y_i, y_j, lambda_v, lambda_delta, alpha).
MixResult cd_mixup(const ImageTensor& x_i, const MaskTensor& m_i,
                   const ImageTensor& x_j, const MaskTensor& m_j,
                   const SoftLabel& y_i, const SoftLabel& y_j,
                   const MixParams& params);

}  // namespace dmix
