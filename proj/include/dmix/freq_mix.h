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

#include <cstdint>
#include <vector>

#include "dmix/core_mix.h"
#include "dmix/fourier.h"

namespace dmix {

// Frequency-band partition of an H x W spectrum. The low (common-pattern)
// region is a rectangle of round(alpha H) x round(alpha W) bins centred on DC
// once the spectrum is shifted by half a period (DC at (H/2, W/2)). Storage is
// in natural DFT order so it can be applied to dft2 output directly.
class FrequencyMask {
 public:
  FrequencyMask(int height, int width, int low_rows, int low_cols);

  int height() const { return height_; }
  int width() const { return width_; }
  int low_rows() const { return low_rows_; }
  int low_cols() const { return low_cols_; }

  // (u, v) in natural DFT order.
  bool is_low(int u, int v) const { return low_[u * width_ + v] != 0; }
  // (su, sv) in half-period-shifted order, DC at (height/2, width/2).
  bool is_low_shifted(int su, int sv) const;
  std::size_t low_count() const;

 private:
  int height_;
  int width_;
  int low_rows_;
  int low_cols_;
  std::vector<std::uint8_t> low_;
};

// Throws ParameterError unless alpha is in [0, 1].
FrequencyMask low_freq_mask(int height, int width, double alpha);

// Which source image contributes the phase spectrum of an amplitude mix.
enum class PhaseSource { kFirst, kSecond };

inline constexpr double kMixedSpectrumImagTolerance = 1e-3;

// Image half of Frequency-aware Decoupled-Mixup, before clamping.
// Amplitudes of x_i and x_j are mixed with lambda_v inside the low-frequency
// rectangle (sized by params.alpha) and lambda_delta outside it, then
// recombined with the phase of the selected source and inverted.
//
// An even-sized centred rectangle is not symmetric under (u, v) -> (-u, -v),
// so the mixed spectrum is generally not conjugate-symmetric. Its inverse is
// taken as the real part, computed by first projecting onto the
// conjugate-symmetric part; the imaginary residue that remains must then be
// below 1e-3 or NumericalError is thrown.
ImageTensor fd_mix_unclamped(const ImageTensor& x_i, const ImageTensor& x_j,
                             const MixParams& params,
                             PhaseSource phase_source);

// fd_mix_unclamped, clamped to [0, 1]. The label is
// mix_labels(y_i, y_j, lambda_v): the ratio used for the low band.
MixResult fd_mixup(const ImageTensor& x_i, const ImageTensor& x_j,
                   const SoftLabel& y_i, const SoftLabel& y_j,
                   const MixParams& params,
                   PhaseSource phase_source = PhaseSource::kFirst);

// Preset common-pattern weights.
inline constexpr double kPresetAlphaLow = 0.2;
inline constexpr double kPresetAlphaHigh = 0.6;

}  // namespace dmix
