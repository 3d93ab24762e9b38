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

#include "dmix/freq_mix.h"

#include <algorithm>
#include <cmath>

#include "dmix/errors.h"

namespace dmix {

FrequencyMask::FrequencyMask(int height, int width, int low_rows,
                             int low_cols)
    : height_(height), width_(width), low_rows_(low_rows),
      low_cols_(low_cols),
      low_(static_cast<std::size_t>(height) * width, 0) {
  if (height < 1 || width < 1) {
    throw DimensionError("frequency mask needs positive dimensions");
  }
  if (low_rows < 0 || low_rows > height || low_cols < 0 || low_cols > width) {
    throw ParameterError("low-frequency rectangle larger than the spectrum");
  }
  const int row_start = height / 2 - low_rows / 2;
  const int col_start = width / 2 - low_cols / 2;
  for (int sr = row_start; sr < row_start + low_rows; ++sr) {
    const int u = (sr - height / 2 + height) % height;
    for (int sc = col_start; sc < col_start + low_cols; ++sc) {
      const int v = (sc - width / 2 + width) % width;
      low_[u * width + v] = 1;
    }
  }
}

bool FrequencyMask::is_low_shifted(int su, int sv) const {
  const int u = (su - height_ / 2 + height_) % height_;
  const int v = (sv - width_ / 2 + width_) % width_;
  return is_low(u, v);
}

std::size_t FrequencyMask::low_count() const {
  return static_cast<std::size_t>(std::count(low_.begin(), low_.end(), 1));
}

FrequencyMask low_freq_mask(int height, int width, double alpha) {
  require_in_range(alpha, 0.0, 1.0, "alpha");
  const int rows = static_cast<int>(std::round(alpha * height));
  const int cols = static_cast<int>(std::round(alpha * width));
  return FrequencyMask(height, width, rows, cols);
}

ImageTensor fd_mix_unclamped(const ImageTensor& x_i, const ImageTensor& x_j,
                             const MixParams& params,
                             PhaseSource phase_source) {
  require_same_shape(x_i, x_j, "fd_mixup");
  params.validate();

  const Spectrum spec_i = dft2(x_i);
  const Spectrum spec_j = dft2(x_j);
  const SpectralPlanes amp_i = amplitude(spec_i);
  const SpectralPlanes amp_j = amplitude(spec_j);
  const SpectralPlanes phi =
      phase(phase_source == PhaseSource::kFirst ? spec_i : spec_j);
  const FrequencyMask band =
      low_freq_mask(x_i.height(), x_i.width(), params.alpha);

  SpectralPlanes mixed(x_i.height(), x_i.width(), x_i.channels());
  for (int c = 0; c < x_i.channels(); ++c) {
    for (int u = 0; u < x_i.height(); ++u) {
      for (int v = 0; v < x_i.width(); ++v) {
        const double w =
            band.is_low(u, v) ? params.lambda_v : params.lambda_delta;
        mixed.at(c, u, v) = w * amp_i.at(c, u, v) + (1.0 - w) * amp_j.at(c, u, v);
      }
    }
  }

  const Spectrum recombined = hermitian_part(from_polar(mixed, phi));
  return idft2(recombined, kMixedSpectrumImagTolerance);
}

MixResult fd_mixup(const ImageTensor& x_i, const ImageTensor& x_j,
                   const SoftLabel& y_i, const SoftLabel& y_j,
                   const MixParams& params, PhaseSource phase_source) {
  ImageTensor image = fd_mix_unclamped(x_i, x_j, params, phase_source);
  image.clamp();
  return {std::move(image), mix_labels(y_i, y_j, params.lambda_v)};
}

}  // namespace dmix
