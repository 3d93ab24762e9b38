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

#include <cstddef>
#include <vector>

#include "dmix/tensor.h"

namespace dmix {

// Complex H x W x C spectrum stored as two planar arrays with the same
// layout as ImageTensor. Bin (c, u, v) is in natural DFT order: u = 0 is DC.
struct Spectrum {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<double> real;
  std::vector<double> imag;

  Spectrum() = default;
  Spectrum(int h, int w, int c)
      : height(h), width(w), channels(c),
        real(static_cast<std::size_t>(h) * w * c, 0.0),
        imag(static_cast<std::size_t>(h) * w * c, 0.0) {}

  std::size_t index(int c, int u, int v) const {
    return (static_cast<std::size_t>(c) * height + u) * width + v;
  }
  std::size_t size() const { return real.size(); }
  bool same_shape(const Spectrum& o) const {
    return height == o.height && width == o.width && channels == o.channels;
  }
};

// Real H x W x C planes derived from a spectrum (amplitude, phase). Values
// are not confined to [0, 1].
using SpectralPlanes = ImageTensor;

// Forward 2D DFT per channel, kernel exp(-j 2 pi (h u / H + w v / W)), no
// normalisation. Power-of-two axes use a radix-2 FFT; other lengths use
// direct summation.
Spectrum dft2(const ImageTensor& x);

// Inverse 2D DFT with 1 / (H W) normalisation, keeping the complex result.
Spectrum idft2_complex(const Spectrum& s);

inline constexpr double kDefaultImagTolerance = 1e-6;

// Inverse 2D DFT returning the real part. Throws NumericalError if the
// discarded imaginary part exceeds `imag_tolerance` anywhere. The result is
// not clamped.
ImageTensor idft2(const Spectrum& s,
                  double imag_tolerance = kDefaultImagTolerance);

// sqrt(R^2 + I^2) per bin.
SpectralPlanes amplitude(const Spectrum& s);

// atan2(I, R) per bin, in (-pi, pi].
SpectralPlanes phase(const Spectrum& s);

// (A cos phi, A sin phi) per bin.
Spectrum from_polar(const SpectralPlanes& amp, const SpectralPlanes& phi);

// Projection onto conjugate-symmetric spectra:
// (S(u, v) + conj(S(-u mod H, -v mod W))) / 2. The real part of the inverse
// transform is unchanged by this projection; the imaginary part becomes zero
// up to rounding.
Spectrum hermitian_part(const Spectrum& s);

// Max |imag| of the inverse transform; useful as an integrity metric.
double max_abs_imag(const Spectrum& s);

}  // namespace dmix
