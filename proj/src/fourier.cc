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

#include "dmix/fourier.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "dmix/errors.h"

namespace dmix {

namespace {

using Complex = std::complex<double>;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// One-dimensional transform of a fixed length and direction. Twiddles are
// tabulated from exact integer phase indices so that long transforms do not
// accumulate angle error.
class Dft1d {
 public:
  Dft1d(int n, bool inverse) : n_(n), twiddle_(n) {
    const double sign = inverse ? 1.0 : -1.0;
    for (int k = 0; k < n; ++k) {
      const double angle = sign * 2.0 * std::numbers::pi * k / n;
      twiddle_[k] = Complex(std::cos(angle), std::sin(angle));
    }
    if (is_power_of_two(n)) {
      bit_reverse_.resize(n);
      int bits = 0;
      while ((1 << bits) < n) ++bits;
      for (int i = 0; i < n; ++i) {
        int r = 0;
        for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1) << (bits - 1 - b);
        bit_reverse_[i] = r;
      }
    } else {
      scratch_.resize(n);
    }
  }

  void operator()(Complex* data) {
    if (!bit_reverse_.empty()) {
      radix2(data);
    } else {
      direct(data);
    }
  }

 private:
  void radix2(Complex* data) {
    for (int i = 0; i < n_; ++i) {
      const int j = bit_reverse_[i];
      if (i < j) std::swap(data[i], data[j]);
    }
    for (int len = 2; len <= n_; len <<= 1) {
      const int half = len / 2;
      const int stride = n_ / len;
      for (int start = 0; start < n_; start += len) {
        for (int k = 0; k < half; ++k) {
          const Complex t = twiddle_[k * stride] * data[start + k + half];
          const Complex u = data[start + k];
          data[start + k] = u + t;
          data[start + k + half] = u - t;
        }
      }
    }
  }

  void direct(Complex* data) {
    for (int k = 0; k < n_; ++k) {
      Complex acc(0.0, 0.0);
      long idx = 0;
      for (int t = 0; t < n_; ++t) {
        acc += data[t] * twiddle_[idx];
        idx += k;
        if (idx >= n_) idx -= n_;
      }
      scratch_[k] = acc;
    }
    std::copy(scratch_.begin(), scratch_.end(), data);
  }

  int n_;
  std::vector<Complex> twiddle_;
  std::vector<int> bit_reverse_;
  std::vector<Complex> scratch_;
};

// Row-column 2D transform of one H x W plane, in place.
void transform_plane(std::vector<Complex>& plane, int height, int width,
                     bool inverse) {
  Dft1d row_dft(width, inverse);
  for (int y = 0; y < height; ++y) row_dft(plane.data() + y * width);

  Dft1d col_dft(height, inverse);
  std::vector<Complex> column(height);
  for (int x = 0; x < width; ++x) {
    for (int y = 0; y < height; ++y) column[y] = plane[y * width + x];
    col_dft(column.data());
    for (int y = 0; y < height; ++y) plane[y * width + x] = column[y];
  }
}

Spectrum transform(const Spectrum& in, bool inverse) {
  Spectrum out(in.height, in.width, in.channels);
  const std::size_t plane_size =
      static_cast<std::size_t>(in.height) * in.width;
  const double scale = inverse ? 1.0 / static_cast<double>(plane_size) : 1.0;
  std::vector<Complex> plane(plane_size);
  for (int c = 0; c < in.channels; ++c) {
    const std::size_t base = c * plane_size;
    for (std::size_t k = 0; k < plane_size; ++k) {
      plane[k] = Complex(in.real[base + k], in.imag[base + k]);
    }
    transform_plane(plane, in.height, in.width, inverse);
    for (std::size_t k = 0; k < plane_size; ++k) {
      out.real[base + k] = plane[k].real() * scale;
      out.imag[base + k] = plane[k].imag() * scale;
    }
  }
  return out;
}

void check_spectrum(const Spectrum& s) {
  if (s.height < 1 || s.width < 1 || s.channels < 1 ||
      s.real.size() != s.imag.size() ||
      s.real.size() != static_cast<std::size_t>(s.height) * s.width *
                           s.channels) {
    throw DimensionError("malformed spectrum");
  }
}

}  // namespace

Spectrum dft2(const ImageTensor& x) {
  Spectrum in(x.height(), x.width(), x.channels());
  auto d = x.data();
  std::copy(d.begin(), d.end(), in.real.begin());
  return transform(in, /*inverse=*/false);
}

Spectrum idft2_complex(const Spectrum& s) {
  check_spectrum(s);
  return transform(s, /*inverse=*/true);
}

ImageTensor idft2(const Spectrum& s, double imag_tolerance) {
  Spectrum spatial = idft2_complex(s);
  double worst = 0.0;
  for (double v : spatial.imag) worst = std::max(worst, std::abs(v));
  if (worst > imag_tolerance) {
    throw NumericalError("inverse DFT imaginary residue " +
                         std::to_string(worst) + " exceeds tolerance " +
                         std::to_string(imag_tolerance));
  }
  return ImageTensor(s.height, s.width, s.channels, std::move(spatial.real));
}

SpectralPlanes amplitude(const Spectrum& s) {
  check_spectrum(s);
  std::vector<double> out(s.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = std::hypot(s.real[k], s.imag[k]);
  }
  return SpectralPlanes(s.height, s.width, s.channels, std::move(out));
}

SpectralPlanes phase(const Spectrum& s) {
  check_spectrum(s);
  std::vector<double> out(s.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    // atan2 returns -pi for (negative, -0.0); fold onto the half-open range.
    double phi = std::atan2(s.imag[k], s.real[k]);
    if (phi <= -std::numbers::pi) phi = std::numbers::pi;
    out[k] = phi;
  }
  return SpectralPlanes(s.height, s.width, s.channels, std::move(out));
}

Spectrum from_polar(const SpectralPlanes& amp, const SpectralPlanes& phi) {
  require_same_shape(amp, phi, "from_polar");
  Spectrum out(amp.height(), amp.width(), amp.channels());
  auto a = amp.data();
  auto p = phi.data();
  for (std::size_t k = 0; k < out.size(); ++k) {
    out.real[k] = a[k] * std::cos(p[k]);
    out.imag[k] = a[k] * std::sin(p[k]);
  }
  return out;
}

Spectrum hermitian_part(const Spectrum& s) {
  check_spectrum(s);
  Spectrum out(s.height, s.width, s.channels);
  for (int c = 0; c < s.channels; ++c) {
    for (int u = 0; u < s.height; ++u) {
      const int mu = (s.height - u) % s.height;
      for (int v = 0; v < s.width; ++v) {
        const int mv = (s.width - v) % s.width;
        const std::size_t k = s.index(c, u, v);
        const std::size_t m = s.index(c, mu, mv);
        out.real[k] = 0.5 * (s.real[k] + s.real[m]);
        out.imag[k] = 0.5 * (s.imag[k] - s.imag[m]);
      }
    }
  }
  return out;
}

double max_abs_imag(const Spectrum& s) {
  const Spectrum spatial = idft2_complex(s);
  double worst = 0.0;
  for (double v : spatial.imag) worst = std::max(worst, std::abs(v));
  return worst;
}

}  // namespace dmix
