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

#include "dmix/core_mix.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "dmix/errors.h"

namespace dmix {

namespace {

void require_same_classes(const SoftLabel& a, const SoftLabel& b) {
  if (a.size() != b.size()) {
    throw DimensionError("label length mismatch: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
}

std::vector<double> mix_probs(const SoftLabel& y_i, const SoftLabel& y_j,
                              double lambda) {
  std::vector<double> out(y_i.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = lambda * y_i[k] + (1.0 - lambda) * y_j[k];
  }
  return out;
}

}  // namespace

void require_in_range(double value, double lo, double hi, const char* name) {
  if (!(value >= lo && value <= hi)) {
    throw ParameterError(std::string(name) + "=" + std::to_string(value) +
                         " outside [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  }
}

void MixParams::validate() const {
  require_in_range(lambda_v, 0.0, 1.0, "lambda_v");
  require_in_range(lambda_delta, 0.0, 1.0, "lambda_delta");
  require_in_range(alpha, 0.0, 1.0, "alpha");
  if (!(beta_shape > 0.0) || !std::isfinite(beta_shape)) {
    throw ParameterError("beta_shape must be > 0");
  }
  require_in_range(style_t, 0.0, lambda_v, "style_t");
}

ImageTensor convex_mix(const ImageTensor& x_i, const ImageTensor& x_j,
                       double lambda) {
  require_same_shape(x_i, x_j, "convex_mix");
  require_in_range(lambda, 0.0, 1.0, "lambda");
  ImageTensor out(x_i.height(), x_i.width(), x_i.channels());
  auto a = x_i.data();
  auto b = x_j.data();
  auto o = out.data();
  for (std::size_t k = 0; k < o.size(); ++k) {
    o[k] = lambda * a[k] + (1.0 - lambda) * b[k];
  }
  return out;
}

SoftLabel mix_labels(const SoftLabel& y_i, const SoftLabel& y_j,
                     double lambda) {
  require_same_classes(y_i, y_j);
  require_in_range(lambda, 0.0, 1.0, "lambda");
  return SoftLabel(mix_probs(y_i, y_j, lambda));
}

ImageTensor decoupled_mix_unclamped(const ImageTensor& v_i,
                                   const ImageTensor& delta_i,
                                   const ImageTensor& v_j,
                                   const ImageTensor& delta_j,
                                   double lambda_v, double lambda_delta) {
  require_same_shape(v_i, v_j, "decoupled_mix");
  require_same_shape(v_i, delta_i, "decoupled_mix");
  require_same_shape(v_i, delta_j, "decoupled_mix");
  require_in_range(lambda_v, 0.0, 1.0, "lambda_v");
  require_in_range(lambda_delta, 0.0, 1.0, "lambda_delta");

  ImageTensor out(v_i.height(), v_i.width(), v_i.channels());
  auto vi = v_i.data();
  auto vj = v_j.data();
  auto di = delta_i.data();
  auto dj = delta_j.data();
  auto o = out.data();
  for (std::size_t k = 0; k < o.size(); ++k) {
    const double common = lambda_v * vi[k] + (1.0 - lambda_v) * vj[k];
    const double noise = lambda_delta * di[k] + (1.0 - lambda_delta) * dj[k];
    o[k] = common + noise;
  }
  return out;
}

ImageTensor decoupled_mix(const ImageTensor& v_i, const ImageTensor& delta_i,
                          const ImageTensor& v_j, const ImageTensor& delta_j,
                          double lambda_v, double lambda_delta) {
  ImageTensor out = decoupled_mix_unclamped(v_i, delta_i, v_j, delta_j,
                                            lambda_v, lambda_delta);
  out.clamp();
  return out;
}

SoftLabel decoupled_label(const SoftLabel& y_i, const SoftLabel& y_j,
                          double lambda_v, double lambda_delta, double alpha) {
  require_same_classes(y_i, y_j);
  require_in_range(lambda_v, 0.0, 1.0, "lambda_v");
  require_in_range(lambda_delta, 0.0, 1.0, "lambda_delta");
  require_in_range(alpha, 0.0, 1.0, "alpha");
  const std::vector<double> common = mix_probs(y_i, y_j, lambda_v);
  const std::vector<double> noise = mix_probs(y_i, y_j, lambda_delta);
  std::vector<double> out(y_i.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = alpha * common[k] + (1.0 - alpha) * noise[k];
  }
  return SoftLabel(std::move(out));
}

double sample_lambda(RngStream& rng, double beta_shape) {
  if (!(beta_shape > 0.0) || !std::isfinite(beta_shape)) {
    throw ParameterError("beta_shape must be > 0");
  }
  // Beta(a, a) = X / (X + Y) with X, Y ~ Gamma(a, 1).
  std::gamma_distribution<double> gamma(beta_shape, 1.0);
  const double x = gamma(rng);
  const double y = gamma(rng);
  const double sum = x + y;
  if (sum > 0.0) return x / sum;
  // Both gammas underflowed (tiny shape): the Beta mass sits at {0, 1}.
  return rng.uniform() < 0.5 ? 0.0 : 1.0;
}

CutMixResult cutmix(const ImageTensor& x_i, const ImageTensor& x_j,
                    const SoftLabel& y_i, const SoftLabel& y_j, double lambda,
                    RngStream& rng) {
  require_same_shape(x_i, x_j, "cutmix");
  require_same_classes(y_i, y_j);
  require_in_range(lambda, 0.0, 1.0, "lambda");

  const int height = x_i.height();
  const int width = x_i.width();
  const double cut_ratio = std::sqrt(1.0 - lambda);
  const int cut_w = static_cast<int>(width * cut_ratio);
  const int cut_h = static_cast<int>(height * cut_ratio);
  const int cx = static_cast<int>(rng.uniform_index(width));
  const int cy = static_cast<int>(rng.uniform_index(height));

  Box box;
  box.x0 = std::clamp(cx - cut_w / 2, 0, width);
  box.x1 = std::clamp(cx + cut_w / 2, 0, width);
  box.y0 = std::clamp(cy - cut_h / 2, 0, height);
  box.y1 = std::clamp(cy + cut_h / 2, 0, height);

  CutMixResult result;
  result.image = x_i;
  for (int c = 0; c < x_i.channels(); ++c) {
    for (int y = box.y0; y < box.y1; ++y) {
      for (int x = box.x0; x < box.x1; ++x) {
        result.image.at(c, y, x) = x_j.at(c, y, x);
      }
    }
  }
  result.box = box;
  result.lambda_actual =
      1.0 - static_cast<double>(box.area()) /
                (static_cast<double>(height) * static_cast<double>(width));
  result.label = mix_labels(y_i, y_j, result.lambda_actual);
  return result;
}

}  // namespace dmix
