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

#include "dmix/tensor.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dmix/errors.h"

namespace dmix {

namespace {

void check_dims(int height, int width, int channels) {
  if (height < 1 || width < 1 || channels < 1) {
    throw DimensionError("image dimensions must be positive, got " +
                         std::to_string(height) + "x" + std::to_string(width) +
                         "x" + std::to_string(channels));
  }
}

std::string shape_str(const ImageTensor& t) {
  return std::to_string(t.height()) + "x" + std::to_string(t.width()) + "x" +
         std::to_string(t.channels());
}

}  // namespace

ImageTensor::ImageTensor(int height, int width, int channels, double fill)
    : height_(height), width_(width), channels_(channels) {
  check_dims(height, width, channels);
  if (!std::isfinite(fill)) throw ParameterError("non-finite fill value");
  data_.assign(static_cast<std::size_t>(height) * width * channels, fill);
}

ImageTensor::ImageTensor(int height, int width, int channels,
                         std::vector<double> data)
    : height_(height), width_(width), channels_(channels),
      data_(std::move(data)) {
  check_dims(height, width, channels);
  if (data_.size() != static_cast<std::size_t>(height) * width * channels) {
    throw DimensionError("image data length " + std::to_string(data_.size()) +
                         " does not match " + shape_str(*this));
  }
  if (!all_finite()) throw ParameterError("image contains non-finite values");
}

void ImageTensor::clamp() {
  for (double& v : data_) v = std::clamp(v, 0.0, 1.0);
}

bool ImageTensor::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

void require_same_shape(const ImageTensor& a, const ImageTensor& b,
                        const char* what) {
  if (!a.same_shape(b)) {
    throw DimensionError(std::string(what) + ": shape " + shape_str(a) +
                         " vs " + shape_str(b));
  }
}

double max_abs_diff(const ImageTensor& a, const ImageTensor& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) {
    worst = std::max(worst, std::abs(da[i] - db[i]));
  }
  return worst;
}

SoftLabel::SoftLabel(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("soft label must have K >= 1");
  double sum = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw ValidationError("soft label entries must be finite and >= 0");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    throw ValidationError("soft label sums to " + std::to_string(sum) +
                          ", expected 1");
  }
}

SoftLabel SoftLabel::one_hot(std::size_t index, std::size_t classes) {
  if (index >= classes) {
    throw ValidationError("class index " + std::to_string(index) +
                          " out of range for K=" + std::to_string(classes));
  }
  std::vector<double> probs(classes, 0.0);
  probs[index] = 1.0;
  return SoftLabel(std::move(probs));
}

}  // namespace dmix
