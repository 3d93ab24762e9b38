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
#include <span>
#include <vector>

namespace dmix {

// Planar H x W x C image of doubles. Element (c, y, x) lives at
// data[(c * height + y) * width + x]. Values are nominally in [0, 1]; the
// range is only enforced by clamp(). Every element is finite.
class ImageTensor {
 public:
  ImageTensor() = default;
  ImageTensor(int height, int width, int channels, double fill = 0.0);
  // Throws DimensionError if data.size() != height * width * channels and
  // ParameterError if any element is not finite.
  ImageTensor(int height, int width, int channels, std::vector<double> data);

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  std::size_t plane_size() const {
    return static_cast<std::size_t>(height_) * width_;
  }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double at(int c, int y, int x) const { return data_[index(c, y, x)]; }
  double& at(int c, int y, int x) { return data_[index(c, y, x)]; }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }
  std::span<const double> plane(int c) const {
    return std::span<const double>(data_).subspan(c * plane_size(),
                                                  plane_size());
  }
  std::span<double> plane(int c) {
    return std::span<double>(data_).subspan(c * plane_size(), plane_size());
  }

  bool same_shape(const ImageTensor& other) const {
    return height_ == other.height_ && width_ == other.width_ &&
           channels_ == other.channels_;
  }

  // Clamps every element into [0, 1] in place.
  void clamp();
  bool all_finite() const;

  friend bool operator==(const ImageTensor&, const ImageTensor&) = default;

 private:
  std::size_t index(int c, int y, int x) const {
    return (static_cast<std::size_t>(c) * height_ + y) * width_ + x;
  }

  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

// Throws DimensionError naming `what` when the shapes differ.
void require_same_shape(const ImageTensor& a, const ImageTensor& b,
                        const char* what);

double max_abs_diff(const ImageTensor& a, const ImageTensor& b);

inline constexpr double kSimplexTolerance = 1e-6;

// Probability vector over K classes: entries >= 0, sum within 1e-6 of 1.
class SoftLabel {
 public:
  SoftLabel() = default;
  // Throws ValidationError when the vector is empty or off the simplex.
  explicit SoftLabel(std::vector<double> probs);

  static SoftLabel one_hot(std::size_t index, std::size_t classes);

  std::size_t size() const { return probs_.size(); }
  std::span<const double> probs() const { return probs_; }
  double operator[](std::size_t k) const { return probs_[k]; }

  friend bool operator==(const SoftLabel&, const SoftLabel&) = default;

 private:
  std::vector<double> probs_;
};

}  // namespace dmix
