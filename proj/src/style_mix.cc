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

#include "dmix/style_mix.h"

#include <algorithm>
#include <cmath>

#include "dmix/errors.h"

namespace dmix {

ChannelStats channel_stats(const ImageTensor& u) {
  ChannelStats stats;
  stats.mean.resize(u.channels());
  stats.std.resize(u.channels());
  const double n = static_cast<double>(u.plane_size());
  for (int c = 0; c < u.channels(); ++c) {
    const auto p = u.plane(c);
    double sum = 0.0;
    for (double v : p) sum += v;
    const double mean = sum / n;
    // Two-pass variance; cheap and avoids cancellation.
    double sq = 0.0;
    for (double v : p) sq += (v - mean) * (v - mean);
    stats.mean[c] = mean;
    stats.std[c] = std::sqrt(sq / n);
  }
  return stats;
}

ImageTensor adain(const ImageTensor& u_i, const ImageTensor& u_j) {
  require_same_shape(u_i, u_j, "adain");
  const ChannelStats content = channel_stats(u_i);
  const ChannelStats style = channel_stats(u_j);
  ImageTensor out(u_i.height(), u_i.width(), u_i.channels());
  for (int c = 0; c < u_i.channels(); ++c) {
    const double scale =
        style.std[c] / std::max(content.std[c], kAdainEpsilon);
    const auto in = u_i.plane(c);
    auto o = out.plane(c);
    for (std::size_t k = 0; k < in.size(); ++k) {
      o[k] = scale * (in[k] - content.mean[c]) + style.mean[c];
    }
  }
  return out;
}

StyleFeatures style_features(const ImageTensor& u_i, const ImageTensor& u_j) {
  require_same_shape(u_i, u_j, "style_features");
  return {adain(u_i, u_i), adain(u_j, u_j), adain(u_i, u_j), adain(u_j, u_i)};
}

ImageTensor style_common(const StyleFeatures& f, double lambda_v, double t) {
  require_in_range(lambda_v, 0.0, 1.0, "lambda_v");
  require_in_range(t, 0.0, lambda_v, "style_t");
  ImageTensor out(f.ii.height(), f.ii.width(), f.ii.channels());
  auto ii = f.ii.data();
  auto ij = f.ij.data();
  auto jj = f.jj.data();
  auto o = out.data();
  for (std::size_t k = 0; k < o.size(); ++k) {
    o[k] = t * ii[k] + (lambda_v - t) * ij[k] + (1.0 - lambda_v) * jj[k];
  }
  return out;
}

ImageTensor style_residual(const StyleFeatures& f) {
  ImageTensor out(f.ji.height(), f.ji.width(), f.ji.channels());
  auto ji = f.ji.data();
  auto jj = f.jj.data();
  auto o = out.data();
  for (std::size_t k = 0; k < o.size(); ++k) o[k] = ji[k] - jj[k];
  return out;
}

MixResult style_mixup(const ImageTensor& u_i, const ImageTensor& u_j,
                      const SoftLabel& y_i, const SoftLabel& y_j,
                      const MixParams& params) {
  require_same_shape(u_i, u_j, "style_mixup");
  params.validate();
  const StyleFeatures f = style_features(u_i, u_j);
  ImageTensor image = style_common(f, params.lambda_v, params.style_t);
  if (params.alpha < 1.0) {
    const ImageTensor residual = style_residual(f);
    const double keep = 1.0 - params.alpha;
    auto o = image.data();
    auto r = residual.data();
    for (std::size_t k = 0; k < o.size(); ++k) o[k] += keep * r[k];
  }
  image.clamp();
  return {std::move(image),
          decoupled_label(y_i, y_j, params.lambda_v, params.lambda_delta,
                          params.alpha)};
}

}  // namespace dmix
