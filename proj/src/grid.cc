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

#include "dmix/grid.h"

#include "dmix/errors.h"
#include "dmix/freq_mix.h"
#include "dmix/style_mix.h"

namespace dmix {

namespace {

ImageTensor render_tile(const ImageTensor& x_i, const ImageTensor& x_j,
                        double lambda_v, double alpha, MixMode mode,
                        const GridOptions& options, std::size_t tile_index) {
  // Tiles only need images; a single-class label keeps the operators happy.
  const SoftLabel y = SoftLabel::one_hot(0, 1);
  MixParams params;
  params.lambda_v = lambda_v;
  params.lambda_delta = options.lambda_delta;
  params.alpha = alpha;
  switch (mode) {
    case MixMode::kMixup:
      return convex_mix(x_i, x_j, lambda_v);
    case MixMode::kCutMix: {
      RngStream rng = RngStream::derive(options.seed, tile_index);
      return cutmix(x_i, x_j, y, y, lambda_v, rng).image;
    }
    case MixMode::kFrequency:
      return fd_mixup(x_i, x_j, y, y, params, options.phase_source).image;
    case MixMode::kContext: {
      const MaskTensor m_i =
          options.mask_i.value_or(MaskTensor::ones(x_i.height(), x_i.width()));
      const MaskTensor m_j =
          options.mask_j.value_or(MaskTensor::ones(x_j.height(), x_j.width()));
      return cd_mixup(x_i, m_i, x_j, m_j, y, y, params).image;
    }
    case MixMode::kStyle:
      params.style_t = options.style_t_fraction * lambda_v;
      return style_mixup(x_i, x_j, y, y, params).image;
  }
  throw ParameterError("unknown mix mode");
}

}  // namespace

ImageTensor render_grid(const ImageTensor& x_i, const ImageTensor& x_j,
                        const std::vector<double>& lambdas,
                        const std::vector<double>& alphas, MixMode mode,
                        const GridOptions& options) {
  if (lambdas.empty() || alphas.empty()) {
    throw ParameterError("render_grid needs non-empty lambda and alpha lists");
  }
  require_same_shape(x_i, x_j, "render_grid");
  require_in_range(options.style_t_fraction, 0.0, 1.0, "style_t_fraction");

  const int rows = static_cast<int>(lambdas.size());
  const int cols = static_cast<int>(alphas.size());
  const int tile_h = x_i.height();
  const int tile_w = x_i.width();
  ImageTensor grid(rows * tile_h + (rows + 1) * kGridSeparator,
                   cols * tile_w + (cols + 1) * kGridSeparator, x_i.channels(),
                   kGridSeparatorValue);

  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const ImageTensor tile =
          render_tile(x_i, x_j, lambdas[r], alphas[c], mode, options,
                      static_cast<std::size_t>(r) * cols + c);
      const int top = kGridSeparator + r * (tile_h + kGridSeparator);
      const int left = kGridSeparator + c * (tile_w + kGridSeparator);
      for (int ch = 0; ch < tile.channels(); ++ch) {
        for (int y = 0; y < tile_h; ++y) {
          for (int x = 0; x < tile_w; ++x) {
            grid.at(ch, top + y, left + x) = tile.at(ch, y, x);
          }
        }
      }
    }
  }
  return grid;
}

}  // namespace dmix
