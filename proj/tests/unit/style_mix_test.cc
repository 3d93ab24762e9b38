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

#include <gtest/gtest.h>

#include <random>

#include "dmix/errors.h"
#include "test_util.h"

namespace dmix {
namespace {

using testing::random_image;
using testing::random_simplex;

// Direct-sum mean / population std of one channel.
std::pair<double, double> scalar_stats(const ImageTensor& u, int c) {
  double sum = 0.0;
  int n = 0;
  for (int y = 0; y < u.height(); ++y)
    for (int x = 0; x < u.width(); ++x, ++n) sum += u.at(c, y, x);
  const double mean = sum / n;
  double sq = 0.0;
  for (int y = 0; y < u.height(); ++y)
    for (int x = 0; x < u.width(); ++x)
      sq += (u.at(c, y, x) - mean) * (u.at(c, y, x) - mean);
  return {mean, std::sqrt(sq / n)};
}

TEST(ChannelStatsTest, Examples) {
  const ChannelStats constant = channel_stats(ImageTensor(3, 3, 2, 0.4));
  EXPECT_DOUBLE_EQ(constant.mean[1], 0.4);
  EXPECT_NEAR(constant.std[1], 0.0, 1e-15);

  const ImageTensor two(1, 4, 1, std::vector<double>{0, 1, 0, 1});
  const ChannelStats s = channel_stats(two);
  EXPECT_EQ(s.mean[0], 0.5);
  EXPECT_EQ(s.std[0], 0.5);

  std::mt19937_64 gen(50);
  const ImageTensor r = random_image(gen, 16, 16, 3);
  const ChannelStats rs = channel_stats(r);
  for (int c = 0; c < 3; ++c) {
    const auto [mean, sd] = scalar_stats(r, c);
    EXPECT_NEAR(rs.mean[c], mean, 1e-10);
    EXPECT_NEAR(rs.std[c], sd, 1e-10);
  }
}

TEST(AdainTest, SelfIdentity) {
  std::mt19937_64 gen(51);
  for (int trial = 0; trial < 20; ++trial) {
    const ImageTensor u = random_image(gen, 12, 12, 3);
    EXPECT_LE(max_abs_diff(adain(u, u), u), 1e-5);
  }
}

TEST(AdainTest, TransfersStatistics) {
  std::mt19937_64 gen(52);
  for (int trial = 0; trial < 20; ++trial) {
    const ImageTensor ui = random_image(gen, 10, 14, 3);
    const ImageTensor uj = random_image(gen, 10, 14, 3, 0.2, 0.5);
    const ChannelStats out = channel_stats(adain(ui, uj));
    const ChannelStats style = channel_stats(uj);
    for (int c = 0; c < 3; ++c) {
      EXPECT_NEAR(out.mean[c], style.mean[c], 1e-4);
      EXPECT_NEAR(out.std[c], style.std[c], 1e-4);
    }
  }
}

TEST(AdainTest, ConstantContentChannelTakesStyleMean) {
  std::mt19937_64 gen(53);
  ImageTensor ui = random_image(gen, 6, 6, 2);
  for (double& v : ui.plane(1)) v = 0.3;
  const ImageTensor uj = random_image(gen, 6, 6, 2);
  const ImageTensor out = adain(ui, uj);
  const double style_mean = channel_stats(uj).mean[1];
  for (double v : out.plane(1)) EXPECT_NEAR(v, style_mean, 1e-9);
}

TEST(AdainTest, ShapeMismatch) {
  EXPECT_THROW(adain(ImageTensor(2, 2, 1), ImageTensor(2, 2, 3)),
               DimensionError);
}

TEST(StyleFeaturesTest, DiagonalTermsReproduceInputs) {
  std::mt19937_64 gen(54);
  const ImageTensor ui = random_image(gen, 8, 8, 3);
  const ImageTensor uj = random_image(gen, 8, 8, 3, 0.1, 0.6);
  const StyleFeatures f = style_features(ui, uj);
  EXPECT_LE(max_abs_diff(f.ii, ui), 1e-5);
  EXPECT_LE(max_abs_diff(f.jj, uj), 1e-5);
  const ChannelStats si = channel_stats(ui), sj = channel_stats(uj);
  const ChannelStats sij = channel_stats(f.ij), sji = channel_stats(f.ji);
  for (int c = 0; c < 3; ++c) {
    EXPECT_NEAR(sij.mean[c], sj.mean[c], 1e-4);
    EXPECT_NEAR(sij.std[c], sj.std[c], 1e-4);
    EXPECT_NEAR(sji.mean[c], si.mean[c], 1e-4);
    EXPECT_NEAR(sji.std[c], si.std[c], 1e-4);
  }

  const StyleFeatures same = style_features(ui, ui);
  for (const ImageTensor* t : {&same.ii, &same.jj, &same.ij, &same.ji}) {
    EXPECT_LE(max_abs_diff(*t, ui), 1e-5);
  }
}

TEST(StyleMixupTest, TEqualsLambdaMixesContentAndStyleJointly) {
  std::mt19937_64 gen(55);
  const ImageTensor ui = random_image(gen, 8, 8, 3);
  const ImageTensor uj = random_image(gen, 8, 8, 3);
  const StyleFeatures f = style_features(ui, uj);
  EXPECT_LE(max_abs_diff(style_common(f, 0.7, 0.7), convex_mix(ui, uj, 0.7)),
            1e-12);
  EXPECT_LE(max_abs_diff(style_common(f, 1.0, 1.0), ui), 1e-12);
}

TEST(StyleMixupTest, IdenticalOperands) {
  std::mt19937_64 gen(56);
  const ImageTensor u = random_image(gen, 8, 8, 3);
  const SoftLabel y = random_simplex(gen, 5);
  MixParams p;
  p.lambda_v = 0.6;
  p.style_t = 0.2;
  p.lambda_delta = 0.3;
  p.alpha = 0.4;
  const StyleFeatures f = style_features(u, u);
  for (double v : style_residual(f).data()) EXPECT_EQ(v, 0.0);
  const MixResult r = style_mixup(u, u, y, y, p);
  EXPECT_LE(max_abs_diff(r.image, u), 1e-12);
  for (std::size_t k = 0; k < y.size(); ++k) EXPECT_NEAR(r.label[k], y[k], 1e-15);
}

TEST(StyleMixupTest, AlphaOneSuppressesResidual) {
  std::mt19937_64 gen(57);
  const ImageTensor ui = random_image(gen, 8, 8, 3, 0.2, 0.6);
  const ImageTensor uj = random_image(gen, 8, 8, 3, 0.3, 0.7);
  const SoftLabel yi = SoftLabel::one_hot(0, 2), yj = SoftLabel::one_hot(1, 2);
  MixParams p;
  p.lambda_v = 0.7;
  p.style_t = 0.3;
  p.lambda_delta = 0.2;
  p.alpha = 1.0;
  const MixResult r = style_mixup(ui, uj, yi, yj, p);
  ImageTensor common = style_common(style_features(ui, uj), 0.7, 0.3);
  common.clamp();
  EXPECT_EQ(r.image, common);
  EXPECT_EQ(r.label, mix_labels(yi, yj, 0.7));
}

TEST(StyleMixupTest, ResidualTermIndependentOfLambdaDelta) {
  std::mt19937_64 gen(58);
  const ImageTensor ui = random_image(gen, 8, 8, 3, 0.2, 0.6);
  const ImageTensor uj = random_image(gen, 8, 8, 3, 0.3, 0.7);
  const SoftLabel yi = SoftLabel::one_hot(0, 2), yj = SoftLabel::one_hot(1, 2);
  MixParams p;
  p.lambda_v = 0.5;
  p.style_t = 0.25;
  p.alpha = 0.3;
  p.lambda_delta = 0.0;
  const ImageTensor reference = style_mixup(ui, uj, yi, yj, p).image;
  for (double ld : {0.1, 0.5, 0.99, 1.0}) {
    p.lambda_delta = ld;
    const MixResult r = style_mixup(ui, uj, yi, yj, p);
    EXPECT_EQ(r.image, reference);  // bitwise
    EXPECT_EQ(r.label, decoupled_label(yi, yj, 0.5, ld, 0.3));
  }
}

TEST(StyleMixupTest, OutputRangeAndTValidation) {
  std::mt19937_64 gen(59);
  const ImageTensor ui = random_image(gen, 8, 8, 3);
  const ImageTensor uj = random_image(gen, 8, 8, 3);
  const SoftLabel y = SoftLabel::one_hot(0, 1);
  MixParams p;
  p.lambda_v = 0.4;
  p.style_t = 0.1;
  p.alpha = 0.0;
  for (double v : style_mixup(ui, uj, y, y, p).image.data()) {
    ASSERT_GE(v, 0.0);
    ASSERT_LE(v, 1.0);
  }
  p.style_t = 0.5;
  EXPECT_THROW(style_mixup(ui, uj, y, y, p), ParameterError);
  p.style_t = 0.1;
  EXPECT_THROW(style_mixup(ui, ImageTensor(8, 8, 1), y, y, p), DimensionError);
}

}  // namespace
}  // namespace dmix
