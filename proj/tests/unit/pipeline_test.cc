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

#include "dmix/pipeline.h"

#include <gtest/gtest.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "dmix/errors.h"
#include "json.hpp"
#include "test_util.h"

namespace dmix {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<json> read_jsonl(const fs::path& p) {
  std::vector<json> out;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) out.push_back(json::parse(line));
  return out;
}

TEST(PairItemsTest, DeterministicForFixedSeed) {
  const auto a = pair_items(8, RngStream::derive(3, kPairingStream));
  const auto b = pair_items(8, RngStream::derive(3, kPairingStream));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, pair_items(8, RngStream::derive(4, kPairingStream)));
}

TEST(PairItemsTest, SingleItemPairsWithItself) {
  EXPECT_EQ(pair_items(1, RngStream(5)), std::vector<std::size_t>{0});
}

TEST(PairItemsTest, AlwaysABijection) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto perm = pair_items(16, RngStream::derive(seed, kPairingStream));
    std::vector<int> seen(16, 0);
    for (std::size_t p : perm) {
      ASSERT_LT(p, 16u);
      ++seen[p];
    }
    for (int s : seen) ASSERT_EQ(s, 1);
  }
}

TEST(RunConfigTest, ParsingHelpers) {
  EXPECT_EQ(parse_mix_mode("fd"), MixMode::kFrequency);
  EXPECT_EQ(parse_mix_mode("cd"), MixMode::kContext);
  EXPECT_EQ(parse_mix_mode("cutmix"), MixMode::kCutMix);
  EXPECT_THROW(parse_mix_mode("fourier"), ParseError);
  EXPECT_EQ(parse_phase_source("second"), PhaseSource::kSecond);
  EXPECT_THROW(parse_phase_source("third"), ParseError);

  const GridSpec g = parse_grid_spec("0,0.5,1x0.2,0.6");
  EXPECT_EQ(g.lambdas, (std::vector<double>{0, 0.5, 1}));
  EXPECT_EQ(g.alphas, (std::vector<double>{0.2, 0.6}));
  EXPECT_THROW(parse_grid_spec("0,0.5"), ParseError);
  EXPECT_THROW(parse_grid_spec("0,,1x0.2"), ParseError);
  EXPECT_THROW(parse_grid_spec("0.5x0.2x1"), ParseError);
  EXPECT_THROW(parse_grid_spec("ax0.2"), ParseError);
}

TEST(RunConfigTest, ValidationAndAlphaDefaults) {
  RunConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.resolved_alpha(), 0.2);
  c.mode = MixMode::kContext;
  EXPECT_EQ(c.resolved_alpha(), 1.0);
  c.alpha = 0.6;
  EXPECT_EQ(c.resolved_alpha(), 0.6);
  c.alpha = 1.5;
  EXPECT_THROW(c.validate(), ParameterError);
  c.alpha.reset();
  c.beta_shape = 0.0;
  EXPECT_THROW(c.validate(), ParameterError);
  c.beta_shape = 1.0;
  c.fixed_lambda_delta = -0.1;
  EXPECT_THROW(c.validate(), ParameterError);
  c.fixed_lambda_delta.reset();
  c.jobs = 0;
  EXPECT_THROW(c.validate(), ParameterError);
  c.jobs = 1;
  c.grid = GridSpec{{}, {0.2}};
  EXPECT_THROW(c.validate(), ParameterError);
}

class RunBatchTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = testing::temp_dir("pipeline");
    manifest_path_ = testing::write_synthetic_dataset(dir_ / "in", 12, 16, 16,
                                                      3, /*mask_every=*/3);
    manifest_ = load_manifest(manifest_path_);
    // Same images, no masks anywhere.
    unmasked_ = manifest_;
    for (auto& e : unmasked_.entries) e.mask_path.reset();
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunConfig config(MixMode mode, const std::string& out) const {
    RunConfig c;
    c.mode = mode;
    c.seed = 77;
    c.output_dir = dir_ / out;
    return c;
  }

  fs::path dir_;
  fs::path manifest_path_;
  Manifest manifest_;
  Manifest unmasked_;
};

TEST_F(RunBatchTest, DeterministicAcrossRunsAndJobCounts) {
  for (MixMode mode : {MixMode::kMixup, MixMode::kCutMix, MixMode::kFrequency,
                       MixMode::kContext, MixMode::kStyle}) {
    RunConfig a = config(mode, "a");
    RunConfig b = config(mode, "b");
    b.jobs = 4;
    const BatchReport ra = run_batch(a, manifest_);
    const BatchReport rb = run_batch(b, manifest_);
    EXPECT_EQ(ra.failed, 0u) << to_string(mode);
    EXPECT_EQ(slurp(a.output_dir / "manifest.jsonl"),
              slurp(b.output_dir / "manifest.jsonl"))
        << to_string(mode);
    for (const ItemRecord& rec : ra.items) {
      EXPECT_EQ(slurp(a.output_dir / rec.image_file),
                slurp(b.output_dir / rec.image_file));
    }
    fs::remove_all(a.output_dir);
    fs::remove_all(b.output_dir);
  }
}

TEST_F(RunBatchTest, OutputManifestShape) {
  RunConfig c = config(MixMode::kStyle, "style");
  run_batch(c, manifest_);
  const auto lines = read_jsonl(c.output_dir / "manifest.jsonl");
  ASSERT_EQ(lines.size(), 13u);
  EXPECT_EQ(lines[0]["format"], "dmix-output");
  EXPECT_EQ(lines[0]["count"], 12);
  EXPECT_EQ(lines[0]["classes"], 3);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const json& j = lines[i];
    EXPECT_EQ(j["index"], i - 1);
    EXPECT_TRUE(fs::exists(c.output_dir / j["image"].get<std::string>()));
    const double lv = j["lambda_v"], t = j["t"];
    EXPECT_GE(t, 0.0);
    EXPECT_LE(t, lv);
    double sum = 0.0;
    for (double p : j["label"]) {
      EXPECT_GE(p, 0.0);
      sum += p;
    }
    EXPECT_NEAR(sum, 1.0, 1e-6);
  }

  RunConfig cm = config(MixMode::kCutMix, "cut");
  run_batch(cm, manifest_);
  const auto cut = read_jsonl(cm.output_dir / "manifest.jsonl");
  for (std::size_t i = 1; i < cut.size(); ++i) {
    const auto box = cut[i]["box"].get<std::vector<int>>();
    ASSERT_EQ(box.size(), 4u);
    const double area = (box[2] - box[0]) * (box[3] - box[1]);
    EXPECT_EQ(cut[i]["lambda_v"].get<double>(), 1.0 - area / 256.0);
  }
}

TEST_F(RunBatchTest, ContextWithoutMasksMatchesMixup) {
  const RunConfig cd = config(MixMode::kContext, "cd");
  const RunConfig mix = config(MixMode::kMixup, "mix");
  const BatchReport rcd = run_batch(cd, unmasked_);
  run_batch(mix, unmasked_);
  EXPECT_EQ(slurp(cd.output_dir / "manifest.jsonl"),
            slurp(mix.output_dir / "manifest.jsonl"));
  for (const ItemRecord& rec : rcd.items) {
    EXPECT_EQ(slurp(cd.output_dir / rec.image_file),
              slurp(mix.output_dir / rec.image_file));
  }
  // Two masks (item + partner) fall back per item.
  EXPECT_EQ(rcd.warnings.size(), 24u);
  const json report = json::parse(slurp(cd.output_dir / "report.json"));
  EXPECT_EQ(report["warnings"].size(), 24u);
  EXPECT_EQ(report["mode"], "cd");
}

TEST_F(RunBatchTest, FrequencyIdentityReturnsFirstSource) {
  RunConfig c = config(MixMode::kFrequency, "fd");
  c.fixed_lambda_v = 1.0;
  c.fixed_lambda_delta = 1.0;
  const auto partner =
      pair_items(manifest_.entries.size(), RngStream::derive(c.seed, kPairingStream));
  for (std::size_t i = 0; i < manifest_.entries.size(); ++i) {
    const ItemResult r = mix_item(c, manifest_, i, partner[i]);
    EXPECT_LE(max_abs_diff(r.image, read_image(manifest_.entries[i].image_path)),
              1e-5);
    EXPECT_EQ(r.record.lambda_v, 1.0);
    EXPECT_EQ(r.record.lambda_delta, 1.0);
  }
}

TEST_F(RunBatchTest, ItemFailuresAreRecordedAndBatchContinues) {
  // Item 0 has a mask; replace it with one of the wrong size.
  ASSERT_TRUE(manifest_.entries[0].mask_path.has_value());
  write_image(*manifest_.entries[0].mask_path, ImageTensor(5, 5, 1, 1.0));
  const RunConfig c = config(MixMode::kContext, "fail");
  const BatchReport r = run_batch(c, manifest_);
  EXPECT_GT(r.failed, 0u);
  EXPECT_LT(r.failed, manifest_.entries.size());
  const auto lines = read_jsonl(c.output_dir / "manifest.jsonl");
  ASSERT_EQ(lines.size(), manifest_.entries.size() + 1);
  std::size_t errors = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].contains("error")) ++errors;
  }
  EXPECT_EQ(errors, r.failed);
  EXPECT_TRUE(lines[1].contains("error"));
  const json report = json::parse(slurp(c.output_dir / "report.json"));
  EXPECT_EQ(report["failed"], r.failed);
}

}  // namespace
}  // namespace dmix
