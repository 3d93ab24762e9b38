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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmix/core_mix.h"
#include "dmix/freq_mix.h"
#include "dmix/image_io.h"
#include "dmix/manifest.h"

namespace dmix {

enum class MixMode { kMixup, kCutMix, kFrequency, kContext, kStyle };

std::string_view to_string(MixMode mode);
// Accepts mixup | cutmix | fd | cd | style. Throws ParseError.
MixMode parse_mix_mode(std::string_view text);

std::string_view to_string(PhaseSource source);
// Accepts first | second. Throws ParseError.
PhaseSource parse_phase_source(std::string_view text);

struct GridSpec {
  std::vector<double> lambdas;
  std::vector<double> alphas;
};

// Parses "l1,l2,...xa1,a2,..." (a literal 'x' between the two lists).
GridSpec parse_grid_spec(std::string_view text);

inline constexpr double kDefaultAlpha = kPresetAlphaLow;
// Context mode keeps the label on the foreground ratio unless told otherwise.
inline constexpr double kDefaultContextAlpha = 1.0;

struct RunConfig {
  MixMode mode = MixMode::kMixup;
  std::uint64_t seed = 0;
  double beta_shape = 1.0;
  // Unset: kDefaultContextAlpha for cd, kDefaultAlpha otherwise.
  std::optional<double> alpha;
  std::optional<double> fixed_lambda_v;
  std::optional<double> fixed_lambda_delta;
  PhaseSource phase_source = PhaseSource::kFirst;
  std::filesystem::path output_dir;
  std::optional<GridSpec> grid;
  int jobs = 1;
  ImageFormat output_format = ImageFormat::kPng;

  // Throws ParameterError.
  void validate() const;
  double resolved_alpha() const;
};

// Seeded permutation pi of 0..n-1; item i is mixed with pi[i].
std::vector<std::size_t> pair_items(std::size_t n, RngStream rng);

// Stream ids used to derive generators from the run seed.
inline constexpr std::uint64_t kPairingStream = ~std::uint64_t{0};

// Per-item realised parameters and result, as recorded in the output
// manifest.
struct ItemRecord {
  std::size_t index = 0;
  std::size_t partner = 0;
  std::string image_file;  // relative to the output directory
  double lambda_v = 0.0;
  double lambda_delta = 0.0;
  double alpha = 1.0;
  std::optional<double> style_t;
  std::optional<Box> box;
  SoftLabel label;
  std::optional<std::string> error;  // set when the item failed
};

struct BatchReport {
  std::vector<ItemRecord> items;  // input order
  std::vector<std::string> warnings;
  std::size_t failed = 0;
};

struct ItemResult {
  ItemRecord record;
  ImageTensor image;
  std::vector<std::string> warnings;  // e.g. missing-mask fallback
};

// Mixes entry `index` with entry `partner`. Reads the inputs but writes
// nothing. Randomness comes only from RngStream::derive(config.seed, index).
ItemResult mix_item(const RunConfig& config, const Manifest& manifest,
                    std::size_t index, std::size_t partner);

// Runs the whole batch: writes one image per input item plus
// manifest.jsonl and report.json into config.output_dir. Item failures are
// recorded and do not stop the batch. The output is a pure function of
// (config, manifest) regardless of config.jobs.
BatchReport run_batch(const RunConfig& config, const Manifest& manifest);

// Output manifest text: header line then one JSON record per item.
std::string format_output_manifest(const BatchReport& report,
                                   std::size_t classes);

}  // namespace dmix
