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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <spdlog/spdlog.h>

#include "json.hpp"

#include "dmix/context_mix.h"
#include "dmix/errors.h"
#include "dmix/style_mix.h"

namespace dmix {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string_view to_string(MixMode mode) {
  switch (mode) {
    case MixMode::kMixup:
      return "mixup";
    case MixMode::kCutMix:
      return "cutmix";
    case MixMode::kFrequency:
      return "fd";
    case MixMode::kContext:
      return "cd";
    case MixMode::kStyle:
      return "style";
  }
  return "unknown";
}

MixMode parse_mix_mode(std::string_view text) {
  for (MixMode m : {MixMode::kMixup, MixMode::kCutMix, MixMode::kFrequency,
                    MixMode::kContext, MixMode::kStyle}) {
    if (text == to_string(m)) return m;
  }
  throw ParseError("unknown mode '" + std::string(text) +
                   "' (expected mixup|cutmix|fd|cd|style)");
}

std::string_view to_string(PhaseSource source) {
  return source == PhaseSource::kFirst ? "first" : "second";
}

PhaseSource parse_phase_source(std::string_view text) {
  if (text == "first") return PhaseSource::kFirst;
  if (text == "second") return PhaseSource::kSecond;
  throw ParseError("unknown phase source '" + std::string(text) +
                   "' (expected first|second)");
}

namespace {

std::vector<double> parse_number_list(std::string_view text,
                                      std::string_view what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string token(text.substr(start, end - start));
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size()) {
      throw ParseError("grid " + std::string(what) + " list: bad number '" +
                       token + "'");
    }
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

}  // namespace

GridSpec parse_grid_spec(std::string_view text) {
  const std::size_t sep = text.find('x');
  if (sep == std::string_view::npos || text.find('x', sep + 1) != text.npos) {
    throw ParseError("grid spec must look like 'l1,l2,...xa1,a2,...'");
  }
  GridSpec spec;
  spec.lambdas = parse_number_list(text.substr(0, sep), "lambda");
  spec.alphas = parse_number_list(text.substr(sep + 1), "alpha");
  return spec;
}

void RunConfig::validate() const {
  if (!(beta_shape > 0.0) || !std::isfinite(beta_shape)) {
    throw ParameterError("--beta must be > 0");
  }
  if (alpha) require_in_range(*alpha, 0.0, 1.0, "alpha");
  if (fixed_lambda_v) require_in_range(*fixed_lambda_v, 0.0, 1.0, "lambda_v");
  if (fixed_lambda_delta) {
    require_in_range(*fixed_lambda_delta, 0.0, 1.0, "lambda_delta");
  }
  if (jobs < 1) throw ParameterError("--jobs must be >= 1");
  if (grid) {
    if (grid->lambdas.empty() || grid->alphas.empty()) {
      throw ParameterError("grid lists must be non-empty");
    }
    for (double l : grid->lambdas) require_in_range(l, 0.0, 1.0, "grid lambda");
    for (double a : grid->alphas) require_in_range(a, 0.0, 1.0, "grid alpha");
  }
}

double RunConfig::resolved_alpha() const {
  if (alpha) return *alpha;
  return mode == MixMode::kContext ? kDefaultContextAlpha : kDefaultAlpha;
}

std::vector<std::size_t> pair_items(std::size_t n, RngStream rng) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  // Fisher-Yates, high index first.
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = rng.uniform_index(i);
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

namespace {

MaskTensor mask_or_fallback(const ManifestEntry& entry, const ImageTensor& x,
                            std::size_t index,
                            std::vector<std::string>& warnings) {
  if (entry.mask_path) return read_mask(*entry.mask_path);
  warnings.push_back("item " + std::to_string(index) + ": no mask for " +
                     entry.image_path.filename().string() +
                     ", using all-foreground mask");
  return MaskTensor::ones(x.height(), x.width());
}

std::string image_file_name(std::size_t index, ImageFormat format) {
  char name[32];
  std::snprintf(name, sizeof(name), "mixed_%06zu.%s", index,
                format == ImageFormat::kPng ? "png" : "ppm");
  return name;
}

}  // namespace

ItemResult mix_item(const RunConfig& config, const Manifest& manifest,
                    std::size_t index, std::size_t partner) {
  const ManifestEntry& first = manifest.entries.at(index);
  const ManifestEntry& second = manifest.entries.at(partner);

  RngStream rng = RngStream::derive(config.seed, index);
  MixParams params;
  params.beta_shape = config.beta_shape;
  params.lambda_v = config.fixed_lambda_v
                        ? *config.fixed_lambda_v
                        : sample_lambda(rng, config.beta_shape);
  params.lambda_delta =
      config.fixed_lambda_delta ? *config.fixed_lambda_delta : rng.uniform();
  params.alpha = config.resolved_alpha();

  ItemResult result;
  ItemRecord& rec = result.record;
  rec.index = index;
  rec.partner = partner;
  rec.image_file = image_file_name(index, config.output_format);
  rec.lambda_v = params.lambda_v;
  rec.lambda_delta = params.lambda_delta;
  rec.alpha = params.alpha;

  const ImageTensor x_i = read_image(first.image_path);
  const ImageTensor x_j = read_image(second.image_path);

  MixResult mixed;
  switch (config.mode) {
    case MixMode::kMixup:
      mixed.image = convex_mix(x_i, x_j, params.lambda_v);
      mixed.label = mix_labels(first.label, second.label, params.lambda_v);
      rec.alpha = 1.0;
      break;
    case MixMode::kCutMix: {
      CutMixResult cut = cutmix(x_i, x_j, first.label, second.label,
                                params.lambda_v, rng);
      mixed.image = std::move(cut.image);
      mixed.label = std::move(cut.label);
      rec.lambda_v = cut.lambda_actual;
      rec.box = cut.box;
      rec.alpha = 1.0;
      break;
    }
    case MixMode::kFrequency:
      mixed = fd_mixup(x_i, x_j, first.label, second.label, params,
                       config.phase_source);
      break;
    case MixMode::kContext: {
      const MaskTensor m_i = mask_or_fallback(first, x_i, index, result.warnings);
      const MaskTensor m_j =
          mask_or_fallback(second, x_j, index, result.warnings);
      mixed = cd_mixup(x_i, m_i, x_j, m_j, first.label, second.label, params);
      break;
    }
    case MixMode::kStyle:
      params.style_t = rng.uniform(0.0, params.lambda_v);
      rec.style_t = params.style_t;
      mixed = style_mixup(x_i, x_j, first.label, second.label, params);
      break;
  }
  rec.label = std::move(mixed.label);
  result.image = std::move(mixed.image);
  return result;
}

std::string format_output_manifest(const BatchReport& report,
                                   std::size_t classes) {
  std::ostringstream out;
  out << ordered_json{{"format", "dmix-output"},
                      {"version", kManifestVersion},
                      {"classes", classes},
                      {"count", report.items.size()}}
             .dump()
      << '\n';
  for (const ItemRecord& rec : report.items) {
    ordered_json j;
    j["index"] = rec.index;
    j["partner"] = rec.partner;
    if (rec.error) {
      j["error"] = *rec.error;
    } else {
      j["image"] = rec.image_file;
      j["lambda_v"] = rec.lambda_v;
      j["lambda_delta"] = rec.lambda_delta;
      j["alpha"] = rec.alpha;
      if (rec.style_t) j["t"] = *rec.style_t;
      if (rec.box) {
        j["box"] = {rec.box->x0, rec.box->y0, rec.box->x1, rec.box->y1};
      }
      const auto probs = rec.label.probs();
      j["label"] = std::vector<double>(probs.begin(), probs.end());
    }
    out << j.dump() << '\n';
  }
  return out.str();
}

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw IoError("cannot write " + path.string());
}

std::string format_report(const RunConfig& config, const BatchReport& report) {
  ordered_json failures = ordered_json::array();
  for (const ItemRecord& rec : report.items) {
    if (rec.error) failures.push_back({{"index", rec.index}, {"error", *rec.error}});
  }
  ordered_json j{{"mode", to_string(config.mode)},
                 {"seed", config.seed},
                 {"items", report.items.size()},
                 {"succeeded", report.items.size() - report.failed},
                 {"failed", report.failed},
                 {"warnings", report.warnings},
                 {"failures", failures}};
  return j.dump(2) + "\n";
}

}  // namespace

BatchReport run_batch(const RunConfig& config, const Manifest& manifest) {
  config.validate();
  const std::size_t n = manifest.entries.size();
  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " +
                  config.output_dir.string() + ": " + ec.message());
  }

  const std::vector<std::size_t> partner =
      pair_items(n, RngStream::derive(config.seed, kPairingStream));

  std::vector<ItemRecord> records(n);
  std::vector<std::vector<std::string>> warnings(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        ItemResult r = mix_item(config, manifest, i, partner[i]);
        write_image(config.output_dir / r.record.image_file, r.image);
        records[i] = std::move(r.record);
        warnings[i] = std::move(r.warnings);
      } catch (const std::exception& e) {
        records[i] = ItemRecord{};
        records[i].index = i;
        records[i].partner = partner[i];
        records[i].error = e.what();
        spdlog::error("item {}: {}", i, e.what());
      }
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(config.jobs),
                            std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  BatchReport report;
  report.items = std::move(records);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& w : warnings[i]) {
      spdlog::warn("{}", w);
      report.warnings.push_back(std::move(w));
    }
    if (report.items[i].error) ++report.failed;
  }

  write_text(config.output_dir / "manifest.jsonl",
             format_output_manifest(report, manifest.classes));
  write_text(config.output_dir / "report.json", format_report(config, report));
  spdlog::info("{} items, {} failed, mode {}", n, report.failed,
               to_string(config.mode));
  return report;
}

}  // namespace dmix
