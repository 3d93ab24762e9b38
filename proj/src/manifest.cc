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

#include "dmix/manifest.h"

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "dmix/errors.h"

namespace dmix {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string at_line(int line) { return "manifest line " + std::to_string(line); }

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

json parse_line(const std::string& text, int line) {
  try {
    json j = json::parse(text);
    if (!j.is_object()) throw ParseError(at_line(line) + ": expected object");
    return j;
  } catch (const json::parse_error& e) {
    throw ParseError(at_line(line) + ": " + e.what());
  }
}

SoftLabel parse_label(const json& value, std::size_t classes, int line) {
  if (value.is_number_integer()) {
    const auto index = value.get<long long>();
    if (index < 0 || static_cast<std::size_t>(index) >= classes) {
      throw ValidationError(at_line(line) + ": class index " +
                            std::to_string(index) + " out of range for K=" +
                            std::to_string(classes));
    }
    return SoftLabel::one_hot(static_cast<std::size_t>(index), classes);
  }
  if (value.is_array()) {
    std::vector<double> probs;
    for (const auto& p : value) {
      if (!p.is_number()) {
        throw ParseError(at_line(line) + ": soft label must be numeric");
      }
      probs.push_back(p.get<double>());
    }
    if (probs.size() != classes) {
      throw ValidationError(at_line(line) + ": soft label has " +
                            std::to_string(probs.size()) +
                            " entries, expected K=" + std::to_string(classes));
    }
    try {
      return SoftLabel(std::move(probs));
    } catch (const ValidationError& e) {
      throw ValidationError(at_line(line) + ": " + e.what());
    }
  }
  throw ParseError(at_line(line) +
                   ": label must be a class index or a probability vector");
}

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

}  // namespace

Manifest parse_manifest(std::istream& in, const fs::path& base_dir,
                        bool check_files) {
  Manifest manifest;
  bool have_header = false;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (is_blank(text)) continue;
    const json j = parse_line(text, line);

    if (!have_header) {
      if (j.value("format", "") != "dmix-manifest") {
        throw ParseError(at_line(line) +
                         ": header must declare \"format\": \"dmix-manifest\"");
      }
      if (!j.contains("version") || !j["version"].is_number_integer() ||
          j["version"].get<int>() != kManifestVersion) {
        throw ParseError(at_line(line) + ": unsupported manifest version");
      }
      if (!j.contains("classes") || !j["classes"].is_number_integer() ||
          j["classes"].get<long long>() < 1) {
        throw ParseError(at_line(line) + ": header needs \"classes\" >= 1");
      }
      manifest.classes = j["classes"].get<std::size_t>();
      have_header = true;
      continue;
    }

    if (!j.contains("image") || !j["image"].is_string()) {
      throw ParseError(at_line(line) + ": missing \"image\" path");
    }
    if (!j.contains("label")) {
      throw ParseError(at_line(line) + ": missing \"label\"");
    }
    ManifestEntry entry;
    entry.line = line;
    entry.image_path = resolve(base_dir, j["image"].get<std::string>());
    entry.label = parse_label(j["label"], manifest.classes, line);
    if (j.contains("mask") && !j["mask"].is_null()) {
      if (!j["mask"].is_string()) {
        throw ParseError(at_line(line) + ": \"mask\" must be a path");
      }
      entry.mask_path = resolve(base_dir, j["mask"].get<std::string>());
    }
    if (check_files && !fs::exists(entry.image_path)) {
      throw IoError(at_line(line) + ": image not found: " +
                    entry.image_path.string());
    }
    manifest.entries.push_back(std::move(entry));
  }
  if (!have_header) throw ParseError("manifest is empty (no header line)");
  return manifest;
}

Manifest load_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());
  return parse_manifest(in, path.parent_path(), /*check_files=*/true);
}

void write_manifest(const fs::path& path, const Manifest& manifest) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write manifest " + path.string());
  out << json{{"format", "dmix-manifest"},
              {"version", kManifestVersion},
              {"classes", manifest.classes}}
             .dump()
      << '\n';
  for (const auto& e : manifest.entries) {
    json j;
    j["image"] = e.image_path.string();
    const auto probs = e.label.probs();
    std::size_t hot = probs.size();
    for (std::size_t k = 0; k < probs.size(); ++k) {
      if (probs[k] == 1.0) hot = k;
    }
    if (hot < probs.size()) {
      j["label"] = hot;
    } else {
      j["label"] = std::vector<double>(probs.begin(), probs.end());
    }
    if (e.mask_path) j["mask"] = e.mask_path->string();
    out << j.dump() << '\n';
  }
}

}  // namespace dmix
