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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dmix/tensor.h"

namespace dmix {

// Input manifest, JSON Lines. The first non-blank line is the header
//   {"format": "dmix-manifest", "version": 1, "classes": K}
// and every further non-blank line is one item
//   {"image": "a.png", "label": 3, "mask": "a_mask.png"}
// where "label" is a 0-based class index or an explicit K-vector and "mask"
// is optional. Relative paths resolve against the manifest's directory.
inline constexpr int kManifestVersion = 1;

struct ManifestEntry {
  std::filesystem::path image_path;
  SoftLabel label;
  std::optional<std::filesystem::path> mask_path;
  int line = 0;  // 1-based line in the manifest file
};

struct Manifest {
  std::size_t classes = 0;
  std::vector<ManifestEntry> entries;
};

// Parses manifest text. Throws ParseError (malformed line, with its number)
// or ValidationError (class index >= K, bad soft label). When `check_files`
// is set, a missing image raises IoError.
Manifest parse_manifest(std::istream& in,
                        const std::filesystem::path& base_dir,
                        bool check_files);

Manifest load_manifest(const std::filesystem::path& path);

// Writes `manifest` in the format parse_manifest reads. Labels are written
// as class indices when one-hot, else as vectors. Paths are written as
// given.
void write_manifest(const std::filesystem::path& path,
                    const Manifest& manifest);

}  // namespace dmix
