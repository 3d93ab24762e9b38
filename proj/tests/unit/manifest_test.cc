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

#include <gtest/gtest.h>

#include <sstream>

#include "dmix/errors.h"
#include "test_util.h"

namespace dmix {
namespace {

namespace fs = std::filesystem;

Manifest parse(const std::string& text) {
  std::istringstream in(text);
  return parse_manifest(in, "/data", /*check_files=*/false);
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

constexpr const char* kHeader =
    R"({"format":"dmix-manifest","version":1,"classes":5})"
    "\n";

TEST(ManifestTest, ParsesWellFormedEntries) {
  const Manifest m = parse(std::string(kHeader) +
                           R"({"image":"a.png","label":0})" "\n"
                           "\n"
                           R"({"image":"/abs/b.ppm","label":4,"mask":"b_m.png"})" "\n"
                           R"({"image":"c.png","label":[0.5,0.5,0,0,0]})" "\n");
  EXPECT_EQ(m.classes, 5u);
  ASSERT_EQ(m.entries.size(), 3u);
  EXPECT_EQ(m.entries[0].image_path, fs::path("/data/a.png"));
  EXPECT_EQ(m.entries[0].label, SoftLabel::one_hot(0, 5));
  EXPECT_FALSE(m.entries[0].mask_path.has_value());
  EXPECT_EQ(m.entries[1].image_path, fs::path("/abs/b.ppm"));
  EXPECT_EQ(*m.entries[1].mask_path, fs::path("/data/b_m.png"));
  EXPECT_EQ(m.entries[2].label[1], 0.5);
  EXPECT_EQ(m.entries[2].line, 5);
}

TEST(ManifestTest, ClassIndexOutOfRangeNamesLine) {
  const std::string text = std::string(kHeader) +
                           R"({"image":"a.png","label":1})" "\n"
                           R"({"image":"b.png","label":7})" "\n";
  EXPECT_THROW(parse(text), ValidationError);
  EXPECT_NE(error_of(text).find("line 3"), std::string::npos);
}

TEST(ManifestTest, MalformedLinesReportLineNumbers) {
  EXPECT_NE(error_of(std::string(kHeader) + "{not json\n").find("line 2"),
            std::string::npos);
  EXPECT_THROW(parse(std::string(kHeader) + R"({"label":1})" "\n"), ParseError);
  EXPECT_THROW(parse(std::string(kHeader) + R"({"image":"a.png"})" "\n"),
               ParseError);
  EXPECT_THROW(parse(std::string(kHeader) + R"({"image":"a","label":"x"})" "\n"),
               ParseError);
  EXPECT_THROW(parse(std::string(kHeader) + R"({"image":"a","label":[0.5,0.6,0,0,0]})" "\n"),
               ValidationError);
  EXPECT_THROW(parse(std::string(kHeader) + R"({"image":"a","label":[1]})" "\n"),
               ValidationError);
  EXPECT_THROW(parse(R"({"format":"other","version":1,"classes":2})" "\n"),
               ParseError);
  EXPECT_THROW(parse(R"({"format":"dmix-manifest","version":9,"classes":2})" "\n"),
               ParseError);
  EXPECT_THROW(parse(R"({"format":"dmix-manifest","version":1,"classes":0})" "\n"),
               ParseError);
  EXPECT_THROW(parse(""), ParseError);
}

TEST(ManifestTest, LoadChecksImagesExistAndRoundTrips) {
  const fs::path dir = testing::temp_dir("manifest");
  const fs::path path = testing::write_synthetic_dataset(dir, 3, 8, 8, 2, 2);
  const Manifest m = load_manifest(path);
  ASSERT_EQ(m.entries.size(), 3u);
  EXPECT_EQ(m.entries[0].image_path, dir / "img_0.png");
  EXPECT_TRUE(m.entries[0].mask_path.has_value());
  EXPECT_FALSE(m.entries[1].mask_path.has_value());
  EXPECT_EQ(m.entries[1].label, SoftLabel::one_hot(1, 2));

  fs::remove(dir / "img_2.png");
  EXPECT_THROW(load_manifest(path), IoError);
  EXPECT_THROW(load_manifest(dir / "nope.jsonl"), IoError);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace dmix
