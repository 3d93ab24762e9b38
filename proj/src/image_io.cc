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

#include "dmix/image_io.h"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <string>

#include "dmix/errors.h"

namespace dmix {

namespace fs = std::filesystem;

namespace {

std::string lower_extension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  return ext;
}

struct RawImage {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<std::uint8_t> pixels;
};

RawImage read_png(const fs::path& path) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str())) {
    throw IoError("cannot read PNG " + path.string() + ": " + image.message);
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  RawImage raw;
  raw.height = static_cast<int>(image.height);
  raw.width = static_cast<int>(image.width);
  raw.channels = color ? 3 : 1;
  raw.pixels.resize(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, raw.pixels.data(), 0, nullptr)) {
    const std::string message = image.message;
    png_image_free(&image);
    throw IoError("cannot decode PNG " + path.string() + ": " + message);
  }
  return raw;
}

void write_png(const fs::path& path, const RawImage& raw) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(raw.width);
  image.height = static_cast<png_uint_32>(raw.height);
  image.format = raw.channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&image, path.c_str(), 0, raw.pixels.data(), 0,
                               nullptr)) {
    throw IoError("cannot write PNG " + path.string() + ": " + image.message);
  }
}

// Netpbm header token reader; skips whitespace and '#' comments.
int read_pnm_int(std::istream& in, const fs::path& path) {
  int ch = in.get();
  while (ch != EOF) {
    if (ch == '#') {
      while (ch != EOF && ch != '\n') ch = in.get();
    } else if (!std::isspace(ch)) {
      break;
    }
    ch = in.get();
  }
  if (ch == EOF || !std::isdigit(ch)) {
    throw IoError("malformed PNM header in " + path.string());
  }
  long value = 0;
  while (ch != EOF && std::isdigit(ch)) {
    value = value * 10 + (ch - '0');
    if (value > (1 << 24)) throw IoError("PNM dimension too large");
    ch = in.get();
  }
  // `ch` is the single whitespace byte that ends the token.
  return static_cast<int>(value);
}

RawImage read_pnm(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (magic[0] != 'P' || (magic[1] != '5' && magic[1] != '6')) {
    throw IoError(path.string() + " is not a binary PGM/PPM (P5/P6)");
  }
  RawImage raw;
  raw.channels = magic[1] == '6' ? 3 : 1;
  raw.width = read_pnm_int(in, path);
  raw.height = read_pnm_int(in, path);
  const int maxval = read_pnm_int(in, path);
  if (raw.width < 1 || raw.height < 1 || maxval < 1 || maxval > 255) {
    throw IoError("unsupported PNM geometry or maxval in " + path.string());
  }
  raw.pixels.resize(static_cast<std::size_t>(raw.width) * raw.height *
                    raw.channels);
  in.read(reinterpret_cast<char*>(raw.pixels.data()),
          static_cast<std::streamsize>(raw.pixels.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.pixels.size())) {
    throw IoError("truncated pixel data in " + path.string());
  }
  if (maxval != 255) {
    for (auto& p : raw.pixels) {
      p = static_cast<std::uint8_t>(std::lround(p * 255.0 / maxval));
    }
  }
  return raw;
}

void write_pnm(const fs::path& path, const RawImage& raw) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << (raw.channels == 3 ? "P6" : "P5") << '\n'
      << raw.width << ' ' << raw.height << '\n'
      << 255 << '\n';
  out.write(reinterpret_cast<const char*>(raw.pixels.data()),
            static_cast<std::streamsize>(raw.pixels.size()));
  if (!out) throw IoError("short write to " + path.string());
}

RawImage read_raw(const fs::path& path) {
  if (!fs::exists(path)) throw IoError("no such file: " + path.string());
  return format_for_path(path) == ImageFormat::kPng ? read_png(path)
                                                    : read_pnm(path);
}

}  // namespace

ImageFormat format_for_path(const fs::path& path) {
  const std::string ext = lower_extension(path);
  if (ext == ".png") return ImageFormat::kPng;
  if (ext == ".ppm" || ext == ".pgm" || ext == ".pnm") return ImageFormat::kPnm;
  throw IoError("unsupported image extension '" + ext + "' for " +
                path.string());
}

std::vector<std::uint8_t> quantize_interleaved(const ImageTensor& image) {
  const int channels = image.channels();
  std::vector<std::uint8_t> out(image.size());
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      for (int c = 0; c < channels; ++c) {
        const double v = std::clamp(image.at(c, y, x), 0.0, 1.0);
        out[(static_cast<std::size_t>(y) * image.width() + x) * channels + c] =
            static_cast<std::uint8_t>(std::lround(v * 255.0));
      }
    }
  }
  return out;
}

ImageTensor dequantize_interleaved(const std::uint8_t* pixels, int height,
                                   int width, int channels) {
  ImageTensor out(height, width, channels);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      for (int c = 0; c < channels; ++c) {
        out.at(c, y, x) =
            pixels[(static_cast<std::size_t>(y) * width + x) * channels + c] /
            255.0;
      }
    }
  }
  return out;
}

ImageTensor read_image(const fs::path& path) {
  const RawImage raw = read_raw(path);
  return dequantize_interleaved(raw.pixels.data(), raw.height, raw.width,
                                raw.channels);
}

void write_image(const fs::path& path, const ImageTensor& image) {
  if (image.channels() != 1 && image.channels() != 3) {
    throw IoError("only 1- or 3-channel images can be encoded");
  }
  RawImage raw;
  raw.height = image.height();
  raw.width = image.width();
  raw.channels = image.channels();
  raw.pixels = quantize_interleaved(image);
  if (format_for_path(path) == ImageFormat::kPng) {
    write_png(path, raw);
  } else {
    write_pnm(path, raw);
  }
}

MaskTensor read_mask(const fs::path& path) {
  const RawImage raw = read_raw(path);
  if (raw.channels != 1) {
    throw MaskError("mask " + path.string() + " must be single-channel");
  }
  std::vector<double> values(raw.pixels.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = raw.pixels[k] / 255.0;
  }
  return MaskTensor(raw.height, raw.width, std::move(values));
}

}  // namespace dmix
