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
#include <vector>

#include "dmix/context_mix.h"
#include "dmix/tensor.h"

namespace dmix {

enum class ImageFormat { kPng, kPnm };

// Picks the codec from the extension: .png, or .ppm/.pgm/.pnm.
ImageFormat format_for_path(const std::filesystem::path& path);

// Decodes an 8-bit grayscale or RGB image into [0, 1] (value / 255). Alpha
// channels are dropped. Throws IoError.
ImageTensor read_image(const std::filesystem::path& path);

// Quantises with round(clamp(v) * 255) and encodes by extension. Images must
// have 1 or 3 channels. Throws IoError.
void write_image(const std::filesystem::path& path, const ImageTensor& image);

// Reads a single-channel 8-bit image as a soft mask (value / 255). Colour
// images are rejected with MaskError.
MaskTensor read_mask(const std::filesystem::path& path);

// File-boundary quantisation shared by the encoders.
std::vector<std::uint8_t> quantize_interleaved(const ImageTensor& image);
ImageTensor dequantize_interleaved(const std::uint8_t* pixels, int height,
                                   int width, int channels);

}  // namespace dmix
