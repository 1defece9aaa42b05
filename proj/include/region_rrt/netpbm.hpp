// Copyright 2026 The region_rrt Authors. All Rights Reserved.
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

// Binary netpbm rasters: P5 (8-bit grayscale) and P6 (8-bit RGB), maxval 255.
//
// Writers emit "P5\n<w> <h>\n255\n" followed by raw samples. Readers accept
// any whitespace and '#' comments between header tokens, and exactly one
// whitespace byte between maxval and the sample data.

#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "region_rrt/error.hpp"

namespace region_rrt {

using Bytes = std::vector<std::uint8_t>;

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, one byte per cell

  std::uint8_t at(std::size_t col, std::size_t row) const {
    return pixels[row * width + col];
  }
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct RgbImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Rgb> pixels;  // row-major

  Rgb& at(std::size_t col, std::size_t row) { return pixels[row * width + col]; }
  const Rgb& at(std::size_t col, std::size_t row) const {
    return pixels[row * width + col];
  }
};

namespace detail {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void expect_magic(std::string_view magic) {
    if (bytes_.size() < 2 || bytes_[0] != magic[0] || bytes_[1] != magic[1]) {
      throw FormatError("bad magic: expected " + std::string(magic));
    }
    pos_ = 2;
  }

  std::size_t read_number(const char* field) {
    skip_separators(field);
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw FormatError(std::string("malformed header: ") + field);
    }
    std::size_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      if (value > (std::size_t{1} << 31)) {
        throw FormatError(std::string("malformed header: ") + field + " too large");
      }
      ++pos_;
    }
    return value;
  }

  // The single whitespace byte that terminates the header.
  void expect_data_separator() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw FormatError("malformed header: missing whitespace after maxval");
    }
    ++pos_;
  }

  std::size_t position() const { return pos_; }

 private:
  void skip_separators(const char* field) {
    bool saw_space = false;
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        saw_space = true;
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    if (!saw_space) {
      throw FormatError(std::string("malformed header: expected whitespace before ") + field);
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

struct RasterHeader {
  std::size_t width;
  std::size_t height;
  std::size_t data_offset;
};

inline RasterHeader read_header(std::span<const std::uint8_t> bytes, std::string_view magic,
                                std::size_t channels) {
  HeaderReader reader(bytes);
  reader.expect_magic(magic);
  const std::size_t width = reader.read_number("width");
  const std::size_t height = reader.read_number("height");
  const std::size_t maxval = reader.read_number("maxval");
  if (width == 0) throw FormatError("malformed header: width must be positive");
  if (height == 0) throw FormatError("malformed header: height must be positive");
  if (maxval != 255) {
    throw FormatError("unsupported maxval " + std::to_string(maxval) + ": expected 255");
  }
  reader.expect_data_separator();
  const std::size_t needed = width * height * channels;
  const std::size_t available = bytes.size() - reader.position();
  if (available < needed) {
    throw FormatError("truncated pixel data: expected " + std::to_string(needed) +
                      " bytes, got " + std::to_string(available));
  }
  return {width, height, reader.position()};
}

inline void append_header(Bytes& out, std::string_view magic, std::size_t width,
                          std::size_t height) {
  const std::string header = std::string(magic) + "\n" + std::to_string(width) + " " +
                             std::to_string(height) + "\n255\n";
  out.insert(out.end(), header.begin(), header.end());
}

}  // namespace detail

inline GrayImage parse_pgm(std::span<const std::uint8_t> bytes) {
  const auto header = detail::read_header(bytes, "P5", 1);
  GrayImage image{header.width, header.height, {}};
  const auto first = bytes.begin() + static_cast<std::ptrdiff_t>(header.data_offset);
  image.pixels.assign(first, first + static_cast<std::ptrdiff_t>(header.width * header.height));
  return image;
}

inline RgbImage parse_ppm(std::span<const std::uint8_t> bytes) {
  const auto header = detail::read_header(bytes, "P6", 3);
  RgbImage image{header.width, header.height, {}};
  image.pixels.resize(header.width * header.height);
  std::size_t offset = header.data_offset;
  for (auto& px : image.pixels) {
    px = {bytes[offset], bytes[offset + 1], bytes[offset + 2]};
    offset += 3;
  }
  return image;
}

inline Bytes encode_pgm(const GrayImage& image) {
  Bytes out;
  out.reserve(image.pixels.size() + 32);
  detail::append_header(out, "P5", image.width, image.height);
  out.insert(out.end(), image.pixels.begin(), image.pixels.end());
  return out;
}

inline Bytes encode_ppm(const RgbImage& image) {
  Bytes out;
  out.reserve(image.pixels.size() * 3 + 32);
  detail::append_header(out, "P6", image.width, image.height);
  for (const auto& px : image.pixels) {
    out.push_back(px.r);
    out.push_back(px.g);
    out.push_back(px.b);
  }
  return out;
}

inline Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("short write to " + path);
}

}  // namespace region_rrt
