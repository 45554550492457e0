// Copyright 2026 The snakelp Authors
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

#include "snakelp/image_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

namespace snakelp {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoFailure("cannot open " + path + " for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoFailure("read error on " + path);
  }
  return std::move(buf).str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoFailure("cannot open " + path + " for writing");
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) {
    throw IoFailure("write error on " + path);
  }
}

// Cursor over a PNM header: tokens separated by whitespace, '#' comments
// run to end of line.
class HeaderCursor {
 public:
  HeaderCursor(const std::string& bytes, std::size_t pos) : bytes_(bytes), pos_(pos) {}

  std::string next_token() {
    skip_separators();
    std::size_t start = pos_;
    while (pos_ < bytes_.size() && !is_space(bytes_[pos_])) {
      ++pos_;
    }
    if (start == pos_) {
      throw BadHeader("unexpected end of header");
    }
    return bytes_.substr(start, pos_ - start);
  }

  /// Consumes exactly one whitespace byte after the last header token.
  std::size_t payload_offset() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw BadHeader("missing separator before payload");
    }
    return pos_ + 1;
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  }

  void skip_separators() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
          ++pos_;
        }
      } else {
        break;
      }
    }
  }

  const std::string& bytes_;
  std::size_t pos_;
};

int parse_int(const std::string& token, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw BadHeader(std::string("non-numeric ") + what + ": '" + token + "'");
  }
  if (used != token.size()) {
    throw BadHeader(std::string("non-numeric ") + what + ": '" + token + "'");
  }
  if (value <= 0 || value > std::numeric_limits<int>::max()) {
    throw BadHeader(std::string(what) + " out of range: " + token);
  }
  return static_cast<int>(value);
}

double parse_double(const std::string& token, const char* what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw BadHeader(std::string("non-numeric ") + what + ": '" + token + "'");
  }
  if (used != token.size()) {
    throw BadHeader(std::string("non-numeric ") + what + ": '" + token + "'");
  }
  return value;
}

std::uint32_t byteswap32(std::uint32_t v) {
  return ((v & 0xff000000u) >> 24) | ((v & 0x00ff0000u) >> 8) | ((v & 0x0000ff00u) << 8) |
         ((v & 0x000000ffu) << 24);
}

float load_le_float(const char* bytes, bool swap) {
  std::uint32_t raw;
  std::memcpy(&raw, bytes, 4);
  if constexpr (std::endian::native == std::endian::big) {
    swap = !swap;
  }
  if (swap) {
    raw = byteswap32(raw);
  }
  float out;
  std::memcpy(&out, &raw, 4);
  return out;
}

void store_le_float(float value, char* bytes) {
  std::uint32_t raw;
  std::memcpy(&raw, &value, 4);
  if constexpr (std::endian::native == std::endian::big) {
    raw = byteswap32(raw);
  }
  std::memcpy(bytes, &raw, 4);
}

}  // namespace

GrayImage decode_pgm(const std::string& bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw BadMagic("not a binary PGM (expected magic P5)");
  }
  HeaderCursor cursor(bytes, 2);
  const int width = parse_int(cursor.next_token(), "width");
  const int height = parse_int(cursor.next_token(), "height");
  const std::string maxval = cursor.next_token();
  if (parse_int(maxval, "maxval") != 255) {
    throw BadHeader("unsupported maxval " + maxval + " (expected 255)");
  }
  const std::size_t offset = cursor.payload_offset();
  const std::size_t need = static_cast<std::size_t>(width) * height;
  if (bytes.size() - offset < need) {
    throw Truncated("PGM payload shorter than width*height");
  }
  std::vector<std::uint8_t> pixels(need);
  std::memcpy(pixels.data(), bytes.data() + offset, need);
  return GrayImage(width, height, std::move(pixels));
}

std::string encode_pgm(const GrayImage& img) {
  std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) +
                    "\n255\n";
  out.append(reinterpret_cast<const char*>(img.data.data()), img.data.size());
  return out;
}

GrayImage load_pgm(const std::string& path) { return decode_pgm(read_file(path)); }

void save_pgm(const GrayImage& img, const std::string& path) {
  write_file(path, encode_pgm(img));
}

FloatField decode_pfm(const std::string& bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') {
    throw BadMagic("not a PFM (expected magic Pf)");
  }
  if (bytes[1] != 'f') {
    throw BadMagic(bytes[1] == 'F' ? "color PFM not supported (expected grayscale Pf)"
                                   : "not a PFM (expected magic Pf)");
  }
  HeaderCursor cursor(bytes, 2);
  const int width = parse_int(cursor.next_token(), "width");
  const int height = parse_int(cursor.next_token(), "height");
  const double scale = parse_double(cursor.next_token(), "scale");
  if (scale == 0.0) {
    throw BadHeader("PFM scale must be nonzero");
  }
  const bool big_endian_file = scale > 0.0;
  const std::size_t offset = cursor.payload_offset();
  const std::size_t need = static_cast<std::size_t>(width) * height * 4;
  if (bytes.size() - offset < need) {
    throw Truncated("PFM payload shorter than 4*width*height");
  }
  FloatField field(width, height);
  // PFM rows run bottom-to-top.
  for (int file_row = 0; file_row < height; ++file_row) {
    const int image_row = height - 1 - file_row;
    const char* src = bytes.data() + offset + static_cast<std::size_t>(file_row) * width * 4;
    for (int col = 0; col < width; ++col) {
      const float v = load_le_float(src + static_cast<std::size_t>(col) * 4, big_endian_file);
      if (!std::isfinite(v)) {
        throw CorruptPayload("non-finite sample in PFM payload");
      }
      field.at(image_row, col) = static_cast<double>(v);
    }
  }
  return field;
}

std::string encode_pfm(const FloatField& field) {
  std::string out = "Pf\n" + std::to_string(field.width) + " " + std::to_string(field.height) +
                    "\n-1.0\n";
  const std::size_t header = out.size();
  out.resize(header + field.pixel_count() * 4);
  for (int file_row = 0; file_row < field.height; ++file_row) {
    const int image_row = field.height - 1 - file_row;
    char* dst = out.data() + header + static_cast<std::size_t>(file_row) * field.width * 4;
    for (int col = 0; col < field.width; ++col) {
      store_le_float(static_cast<float>(field.at(image_row, col)),
                     dst + static_cast<std::size_t>(col) * 4);
    }
  }
  return out;
}

FloatField load_pfm(const std::string& path) { return decode_pfm(read_file(path)); }

void save_pfm(const FloatField& field, const std::string& path) {
  write_file(path, encode_pfm(field));
}

}  // namespace snakelp
