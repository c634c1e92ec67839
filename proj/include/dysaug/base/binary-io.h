// base/binary-io.h

// Copyright 2026 The dysaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef DYSAUG_BASE_BINARY_IO_H_
#define DYSAUG_BASE_BINARY_IO_H_

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dysaug {

// Little-endian encoder into a byte buffer.  All on-disk formats in this
// project are written through this class so byte order never depends on the
// host.
class ByteWriter {
 public:
  void PutBytes(std::string_view bytes) {
    buf_.insert(buf_.end(), bytes.begin(), bytes.end());
  }
  void PutU16(std::uint16_t v) { PutLittle(v); }
  void PutU32(std::uint32_t v) { PutLittle(v); }
  void PutU64(std::uint64_t v) { PutLittle(v); }
  void PutI16(std::int16_t v) { PutLittle(static_cast<std::uint16_t>(v)); }
  void PutF32(float v) { PutLittle(std::bit_cast<std::uint32_t>(v)); }
  void PutF64(double v) { PutLittle(std::bit_cast<std::uint64_t>(v)); }

  const std::string &bytes() const { return buf_; }

 private:
  template <typename U>
  void PutLittle(U v) {
    for (std::size_t i = 0; i < sizeof(U); ++i)
      buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  std::string buf_;
};

// Bounds-checked little-endian decoder.  Running past the end throws a
// ValidationError mentioning `what`.
class ByteReader {
 public:
  ByteReader(std::string_view data, std::string what)
      : data_(data), what_(std::move(what)) {}

  std::string_view GetBytes(std::size_t n);
  std::uint16_t GetU16() { return GetLittle<std::uint16_t>(); }
  std::uint32_t GetU32() { return GetLittle<std::uint32_t>(); }
  std::uint64_t GetU64() { return GetLittle<std::uint64_t>(); }
  std::int16_t GetI16() { return static_cast<std::int16_t>(GetU16()); }
  float GetF32() { return std::bit_cast<float>(GetU32()); }
  double GetF64() { return std::bit_cast<double>(GetU64()); }

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }
  void Skip(std::size_t n) { GetBytes(n); }

 private:
  template <typename U>
  U GetLittle() {
    std::string_view b = GetBytes(sizeof(U));
    U v = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i)
      v |= static_cast<U>(static_cast<unsigned char>(b[i])) << (8 * i);
    return v;
  }
  std::string_view data_;
  std::string what_;
  std::size_t pos_ = 0;
};

std::string ReadFileBytes(const std::filesystem::path &path);
void WriteFileBytes(const std::filesystem::path &path, std::string_view bytes);

}  // namespace dysaug

#endif  // DYSAUG_BASE_BINARY_IO_H_
