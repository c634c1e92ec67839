// base/binary-io.cc

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

#include "dysaug/base/binary-io.h"

#include <fstream>
#include <iterator>

#include "dysaug/base/errors.h"

namespace dysaug {

std::string_view ByteReader::GetBytes(std::size_t n) {
  if (n > remaining())
    ThrowValidation(what_, ": truncated at byte ", pos_, " (wanted ", n,
                    " more bytes, have ", remaining(), ")");
  std::string_view out = data_.substr(pos_, n);
  pos_ += n;
  return out;
}

std::string ReadFileBytes(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowValidation("cannot open ", path.string(), " for reading");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void WriteFileBytes(const std::filesystem::path &path, std::string_view bytes) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) ThrowRuntime("cannot open ", path.string(), " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) ThrowRuntime("write failed for ", path.string());
}

}  // namespace dysaug
