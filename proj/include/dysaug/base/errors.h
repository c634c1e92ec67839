// base/errors.h

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

#ifndef DYSAUG_BASE_ERRORS_H_
#define DYSAUG_BASE_ERRORS_H_

#include <sstream>
#include <stdexcept>
#include <string>

namespace dysaug {

// Bad input: wrong sizes, out-of-range factors, malformed files.  The CLI maps
// this to exit status 2; every other std::exception maps to 1.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string &what)
      : std::invalid_argument(what) {}
};

namespace internal {
inline void AppendAll(std::ostringstream &) {}
template <typename T, typename... Rest>
void AppendAll(std::ostringstream &os, const T &first, const Rest &...rest) {
  os << first;
  AppendAll(os, rest...);
}
}  // namespace internal

template <typename... Args>
std::string StrCat(const Args &...args) {
  std::ostringstream os;
  internal::AppendAll(os, args...);
  return os.str();
}

template <typename... Args>
[[noreturn]] void ThrowValidation(const Args &...args) {
  throw ValidationError(StrCat(args...));
}

template <typename... Args>
[[noreturn]] void ThrowRuntime(const Args &...args) {
  throw std::runtime_error(StrCat(args...));
}

}  // namespace dysaug

#endif  // DYSAUG_BASE_ERRORS_H_
