// neural/tensor.cc

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

#include "dysaug/neural/tensor.h"

#include "dysaug/base/errors.h"

namespace dysaug {

std::string Shape4::ToString() const {
  return StrCat("(", n, ", ", c, ", ", h, ", ", w, ")");
}

Parameter::Parameter(std::string n, std::vector<std::size_t> s)
    : name(std::move(n)), shape(std::move(s)) {
  std::size_t total = 1;
  for (std::size_t d : shape) total *= d;
  value.assign(total, 0.0);
  grad.assign(total, 0.0);
}

}  // namespace dysaug
