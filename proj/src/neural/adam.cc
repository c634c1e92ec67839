// neural/adam.cc

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

#include "dysaug/neural/adam.h"

#include <cmath>

#include "dysaug/base/errors.h"

namespace dysaug {

AdamState AdamState::For(std::span<Parameter *const> params, AdamOptions options) {
  AdamState s;
  s.options = options;
  for (const Parameter *p : params) {
    s.first_moment.emplace_back(p->size(), 0.0);
    s.second_moment.emplace_back(p->size(), 0.0);
  }
  return s;
}

void AdamStep(std::span<Parameter *const> params, AdamState *state, double lr) {
  if (state->first_moment.size() != params.size())
    ThrowValidation("AdamStep: state tracks ", state->first_moment.size(),
                    " parameters, got ", params.size());
  for (std::size_t k = 0; k < params.size(); ++k) {
    const Parameter &p = *params[k];
    if (p.grad.size() != p.size() || state->first_moment[k].size() != p.size())
      ThrowValidation("AdamStep: parameter '", p.name, "' shape mismatch");
    for (std::size_t i = 0; i < p.grad.size(); ++i)
      if (!std::isfinite(p.grad[i]))
        ThrowRuntime("AdamStep: non-finite gradient in parameter '", p.name,
                     "' at index ", i);
  }

  const AdamOptions &o = state->options;
  ++state->step;
  const double t = static_cast<double>(state->step);
  const double c1 = 1.0 - std::pow(o.beta1, t);
  const double c2 = 1.0 - std::pow(o.beta2, t);
  for (std::size_t k = 0; k < params.size(); ++k) {
    Parameter &p = *params[k];
    std::vector<double> &m = state->first_moment[k];
    std::vector<double> &v = state->second_moment[k];
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double g = p.grad[i];
      m[i] = o.beta1 * m[i] + (1.0 - o.beta1) * g;
      v[i] = o.beta2 * v[i] + (1.0 - o.beta2) * g * g;
      const double m_hat = m[i] / c1;
      const double v_hat = v[i] / c2;
      p.value[i] -= lr * m_hat / (std::sqrt(v_hat) + o.eps);
    }
  }
}

}  // namespace dysaug
