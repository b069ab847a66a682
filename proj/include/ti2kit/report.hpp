//------------------------------------------------------------------------------
//
//   Copyright 2026 The ti2kit Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ti2kit {

/// Outcome of checking one identity at one parameter point: both sides,
/// how each side was computed, and whether the residual is within tolerance
/// (plus the truncation tail bound, when the right-hand side is truncated).
struct IdentityReport
{
  std::string                                   name;
  std::vector<std::pair<std::string, double>>   params;
  double                                        lhs{0.0};
  double                                        rhs{0.0};
  double                                        abs_residual{0.0};
  double                                        tolerance{0.0};
  std::optional<double>                         tail_bound;
  bool                                          pass{false};
  std::string                                   method_lhs;
  std::string                                   method_rhs;
  std::optional<std::int64_t>                   terms_used;

  double param(std::string const &key) const
  {
    for (auto const &[k, v] : params)
    {
      if (k == key)
      {
        return v;
      }
    }
    return std::nan("");
  }
};

/// Fills residual and pass flag: pass iff |lhs - rhs| <= tolerance + tail.
inline IdentityReport make_report(std::string name,
                                  std::vector<std::pair<std::string, double>> params, double lhs,
                                  double rhs, double tolerance, std::string method_lhs,
                                  std::string method_rhs,
                                  std::optional<double>       tail_bound = std::nullopt,
                                  std::optional<std::int64_t> terms_used = std::nullopt)
{
  IdentityReport r;
  r.name         = std::move(name);
  r.params       = std::move(params);
  r.lhs          = lhs;
  r.rhs          = rhs;
  r.abs_residual = std::abs(lhs - rhs);
  r.tolerance    = tolerance;
  r.tail_bound   = tail_bound;
  r.pass         = r.abs_residual <= tolerance + tail_bound.value_or(0.0);
  r.method_lhs   = std::move(method_lhs);
  r.method_rhs   = std::move(method_rhs);
  r.terms_used   = terms_used;
  return r;
}

}  // namespace ti2kit
