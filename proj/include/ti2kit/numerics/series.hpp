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

#include "ti2kit/errors.hpp"
#include "ti2kit/numerics/summation.hpp"

#include <cmath>
#include <concepts>
#include <cstdint>

namespace ti2kit::numerics {

/// Truncated series: partial sum, number of terms, and a bound on the
/// omitted remainder as reported by the caller's tail-bound function.
struct SeriesResult
{
  double        value{0.0};
  std::int64_t  terms_used{0};
  double        tail_bound{0.0};
  bool          truncated{false};  ///< tail_bound > tol when summation stopped
};

/// Sums term(1) + term(2) + ... and stops at the first K with
/// tail_bound(K) <= tol, or at max_terms (flagging the result as truncated).
/// tail_bound(K) must bound |sum_{k>K} term(k)| and be non-increasing in K.
template <typename Term, typename TailBound>
  requires std::invocable<Term, std::int64_t> && std::invocable<TailBound, std::int64_t>
SeriesResult sum_series(Term &&term, TailBound &&tail_bound, double tol, std::int64_t max_terms)
{
  if (!(tol > 0.0))
  {
    throw domain_error("sum_series: tolerance must be positive");
  }
  if (max_terms < 1)
  {
    throw domain_error("sum_series: max_terms must be at least 1");
  }

  compensated_sum acc;
  double          bound = 0.0;
  std::int64_t    k     = 1;
  for (;; ++k)
  {
    double const t = static_cast<double>(term(k));
    if (std::isnan(t))
    {
      throw domain_error("sum_series: term evaluated to NaN");
    }
    acc += t;
    bound = static_cast<double>(tail_bound(k));
    if (bound <= tol || k >= max_terms)
    {
      break;
    }
  }

  return SeriesResult{acc.value(), k, bound, bound > tol};
}

}  // namespace ti2kit::numerics
