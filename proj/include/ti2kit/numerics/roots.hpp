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

#include <cmath>
#include <concepts>
#include <optional>
#include <functional>

namespace ti2kit::numerics {

struct RootResult
{
  double root{0.0};
  double residual{0.0};  ///< |g(root) - target|
  int    iterations{0};
};

struct RootOptions
{
  double width_floor{1e-14};
  int    max_iterations{400};
};

/// Solves g(b) = target for b in (lo, hi) where g is strictly increasing.
///
/// Bisection keeps the bracket; when a derivative is supplied, a Newton step
/// is taken instead of the midpoint whenever it lands strictly inside the
/// current bracket. Stops once |g(b) - target| <= tol or the bracket is
/// narrower than options.width_floor.
template <typename G>
  requires std::invocable<G &, double>
RootResult find_root_increasing(G &&g, double lo, double hi, double target, double tol,
                                std::function<double(double)> const &derivative = {},
                                RootOptions const &options = {})
{
  if (!(lo < hi))
  {
    throw domain_error("find_root_increasing: requires lo < hi");
  }
  if (!(tol > 0.0))
  {
    throw domain_error("find_root_increasing: tolerance must be positive");
  }

  double const g_lo = static_cast<double>(g(lo)) - target;
  double const g_hi = static_cast<double>(g(hi)) - target;
  if (!(g_lo < 0.0 && g_hi > 0.0))
  {
    throw bracket_error("find_root_increasing: target not strictly inside [g(lo), g(hi)]");
  }

  double best_x   = lo;
  double best_res = -g_lo;
  if (g_hi < best_res)
  {
    best_x   = hi;
    best_res = g_hi;
  }

  double x = 0.5 * (lo + hi);
  for (int it = 1; it <= options.max_iterations; ++it)
  {
    double const fx = static_cast<double>(g(x)) - target;
    if (std::isnan(fx))
    {
      throw domain_error("find_root_increasing: function returned NaN");
    }
    if (std::abs(fx) < best_res)
    {
      best_x   = x;
      best_res = std::abs(fx);
    }
    if (std::abs(fx) <= tol)
    {
      return RootResult{x, std::abs(fx), it};
    }

    if (fx < 0.0)
    {
      lo = x;
    }
    else
    {
      hi = x;
    }

    if (hi - lo < options.width_floor)
    {
      if (best_res <= tol)
      {
        return RootResult{best_x, best_res, it};
      }
      throw budget_error("find_root_increasing: bracket collapsed before reaching tolerance",
                         best_x, best_res);
    }

    double next = 0.5 * (lo + hi);
    if (derivative)
    {
      double const slope = derivative(x);
      if (slope > 0.0 && std::isfinite(slope))
      {
        double const newton = x - fx / slope;
        if (newton > lo && newton < hi)
        {
          next = newton;
        }
      }
    }
    x = next;
  }

  throw budget_error("find_root_increasing: iteration budget exhausted", best_x, best_res);
}

}  // namespace ti2kit::numerics
