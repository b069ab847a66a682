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

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <vector>

namespace ti2kit::numerics {

struct QuadratureResult
{
  double      value{0.0};
  double      abs_error_estimate{0.0};
  std::size_t evaluations{0};
};

/// Values the integrand tends to at the two ends of the interval. The engine
/// substitutes them instead of evaluating the integrand there.
struct EndpointLimits
{
  double at_lo{0.0};
  double at_hi{0.0};
};

struct QuadratureOptions
{
  std::size_t max_subdivisions{10000};
  double      endpoint_snap{1e-300};
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss-Legendre rule.
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment
{
  double lo;
  double hi;
  double value;
  double error;
};

template <typename F>
class endpoint_guarded
{
public:
  endpoint_guarded(F &f, double lo, double hi, EndpointLimits limits, double snap)
    : f_(f)
    , lo_(lo)
    , hi_(hi)
    , limits_(limits)
    , snap_(snap)
  {}

  double operator()(double x)
  {
    ++evaluations;
    if (x <= lo_ || x - lo_ <= snap_)
    {
      return limits_.at_lo;
    }
    if (x >= hi_ || hi_ - x <= snap_)
    {
      return limits_.at_hi;
    }
    double const y = static_cast<double>(f_(x));
    if (std::isnan(y))
    {
      throw domain_error("integrate_adaptive: integrand returned NaN");
    }
    return y;
  }

  std::size_t evaluations{0};

private:
  F             &f_;
  double         lo_;
  double         hi_;
  EndpointLimits limits_;
  double         snap_;
};

template <typename G>
Segment gauss_kronrod_15(G &g, double lo, double hi)
{
  double const centre = 0.5 * (lo + hi);
  double const half   = 0.5 * (hi - lo);

  double const fc       = g(centre);
  double       kronrod  = fc * kronrod_weights[7];
  double       gauss    = fc * gauss_weights[3];

  for (std::size_t i = 0; i < 7; ++i)
  {
    double const dx  = half * kronrod_nodes[i];
    double const sum = g(centre - dx) + g(centre + dx);
    kronrod += kronrod_weights[i] * sum;
    if (i % 2 == 1)
    {
      gauss += gauss_weights[i / 2] * sum;
    }
  }

  kronrod *= half;
  gauss *= half;
  return Segment{lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive 15-point Gauss-Kronrod quadrature with bisection of the
/// segment carrying the largest error. The integrand is never evaluated at
/// lo or hi; the declared limits are used instead.
///
/// Throws budget_error (carrying the best estimate) if the error target is
/// not met within options.max_subdivisions, and domain_error on NaN.
template <typename F>
  requires std::invocable<F &, double>
QuadratureResult integrate_adaptive(F &&f, EndpointLimits limits, double lo, double hi, double tol,
                                    QuadratureOptions const &options = {})
{
  if (!(lo < hi))
  {
    throw domain_error("integrate_adaptive: requires lo < hi");
  }
  if (!(tol > 0.0))
  {
    throw domain_error("integrate_adaptive: tolerance must be positive");
  }
  if (!std::isfinite(limits.at_lo) || !std::isfinite(limits.at_hi))
  {
    throw domain_error("integrate_adaptive: endpoint limits must be finite");
  }

  detail::endpoint_guarded<std::remove_reference_t<F>> g(f, lo, hi, limits, options.endpoint_snap);

  auto by_error = [](detail::Segment const &a, detail::Segment const &b) {
    return a.error < b.error;
  };

  std::vector<detail::Segment> heap;
  heap.reserve(64);
  heap.push_back(detail::gauss_kronrod_15(g, lo, hi));
  double total_error = heap.front().error;

  auto total_value = [&heap] {
    // Fixed order (by left endpoint) keeps the sum independent of heap layout.
    std::vector<detail::Segment> sorted(heap);
    std::sort(sorted.begin(), sorted.end(),
              [](auto const &a, auto const &b) { return a.lo < b.lo; });
    compensated_sum acc;
    for (auto const &s : sorted)
    {
      acc += s.value;
    }
    return acc.value();
  };

  std::size_t subdivisions = 0;
  while (total_error > tol)
  {
    if (subdivisions >= options.max_subdivisions)
    {
      throw budget_error("integrate_adaptive: subdivision budget exhausted", total_value(),
                         total_error);
    }

    std::pop_heap(heap.begin(), heap.end(), by_error);
    detail::Segment const worst = heap.back();
    heap.pop_back();

    double const mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi))
    {
      // Segment cannot be split further in binary64.
      throw budget_error("integrate_adaptive: interval underflow", total_value(), total_error);
    }

    auto left  = detail::gauss_kronrod_15(g, worst.lo, mid);
    auto right = detail::gauss_kronrod_15(g, mid, worst.hi);

    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
    ++subdivisions;

    total_error += (left.error + right.error) - worst.error;
    if (total_error <= tol)
    {
      // Confirm against an exact recount so incremental drift cannot end the loop early.
      compensated_sum err;
      for (auto const &s : heap)
      {
        err += s.error;
      }
      total_error = err.value();
    }
  }

  return QuadratureResult{total_value(), total_error, g.evaluations};
}

}  // namespace ti2kit::numerics
