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

// Evaluators of the inverse tangent integral Ti2(y) = int_0^y arctan(x)/x dx.

#include "ti2kit/constants.hpp"
#include "ti2kit/errors.hpp"
#include "ti2kit/numerics/quadrature.hpp"
#include "ti2kit/polylog.hpp"
#include "ti2kit/report.hpp"

#include <cmath>
#include <string>
#include <string_view>

namespace ti2kit {

enum class Ti2Method
{
  series,
  imaginary_dilog,
  quadrature,
  proposition_form,
  clausen_form,
};

constexpr std::string_view to_string(Ti2Method m)
{
  switch (m)
  {
  case Ti2Method::series:
    return "series";
  case Ti2Method::imaginary_dilog:
    return "imaginary-dilog";
  case Ti2Method::quadrature:
    return "quadrature";
  case Ti2Method::proposition_form:
    return "proposition-form";
  case Ti2Method::clausen_form:
    return "clausen-form";
  }
  return "unknown";
}

inline constexpr double ti2_series_radius = 0.99;

/// Route ti2() takes for argument y.
constexpr Ti2Method ti2_method_for(double y)
{
  return (y <= ti2_series_radius && y >= -ti2_series_radius) ? Ti2Method::series
                                                             : Ti2Method::imaginary_dilog;
}

namespace detail {

// sum_{n>=0} (-1)^n y^{2n+1}/(2n+1)^2 for 0 <= y <= 0.99.
inline double ti2_power_series(double y)
{
  double const y2   = y * y;
  double       ypow = y;
  double       sum  = 0.0;
  for (int n = 0; n < 4000; ++n)
  {
    double const d    = 2.0 * n + 1.0;
    double const term = ypow / (d * d);
    sum += (n % 2 == 0) ? term : -term;
    if (term <= 1e-17 * sum)
    {
      break;
    }
    ypow *= y2;
  }
  return sum;
}

}  // namespace detail

/// Ti2(y) for finite y. Power series for |y| <= 0.99, Im Li2(i y) beyond.
/// Odd symmetry is exact: the value is computed at |y| and the sign restored.
inline double ti2(double y)
{
  if (!std::isfinite(y))
  {
    throw domain_error("ti2: requires finite y");
  }
  if (y == 0.0)
  {
    return 0.0;
  }
  double const ay = std::abs(y);
  double const v  = (ay <= ti2_series_radius) ? detail::ti2_power_series(ay)
                                              : li2(ComplexValue(0.0, ay)).imag();
  return std::signbit(y) ? -v : v;
}

/// Adaptive quadrature of arctan(x)/x over [0, y], y >= 0. Independent of
/// every dilogarithm route.
inline double ti2_via_quadrature(double y, double tol = 1e-13)
{
  if (!(y >= 0.0) || !std::isfinite(y))
  {
    throw domain_error("ti2_via_quadrature: requires finite y >= 0");
  }
  if (y == 0.0)
  {
    return 0.0;
  }
  auto integrand = [](double x) { return std::atan(x) / x; };
  return numerics::integrate_adaptive(integrand, {1.0, std::atan(y) / y}, 0.0, y, tol).value;
}

/// arctan(a) ln(a) + Im Li2(1 + i a) - (pi/4) ln(1 + a^2), a > 0.
inline double ti2_proposition_form(double a)
{
  if (!(a > 0.0) || !std::isfinite(a))
  {
    throw domain_error("ti2_proposition_form: requires finite a > 0");
  }
  return std::atan(a) * std::log(a) + li2(ComplexValue(1.0, a)).imag() -
         0.25 * pi * std::log1p(a * a);
}

inline constexpr double clausen_theta_margin = 1e-6;

/// theta ln tan(theta) + Cl2(2 theta)/2 + Cl2(pi - 2 theta)/2, which equals
/// Ti2(tan theta) for 0 < theta < pi/2. Requires theta at least 1e-6 away
/// from both ends.
inline double ti2_clausen_form(double theta)
{
  if (!(theta >= clausen_theta_margin && theta <= 0.5 * pi - clausen_theta_margin))
  {
    throw domain_error("ti2_clausen_form: requires 1e-6 <= theta <= pi/2 - 1e-6");
  }
  return theta * std::log(std::tan(theta)) + 0.5 * clausen2(2.0 * theta) +
         0.5 * clausen2(pi - 2.0 * theta);
}

/// Ti2(tan theta) against the Clausen reduction.
inline IdentityReport clausen_reduction_identity(double theta, double tolerance = 1e-10)
{
  double const rhs = ti2_clausen_form(theta);
  double const y   = std::tan(theta);
  return make_report("corollary4", {{"theta", theta}}, ti2(y), rhs, tolerance,
                     std::string(to_string(ti2_method_for(y))), "clausen-form");
}

}  // namespace ti2kit
