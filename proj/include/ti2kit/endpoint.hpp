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

// Tunable-endpoint representation of Ti2(a):
//
//   I(a,b)    = int_0^b arctan((a + cos t)/sin t) dt
//             = pi b/2 - b^2/2 - Li2(-a) + Re Li2(-a e^{ib})
//   psi(a)    = Im Li2(1 + i a)
//   phi_a(b)  = I(a,b) - pi b/2 + b^2/2, strictly increasing on (0, pi)
//
// For admissible a (0 < psi(a) < phi_a(pi)) the endpoint b(a) solving
// phi_a(b) = psi(a) gives
//   Ti2(a) = arctan(a) ln a + I(a,b) - pi b/2 + b^2/2 - (pi/4) ln(1 + a^2).

#include "ti2kit/constants.hpp"
#include "ti2kit/errors.hpp"
#include "ti2kit/numerics/quadrature.hpp"
#include "ti2kit/numerics/roots.hpp"
#include "ti2kit/polylog.hpp"
#include "ti2kit/report.hpp"
#include "ti2kit/special.hpp"
#include "ti2kit/ti2.hpp"

#include <cmath>
#include <string>

namespace ti2kit::endpoint {

struct AdmissibilityResult
{
  double a{0.0};
  double psi{0.0};
  double phi_pi{0.0};
  bool   admissible{false};
  bool   boundary{false};  ///< within the 1e-12 margin of either inequality
};

struct EndpointSolution
{
  double a{0.0};
  double b{0.0};
  double residual{0.0};
  int    iterations{0};
};

inline constexpr double admissibility_margin   = 1e-12;
inline constexpr double default_solver_tol     = 1e-12;
inline constexpr double default_quadrature_tol = 1e-12;

namespace detail {

inline void require_positive_a(double a, char const *who)
{
  if (!(a > 0.0) || !std::isfinite(a))
  {
    throw domain_error(std::string(who) + ": requires finite a > 0");
  }
}

inline void require_open_b(double b, char const *who)
{
  if (!(b > 0.0 && b < pi))
  {
    throw domain_error(std::string(who) + ": requires 0 < b < pi");
  }
}

}  // namespace detail

/// arctan((a + cos t)/sin t) for 0 < t < pi.
inline double aux_integrand(double a, double t)
{
  return std::atan((a + std::cos(t)) / std::sin(t));
}

/// Limit of the integrand as t -> pi from below: -pi/2, 0, pi/2 for a < 1,
/// a = 1, a > 1.
inline double aux_integrand_limit_at_pi(double a)
{
  if (a < 1.0)
  {
    return -0.5 * pi;
  }
  if (a > 1.0)
  {
    return 0.5 * pi;
  }
  return 0.0;
}

/// I(a, b) by adaptive quadrature; the integrand tends to pi/2 at t -> 0+.
inline numerics::QuadratureResult aux_integral_I(double a, double b,
                                                 double tol = default_quadrature_tol)
{
  detail::require_positive_a(a, "aux_integral_I");
  detail::require_open_b(b, "aux_integral_I");
  auto integrand = [a](double t) { return aux_integrand(a, t); };
  return numerics::integrate_adaptive(integrand, {0.5 * pi, aux_integrand(a, b)}, 0.0, b, tol);
}

/// Closed form pi b/2 - b^2/2 - Li2(-a) + Re Li2(-a e^{ib}).
inline double aux_closed_F(double a, double b)
{
  detail::require_positive_a(a, "aux_closed_F");
  detail::require_open_b(b, "aux_closed_F");
  return 0.5 * pi * b - 0.5 * b * b - li2(ComplexValue(-a, 0.0)).real() +
         li2(-a * std::polar(1.0, b)).real();
}

/// psi(a) = Im Li2(1 + i a).
inline double psi(double a)
{
  detail::require_positive_a(a, "psi");
  return li2(ComplexValue(1.0, a)).imag();
}

/// Re Li2(a) with a > 1 taken as the boundary value on the cut.
inline double re_li2_real(double a)
{
  return a > 1.0 ? li2_upper_boundary(a).real() : li2(ComplexValue(a, 0.0)).real();
}

/// phi_a(b) = -Li2(-a) + Re Li2(-a e^{ib}) for 0 <= b <= pi, with
/// phi_a(0) = 0 and phi_a(pi) = Re Li2(a) - Li2(-a).
inline double phi(double a, double b)
{
  detail::require_positive_a(a, "phi");
  if (!(b >= 0.0 && b <= pi))
  {
    throw domain_error("phi: requires 0 <= b <= pi");
  }
  if (b == 0.0)
  {
    return 0.0;
  }
  double const li2_minus_a = li2(ComplexValue(-a, 0.0)).real();
  if (b == pi)
  {
    return re_li2_real(a) - li2_minus_a;
  }
  return li2(-a * std::polar(1.0, b)).real() - li2_minus_a;
}

/// phi_a'(b) = Arg(1 + a e^{ib}), in (0, pi) for 0 < b < pi.
inline double phi_derivative(double a, double b)
{
  detail::require_positive_a(a, "phi_derivative");
  detail::require_open_b(b, "phi_derivative");
  return std::atan2(a * std::sin(b), 1.0 + a * std::cos(b));
}

inline AdmissibilityResult admissibility(double a)
{
  detail::require_positive_a(a, "admissibility");
  AdmissibilityResult r;
  r.a      = a;
  r.psi    = psi(a);
  r.phi_pi = phi(a, pi);

  bool const lower = r.psi > admissibility_margin;
  bool const upper = r.phi_pi - r.psi > admissibility_margin;
  r.admissible     = lower && upper;
  r.boundary = std::abs(r.psi) <= admissibility_margin ||
               std::abs(r.phi_pi - r.psi) <= admissibility_margin;
  return r;
}

/// Unique b in (0, pi) with phi_a(b) = psi(a). Bisection on the closed-form
/// phi, refined by Newton steps with phi' unless bisection_only is set.
inline EndpointSolution solve_endpoint_b(double a, double tol = default_solver_tol,
                                         bool bisection_only = false)
{
  auto const adm = admissibility(a);
  if (!adm.admissible)
  {
    throw admissibility_error("solve_endpoint_b: a = " + std::to_string(a) +
                              " is not admissible (need 0 < psi(a) < phi_a(pi))");
  }

  auto g = [a](double b) { return phi(a, b); };
  std::function<double(double)> slope;
  if (!bisection_only)
  {
    slope = [a](double b) { return phi_derivative(a, b); };
  }
  auto const root = numerics::find_root_increasing(g, 0.0, pi, adm.psi, tol, slope);
  return EndpointSolution{a, root.root, root.residual, root.iterations};
}

/// Ti2(a) against arctan(a) ln a + I(a,b) - pi b/2 + b^2/2 - (pi/4) ln(1+a^2)
/// with I by quadrature and b from the closed-form root solve.
inline IdentityReport theorem1_identity(double a, double tolerance = 1e-9,
                                        double solver_tol = default_solver_tol)
{
  auto const sol  = solve_endpoint_b(a, solver_tol);
  double const b  = sol.b;
  double const ia = aux_integral_I(a, b).value;
  double const rhs = std::atan(a) * std::log(a) + ia - 0.5 * pi * b + 0.5 * b * b -
                     0.25 * pi * std::log1p(a * a);
  return make_report("theorem1", {{"a", a}, {"b", b}}, ti2(a), rhs, tolerance,
                     std::string(to_string(ti2_method_for(a))), "endpoint-quadrature");
}

/// Catalan's constant as b(1)^2/4 - (pi/4) ln 2, with b(1) found by root
/// solving phi_1(b) = psi(1) and psi(1) taken from Li2(1 + i).
inline double catalan_via_endpoint(double tol = default_solver_tol)
{
  if (!(tol > 0.0))
  {
    throw domain_error("catalan_via_endpoint: tolerance must be positive");
  }
  double const b = solve_endpoint_b(1.0, tol).b;
  return 0.25 * b * b - 0.25 * pi * ln2;
}

inline IdentityReport corollary1_identity(double tolerance = 1e-10)
{
  auto const   sol = solve_endpoint_b(1.0);
  double const g   = 0.25 * sol.b * sol.b - 0.25 * pi * ln2;
  return make_report("corollary1", {{"a", 1.0}, {"b", sol.b}}, catalan_reference(), g, tolerance,
                     "accelerated-beta-series", "endpoint-root");
}

}  // namespace ti2kit::endpoint
