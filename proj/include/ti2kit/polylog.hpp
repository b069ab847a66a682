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

// Principal-branch complex dilogarithm and the Clausen function Cl2.

#include "ti2kit/constants.hpp"
#include "ti2kit/detail/bernoulli.hpp"
#include "ti2kit/errors.hpp"

#include <array>
#include <cmath>
#include <complex>

namespace ti2kit {

using ComplexValue = std::complex<double>;

namespace detail {

// Coefficients B_{2k} / (2k+1)! of the series Li2 = sum_n B_n u^{n+1}/(n+1)!
// in u = -log(1-z).
inline constexpr std::array<double, 20> li2_bernoulli_coefficients = [] {
  std::array<double, 20> c{};
  for (std::size_t k = 1; k <= c.size(); ++k)
  {
    c[k - 1] = bernoulli_2k(k) / factorial(2 * k + 1);
  }
  return c;
}();

// Direct power series, |z| <= 1/2.
inline ComplexValue li2_power_series(ComplexValue z)
{
  ComplexValue sum  = 0.0;
  ComplexValue zpow = z;
  for (int n = 1; n < 200; ++n)
  {
    ComplexValue const term = zpow / static_cast<double>(n * n);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum))
    {
      break;
    }
    zpow *= z;
  }
  return sum;
}

// Bernoulli-accelerated series for |z| <= 1 and Re z <= 1/2, where
// |log(1-z)| stays well inside the radius 2*pi.
inline ComplexValue li2_bernoulli_series(ComplexValue z)
{
  ComplexValue const u  = -std::log(1.0 - z);
  ComplexValue const u2 = u * u;
  ComplexValue       sum  = 0.0;
  ComplexValue       upow = u * u2;
  for (double c : li2_bernoulli_coefficients)
  {
    ComplexValue const term = c * upow;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(u))
    {
      break;
    }
    upow *= u2;
  }
  return u - 0.25 * u2 + sum;
}

// |z| <= 1 and Re z <= 1/2.
inline ComplexValue li2_left_disc(ComplexValue z)
{
  if (std::abs(z) <= 0.5)
  {
    return li2_power_series(z);
  }
  return li2_bernoulli_series(z);
}

// |z| <= 1, reflection z -> 1 - z when Re z > 1/2.
inline ComplexValue li2_unit_disc(ComplexValue z)
{
  if (z.real() <= 0.5)
  {
    return li2_left_disc(z);
  }
  ComplexValue const w = 1.0 - z;
  if (w == 0.0)
  {
    return pi_squared / 6.0;
  }
  return pi_squared / 6.0 - std::log(z) * std::log(w) - li2_left_disc(w);
}

inline bool on_open_cut(ComplexValue z)
{
  return z.imag() == 0.0 && z.real() > 1.0;
}

}  // namespace detail

/// Principal-branch dilogarithm Li2(z), holomorphic off the cut [1, inf).
///
/// |z| <= 1/2 uses the defining power series; elsewhere z is mapped into the
/// unit disc by inversion (z -> 1/z) and then into Re z <= 1/2 by reflection
/// (z -> 1 - z). Points with |z| > 1/2 that neither map can shrink (near
/// e^{+-i pi/3}) are summed with the Bernoulli series in -log(1-z).
///
/// Throws branch_error for z on the open cut (1, inf); use
/// li2_upper_boundary() there.
inline ComplexValue li2(ComplexValue z)
{
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
  {
    throw domain_error("li2: non-finite argument");
  }
  if (detail::on_open_cut(z))
  {
    throw branch_error("li2: argument on the branch cut (1, inf); use li2_upper_boundary");
  }
  if (z == 0.0)
  {
    return 0.0;
  }

  ComplexValue result;
  if (std::norm(z) <= 1.0)
  {
    result = detail::li2_unit_disc(z);
  }
  else
  {
    ComplexValue const log_minus_z = std::log(-z);
    result = -detail::li2_unit_disc(1.0 / z) - pi_squared / 6.0 - 0.5 * log_minus_z * log_minus_z;
  }

  if (z.imag() == 0.0)
  {
    // Real on (-inf, 1].
    return {result.real(), 0.0};
  }
  return result;
}

/// Boundary value lim_{eps->0+} Li2(x + i eps) for x > 1.
inline ComplexValue li2_upper_boundary(double x)
{
  if (!(x > 1.0) || !std::isfinite(x))
  {
    throw domain_error("li2_upper_boundary: requires finite x > 1");
  }
  double const lx = std::log(x);
  double const re = pi_squared / 3.0 - 0.5 * lx * lx - li2(ComplexValue(1.0 / x, 0.0)).real();
  return {re, pi * lx};
}

/// dLi2/dz = -Log(1 - z)/z, with the removable value 1 at z = 0.
inline ComplexValue li2_derivative(ComplexValue z)
{
  if (z.imag() == 0.0 && z.real() >= 1.0)
  {
    throw branch_error("li2_derivative: argument on the branch cut [1, inf)");
  }
  if (std::abs(z) < 1e-4)
  {
    // -log(1-z)/z = sum_{n>=0} z^n/(n+1)
    return 1.0 + z * (0.5 + z * (1.0 / 3.0 + z * (0.25 + z * 0.2)));
  }
  return -std::log(1.0 - z) / z;
}

/// Clausen function Cl2(phi) = sum_{n>=1} sin(n phi)/n^2 = Im Li2(e^{i phi})
/// for phi in [0, 2 pi]. No periodic reduction is applied.
inline double clausen2(double phi)
{
  constexpr double two_pi = 2.0 * pi;
  if (!(phi >= 0.0 && phi <= two_pi))
  {
    throw domain_error("clausen2: requires 0 <= phi <= 2 pi");
  }
  if (phi == 0.0 || phi == pi || phi == two_pi)
  {
    return 0.0;
  }
  if (phi > pi)
  {
    return -clausen2(two_pi - phi);
  }
  return li2(std::polar(1.0, phi)).imag();
}

}  // namespace ti2kit
