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

// Reference values and brute-force evaluators for the tests. Nothing here
// calls into the library; the point is to have a second, independent route.

#include <cmath>
#include <cstdint>

namespace oracle {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Published constants, to full double precision.
inline constexpr double catalan      = 0.915965594177219015054603514932384110774;
inline constexpr double euler_gamma  = 0.577215664901532860606512090082402431042;
inline constexpr double clausen_pi_3 = 1.014941606409653625021202554274520285942;
inline constexpr double apery        = 1.202056903159594285399738161511449990765;

// Values computed once with 50-digit arithmetic (mpmath).
inline constexpr double ti2_half      = 0.48722235829452235711;  // Ti2(1/2)
inline constexpr double lngamma_1_pi  = 1.0336461257655827;      // ln Gamma(1/pi)
inline constexpr double psi_1         = 1.4603621167531195;      // Im Li2(1 + i)
inline constexpr double b_of_1        = 2.4169088660957984;      // 2 sqrt(psi_1)
inline constexpr double K_of_1        = 0.567634918950821057;    // int_0^1 atan(cot 1 tanh x)/x dx
inline constexpr double ei_minus_1    = -0.21938393439552027368;
inline constexpr double ei_minus_2    = -0.048900510708061119567;
inline constexpr double T_of_2        = -1.3192633561695393;
inline constexpr double S_1           = 0.35790738406566930;  // 1 - cot 1
inline constexpr double S_3           = 0.0931835606823305;
inline constexpr double S_5           = 0.0215907708713128;

/// Composite Simpson rule with n (even) panels.
template <typename F>
double simpson(F &&f, double lo, double hi, int n)
{
  double const h   = (hi - lo) / n;
  double       acc = f(lo) + f(hi);
  for (int i = 1; i < n; ++i)
  {
    acc += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  }
  return acc * h / 3.0;
}

/// Ti2(y) for y >= 0 by Simpson on the smooth integrand atan(x)/x.
inline double ti2_simpson(double y, int n = 20000)
{
  if (y == 0.0)
  {
    return 0.0;
  }
  return simpson([](double x) { return x == 0.0 ? 1.0 : std::atan(x) / x; }, 0.0, y, n);
}

/// sum_{k=0}^{M-1} (k+c)^{-s} plus the integral and half-term tail
/// corrections; the leftover is below s (M+c)^{-s-1} / 12.
inline double hurwitz_direct(double s, double c, std::int64_t M = 200000)
{
  double acc = 0.0;
  for (std::int64_t k = M - 1; k >= 0; --k)
  {
    acc += std::pow(static_cast<double>(k) + c, -s);
  }
  double const end = static_cast<double>(M) + c;
  return acc + std::pow(end, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(end, -s);
}

/// sum_{k=1}^{M} [(k pi - 1)^{-r} - (k pi + 1)^{-r}] plus the leading-order
/// tail: each omitted term is about 2 r (k pi)^{-r-1}, which sums to
/// 2 / (pi^{r+1} M^r).
inline double S_direct(int r, std::int64_t M = 100000)
{
  double acc = 0.0;
  for (std::int64_t k = M; k >= 1; --k)
  {
    double const kp = static_cast<double>(k) * pi;
    acc += std::pow(kp - 1.0, -r) - std::pow(kp + 1.0, -r);
  }
  return acc + 2.0 / (std::pow(pi, r + 1) * std::pow(static_cast<double>(M), r));
}

/// Leibniz partial sum of sum (-1)^n/(2n+1)^2 averaged with the next one,
/// which cancels the leading alternating error.
inline double catalan_averaged_partial(std::int64_t count)
{
  double acc = 0.0;
  for (std::int64_t n = count - 1; n >= 0; --n)
  {
    double const d = 2.0 * static_cast<double>(n) + 1.0;
    acc += (n % 2 ? -1.0 : 1.0) / (d * d);
  }
  double const d    = 2.0 * static_cast<double>(count) + 1.0;
  double const next = (count % 2 ? -1.0 : 1.0) / (d * d);
  return acc + 0.5 * next;
}

}  // namespace oracle
