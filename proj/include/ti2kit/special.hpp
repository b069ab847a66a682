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

// Hurwitz zeta, Ei on the negative axis, log-gamma, the cotangent
// partial-fraction sum, Catalan's constant, and the trigonometric log series
// that appear in the Fourier expansion of arctan(cot(a) tanh(x)).

#include "ti2kit/constants.hpp"
#include "ti2kit/detail/bernoulli.hpp"
#include "ti2kit/errors.hpp"
#include "ti2kit/numerics/summation.hpp"

#include <cmath>
#include <cstdint>

namespace ti2kit {

/// Hurwitz zeta sum_{k>=0} (k + c)^{-s} for s > 1, c > 0.
///
/// Direct summation of the first M = 16 ceil(c) + 32 terms, then the
/// Euler-Maclaurin remainder with Bernoulli corrections through B_12.
inline double hurwitz_zeta(double s, double c)
{
  if (!(s > 1.0) || !std::isfinite(s))
  {
    throw domain_error("hurwitz_zeta: requires finite s > 1");
  }
  if (!(c > 0.0) || !std::isfinite(c))
  {
    throw domain_error("hurwitz_zeta: requires finite c > 0");
  }

  auto const   m = static_cast<std::int64_t>(16.0 * std::ceil(c) + 32.0);
  double const x = static_cast<double>(m) + c;

  // Tail: integral + half-term + sum_j B_2j/(2j)! s(s+1)...(s+2j-2) x^{-s-2j+1}
  double const xs   = std::pow(x, -s);
  double       tail = x * xs / (s - 1.0) + 0.5 * xs;
  double       rising = s;        // s (s+1) ... (s+2j-2)
  double       xpow   = xs / x;   // x^{-s-2j+1}
  for (std::size_t j = 1; j <= 6; ++j)
  {
    tail += detail::bernoulli_2k(j) / detail::factorial(2 * j) * rising * xpow;
    rising *= (s + 2.0 * static_cast<double>(j) - 1.0) * (s + 2.0 * static_cast<double>(j));
    xpow /= x * x;
  }

  // Smallest terms first.
  numerics::compensated_sum acc(tail);
  for (std::int64_t k = m - 1; k >= 0; --k)
  {
    acc += std::pow(static_cast<double>(k) + c, -s);
  }
  return acc.value();
}

/// Exponential integral Ei(-x) = -int_x^inf e^{-t}/t dt for x > 0.
///
/// Convergent series for x <= 6, modified Lentz continued fraction for E1
/// beyond.
inline double ei_negative(double x)
{
  if (!(x > 0.0) || std::isnan(x))
  {
    throw domain_error("ei_negative: requires x > 0");
  }
  if (std::isinf(x))
  {
    return -0.0;
  }

  if (x <= 6.0)
  {
    // gamma + ln x + sum_{n>=1} (-x)^n / (n n!)
    numerics::compensated_sum acc;
    double                    term = 1.0;  // (-x)^n / n!
    for (int n = 1; n < 200; ++n)
    {
      term *= -x / n;
      double const t = term / n;
      acc += t;
      if (std::abs(t) < 1e-18)
      {
        break;
      }
    }
    return euler_gamma + std::log(x) + acc.value();
  }

  constexpr double tiny = 1e-300;
  double           b    = x + 1.0;
  double           c    = 1.0 / tiny;
  double           d    = 1.0 / b;
  double           h    = d;
  for (int i = 1; i < 1000; ++i)
  {
    double const an = -static_cast<double>(i) * i;
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny)
    {
      d = tiny;
    }
    c = b + an / c;
    if (std::abs(c) < tiny)
    {
      c = tiny;
    }
    d              = 1.0 / d;
    double const del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16)
    {
      break;
    }
  }
  return -h * std::exp(-x);
}

/// T(xi) = int_0^1 (e^{-xi x} - 1)/x dx = Ei(-xi) - gamma - ln(xi), xi > 0.
///
/// For xi <= 6 the gamma + ln(xi) part of the Ei series is dropped
/// analytically, which keeps full accuracy as xi -> 0.
inline double expint_T(double xi)
{
  if (!(xi > 0.0) || std::isnan(xi))
  {
    throw domain_error("expint_T: requires xi > 0");
  }
  if (xi <= 6.0)
  {
    numerics::compensated_sum acc;
    double                    term = 1.0;
    for (int n = 1; n < 200; ++n)
    {
      term *= -xi / n;
      double const t = term / n;
      acc += t;
      if (std::abs(t) < 1e-18 * std::abs(acc.value()))
      {
        break;
      }
    }
    return acc.value();
  }
  return ei_negative(xi) - euler_gamma - std::log(xi);
}

/// sum_{k>=1} 1/((k pi)^2 - b^2) = 1/(2 b^2) - cot(b)/(2 b).
inline double cot_partial_fraction_sum(double b)
{
  if (!std::isfinite(b))
  {
    throw domain_error("cot_partial_fraction_sum: non-finite argument");
  }
  double const nearest = std::round(b / pi) * pi;
  if (std::abs(b - nearest) <= 1e-10)
  {
    throw pole_error("cot_partial_fraction_sum: b is within 1e-10 of a multiple of pi");
  }
  return 1.0 / (2.0 * b * b) - std::cos(b) / (2.0 * b * std::sin(b));
}

/// ln Gamma(x) for x > 0: Stirling series after shifting x up to >= 10.
inline double log_gamma(double x)
{
  if (!(x > 0.0) || std::isnan(x))
  {
    throw domain_error("log_gamma: requires x > 0");
  }
  if (std::isinf(x))
  {
    return x;
  }

  double shift = 0.0;
  double prod  = 1.0;
  while (x < 10.0)
  {
    prod *= x;
    x += 1.0;
    if (prod > 1e280)
    {
      shift += std::log(prod);
      prod = 1.0;
    }
  }
  shift += std::log(prod);

  constexpr double half_log_two_pi = 0.91893853320467274178;
  double const     inv   = 1.0 / x;
  double const     inv2  = inv * inv;
  double           corr  = 0.0;
  double           power = inv;
  for (std::size_t k = 1; k <= 8; ++k)
  {
    double const two_k = 2.0 * static_cast<double>(k);
    corr += detail::bernoulli_2k(k) / (two_k * (two_k - 1.0)) * power;
    power *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + corr - shift;
}

/// Partial sum sum_{n<count} (-1)^n/(2n+1)^2 of the Dirichlet beta series.
inline double catalan_partial_sum(std::int64_t count)
{
  numerics::compensated_sum acc;
  for (std::int64_t n = count - 1; n >= 0; --n)
  {
    double const d = 2.0 * static_cast<double>(n) + 1.0;
    acc += ((n % 2 == 0) ? 1.0 : -1.0) / (d * d);
  }
  return acc.value();
}

/// Catalan's constant from beta(2) = sum (-1)^n/(2n+1)^2, accelerated with
/// the Cohen-Rodriguez Villegas-Zagier scheme. The terms are moments
/// 1/(2n+1)^2 = int_0^1 t^n w(t) dt of a positive weight with total mass 1,
/// so n terms carry an error below 2/(3+sqrt 8)^n.
inline double catalan_reference(double tol = 1e-15)
{
  if (!(tol >= 1e-15))
  {
    throw domain_error("catalan_reference: tolerance floor is 1e-15");
  }
  double const rate  = 3.0 + std::sqrt(8.0);
  int          terms = 1;
  while (2.0 / std::pow(rate, terms) > 0.5 * tol)
  {
    ++terms;
  }

  double d = std::pow(rate, terms);
  d        = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  numerics::compensated_sum acc;
  for (int k = 0; k < terms; ++k)
  {
    double const a = 1.0 / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
    c              = b - c;
    acc += c * a;
    b = (k + static_cast<double>(terms)) * (k - static_cast<double>(terms)) * b /
        ((k + 0.5) * (k + 1.0));
  }
  return acc.value() / d;
}

/// sum_{j>=1} sin(2 j alpha)/j = pi/2 - alpha, for 0 < alpha < pi.
inline double sawtooth_sum(double alpha)
{
  if (!(alpha > 0.0 && alpha < pi))
  {
    throw domain_error("sawtooth_sum: requires 0 < alpha < pi");
  }
  return 0.5 * pi - alpha;
}

/// sum_{j>=1} sin(2 j alpha) ln(j)/j for 0 < alpha < pi, from Kummer's
/// Fourier series of ln Gamma at x = alpha/pi:
///   pi lnG(x) + (alpha - pi/2)(gamma + ln 2) + (alpha - pi) ln pi + (pi/2) ln sin(alpha).
/// The series itself is only conditionally convergent.
inline double sine_log_series(double alpha)
{
  if (!(alpha > 0.0 && alpha < pi))
  {
    throw domain_error("sine_log_series: requires 0 < alpha < pi");
  }
  return pi * log_gamma(alpha / pi) + (alpha - 0.5 * pi) * (euler_gamma + ln2) +
         (alpha - pi) * ln_pi + 0.5 * pi * std::log(std::sin(alpha));
}

/// sum_{j>=1} sin(2j) ln(j)/j
///   = pi lnG(1/pi) + (1 - pi/2)(gamma + ln 2 pi) - (pi/2) ln(pi / sin 1).
inline double kummer_sine_log_sum()
{
  return pi * log_gamma(1.0 / pi) + (1.0 - 0.5 * pi) * (euler_gamma + ln2 + ln_pi) -
         0.5 * pi * std::log(pi / std::sin(1.0));
}

}  // namespace ti2kit
