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

// Pole decomposition of arctan(x/alpha) from the partial fractions of the
// cotangent, and everything built on it:
//
//   arctan(x/alpha) = arctan(cot(alpha) tanh x) + sum_k Xi_k(x)
//   Ti2(A/alpha)    = H(A,alpha) + sum_k [Ti2(A/(k pi - alpha)) - Ti2(A/(k pi + alpha))]
//   G               = K(1) + sum_{n>=0} (-1)^n/(2n+1)^2 S_{2n+1}
//
// with H(A,alpha) = int_0^A arctan(cot(alpha) tanh x)/x dx and K(1) = H(1,1).

#include "ti2kit/constants.hpp"
#include "ti2kit/errors.hpp"
#include "ti2kit/numerics/quadrature.hpp"
#include "ti2kit/numerics/series.hpp"
#include "ti2kit/numerics/summation.hpp"
#include "ti2kit/report.hpp"
#include "ti2kit/special.hpp"
#include "ti2kit/ti2.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace ti2kit::decomp {

inline constexpr double alpha_margin = 1e-10;

/// Parameters of one evaluation of the decomposition.
struct DecompParams
{
  double       alpha{1.0};
  double       A{1.0};
  std::int64_t K{2000};  ///< pole-series truncation
  std::int64_t J{18};    ///< Fourier / Ei series truncation
  std::int64_t N{8};     ///< Hurwitz n-series truncation

  void validate() const;
};

namespace detail {

inline void require_alpha(double alpha, char const *who)
{
  if (!(alpha > alpha_margin && alpha < pi - alpha_margin))
  {
    throw domain_error(std::string(who) + ": requires alpha in (0, pi), away from multiples of pi");
  }
}

inline void require_positive(double v, char const *what, char const *who)
{
  if (!(v > 0.0) || !std::isfinite(v))
  {
    throw domain_error(std::string(who) + ": requires finite " + what + " > 0");
  }
}

inline void require_count(std::int64_t v, char const *what, char const *who)
{
  if (v < 1)
  {
    throw domain_error(std::string(who) + ": requires " + what + " >= 1");
  }
}

inline double cot(double x)
{
  return std::cos(x) / std::sin(x);
}

}  // namespace detail

inline void DecompParams::validate() const
{
  detail::require_alpha(alpha, "DecompParams");
  detail::require_positive(A, "A", "DecompParams");
  detail::require_count(K, "K", "DecompParams");
  detail::require_count(J, "J", "DecompParams");
  detail::require_count(N, "N", "DecompParams");
}

/// Xi_k(x) = arctan(2 alpha x / (x^2 + (k pi)^2 - alpha^2)).
inline double xi_k(std::int64_t k, double alpha, double x)
{
  detail::require_count(k, "k", "xi_k");
  detail::require_alpha(alpha, "xi_k");
  if (!(x >= 0.0) || !std::isfinite(x))
  {
    throw domain_error("xi_k: requires finite x >= 0");
  }
  double const kp = static_cast<double>(k) * pi;
  return std::atan(2.0 * alpha * x / (x * x + (kp - alpha) * (kp + alpha)));
}

/// Bound on sum_{k>K} Xi_k(x): 2 alpha x / (pi^2 K).
inline double pole_tail_bound(double alpha, double x, std::int64_t K)
{
  return 2.0 * alpha * x / (pi_squared * static_cast<double>(K));
}

/// arctan(x/alpha) against arctan(cot(alpha) tanh x) + sum_{k<=K} Xi_k(x).
inline IdentityReport pointwise_identity(double alpha, double x, std::int64_t K,
                                         double tolerance = 1e-12)
{
  detail::require_alpha(alpha, "pointwise_identity");
  detail::require_count(K, "K", "pointwise_identity");
  if (!(x >= 0.0) || !std::isfinite(x))
  {
    throw domain_error("pointwise_identity: requires finite x >= 0");
  }

  // Small terms first.
  numerics::compensated_sum poles;
  for (std::int64_t k = K; k >= 1; --k)
  {
    poles += xi_k(k, alpha, x);
  }
  double const rhs = std::atan(detail::cot(alpha) * std::tanh(x)) + poles.value();
  return make_report("pointwise", {{"alpha", alpha}, {"x", x}, {"K", static_cast<double>(K)}},
                     std::atan(x / alpha), rhs, tolerance, "arctan", "hyperbolic+pole-sum",
                     pole_tail_bound(alpha, x, K), K);
}

/// H(A, alpha) = int_0^A arctan(cot(alpha) tanh x)/x dx by quadrature; the
/// integrand tends to cot(alpha) at x -> 0.
inline double H_quadrature(double A, double alpha, double tol = 1e-13)
{
  detail::require_positive(A, "A", "H_quadrature");
  detail::require_alpha(alpha, "H_quadrature");
  double const c = detail::cot(alpha);
  auto integrand = [c](double x) { return std::atan(c * std::tanh(x)) / x; };
  return numerics::integrate_adaptive(integrand, {c, integrand(A)}, 0.0, A, tol).value;
}

/// Truncation J for which e^{-2 J A} < 1e-14.
inline std::int64_t default_fourier_terms(double A)
{
  return static_cast<std::int64_t>(std::ceil(7.0 * std::log(10.0) / A));
}

/// H(A, alpha) from the Fourier expansion
///   arctan(cot(alpha) tanh x) = -sum_j sin(2 j alpha)/j (e^{-2 j x} - 1)
/// integrated termwise, -sum_j sin(2 j alpha)/j T(2 j A) with
/// T(xi) = Ei(-xi) - gamma - ln(xi).
///
/// The gamma + ln(2 A j) part of T does not decay, so its sums are taken in
/// closed form (sawtooth and Kummer sine-log series); only the Ei part is
/// truncated at J, with tail bound e^{-2(J+1)A} / (2 A (J+1)^2 (1 - e^{-2A})).
inline numerics::SeriesResult H_series(double A, double alpha, std::int64_t J)
{
  detail::require_positive(A, "A", "H_series");
  detail::require_alpha(alpha, "H_series");
  detail::require_count(J, "J", "H_series");

  numerics::compensated_sum ei_part;
  for (std::int64_t j = J; j >= 1; --j)
  {
    double const jd = static_cast<double>(j);
    ei_part -= std::sin(2.0 * jd * alpha) / jd * ei_negative(2.0 * jd * A);
  }
  double const value = ei_part.value() + (euler_gamma + std::log(2.0 * A)) * sawtooth_sum(alpha) +
                       sine_log_series(alpha);

  double const next = static_cast<double>(J + 1);
  double const tail =
      std::exp(-2.0 * next * A) / (2.0 * A * next * next * (-std::expm1(-2.0 * A)));
  return numerics::SeriesResult{value, J, tail, false};
}

/// Ti2(A/alpha) against H(A,alpha) + sum_{k<=K}[Ti2(A/(k pi - alpha)) - Ti2(A/(k pi + alpha))],
/// tail bound 2 alpha A / (pi^2 K).
inline IdentityReport corollary2_series(double A, double alpha, std::int64_t K,
                                        double tolerance = 1e-9)
{
  DecompParams{alpha, A, K, 1, 1}.validate();

  numerics::compensated_sum diffs;
  for (std::int64_t k = K; k >= 1; --k)
  {
    double const kp = static_cast<double>(k) * pi;
    diffs += ti2(A / (kp - alpha)) - ti2(A / (kp + alpha));
  }
  double const rhs = H_quadrature(A, alpha) + diffs.value();
  return make_report("corollary2", {{"A", A}, {"alpha", alpha}, {"K", static_cast<double>(K)}},
                     ti2(A / alpha), rhs, tolerance, std::string(to_string(ti2_method_for(A / alpha))),
                     "H-quadrature+ti2-differences", pole_tail_bound(alpha, A, K), K);
}

/// sum_{k<=K}[Ti2(1/(2k-1)) - Ti2(1/(2k+1))], which telescopes to
/// G - Ti2(1/(2K+1)).
inline double remark1_partial(std::int64_t K)
{
  detail::require_count(K, "K", "remark1_partial");
  numerics::compensated_sum acc;
  for (std::int64_t k = K; k >= 1; --k)
  {
    double const kd = static_cast<double>(k);
    acc += ti2(1.0 / (2.0 * kd - 1.0)) - ti2(1.0 / (2.0 * kd + 1.0));
  }
  return acc.value();
}

/// G against remark1_partial(K) + Ti2(1/(2K+1)).
inline IdentityReport remark1_identity(std::int64_t K, double tolerance = 1e-10)
{
  double const partial = remark1_partial(K);
  double const rhs     = partial + ti2(1.0 / (2.0 * static_cast<double>(K) + 1.0));
  return make_report("remark1", {{"K", static_cast<double>(K)}}, catalan_reference(), rhs,
                     tolerance, "accelerated-beta-series", "telescoped-ti2-differences",
                     std::nullopt, K);
}

/// G against H(pi/n, pi/n) + sum_{k<=K}[Ti2(1/(nk-1)) - Ti2(1/(nk+1))],
/// tail bound 2/(n^2 K).
inline IdentityReport catalan_family(std::int64_t n, std::int64_t K, double tolerance = 1e-8)
{
  if (n < 2)
  {
    throw domain_error("catalan_family: requires n >= 2");
  }
  detail::require_count(K, "K", "catalan_family");

  double const nd    = static_cast<double>(n);
  double const alpha = pi / nd;
  numerics::compensated_sum diffs;
  for (std::int64_t k = K; k >= 1; --k)
  {
    double const nk = nd * static_cast<double>(k);
    diffs += ti2(1.0 / (nk - 1.0)) - ti2(1.0 / (nk + 1.0));
  }
  double const h   = (n == 2) ? 0.0 : H_quadrature(alpha, alpha);
  double const rhs = h + diffs.value();
  return make_report("corollary3", {{"n", nd}, {"K", static_cast<double>(K)}}, catalan_reference(),
                     rhs, tolerance, "accelerated-beta-series", "H-quadrature+ti2-differences",
                     2.0 / (nd * nd * static_cast<double>(K)), K);
}

/// S_r = sum_{k>=1} [(k pi - 1)^{-r} - (k pi + 1)^{-r}] for odd r >= 1.
/// S_1 = 1 - cot(1); S_r = pi^{-r} [zeta(r, 1 - 1/pi) - zeta(r, 1 + 1/pi)].
inline double S_r(int r)
{
  if (r < 1 || r % 2 == 0)
  {
    throw domain_error("S_r: requires odd r >= 1");
  }
  if (r == 1)
  {
    return 2.0 * cot_partial_fraction_sum(1.0);
  }
  double const rd = static_cast<double>(r);
  return std::pow(pi, -rd) * (hurwitz_zeta(rd, 1.0 - 1.0 / pi) - hurwitz_zeta(rd, 1.0 + 1.0 / pi));
}

/// Bound on the omitted sum_{j>J} sin(2j)/j Ei(-2j).
inline double K1_ei_tail_bound(std::int64_t J)
{
  double const next = static_cast<double>(J + 1);
  return std::exp(-2.0 * next) / (2.0 * next * next * (-std::expm1(-2.0)));
}

/// K(1) = -sum_j sin(2j)/j Ei(-2j) + pi lnG(1/pi) + (1 - pi/2) ln pi - (pi/2) ln(pi/sin 1),
/// the Ei series truncated at J.
inline double K1_closed(std::int64_t J = 18)
{
  detail::require_count(J, "J", "K1_closed");
  numerics::compensated_sum acc;
  for (std::int64_t j = J; j >= 1; --j)
  {
    double const jd = static_cast<double>(j);
    acc -= std::sin(2.0 * jd) / jd * ei_negative(2.0 * jd);
  }
  acc += pi * log_gamma(1.0 / pi);
  acc += (1.0 - 0.5 * pi) * ln_pi;
  acc -= 0.5 * pi * std::log(pi / std::sin(1.0));
  return acc.value();
}

/// Sign convention of the n >= 1 Hurwitz terms in the Catalan assembly.
enum class HurwitzOrientation
{
  /// (-1)^n/(2n+1)^2 S_{2n+1}: the orientation that follows from expanding
  /// Ti2(1/(k pi - 1)) - Ti2(1/(k pi + 1)) termwise.
  s_r_consistent,
  /// (-1)^n/(2n+1)^2 pi^{-r}[zeta(r, 1+1/pi) - zeta(r, 1-1/pi)] = -(-1)^n/(2n+1)^2 S_{2n+1}.
  plus_minus_bracket,
};

/// The n-th Hurwitz term, n >= 1.
inline double lemma1_term(int n, HurwitzOrientation orientation = HurwitzOrientation::s_r_consistent)
{
  int const    r    = 2 * n + 1;
  double const sign = (n % 2 == 0) ? 1.0 : -1.0;
  double const t    = sign / (static_cast<double>(r) * r) * S_r(r);
  return orientation == HurwitzOrientation::s_r_consistent ? t : -t;
}

/// Assembled K(1) + (1 - cot 1) + sum_{n=1}^N Hurwitz terms.
inline double lemma1_value(std::int64_t N, std::int64_t J,
                           HurwitzOrientation orientation = HurwitzOrientation::s_r_consistent)
{
  detail::require_count(N, "N", "lemma1_value");
  numerics::compensated_sum acc;
  for (std::int64_t n = N; n >= 1; --n)
  {
    acc += lemma1_term(static_cast<int>(n), orientation);
  }
  acc += S_r(1);
  acc += K1_closed(J);
  return acc.value();
}

/// G against the Hurwitz/Ei/log-Gamma representation. The n-series
/// alternates with decreasing magnitude, so its tail is bounded by the first
/// omitted term S_{2N+3}/(2N+3)^2; the Ei tail at J is added to it.
inline IdentityReport lemma1_catalan(std::int64_t N, std::int64_t J, double tolerance = 1e-10,
                                     HurwitzOrientation orientation =
                                         HurwitzOrientation::s_r_consistent)
{
  detail::require_count(N, "N", "lemma1_catalan");
  detail::require_count(J, "J", "lemma1_catalan");
  double const rhs  = lemma1_value(N, J, orientation);
  int const    next = static_cast<int>(2 * N + 3);
  double const tail = S_r(next) / (static_cast<double>(next) * next) + K1_ei_tail_bound(J);
  return make_report("lemma1", {{"N", static_cast<double>(N)}, {"J", static_cast<double>(J)}},
                     catalan_reference(), rhs, tolerance, "accelerated-beta-series",
                     "K1-closed+hurwitz-series", tail, N);
}

}  // namespace ti2kit::decomp
