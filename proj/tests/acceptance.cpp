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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Each check prints the worst observed deviation next to
// its threshold.

#include "oracles.hpp"

#include "ti2kit/cli/app.hpp"
#include "ti2kit/ti2kit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ti2kit;
using oracle::pi;

struct Outcome
{
  bool        pass;
  std::string detail;
};

std::string fmt(char const *pattern, double a, double b)
{
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

Outcome catalan_routes()
{
  std::vector<std::pair<char const *, double>> const routes = {
      {"reference", catalan_reference()},
      {"endpoint", endpoint::catalan_via_endpoint()},
      {"telescoped", decomp::remark1_partial(100) + ti2(1.0 / 201.0)},
      {"clausen", ti2_clausen_form(pi / 4.0)},
      {"hurwitz", decomp::lemma1_value(8, 18)},
  };
  double worst = 0.0;
  for (auto const &[_, u] : routes)
  {
    for (auto const &[__, v] : routes)
    {
      worst = std::max(worst, std::abs(u - v));
    }
  }
  int twelve_digits = 0;
  for (auto const &[_, v] : routes)
  {
    twelve_digits += std::abs(v - 0.9159655941772190) < 5e-13;
  }
  return {worst < 1e-8 && twelve_digits >= 3,
          fmt("max pairwise %.3e < 1e-08; routes matching to 12 digits: %.0f (need 3)", worst,
              twelve_digits)};
}

Outcome theorem1_grid()
{
  double worst = 0.0;
  int    used  = 0;
  for (double a : {0.5, 0.75, 1.0, 1.5, 2.0})
  {
    if (!endpoint::admissibility(a).admissible)
    {
      continue;
    }
    ++used;
    worst = std::max(worst, endpoint::theorem1_identity(a).abs_residual);
  }
  return {used > 0 && worst < 1e-8,
          fmt("max residual %.3e < 1e-08 over %.0f admissible points", worst, used)};
}

Outcome endpoint_at_one()
{
  double const b    = endpoint::solve_endpoint_b(1.0).b;
  double const want = std::sqrt(4.0 * catalan_reference() + pi * std::log(2.0));
  double const dev  = std::abs(b - want);
  return {dev < 1e-9, fmt("|b(1) - sqrt(4G + pi ln 2)| = %.3e < %.0e", dev, 1e-9)};
}

Outcome closed_form_grid()
{
  double worst = 0.0;
  for (double a : {0.25, 0.5, 1.0, 2.0, 4.0})
  {
    for (double b : {0.3, 1.0, 2.0, 3.0})
    {
      worst = std::max(worst,
                       std::abs(endpoint::aux_integral_I(a, b).value - endpoint::aux_closed_F(a, b)));
    }
  }
  return {worst < 2e-10, fmt("max |I - F| = %.3e < %.0e", worst, 2e-10)};
}

Outcome phi_derivative_law()
{
  double const h        = 1e-5;
  double       worst_fd = 0.0;
  for (double a : {0.25, 0.5, 1.0, 2.0, 4.0})
  {
    for (double b : {0.3, 1.0, 2.0, 3.0})
    {
      double const fd = (endpoint::phi(a, b + h) - endpoint::phi(a, b - h)) / (2.0 * h);
      worst_fd        = std::max(worst_fd, std::abs(endpoint::phi_derivative(a, b) - fd));
    }
  }
  double worst_half = 0.0;
  for (int i = 1; i < 32; ++i)
  {
    double const b = pi * i / 32.0;
    worst_half     = std::max(worst_half, std::abs(endpoint::phi_derivative(1.0, b) - b / 2.0));
  }
  return {worst_fd < 1e-6 && worst_half < 1e-11,
          fmt("finite difference %.3e < 1e-06; |phi'(1,b) - b/2| = %.3e < 1e-11", worst_fd,
              worst_half)};
}

Outcome pointwise_grid()
{
  double worst_ratio = 0.0;
  bool   ok          = true;
  for (double alpha : {0.2, 0.9, 1.6, 2.3, 2.9})
  {
    for (double x : {0.5, 1.25, 2.0, 2.75, 3.5})
    {
      auto const   r    = decomp::pointwise_identity(alpha, x, 5000);
      double const tail = 2.0 * alpha * x / (pi * pi * 5000.0);
      ok                = ok && r.abs_residual <= tail;
      worst_ratio       = std::max(worst_ratio, r.abs_residual / tail);
    }
  }
  return {ok, fmt("max residual / tail = %.6f <= %.0f at K = 5000", worst_ratio, 1.0)};
}

Outcome catalan_family_runs()
{
  double worst_excess = -1.0;
  for (std::int64_t n : {2, 3, 4, 6})
  {
    auto const   r     = decomp::catalan_family(n, 2000);
    double const bound = 2.0 / (double(n * n) * 2000.0) + 1e-8;
    worst_excess       = std::max(worst_excess, r.abs_residual - bound);
  }
  return {worst_excess <= 0.0,
          fmt("max (residual - 2/(n^2 K) - 1e-08) = %.3e <= %.0f", worst_excess, 0.0)};
}

Outcome clausen_reduction()
{
  double const lo = 0.05, hi = pi / 2.0 - 0.05;
  double       worst = 0.0;
  for (int i = 0; i < 25; ++i)
  {
    double const theta = lo + (hi - lo) * i / 24.0;
    worst              = std::max(worst, std::abs(ti2_clausen_form(theta) - ti2(std::tan(theta))));
  }
  return {worst < 1e-9, fmt("max deviation %.3e < %.0e over 25 angles", worst, 1e-9)};
}

Outcome lemma_internals()
{
  double const s1 = std::abs(decomp::S_r(1) - oracle::S_direct(1, 1000000));
  double const s3 = std::abs(decomp::S_r(3) - oracle::S_direct(3, 100000));
  double const s5 = std::abs(decomp::S_r(5) - oracle::S_direct(5, 100000));
  double const closed = decomp::K1_closed();
  double const quad   = decomp::H_quadrature(1.0, 1.0);
  double const series = decomp::H_series(1.0, 1.0, 30).value;
  double const k1     = std::max({std::abs(closed - quad), std::abs(closed - series),
                                  std::abs(quad - series)});
  bool const   ok     = s1 < 1e-12 && s3 < 1e-10 && s5 < 1e-10 && k1 < 1e-8;
  return {ok, fmt("S1 %.3e < 1e-12; ", s1, 0) + fmt("S3 %.3e, S5 %.3e < 1e-10; ", s3, s5) +
                  fmt("K(1) triple %.3e < 1e-08", k1, 0)};
}

Outcome function_oracles()
{
  std::vector<double> devs = {
      std::abs(li2(ComplexValue(1.0)).real() - pi * pi / 6.0),
      std::abs(li2(ComplexValue(-1.0)).real() + pi * pi / 12.0),
      std::abs(li2(ComplexValue(0.0, 1.0)).imag() - oracle::catalan),
      std::abs(clausen2(pi / 2.0) - oracle::catalan),
      std::abs(hurwitz_zeta(2.0, 1.0) - pi * pi / 6.0),
      std::abs(hurwitz_zeta(2.0, 0.5) - pi * pi / 2.0),
  };
  for (double xi : {0.1, 1.0, 2.0, 10.0})
  {
    auto f = [xi](double x) { return std::expm1(-xi * x) / x; };
    double const q = numerics::integrate_adaptive(f, {-xi, f(1.0)}, 0.0, 1.0, 1e-14).value;
    devs.push_back(std::abs(expint_T(xi) - q));
  }
  double const worst = *std::max_element(devs.begin(), devs.end());
  return {worst < 1e-10, fmt("max deviation %.3e < %.0e over 10 checks", worst, 1e-10)};
}

std::string slurp(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome deterministic_json()
{
  std::vector<std::string> outputs;
#ifdef TI2KIT_CLI_PATH
  auto const dir = std::filesystem::temp_directory_path();
  for (int run = 0; run < 2; ++run)
  {
    auto const path = dir / ("ti2kit_acceptance_" + std::to_string(run) + ".json");
    std::string const cmd = std::string("\"") + TI2KIT_CLI_PATH +
                            "\" verify all --format json --out \"" + path.string() + "\"";
    int const status = std::system(cmd.c_str());
    if (status != 0)
    {
      return {false, "verify all exited with status " + std::to_string(status)};
    }
    outputs.push_back(slurp(path));
    std::filesystem::remove(path);
  }
  char const *how = "two processes";
#else
  for (int run = 0; run < 2; ++run)
  {
    char const        *argv[] = {"ti2kit", "verify", "all", "--format", "json"};
    std::ostringstream out, err;
    if (cli::run(5, argv, out, err) != 0)
    {
      return {false, "verify all failed: " + err.str()};
    }
    outputs.push_back(out.str());
  }
  char const *how = "two in-process runs";
#endif
  bool const same = !outputs[0].empty() && outputs[0] == outputs[1];
  return {same, std::string("verify all --format json, ") + how + ": " +
                    std::to_string(outputs[0].size()) + " bytes, " +
                    (same ? "byte-identical" : "different")};
}

}  // namespace

int main()
{
  std::vector<std::pair<char const *, std::function<Outcome()>>> const criteria = {
      {"Catalan cross-route agreement", catalan_routes},
      {"Tunable-endpoint identity on the default grid", theorem1_grid},
      {"Endpoint b(1) closed form", endpoint_at_one},
      {"Auxiliary integral equals closed form", closed_form_grid},
      {"phi' is the principal argument", phi_derivative_law},
      {"Pointwise pole decomposition within tail", pointwise_grid},
      {"Catalan family within tail", catalan_family_runs},
      {"Clausen reduction", clausen_reduction},
      {"Hurwitz/Ei internals", lemma_internals},
      {"Function-level oracles", function_oracles},
      {"Deterministic JSON", deterministic_json},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i)
  {
    Outcome outcome;
    try
    {
      outcome = criteria[i].second();
    }
    catch (std::exception const &e)
    {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.pass;
    std::printf("criterion %2zu %s  %s (%s)\n", i + 1, outcome.pass ? "PASS" : "FAIL",
                criteria[i].first, outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
