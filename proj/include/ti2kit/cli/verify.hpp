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

#include "ti2kit/cli/config.hpp"
#include "ti2kit/decomp.hpp"
#include "ti2kit/endpoint.hpp"
#include "ti2kit/report.hpp"
#include "ti2kit/ti2.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <iterator>
#include <string>
#include <thread>
#include <vector>

namespace ti2kit::cli {

using ReportTask = std::function<IdentityReport()>;

namespace defaults {

inline std::vector<double> const a_grid     = {0.5, 0.75, 1.0, 1.5, 2.0};
inline std::vector<double> const theta_grid = {pi / 12, pi / 8, pi / 6, pi / 4, pi / 3};
inline std::vector<std::int64_t> const n_grid = {2, 3, 4, 6};
inline std::vector<double> const A_grid       = {0.5, 1.0, 2.0};
inline std::vector<double> const alpha_grid   = {0.5, 1.0, 2.0, 2.5};
inline std::vector<double> const pointwise_alpha = {0.2, 0.9, 1.6, 2.3, 2.9};
inline std::vector<double> const pointwise_x     = {0.5, 1.25, 2.0, 2.75, 3.5};
inline std::vector<std::int64_t> const remark1_K = {1, 5, 10, 100};

inline constexpr std::int64_t pole_terms      = 2000;
inline constexpr std::int64_t pointwise_terms = 5000;
inline constexpr std::int64_t hurwitz_terms   = 8;
inline constexpr std::int64_t ei_terms        = 18;

}  // namespace defaults

/// The checks for one identity, in report order. Parameters are validated
/// here so that domain errors surface before any work is scheduled.
inline std::vector<ReportTask> plan_identity(Identity id, VerificationConfig const &config)
{
  double const           tol = config.tolerance_for(id);
  std::vector<ReportTask> tasks;

  switch (id)
  {
  case Identity::theorem1:
  {
    // The default grid is filtered to the admissible set; points the user
    // asked for explicitly must be admissible.
    for (double a : config.a.value_or(defaults::a_grid))
    {
      if (!endpoint::admissibility(a).admissible)
      {
        if (config.a)
        {
          throw admissibility_error("theorem1: a = " + std::to_string(a) + " is not admissible");
        }
        continue;
      }
      tasks.emplace_back([a, tol] { return endpoint::theorem1_identity(a, tol); });
    }
    break;
  }
  case Identity::corollary1:
    tasks.emplace_back([tol] { return endpoint::corollary1_identity(tol); });
    break;
  case Identity::corollary2:
  {
    auto const K = config.K.value_or(defaults::pole_terms);
    for (double A : config.A.value_or(defaults::A_grid))
    {
      for (double alpha : config.alpha.value_or(defaults::alpha_grid))
      {
        decomp::DecompParams{alpha, A, K, 1, 1}.validate();
        tasks.emplace_back([=] { return decomp::corollary2_series(A, alpha, K, tol); });
      }
    }
    break;
  }
  case Identity::corollary3:
  {
    auto const K = config.K.value_or(defaults::pole_terms);
    for (auto n : config.n.value_or(defaults::n_grid))
    {
      if (n < 2)
      {
        throw domain_error("corollary3: requires n >= 2");
      }
      tasks.emplace_back([=] { return decomp::catalan_family(n, K, tol); });
    }
    break;
  }
  case Identity::corollary4:
    for (double theta : config.theta.value_or(defaults::theta_grid))
    {
      if (!(theta >= clausen_theta_margin && theta <= 0.5 * pi - clausen_theta_margin))
      {
        throw domain_error("corollary4: requires 1e-6 <= theta <= pi/2 - 1e-6");
      }
      tasks.emplace_back([=] { return clausen_reduction_identity(theta, tol); });
    }
    break;
  case Identity::remark1:
  {
    auto const Ks = config.K ? std::vector<std::int64_t>{*config.K} : defaults::remark1_K;
    for (auto K : Ks)
    {
      tasks.emplace_back([=] { return decomp::remark1_identity(K, tol); });
    }
    break;
  }
  case Identity::lemma1:
  {
    auto const N = config.N.value_or(defaults::hurwitz_terms);
    auto const J = config.J.value_or(defaults::ei_terms);
    tasks.emplace_back([=] { return decomp::lemma1_catalan(N, J, tol); });
    break;
  }
  case Identity::pointwise:
  {
    auto const K = config.K.value_or(defaults::pointwise_terms);
    for (double alpha : config.alpha.value_or(defaults::pointwise_alpha))
    {
      for (double x : config.x.value_or(defaults::pointwise_x))
      {
        if (!(x >= 0.0))
        {
          throw domain_error("pointwise: requires x >= 0");
        }
        decomp::DecompParams{alpha, 1.0, K, 1, 1}.validate();
        tasks.emplace_back([=] { return decomp::pointwise_identity(alpha, x, K, tol); });
      }
    }
    break;
  }
  }
  return tasks;
}

/// Runs the tasks on up to \p workers threads. Results keep task order and
/// each task is a pure function of its captured parameters, so the output
/// does not depend on the worker count. The first failing task (in task
/// order) has its exception rethrown.
inline std::vector<IdentityReport> run_tasks(std::vector<ReportTask> const &tasks, unsigned workers)
{
  std::vector<IdentityReport>     results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t>        next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++)
    {
      try
      {
        results[i] = tasks[i]();
      }
      catch (...)
      {
        errors[i] = std::current_exception();
      }
    }
  };

  auto const count = std::min<std::size_t>(std::max(workers, 1u), tasks.size());
  if (count <= 1)
  {
    worker();
  }
  else
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < count; ++t)
    {
      pool.emplace_back(worker);
    }
  }

  for (auto const &e : errors)
  {
    if (e)
    {
      std::rethrow_exception(e);
    }
  }
  return results;
}

inline std::vector<IdentityReport> verify(std::vector<Identity> const &identities,
                                          VerificationConfig const    &config)
{
  config.validate();
  std::vector<ReportTask> tasks;
  for (auto id : identities)
  {
    auto planned = plan_identity(id, config);
    std::move(planned.begin(), planned.end(), std::back_inserter(tasks));
  }
  return run_tasks(tasks, config.workers);
}

inline bool all_pass(std::vector<IdentityReport> const &reports)
{
  return std::all_of(reports.begin(), reports.end(), [](auto const &r) { return r.pass; });
}

}  // namespace ti2kit::cli
