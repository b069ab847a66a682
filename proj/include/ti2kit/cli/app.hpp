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

// The ti2kit command line, callable in-process so tests can drive it.

#include "ti2kit/cli/compute.hpp"
#include "ti2kit/cli/config.hpp"
#include "ti2kit/cli/report_writer.hpp"
#include "ti2kit/cli/verify.hpp"
#include "ti2kit/errors.hpp"

#include <CLI11.hpp>

#include <array>
#include <exception>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ti2kit::cli {

enum ExitCode : int
{
  exit_pass   = 0,
  exit_fail   = 1,
  exit_usage  = 2,
  exit_domain = 3,
  exit_io     = 4,
};

namespace detail {

struct VerifyFlags
{
  std::string                             identity;
  std::optional<std::string>              config_path;
  std::vector<std::pair<char const *, std::vector<std::string>>> lists{
      {"a", {}}, {"theta", {}}, {"n", {}}, {"A", {}}, {"alpha", {}}, {"x", {}}};
  std::vector<std::pair<char const *, std::string>> scalars{
      {"K", {}}, {"J", {}}, {"N", {}}, {"tol", {}}, {"format", {}}, {"out", {}}, {"workers", {}}};
};

inline std::string join(std::vector<std::string> const &parts)
{
  std::string out;
  for (auto const &p : parts)
  {
    out += (out.empty() ? "" : ",") + p;
  }
  return out;
}

}  // namespace detail

inline int run(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Inverse tangent integral toolkit: special functions and identity checks"};
  app.require_subcommand(1);

  auto *compute_cmd = app.add_subcommand("compute", "Evaluate one function")
                          ->footer(compute_usage());
  std::string              function_name;
  std::vector<std::string> function_args;
  compute_cmd->add_option("function", function_name, "Function name")->required();
  compute_cmd->add_option("args", function_args, "Real arguments");

  auto *verify_cmd =
      app.add_subcommand("verify", "Check identities and report residuals");
  detail::VerifyFlags flags;
  verify_cmd
      ->add_option("identity", flags.identity,
                   "theorem1 | corollary1 | corollary2 | corollary3 | corollary4 | remark1 | "
                   "lemma1 | pointwise | all")
      ->required();
  verify_cmd->add_option("--config", flags.config_path, "key=value file; flags take precedence");
  std::vector<CLI::Option *> list_opts;
  for (auto &[key, values] : flags.lists)
  {
    list_opts.push_back(verify_cmd->add_option(std::string("--") + key, values,
                                               "grid values (repeat or comma-separate)")
                            ->delimiter(','));
  }
  std::vector<CLI::Option *> scalar_opts;
  for (auto &[key, value] : flags.scalars)
  {
    scalar_opts.push_back(verify_cmd->add_option(std::string("--") + key, value));
  }

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::ParseError const &e)
  {
    int const code = app.exit(e, out, err);
    return code == 0 ? exit_pass : exit_usage;
  }

  try
  {
    if (compute_cmd->parsed())
    {
      out << compute(function_name, function_args) << '\n';
      return exit_pass;
    }

    VerificationConfig config;
    if (flags.config_path)
    {
      load_config_file(config, *flags.config_path);
    }
    for (std::size_t i = 0; i < flags.lists.size(); ++i)
    {
      if (list_opts[i]->count() > 0)
      {
        apply_setting(config, flags.lists[i].first, detail::join(flags.lists[i].second));
      }
    }
    for (std::size_t i = 0; i < flags.scalars.size(); ++i)
    {
      if (scalar_opts[i]->count() > 0)
      {
        apply_setting(config, flags.scalars[i].first, flags.scalars[i].second);
      }
    }

    std::vector<Identity> identities;
    if (flags.identity == "all")
    {
      identities.assign(all_identities.begin(), all_identities.end());
    }
    else if (auto id = parse_identity(flags.identity))
    {
      identities.push_back(*id);
    }
    else
    {
      throw usage_error("unknown identity '" + flags.identity + "'");
    }

    auto const reports = verify(identities, config);
    write_reports(config.out, out, reports, config.format);
    return all_pass(reports) ? exit_pass : exit_fail;
  }
  catch (usage_error const &e)
  {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }
  catch (io_error const &e)
  {
    err << "I/O error: " << e.what() << '\n';
    return exit_io;
  }
  catch (domain_error const &e)
  {
    err << "domain error: " << e.what() << '\n';
    return exit_domain;
  }
  catch (budget_error const &e)
  {
    err << "budget exhausted: " << e.what() << '\n';
    return exit_fail;
  }
}

}  // namespace ti2kit::cli
