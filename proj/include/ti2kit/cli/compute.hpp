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
#include "ti2kit/polylog.hpp"
#include "ti2kit/special.hpp"
#include "ti2kit/ti2.hpp"

#include <cstddef>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ti2kit::cli {

struct ComputeFunction
{
  std::size_t min_args;
  std::size_t max_args;
  char const *usage;
  std::function<std::vector<double>(std::vector<double> const &)> eval;
};

inline std::map<std::string, ComputeFunction> const &compute_functions()
{
  using V = std::vector<double>;
  static std::map<std::string, ComputeFunction> const table = {
      {"ti2", {1, 1, "ti2 <y>", [](V const &v) { return V{ti2(v[0])}; }}},
      {"li2",
       {1, 2, "li2 <re> [<im>]  (prints re, and im when given)",
        [](V const &v) {
          auto const z = li2(ComplexValue(v[0], v.size() > 1 ? v[1] : 0.0));
          return v.size() > 1 ? V{z.real(), z.imag()} : V{z.real()};
        }}},
      {"clausen2", {1, 1, "clausen2 <phi>", [](V const &v) { return V{clausen2(v[0])}; }}},
      {"hurwitz", {2, 2, "hurwitz <s> <c>", [](V const &v) { return V{hurwitz_zeta(v[0], v[1])}; }}},
      {"ei", {1, 1, "ei <x>  (Ei(-x), x > 0)", [](V const &v) { return V{ei_negative(v[0])}; }}},
      {"catalan", {0, 0, "catalan", [](V const &) { return V{catalan_reference()}; }}},
      {"psi", {1, 1, "psi <a>", [](V const &v) { return V{endpoint::psi(v[0])}; }}},
      {"phi", {2, 2, "phi <a> <b>", [](V const &v) { return V{endpoint::phi(v[0], v[1])}; }}},
      {"b-of-a",
       {1, 1, "b-of-a <a>", [](V const &v) { return V{endpoint::solve_endpoint_b(v[0]).b}; }}},
      {"H", {2, 2, "H <A> <alpha>", [](V const &v) { return V{decomp::H_quadrature(v[0], v[1])}; }}},
      {"K1", {0, 0, "K1", [](V const &) { return V{decomp::K1_closed()}; }}},
  };
  return table;
}

inline std::string compute_usage()
{
  std::string text = "functions:\n";
  for (auto const &[name, fn] : compute_functions())
  {
    text += "  ";
    text += fn.usage;
    text += '\n';
  }
  return text;
}

/// Evaluates \p name at the textual arguments and formats the result with
/// 15 significant digits, space-separated when there are several values.
inline std::string compute(std::string const &name, std::vector<std::string> const &args)
{
  auto const &table = compute_functions();
  auto const  it    = table.find(name);
  if (it == table.end())
  {
    throw usage_error("unknown function '" + name + "'\n" + compute_usage());
  }
  auto const &fn = it->second;
  if (args.size() < fn.min_args || args.size() > fn.max_args)
  {
    throw usage_error(std::string("wrong number of arguments; usage: ") + fn.usage);
  }

  std::vector<double> values;
  for (auto const &arg : args)
  {
    values.push_back(detail::parse_number<double>(arg, "argument"));
  }

  std::string out;
  for (double v : fn.eval(values))
  {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    out += (out.empty() ? "" : " ");
    out += buf;
  }
  return out;
}

}  // namespace ti2kit::cli
