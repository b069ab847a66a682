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

#include "ti2kit/cli/app.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ti2kit;
using namespace ti2kit::cli;

struct Invocation
{
  int         code;
  std::string out;
  std::string err;
};

Invocation invoke(std::initializer_list<char const *> args)
{
  std::vector<char const *> argv{"ti2kit"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int const code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(std::string const &name)
{
  return std::filesystem::temp_directory_path() / ("ti2kit_test_" + name);
}

TEST(Compute, PrintsFifteenSignificantDigits)
{
  auto r = invoke({"compute", "ti2", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.915965594177219\n");
}

TEST(Compute, PhiAtPi)
{
  auto r = invoke({"compute", "phi", "1", "3.141592653589793"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NEAR(std::stod(r.out), 2.467401100272340, 1e-14);
}

TEST(Compute, ClausenAtZero)
{
  EXPECT_EQ(invoke({"compute", "clausen2", "0"}).out, "0\n");
}

TEST(Compute, EveryFunction)
{
  EXPECT_EQ(invoke({"compute", "catalan"}).out, "0.915965594177219\n");
  EXPECT_EQ(invoke({"compute", "hurwitz", "2", "1"}).out, "1.64493406684823\n");
  EXPECT_EQ(invoke({"compute", "ei", "1"}).out, "-0.21938393439552\n");
  EXPECT_EQ(invoke({"compute", "psi", "1"}).out, "1.46036211675312\n");
  EXPECT_EQ(invoke({"compute", "b-of-a", "1"}).out, "2.4169088660958\n");
  EXPECT_NEAR(std::stod(invoke({"compute", "K1"}).out), 0.567634918950821057, 1e-14);
  EXPECT_NEAR(std::stod(invoke({"compute", "H", "1", "1"}).out), 0.567634918950821057, 1e-14);
  EXPECT_EQ(invoke({"compute", "li2", "1"}).out, "1.64493406684823\n");
  EXPECT_EQ(invoke({"compute", "li2", "0", "1"}).out, "-0.205616758356028 0.915965594177219\n");
}

TEST(Compute, NegativeArgument)
{
  auto r = invoke({"compute", "li2", "-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-0.822467033424113\n");
}

TEST(Compute, UsageErrors)
{
  EXPECT_EQ(invoke({"compute", "nosuch", "1"}).code, exit_usage);
  EXPECT_EQ(invoke({"compute", "ti2"}).code, exit_usage);
  EXPECT_EQ(invoke({"compute", "ti2", "1", "2"}).code, exit_usage);
  EXPECT_EQ(invoke({"compute", "ti2", "one"}).code, exit_usage);
  EXPECT_EQ(invoke({}).code, exit_usage);
  EXPECT_EQ(invoke({"frobnicate"}).code, exit_usage);
}

TEST(Compute, DomainErrors)
{
  auto r = invoke({"compute", "li2", "2"});
  EXPECT_EQ(r.code, exit_domain);
  EXPECT_NE(r.err.find("domain error"), std::string::npos);
  EXPECT_EQ(invoke({"compute", "clausen2", "7"}).code, exit_domain);
  EXPECT_EQ(invoke({"compute", "b-of-a", "20"}).code, exit_domain);
  EXPECT_EQ(invoke({"compute", "hurwitz", "1", "1"}).code, exit_domain);
}

TEST(Help, ExitsCleanly)
{
  auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Verify, TelescopingIdentity)
{
  auto r = invoke({"verify", "remark1", "--K", "10"});
  ASSERT_EQ(r.code, exit_pass) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["name"], "remark1");
  EXPECT_TRUE(j[0]["pass"].get<bool>());
  EXPECT_LT(j[0]["abs_residual"].get<double>(), 1e-11);
  EXPECT_EQ(j[0]["params"]["K"].get<double>(), 10.0);
}

TEST(Verify, EndpointIdentityAtOne)
{
  auto r = invoke({"verify", "theorem1", "--a", "1"});
  ASSERT_EQ(r.code, exit_pass) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_LT(j[0]["abs_residual"].get<double>(), 1e-9);
}

TEST(Verify, AllProducesEverySchemaField)
{
  auto r = invoke({"verify", "all", "--format", "json", "--workers", "2"});
  ASSERT_EQ(r.code, exit_pass) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  std::set<std::string> names;
  for (auto const &report : j)
  {
    names.insert(report["name"].get<std::string>());
    for (char const *field : {"name", "params", "lhs", "rhs", "abs_residual", "tolerance",
                              "tail_bound", "pass", "method_lhs", "method_rhs", "terms_used"})
    {
      EXPECT_TRUE(report.contains(field)) << field;
    }
    EXPECT_EQ(report.size(), 11u);
    EXPECT_TRUE(report["pass"].get<bool>()) << report.dump();
  }
  EXPECT_EQ(names.size(), all_identities.size());
}

TEST(Verify, WorkerCountDoesNotChangeOutput)
{
  auto one  = invoke({"verify", "corollary2", "--workers", "1"});
  auto four = invoke({"verify", "corollary2", "--workers", "4"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
}

TEST(Verify, DefaultEndpointGridIsFiltered)
{
  auto r = invoke({"verify", "theorem1"});
  ASSERT_EQ(r.code, exit_pass) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 5u);
}

TEST(Verify, ListFlagsAcceptCommasAndRepeats)
{
  auto commas  = invoke({"verify", "corollary4", "--theta", "0.3,0.6"});
  auto repeats = invoke({"verify", "corollary4", "--theta", "0.3", "--theta", "0.6"});
  EXPECT_EQ(commas.code, 0);
  EXPECT_EQ(commas.out, repeats.out);
  EXPECT_EQ(nlohmann::json::parse(commas.out).size(), 2u);
}

TEST(Verify, FailingToleranceExitsOne)
{
  // The endpoint identity has no tail bound, so an impossible tolerance must fail.
  auto r = invoke({"verify", "theorem1", "--a", "0.5", "--tol", "1e-300"});
  EXPECT_EQ(r.code, exit_fail);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j[0]["abs_residual"].get<double>(), 1e-300);
  EXPECT_FALSE(j[0]["pass"].get<bool>());
}

TEST(Verify, UsageErrors)
{
  EXPECT_EQ(invoke({"verify", "nosuch"}).code, exit_usage);
  EXPECT_EQ(invoke({"verify", "remark1", "--K", "0"}).code, exit_usage);
  EXPECT_EQ(invoke({"verify", "remark1", "--K", "ten"}).code, exit_usage);
  EXPECT_EQ(invoke({"verify", "remark1", "--tol", "-1"}).code, exit_usage);
  EXPECT_EQ(invoke({"verify", "remark1", "--format", "xml"}).code, exit_usage);
  EXPECT_EQ(invoke({"verify", "remark1", "--workers", "0"}).code, exit_usage);
  EXPECT_EQ(invoke({"verify", "remark1", "--bogus", "1"}).code, exit_usage);
}

TEST(Verify, DomainErrors)
{
  EXPECT_EQ(invoke({"verify", "theorem1", "--a", "20"}).code, exit_domain);
  EXPECT_EQ(invoke({"verify", "corollary2", "--alpha", "4"}).code, exit_domain);
  EXPECT_EQ(invoke({"verify", "corollary3", "--n", "1"}).code, exit_domain);
  EXPECT_EQ(invoke({"verify", "corollary4", "--theta", "0"}).code, exit_domain);
}

TEST(Verify, UnwritableOutputIsAnIoError)
{
  auto r = invoke({"verify", "remark1", "--out", "/nonexistent-dir/report.json"});
  EXPECT_EQ(r.code, exit_io);
}

TEST(Verify, WritesToFile)
{
  auto const path = temp_path("out.json");
  auto r = invoke({"verify", "remark1", "--K", "5", "--out", path.c_str()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j.size(), 1u);
  std::filesystem::remove(path);
}

TEST(Verify, TableFormat)
{
  auto r = invoke({"verify", "corollary3", "--format", "table"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("identity", 0), 0u);
  while (std::getline(lines, line))
  {
    ++rows;
    EXPECT_NE(line.find("PASS"), std::string::npos);
  }
  EXPECT_EQ(rows, 4);
}

TEST(ConfigFile, SettingsApplyAndFlagsWin)
{
  auto const path = temp_path("config.txt");
  {
    std::ofstream cfg(path);
    cfg << "# comment\n\nK = 7\nformat = table\ntol.remark1 = 1e-9\ntheta = 0.2, 0.4\n";
  }
  auto table = invoke({"verify", "remark1", "--config", path.c_str()});
  ASSERT_EQ(table.code, 0) << table.err;
  EXPECT_NE(table.out.find("K=7"), std::string::npos);

  auto json = invoke({"verify", "remark1", "--config", path.c_str(), "--format", "json",
                      "--K", "3"});
  ASSERT_EQ(json.code, 0) << json.err;
  auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j[0]["params"]["K"].get<double>(), 3.0);
  EXPECT_EQ(j[0]["tolerance"].get<double>(), 1e-9);
  std::filesystem::remove(path);
}

TEST(ConfigFile, Errors)
{
  EXPECT_EQ(invoke({"verify", "remark1", "--config", "/nonexistent/cfg"}).code, exit_io);
  auto const path = temp_path("bad.txt");
  {
    std::ofstream cfg(path);
    cfg << "nonsense line\n";
  }
  EXPECT_EQ(invoke({"verify", "remark1", "--config", path.c_str()}).code, exit_usage);
  {
    std::ofstream cfg(path);
    cfg << "colour = blue\n";
  }
  EXPECT_EQ(invoke({"verify", "remark1", "--config", path.c_str()}).code, exit_usage);
  std::filesystem::remove(path);
}

TEST(Writer, EmptySequence)
{
  std::ostringstream json, table;
  write_json(json, {});
  write_table(table, {});
  EXPECT_EQ(json.str(), "[]\n");
  auto const text = table.str();
  EXPECT_EQ(text.rfind("identity", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
}

TEST(Writer, SeventeenDigitsAndNulls)
{
  auto r = make_report("demo", {{"k", 0.1}}, 1.0 / 3.0, 0.0, 1.0, "a\"b", "c");
  r.lhs  = 1.0 / 3.0;
  std::ostringstream os;
  write_json(os, {r});
  auto const text = os.str();
  EXPECT_NE(text.find("0.33333333333333331"), std::string::npos);
  EXPECT_NE(text.find("\"tail_bound\": null"), std::string::npos);
  EXPECT_NE(text.find("\"terms_used\": null"), std::string::npos);
  auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j[0]["method_lhs"], "a\"b");
  EXPECT_EQ(j[0]["lhs"].get<double>(), 1.0 / 3.0);
  EXPECT_EQ(j[0]["params"]["k"].get<double>(), 0.1);
}

TEST(Writer, NonFiniteBecomesNull)
{
  EXPECT_EQ(json_real(std::nan("")), "null");
  EXPECT_EQ(json_real(INFINITY), "null");
  EXPECT_EQ(json_real(0.1), "0.10000000000000001");
}

TEST(Config, IdentityNamesRoundTrip)
{
  for (auto id : all_identities)
  {
    EXPECT_EQ(parse_identity(to_string(id)), id);
  }
  EXPECT_FALSE(parse_identity("theorem2").has_value());
}

TEST(Config, Tolerances)
{
  VerificationConfig c;
  EXPECT_EQ(c.tolerance_for(Identity::theorem1), 1e-9);
  EXPECT_EQ(c.tolerance_for(Identity::lemma1), 1e-10);
  c.identity_tol[Identity::lemma1] = 1e-6;
  EXPECT_EQ(c.tolerance_for(Identity::lemma1), 1e-6);
  c.tol = 1e-3;
  EXPECT_EQ(c.tolerance_for(Identity::lemma1), 1e-3);
}

}  // namespace
