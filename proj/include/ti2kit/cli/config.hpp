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

#include "ti2kit/errors.hpp"

#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ti2kit::cli {

/// Malformed command line or configuration.
class usage_error : public error
{
public:
  using error::error;
};

/// Unreadable input or unwritable output.
class io_error : public error
{
public:
  using error::error;
};

enum class Identity
{
  theorem1,
  corollary1,
  corollary2,
  corollary3,
  corollary4,
  remark1,
  lemma1,
  pointwise,
};

inline constexpr std::array<Identity, 8> all_identities = {
    Identity::theorem1,   Identity::corollary1, Identity::corollary2, Identity::corollary3,
    Identity::corollary4, Identity::remark1,    Identity::lemma1,     Identity::pointwise,
};

constexpr std::string_view to_string(Identity id)
{
  switch (id)
  {
  case Identity::theorem1:
    return "theorem1";
  case Identity::corollary1:
    return "corollary1";
  case Identity::corollary2:
    return "corollary2";
  case Identity::corollary3:
    return "corollary3";
  case Identity::corollary4:
    return "corollary4";
  case Identity::remark1:
    return "remark1";
  case Identity::lemma1:
    return "lemma1";
  case Identity::pointwise:
    return "pointwise";
  }
  return "unknown";
}

inline std::optional<Identity> parse_identity(std::string_view name)
{
  for (auto id : all_identities)
  {
    if (to_string(id) == name)
    {
      return id;
    }
  }
  return std::nullopt;
}

/// Quadrature-backed identities default to 1e-9, series-backed ones to 1e-10.
/// The Catalan family compares a truncation at K = 2000 and pointwise checks an
/// elementary identity, hence their own defaults.
constexpr double default_tolerance(Identity id)
{
  switch (id)
  {
  case Identity::theorem1:
  case Identity::corollary2:
    return 1e-9;
  case Identity::corollary3:
    return 1e-8;
  case Identity::pointwise:
    return 1e-12;
  default:
    return 1e-10;
  }
}

enum class OutputFormat
{
  json,
  table,
};

/// Everything `verify` needs. Unset grids and truncations fall back to the
/// per-identity defaults.
struct VerificationConfig
{
  std::optional<std::vector<double>>       a;
  std::optional<std::vector<double>>       theta;
  std::optional<std::vector<std::int64_t>> n;
  std::optional<std::vector<double>>       A;
  std::optional<std::vector<double>>       alpha;
  std::optional<std::vector<double>>       x;
  std::optional<std::int64_t>              K;
  std::optional<std::int64_t>              J;
  std::optional<std::int64_t>              N;
  std::optional<double>                    tol;  ///< overrides every identity
  std::map<Identity, double>               identity_tol;
  OutputFormat                             format{OutputFormat::json};
  std::optional<std::string>               out;
  unsigned                                 workers{1};

  double tolerance_for(Identity id) const
  {
    if (tol)
    {
      return *tol;
    }
    auto it = identity_tol.find(id);
    return it != identity_tol.end() ? it->second : default_tolerance(id);
  }

  void validate() const;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
  {
    return {};
  }
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, std::string_view what)
{
  text = trim(text);
  T value{};
  auto const *begin  = text.data();
  auto const *end    = text.data() + text.size();
  auto const  result = std::from_chars(begin, end, value);
  if (text.empty() || result.ec != std::errc{} || result.ptr != end)
  {
    throw usage_error("invalid value for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view text, std::string_view what)
{
  std::vector<T> values;
  while (true)
  {
    auto const comma = text.find(',');
    values.push_back(parse_number<T>(text.substr(0, comma), what));
    if (comma == std::string_view::npos)
    {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return values;
}

}  // namespace detail

inline OutputFormat parse_format(std::string_view text)
{
  if (text == "json")
  {
    return OutputFormat::json;
  }
  if (text == "table")
  {
    return OutputFormat::table;
  }
  throw usage_error("format must be json or table, got '" + std::string(text) + "'");
}

inline void VerificationConfig::validate() const
{
  auto positive = [](double v) { return v > 0.0; };
  if (tol && !positive(*tol))
  {
    throw usage_error("tol must be > 0");
  }
  for (auto const &[id, t] : identity_tol)
  {
    if (!positive(t))
    {
      throw usage_error("tol." + std::string(to_string(id)) + " must be > 0");
    }
  }
  for (auto const *count : {&K, &J, &N})
  {
    if (*count && **count < 1)
    {
      throw usage_error("truncations K, J, N must be >= 1");
    }
  }
  for (auto const *grid : {&a, &theta, &A, &alpha, &x})
  {
    if (*grid && (*grid)->empty())
    {
      throw usage_error("grids must not be empty");
    }
  }
  if (n && n->empty())
  {
    throw usage_error("grids must not be empty");
  }
  if (workers < 1)
  {
    throw usage_error("workers must be >= 1");
  }
}

/// Applies one key=value setting. Keys are the long flag names, plus
/// tol.<identity> for a per-identity tolerance.
inline void apply_setting(VerificationConfig &config, std::string_view key, std::string_view value)
{
  using detail::parse_list;
  using detail::parse_number;

  if (key == "a")
    config.a = parse_list<double>(value, key);
  else if (key == "theta")
    config.theta = parse_list<double>(value, key);
  else if (key == "n")
    config.n = parse_list<std::int64_t>(value, key);
  else if (key == "A")
    config.A = parse_list<double>(value, key);
  else if (key == "alpha")
    config.alpha = parse_list<double>(value, key);
  else if (key == "x")
    config.x = parse_list<double>(value, key);
  else if (key == "K")
    config.K = parse_number<std::int64_t>(value, key);
  else if (key == "J")
    config.J = parse_number<std::int64_t>(value, key);
  else if (key == "N")
    config.N = parse_number<std::int64_t>(value, key);
  else if (key == "tol")
    config.tol = parse_number<double>(value, key);
  else if (key == "format")
    config.format = parse_format(detail::trim(value));
  else if (key == "out")
    config.out = std::string(detail::trim(value));
  else if (key == "workers")
    config.workers = parse_number<unsigned>(value, key);
  else if (key.substr(0, 4) == "tol.")
  {
    auto const id = parse_identity(key.substr(4));
    if (!id)
    {
      throw usage_error("unknown identity in '" + std::string(key) + "'");
    }
    config.identity_tol[*id] = parse_number<double>(value, key);
  }
  else
  {
    throw usage_error("unknown configuration key '" + std::string(key) + "'");
  }
}

/// Reads key=value lines. Blank lines and lines starting with # are skipped.
inline void load_config_file(VerificationConfig &config, std::string const &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw io_error("cannot read config file '" + path + "'");
  }
  std::string line;
  int         lineno = 0;
  while (std::getline(in, line))
  {
    ++lineno;
    auto const text = detail::trim(line);
    if (text.empty() || text.front() == '#')
    {
      continue;
    }
    auto const eq = text.find('=');
    if (eq == std::string_view::npos)
    {
      throw usage_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    try
    {
      apply_setting(config, detail::trim(text.substr(0, eq)), text.substr(eq + 1));
    }
    catch (usage_error const &e)
    {
      throw usage_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

}  // namespace ti2kit::cli
