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
#include "ti2kit/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace ti2kit::cli {

/// 17 significant digits round-trips every double. JSON has no NaN or
/// infinity, so those become null.
inline std::string json_real(double v)
{
  if (!std::isfinite(v))
  {
    return "null";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string json_string(std::string const &s)
{
  std::string out = "\"";
  for (char c : s)
  {
    switch (c)
    {
    case '"':
      out += "\\\"";
      break;
    case '\\':
      out += "\\\\";
      break;
    case '\n':
      out += "\\n";
      break;
    case '\t':
      out += "\\t";
      break;
    default:
      if (static_cast<unsigned char>(c) < 0x20)
      {
        char buf[8];
        std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
        out += buf;
      }
      else
      {
        out += c;
      }
    }
  }
  out += '"';
  return out;
}

inline void write_json(std::ostream &os, std::vector<IdentityReport> const &reports)
{
  if (reports.empty())
  {
    os << "[]\n";
    return;
  }
  os << "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i)
  {
    auto const &r = reports[i];
    os << "  {\"name\": " << json_string(r.name) << ", \"params\": {";
    for (std::size_t p = 0; p < r.params.size(); ++p)
    {
      os << (p ? ", " : "") << json_string(r.params[p].first) << ": "
         << json_real(r.params[p].second);
    }
    os << "}, \"lhs\": " << json_real(r.lhs) << ", \"rhs\": " << json_real(r.rhs)
       << ", \"abs_residual\": " << json_real(r.abs_residual)
       << ", \"tolerance\": " << json_real(r.tolerance)
       << ", \"tail_bound\": " << (r.tail_bound ? json_real(*r.tail_bound) : "null")
       << ", \"pass\": " << (r.pass ? "true" : "false")
       << ", \"method_lhs\": " << json_string(r.method_lhs)
       << ", \"method_rhs\": " << json_string(r.method_rhs) << ", \"terms_used\": "
       << (r.terms_used ? std::to_string(*r.terms_used) : "null") << "}"
       << (i + 1 < reports.size() ? "," : "") << "\n";
  }
  os << "]\n";
}

namespace detail {

inline std::string format_params(IdentityReport const &r)
{
  std::string out;
  for (auto const &[key, value] : r.params)
  {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%s=%.6g", out.empty() ? "" : " ", key.c_str(), value);
    out += buf;
  }
  return out;
}

}  // namespace detail

inline void write_table(std::ostream &os, std::vector<IdentityReport> const &reports)
{
  char line[256];
  std::snprintf(line, sizeof line, "%-11s %-28s %-24s %-24s %-10s %-10s %-10s %s\n", "identity",
                "params", "lhs", "rhs", "residual", "tolerance", "tail", "result");
  os << line;
  for (auto const &r : reports)
  {
    char tail[16] = "-";
    if (r.tail_bound)
    {
      std::snprintf(tail, sizeof tail, "%.3e", *r.tail_bound);
    }
    std::snprintf(line, sizeof line, "%-11s %-28s %-24.17g %-24.17g %-10.3e %-10.3e %-10s %s\n",
                  r.name.c_str(), detail::format_params(r).c_str(), r.lhs, r.rhs, r.abs_residual,
                  r.tolerance, tail, r.pass ? "PASS" : "FAIL");
    os << line;
  }
}

inline void write_reports(std::ostream &os, std::vector<IdentityReport> const &reports,
                          OutputFormat format)
{
  if (format == OutputFormat::json)
  {
    write_json(os, reports);
  }
  else
  {
    write_table(os, reports);
  }
}

/// Writes to \p path, or to \p fallback when no path is given.
inline void write_reports(std::optional<std::string> const &path, std::ostream &fallback,
                          std::vector<IdentityReport> const &reports, OutputFormat format)
{
  if (!path)
  {
    write_reports(fallback, reports, format);
    fallback.flush();
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file)
  {
    throw io_error("cannot open '" + *path + "' for writing");
  }
  write_reports(file, reports, format);
  file.close();
  if (!file)
  {
    throw io_error("failed writing '" + *path + "'");
  }
}

}  // namespace ti2kit::cli
