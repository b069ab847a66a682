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

#include <stdexcept>
#include <string>

namespace ti2kit {

/// Base of every error raised by the library.
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class domain_error : public error
{
public:
  using error::error;
};

/// The argument sits on the branch cut [1, inf) of the principal dilogarithm.
class branch_error : public domain_error
{
public:
  using domain_error::domain_error;
};

/// The argument is (numerically) a pole of the function.
class pole_error : public domain_error
{
public:
  using domain_error::domain_error;
};

/// A root-finding bracket does not straddle the target value.
class bracket_error : public domain_error
{
public:
  using domain_error::domain_error;
};

/// No endpoint exists because the parameter is not admissible.
class admissibility_error : public domain_error
{
public:
  using domain_error::domain_error;
};

/// An iterative procedure ran out of its subdivision or iteration budget.
/// The best estimate reached so far is preserved.
class budget_error : public error
{
public:
  budget_error(std::string const &what, double best_estimate, double error_estimate)
    : error(what)
    , best_estimate_(best_estimate)
    , error_estimate_(error_estimate)
  {}

  double best_estimate() const noexcept
  {
    return best_estimate_;
  }

  double error_estimate() const noexcept
  {
    return error_estimate_;
  }

private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace ti2kit
