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

#include <cmath>

namespace ti2kit::numerics {

/// Neumaier-compensated running sum. Addition order is the caller's order,
/// so results are bit-reproducible for a fixed sequence of terms.
class compensated_sum
{
public:
  constexpr compensated_sum() = default;
  constexpr explicit compensated_sum(double initial)
    : sum_(initial)
  {}

  constexpr compensated_sum &operator+=(double term)
  {
    double const t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term))
    {
      carry_ += (sum_ - t) + term;
    }
    else
    {
      carry_ += (term - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  constexpr compensated_sum &operator-=(double term)
  {
    return *this += -term;
  }

  constexpr double value() const
  {
    return sum_ + carry_;
  }

private:
  double sum_{0.0};
  double carry_{0.0};
};

}  // namespace ti2kit::numerics
