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

#include "ti2kit/numerics/summation.hpp"

#include <gtest/gtest.h>

#include <cmath>

using ti2kit::numerics::compensated_sum;

TEST(CompensatedSum, RecoversTermsLostByNaiveAddition)
{
  compensated_sum acc;
  double          naive = 0.0;
  for (double t : {1.0, 1e100, 1.0, -1e100})
  {
    acc += t;
    naive += t;
  }
  EXPECT_EQ(acc.value(), 2.0);
  EXPECT_NE(naive, 2.0);
}

TEST(CompensatedSum, HarmonicTenthsAreExact)
{
  compensated_sum acc;
  for (int i = 0; i < 1000000; ++i)
  {
    acc += 0.1;
  }
  EXPECT_NEAR(acc.value(), 100000.0, 1e-9);
}

TEST(CompensatedSum, SubtractionMirrorsAddition)
{
  compensated_sum acc(3.0);
  acc -= 1.0;
  acc += 0.5;
  EXPECT_EQ(acc.value(), 2.5);
}
