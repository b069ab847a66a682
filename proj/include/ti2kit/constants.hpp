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

#include <numbers>

namespace ti2kit {

inline constexpr double pi = std::numbers::pi;

// Euler-Mascheroni constant, rounded to binary64.
inline constexpr double euler_gamma = 0.5772156649015329;

inline constexpr double ln2   = std::numbers::ln2;
inline constexpr double ln_pi = 1.1447298858494002;  // log(pi)

inline constexpr double pi_squared = pi * pi;

}  // namespace ti2kit
