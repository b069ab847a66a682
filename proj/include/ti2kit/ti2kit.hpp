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

#include "ti2kit/constants.hpp"
#include "ti2kit/decomp.hpp"
#include "ti2kit/endpoint.hpp"
#include "ti2kit/errors.hpp"
#include "ti2kit/numerics/quadrature.hpp"
#include "ti2kit/numerics/roots.hpp"
#include "ti2kit/numerics/series.hpp"
#include "ti2kit/numerics/summation.hpp"
#include "ti2kit/polylog.hpp"
#include "ti2kit/report.hpp"
#include "ti2kit/special.hpp"
#include "ti2kit/ti2.hpp"
