// Copyright 2026 The qpfaff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header.

#pragma once

#include "qpfaff/combinat.hpp"
#include "qpfaff/errors.hpp"
#include "qpfaff/extalg.hpp"
#include "qpfaff/frt.hpp"
#include "qpfaff/laurent.hpp"
#include "qpfaff/matrix_io.hpp"
#include "qpfaff/ncpoly.hpp"
#include "qpfaff/presentation.hpp"
#include "qpfaff/qlinalg.hpp"
#include "qpfaff/rational.hpp"

namespace qpfaff {
inline constexpr const char* kVersion = "0.1.0";
}
