// Copyright 2026 The cyclo4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "cyclo4/cyclotomy.hpp"
#include "cyclo4/error.hpp"
#include "cyclo4/galois_ring.hpp"
#include "cyclo4/gf2_polynomial.hpp"
#include "cyclo4/linear_complexity.hpp"
#include "cyclo4/number_theory.hpp"
#include "cyclo4/polynomial.hpp"
#include "cyclo4/residue4.hpp"
#include "cyclo4/sequence.hpp"
#include "cyclo4/verification.hpp"
