// Copyright 2026 The progkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "progkit/linalg.hpp"
#include "progkit/rational.hpp"

namespace progkit {

/// Exact rational simplex for max c^T x subject to A x <= b with x free and
/// b > 0 (the origin-interior case: the slack basis is feasible, no phase
/// one). Free variables are split x = x+ - x-.
///
/// The objective is lexicographic: maximize objectives[0]^T x first, then
/// objectives[1]^T x among optima, and so on. Pivoting uses Bland's rule on
/// the lex-ordered reduced costs, which keeps the method finite and makes
/// the returned vertex deterministic. With secondary objectives
/// (-e_1, ..., -e_d) the result is the lexicographically smallest optimal
/// vertex.
///
/// Throws InternalError if the problem is unbounded (excluded by the rank
/// invariant of the callers) or the iteration cap trips.
struct LexLpResult {
    RatVec point;
    Rat value; // objectives[0] . point
};

LexLpResult lex_simplex(const RatMat& a, const RatVec& b,
                        const std::vector<RatVec>& objectives);

} // namespace progkit
