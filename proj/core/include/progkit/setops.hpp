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

#include "progkit/group.hpp"
#include "progkit/progressions.hpp"

#include <cstdint>
#include <optional>

namespace progkit {

/// Exact deduplicated {a + b : a in A, b in B}. Guards |A|*|B| <= 10^9.
FiniteSet sumset(const FiniteSet& a, const FiniteSet& b);

/// K = |A+A| / |A|, exact.
Rat doubling_constant(const FiniteSet& a);

struct CoverResult {
    bool ok = false;
    std::optional<RatVec> witness; // first uncovered element of A
};

/// Checks A subset of P + X by building the image of P once and testing
/// each a for some x with a - x in the image.
CoverResult verify_cover(const FiniteSet& a, const Progression& p, const FiniteSet& x,
                         std::uint64_t limit = kDefaultLatticeLimit);

/// Constructs a translate set X with A subset of P + X: repeatedly take the
/// lex-smallest uncovered a and add a - ev(n*), where n* is the lattice
/// point of P of minimal body gauge (ties lex). Feasible, not minimal.
FiniteSet greedy_cover(const FiniteSet& a, const Progression& p,
                       std::uint64_t limit = kDefaultLatticeLimit);

} // namespace progkit
