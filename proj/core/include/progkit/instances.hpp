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

namespace progkit {

/// A set, a progression covering it, and the translate set that witnesses
/// the cover. Every generator checks verify_cover before returning.
struct Instance {
    FiniteSet a;
    Progression p;
    FiniteSet x;
};

/// Arithmetic progression {base + k*step : 0 <= k < N} with its rank-1 GAP.
Instance make_ap(std::uint64_t n, const Rat& step, const Rat& base);

/// Image of the GAP with the given frame and lengths, covered by X = {0}.
Instance make_gap(const Frame& frame, const std::vector<std::uint64_t>& lengths,
                  std::uint64_t limit = kDefaultLatticeLimit);

/// Random rational polytope progression with full-rank forms, scaled so the
/// lattice count lands in [count_lo, count_hi]. Deterministic per seed.
/// kind = Skew when k == d, Convex otherwise.
Progression make_random_convex_progression(std::size_t d, std::size_t k, std::uint64_t seed,
                                           double scale = 1.0, std::uint64_t count_lo = 10,
                                           std::uint64_t count_hi = 100000,
                                           std::uint64_t limit = kDefaultLatticeLimit);

/// Ball-intersect-random-lattice instance: an integer basis with entries in
/// [-h, h], rationally rescaled to covolume about 1; A is the set of
/// lattice vectors of Euclidean norm <= R, and p_exact is the ellipsoid
/// progression whose image is exactly A.
struct LovettRegevInstance {
    FiniteSet a;
    Progression p_exact;
    RatMat basis;    // rescaled generator matrix, columns are the generators
    double radius = 0.0;
};

LovettRegevInstance make_lovett_regev(std::size_t m, double r, std::int64_t entry_bound,
                                      std::uint64_t seed,
                                      std::uint64_t limit = kDefaultLatticeLimit);

/// Search the ball radius for |A| in [size_lo, size_hi] (the scale is not
/// pinned by theory; this is the practical knob).
LovettRegevInstance make_lovett_regev_sized(std::size_t m, std::uint64_t size_lo,
                                            std::uint64_t size_hi, std::int64_t entry_bound,
                                            std::uint64_t seed,
                                            std::uint64_t limit = kDefaultLatticeLimit);

} // namespace progkit
