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

#include "progkit/bodies.hpp"
#include "progkit/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace progkit {

inline constexpr std::uint64_t kDefaultLatticeLimit = 10'000'000;

/// Z^d points of a (possibly center-shifted) symmetric convex body:
/// all integer n with gauge(n - center) <= 1, in lexicographic order, no
/// duplicates. If `truncated` is set, `points` is the lex prefix produced
/// before the limit was hit and the set is incomplete.
struct LatticePointSet {
    std::size_t dim = 0;
    std::vector<std::int64_t> flat;
    bool truncated = false;
    std::optional<SymmetricBody> body; // the enumerated body and its shift
    RatVec center;

    std::size_t size() const { return dim == 0 ? 0 : flat.size() / dim; }
    std::span<const std::int64_t> point(std::size_t i) const {
        return {flat.data() + i * dim, dim};
    }
    bool contains(std::span<const std::int64_t> p) const;
};

/// Enumerate body lattice points around `center`. Ellipsoids run a
/// Fincke-Pohst recursion on an exact rational LDL^T of the Gram matrix
/// (interval bounds rounded outward in floating point, then tightened
/// exactly, so no point is ever missed); polytopes scan the outward-rounded
/// bounding box and filter by exact gauge comparison.
LatticePointSet enumerate_lattice(const SymmetricBody& body, const RatVec& center,
                                  std::uint64_t limit = kDefaultLatticeLimit);

/// Cardinality of the complete set. Throws TruncationError at the limit.
std::uint64_t count_lattice(const SymmetricBody& body, const RatVec& center,
                            std::uint64_t limit = kDefaultLatticeLimit);

} // namespace progkit
