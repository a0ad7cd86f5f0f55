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

#include "progkit/rational.hpp"

#include <cstddef>
#include <vector>

namespace progkit {

enum class CoordKind { Integer, Rational };

/// The ambient group G: Z^m or R^m. Points are stored as exact rationals in
/// both cases; genuinely irrational coordinates are out of scope.
struct AmbientGroup {
    std::size_t m = 1;
    CoordKind kind = CoordKind::Rational;

    bool operator==(const AmbientGroup& o) const { return m == o.m; }
};

/// Deduplicated finite subset of the ambient group, sorted lexicographically.
class FiniteSet {
  public:
    FiniteSet() = default;
    explicit FiniteSet(AmbientGroup g) : group_(g) {}

    /// Sorts, deduplicates, and checks dimensions.
    static FiniteSet from_points(AmbientGroup g, std::vector<RatVec> pts);

    const AmbientGroup& group() const { return group_; }
    const std::vector<RatVec>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(const RatVec& p) const;

    bool operator==(const FiniteSet& o) const {
        return group_ == o.group_ && elements_ == o.elements_;
    }

  private:
    AmbientGroup group_;
    std::vector<RatVec> elements_;
};

/// Affine frame a_0; a_1, ..., a_d mapping coefficient vectors in Z^d
/// to the ambient group.
struct Frame {
    AmbientGroup group;
    RatVec a0;                        // dimension m
    std::vector<RatVec> generators;   // d entries, each dimension m

    std::size_t rank() const { return generators.size(); }
    void validate() const;            // throws std::invalid_argument
};

} // namespace progkit
