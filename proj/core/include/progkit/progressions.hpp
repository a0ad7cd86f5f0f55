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
#include "progkit/group.hpp"
#include "progkit/lattice.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace progkit {

enum class ProgressionKind { Gap, Convex, Ellipsoid, Skew };

/// A progression: the image under a frame of the integer points of a
/// symmetric convex body in coefficient space, with a rational center
/// offset. The kind tag narrows the body:
///   Gap       axis-aligned box forms (the classic N_1 x ... x N_d case)
///   Convex    any polytope body
///   Ellipsoid ellipsoid body
///   Skew      polytope with exactly d forms (a basis of linear forms)
struct Progression {
    Frame frame;
    SymmetricBody body;
    RatVec center;           // in coefficient space R^d
    ProgressionKind kind = ProgressionKind::Convex;

    std::size_t rank() const { return frame.rank(); }
    void validate() const;   // kind/body consistency; throws std::invalid_argument
};

/// a_0 + sum_i n_i a_i, exact.
RatVec ev(const Frame& frame, std::span<const std::int64_t> n);

/// Size of the progression in the technical sense: the number of
/// coefficient tuples, i.e. the lattice count of the body around its
/// center. Throws TruncationError at the limit.
std::uint64_t progression_size(const Progression& p, std::uint64_t limit = kDefaultLatticeLimit);

struct ImageResult {
    FiniteSet set;
    std::uint64_t size = 0;        // coefficient tuples
    std::uint64_t cardinality = 0; // distinct group elements
    bool improper = false;         // size > cardinality
};

/// Map every lattice point through ev and deduplicate exactly.
ImageResult image_set(const Progression& p, std::uint64_t limit = kDefaultLatticeLimit);

/// GAP with lengths N_1..N_d as a convex progression whose lattice points
/// are exactly {0,...,N_i - 1}^d: box radii (N_i - 1)/2 with center
/// (N_i - 1)/2 (half-integer for even N_i). A length-1 direction is encoded
/// as a form row with coefficient 2 on that axis, which pins the coordinate
/// to 0 while keeping full column rank.
Progression gap_to_convex(const std::vector<std::uint64_t>& lengths, const Frame& frame);

/// Gaussian weight profile over the progression's image:
/// theta(x) = sum over n with ev(n) = x of exp(-n^T gram n), truncated to
/// the shell n^T gram n <= truncation_bound with a certified upper bound on
/// the discarded mass.
struct GaussianDensity {
    std::map<RatVec, double> weights;
    double truncation_bound = 0.0;
    double total_dropped = 0.0;  // certified upper bound on discarded mass

    double total_mass() const;
    double l2_norm() const;
};

GaussianDensity gaussian_density(const Frame& frame, const RatMat& gram, double tail_eps,
                                 std::uint64_t limit = kDefaultLatticeLimit);

/// Correlation ratio rho = sum_{a in A} theta(a) / (||theta||_2 sqrt(|A|)).
/// Always in [0, 1] up to the truncation slack.
double gaussian_correlation(const FiniteSet& a, const GaussianDensity& theta);

} // namespace progkit
