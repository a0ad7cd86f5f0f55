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
#include "progkit/fitting.hpp"
#include "progkit/lattice.hpp"
#include "progkit/progressions.hpp"
#include "progkit/setops.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace progkit {

/// Maximal subset Y of the input points such that the translates y + B/2
/// have pairwise disjoint interiors (exact test: gauge_B(y - y') >= 1,
/// touching allowed). Points are taken in order of increasing B-gauge, ties
/// lexicographic, so the output is independent of input order. Requires a
/// complete (untruncated) point set.
std::vector<IntVec> greedy_packing(const LatticePointSet& points, const SymmetricBody& b);

/// True iff (a) all pairs of Y are interior-disjoint for B/2 and (b) every
/// input point lies in y + B for some y in Y. Both checks exact.
bool verify_packing_covering(const LatticePointSet& points, const SymmetricBody& b,
                             const std::vector<IntVec>& y);

/// Volume-counting bound on a packing: lhs = |Y| against
/// rhs = vol(C + B/2) / vol(B/2), Monte Carlo with propagated error.
/// ok is lhs <= rhs + 3 * std_error.
struct CoveringBound {
    std::uint64_t lhs = 0;
    double rhs = 0.0;
    double rhs_std_error = 0.0;
    bool ok = false;
};
CoveringBound covering_bound_check(const SymmetricBody& c, const SymmetricBody& b,
                                   std::size_t y_count, std::uint64_t samples,
                                   std::uint64_t seed, double tol = 1e-6);

/// Empirical reverse Brunn-Minkowski ratio
/// vol(t1 C + t2 B)^(1/d) / ((t1 + t2) V^(1/d)) over a grid of (t1, t2),
/// for vol(C) = vol(B) = V. Returns every grid value and the maximum with
/// propagated Monte Carlo error.
struct RbmPoint {
    double t1 = 0.0, t2 = 0.0;
    double ratio = 0.0;
    double error = 0.0;
};
struct RbmResult {
    std::vector<RbmPoint> grid;
    double max_ratio = 0.0;
    double max_ratio_error = 0.0;
};
RbmResult rbm_ratio(const SymmetricBody& c, const SymmetricBody& b,
                    const std::vector<std::pair<double, double>>& t_grid,
                    std::uint64_t samples, std::uint64_t seed, double tol = 1e-6);

/// Evaluate every fitted candidate by running the packing both ways
/// (Y on the C-points with body B, Z on the B-points with body C) and keep
/// the candidate minimizing |Y| * |Z|; ties by smaller |Y|, then candidate
/// order. Candidates whose enumeration truncates are skipped.
struct SurrogateChoice {
    SymmetricBody body;
    std::vector<IntVec> y;
    std::vector<IntVec> z;
    LatticePointSet b_points;      // B ∩ Z^d, origin-centered
    std::size_t candidate_index = 0;
};
SurrogateChoice select_surrogate(const SymmetricBody& c, const LatticePointSet& c_points,
                                 std::uint64_t mc_samples, std::uint64_t seed,
                                 std::uint64_t limit = kDefaultLatticeLimit,
                                 double fit_eps = 1e-3);

struct TransferConfig {
    std::uint64_t limit = kDefaultLatticeLimit;
    std::uint64_t mc_samples = 100000;
    double fit_eps = 1e-3;
    double tol = 1e-6;          // Minkowski feasibility slack
    std::uint64_t seed = 0;
    std::vector<std::pair<double, double>> t_grid; // optional rbm check
};

struct TransferCounts {
    std::uint64_t c_lattice = 0;         // |C ∩ Z^d| around the progression center
    std::uint64_t c_lattice_origin = 0;  // |C ∩ Z^d| around 0 (equal when center = 0)
    std::uint64_t b_lattice = 0;         // |B ∩ Z^d|
    std::uint64_t y = 0, z = 0;
    std::uint64_t x = 0, x_prime = 0;
};

/// Output of the transfer pipeline: the surrogate ellipsoid B, the packing
/// sets Y and Z, the new ellipsoid progression P' and translate set X',
/// counts, measured ratios, and the verification verdict. `verified` is
/// true only if the exact packing and covering checks and
/// verify_cover(A, P', X') all passed.
struct TransferReport {
    SymmetricBody surrogate;
    std::vector<IntVec> y, z;
    Progression p_prime;
    FiniteSet x_prime;
    TransferCounts counts;
    Rat count_ratio;                  // |B ∩ Z^d| / |C ∩ Z^d|, exact
    CoveringBound bound_y, bound_z;   // measured volume bounds
    std::optional<RbmResult> rbm;
    bool verified = false;
    std::vector<std::string> failures;
};

/// The constructive content of the convex-to-ellipsoid transfer:
/// enumerate the coefficient lattice of P, pick a surrogate ellipsoid B,
/// pack both ways, assemble P' (ellipsoid progression, origin-centered
/// body) and X' = X + {linear part of y : y in Y}, and verify everything
/// exactly. Throws CoverError if X does not cover A to begin with.
TransferReport transfer_pipeline(const FiniteSet& a, const Progression& p, const FiniteSet& x,
                                 const TransferConfig& cfg);

} // namespace progkit
