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
#include "progkit/lattice.hpp"

#include <cstdint>
#include <vector>

namespace progkit {

enum class FitSource { Mvee, Inertia, LatticeInertia };

/// A fitted origin-centered ellipsoid candidate. Grams produced by the
/// floating fitters are snapped to rationals (48 significant bits) and
/// re-verified positive definite before any exact use.
struct EllipsoidCandidate {
    SymmetricBody ellipsoid;
    FitSource source;
    double fit_tolerance = 0.0;
};

/// Khachiyan barycentric ascent for the minimum-volume origin-centered
/// ellipsoid of the symmetrized input points. Stops when
/// max_x x^T Q x <= (1 + eps); every input then has gauge <= 1 + eps.
/// Throws std::invalid_argument on rank-deficient input or eps <= 0.
EllipsoidCandidate mvee(const std::vector<RatVec>& points, double eps);

/// Ellipsoid with Gram proportional to the inverse second-moment matrix of
/// the samples; the scale is fixed later by equalize_volume. Requires at
/// least 10 d^2 samples spanning R^d.
EllipsoidCandidate inertia_ellipsoid(const std::vector<std::vector<double>>& samples);

/// Rescale the candidate Gram so the ellipsoid volume equals target_vol to
/// relative accuracy 1e-9.
SymmetricBody equalize_volume(const EllipsoidCandidate& e, double target_vol);

/// n points uniform in the body by rejection from the bounding box.
/// Deterministic per seed; every returned point passes the exact gauge test.
/// Throws if the acceptance rate collapses below 1e-6.
std::vector<RatVec> uniform_sample(const SymmetricBody& body, std::size_t n,
                                   std::uint64_t seed);

/// Equal-volume-with-C ellipsoid candidates, in order: MVEE over lattice
/// points plus uniform-sample hull proxies, inertia of uniform samples, and
/// inertia of the lattice points when there are at least 10 d^2 of them.
std::vector<SymmetricBody> candidate_ellipsoids(const SymmetricBody& c,
                                                const LatticePointSet& lattice_points,
                                                std::uint64_t mc_samples, std::uint64_t seed,
                                                double fit_eps = 1e-3);

} // namespace progkit
