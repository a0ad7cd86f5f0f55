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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace progkit {

enum class BodyKind { Ellipsoid, Polytope };

/// Origin-symmetric convex body in coefficient space R^d.
///
/// Ellipsoid: {x : x^T gram x <= 1} with gram symmetric positive definite
/// (checked by exact LDL^T, all pivots > 0).
/// Polytope: {x : |<form_i, x>| <= 1 for all i} with the k x d form matrix
/// of full column rank (so the body is bounded).
///
/// Values are immutable after construction and safe to share across threads.
class SymmetricBody {
  public:
    static SymmetricBody ellipsoid(RatMat gram);
    static SymmetricBody polytope(RatMat forms);

    BodyKind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }

    /// Ellipsoid only.
    const RatMat& gram() const;
    /// Polytope only.
    const RatMat& forms() const;

    /// True iff every form row touches exactly one axis (axis-aligned box).
    bool is_axis_box() const;
    /// Half side lengths of an axis box, per axis.
    RatVec axis_box_radii() const;

    bool operator==(const SymmetricBody& o) const;

  private:
    SymmetricBody(BodyKind k, std::size_t d, RatMat data);

    BodyKind kind_;
    std::size_t dim_;
    RatMat data_; // gram or forms
};

/// Exact order of gauge_body(x) versus t (t >= 0). For an ellipsoid this
/// compares x^T gram x with t^2; for a polytope, max_i |<form_i, x>| with t.
std::strong_ordering gauge_compare(const SymmetricBody& body, std::span<const Rat> x, const Rat& t);

/// Exact, strictly monotone image of the gauge, usable as an ordering key:
/// x^T gram x for ellipsoids (the squared gauge), max_i |<form_i, x>| for
/// polytopes. Comparable only between points of the same body.
Rat gauge_key(const SymmetricBody& body, std::span<const Rat> x);

struct SupportPoint {
    std::vector<double> point;
    double value = 0.0;
};

/// Maximizer of <u, x> over the body and the maximum value. Ellipsoids use
/// the closed form gram^-1 u / sqrt(u^T gram^-1 u); polytopes run an exact
/// rational simplex (Bland's rule, lexicographically smallest optimal
/// vertex). Throws std::invalid_argument on u = 0.
SupportPoint support_point(const SymmetricBody& body, const RatVec& u);

/// Exact support data for a polytope: the lex-smallest optimal vertex and
/// the exact support value.
struct PolytopeSupport {
    RatVec vertex;
    Rat value;
};
PolytopeSupport polytope_support(const SymmetricBody& body, const RatVec& u);

/// Exact squared support value u^T gram^-1 u of an ellipsoid.
Rat ellipsoid_support_sq(const SymmetricBody& body, const RatVec& u);

/// t * body, exact: gram / t^2 for ellipsoids, forms / t for polytopes.
SymmetricBody scale_body(const SymmetricBody& body, const Rat& t);

enum class VolumeMethod { Exact, MonteCarlo };

struct VolumeEstimate {
    double value = 0.0;
    double std_error = 0.0;
    VolumeMethod method = VolumeMethod::Exact;
    std::uint64_t samples = 0;
};

/// Volume of the body. Ellipsoids and axis boxes have exact paths; general
/// polytopes fall back to rejection sampling in the support bounding box
/// (mc_samples trials, binomial standard error). mc_samples = 0 on a body
/// with no exact path is an error.
VolumeEstimate volume(const SymmetricBody& body, std::uint64_t mc_samples = 100000,
                      std::uint64_t seed = 0);

/// Unit-ball volume omega_d via the standard recurrence.
double unit_ball_volume(std::size_t d);

/// Per-axis support radii r_i, rounded outward, so body lies inside
/// prod [-r_i, r_i].
std::vector<double> bounding_box(const SymmetricBody& body);

/// Exact per-axis data used by integer scans: for a polytope the exact
/// rational radius; for an ellipsoid the exact squared radius (gram^-1)_ii.
struct AxisBound {
    Rat value;      // radius, or squared radius for ellipsoids
    bool squared;
};
AxisBound axis_bound_exact(const SymmetricBody& body, std::size_t axis);

/// All vertices of a polytope, exact, sorted lexicographically.
/// Cost is C(k, d) * 2^d small solves; fine at desk scale.
std::vector<RatVec> polytope_vertices(const SymmetricBody& body);

/// Decision procedure for x in t1*C + t2*B, built once and queried many
/// times. Exact closed forms when both bodies are axis boxes, when both are
/// ellipsoids with proportional Grams, and for planar polytope pairs
/// (exact polygon sum); polytope pairs in higher dimension solve an exact
/// rational LP for the minimal gauge; every remaining mix has an ellipsoid
/// and runs a Frank-Wolfe scheme with exact line search that minimizes the
/// ellipsoid gauge over the other body via the support oracle, with a
/// fixed budget of 200*d steps.
class MinkowskiSum {
  public:
    MinkowskiSum(const SymmetricBody& C, double t1, const SymmetricBody& B, double t2);

    bool contains(std::span<const double> x, double tol) const;
    /// Box radii t1 r_i(C) + t2 r_i(B), rounded outward.
    const std::vector<double>& box_radius() const { return box_radius_; }
    std::size_t dim() const { return dim_; }

  private:
    enum class Path { BoxBox, ScaledEllipsoid, PolygonSum, FrankWolfe, ExactLp };

    struct FwBody {
        bool ellipsoid = false;
        double scale = 1.0;              // t factor
        DMat gram;                       // ellipsoid gauge data
        DMat gram_inv;
        std::vector<std::vector<double>> vertices; // polytope oracle data
    };

    bool fw_contains(std::span<const double> x, double tol) const;
    bool lp_contains(std::span<const double> x, double tol) const;

    Path path_;
    std::size_t dim_;
    std::vector<double> box_radius_;

    std::vector<double> box_sum_radii_;            // BoxBox
    DMat gram_c_;                                  // ScaledEllipsoid: gauge vs radius
    double scaled_radius_ = 0.0;
    std::vector<std::vector<double>> hull_forms_;  // PolygonSum: (a, b, c): ax+by <= c
    FwBody domain_;                                // FrankWolfe
    FwBody gauge_;
    int budget_ = 0;
    RatMat lp_c_forms_;                            // ExactLp, pre-scaled by t
    RatMat lp_b_forms_;
    RatMat lp_matrix_;                             // constraint rows over (y, tau)
};

/// x in t1*C + t2*B up to gauge slack tol (one-shot convenience wrapper
/// over MinkowskiSum).
bool minkowski_member(std::span<const double> x, const SymmetricBody& C, double t1,
                      const SymmetricBody& B, double t2, double tol = 1e-6);

/// Monte Carlo estimate of vol(t1*C + t2*B) by rejection in the summed
/// support box. Deterministic for fixed seed.
VolumeEstimate minkowski_volume_mc(const SymmetricBody& C, double t1, double t2,
                                   const SymmetricBody& B, std::uint64_t samples,
                                   std::uint64_t seed, double tol = 1e-6);

} // namespace progkit
