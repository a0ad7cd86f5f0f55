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

#include "progkit/bodies.hpp"
#include "progkit/fitting.hpp"
#include "progkit/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace progkit;

namespace {

SymmetricBody unit_disk() { return SymmetricBody::ellipsoid(RatMat::identity(2)); }

SymmetricBody box2(const Rat& rx, const Rat& ry) {
    RatMat f(2, 2);
    f(0, 0) = Rat(1) / rx;
    f(1, 1) = Rat(1) / ry;
    return SymmetricBody::polytope(std::move(f));
}

RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("body construction enforces the invariants") {
    RatMat not_spd(2, 2);
    not_spd(0, 0) = 1;
    not_spd(1, 1) = -1;
    CHECK_THROWS_AS(SymmetricBody::ellipsoid(not_spd), std::invalid_argument);

    RatMat asym(2, 2);
    asym(0, 0) = 1;
    asym(0, 1) = 1;
    asym(1, 1) = 1;
    CHECK_THROWS_AS(SymmetricBody::ellipsoid(asym), std::invalid_argument);

    RatMat rank_def(2, 2);
    rank_def(0, 0) = 1;
    rank_def(1, 0) = 2; // both forms along e1: unbounded body
    CHECK_THROWS_AS(SymmetricBody::polytope(rank_def), std::invalid_argument);
}

TEST_CASE("gauge_compare closed-form cases") {
    CHECK(gauge_compare(unit_disk(), rv({1, 0}), Rat(1)) == std::strong_ordering::equal);

    // max-coordinate gauge of [-1,1]^2 at (2,1) against 2
    CHECK(gauge_compare(box2(Rat(1), Rat(1)), rv({2, 1}), Rat(2)) == std::strong_ordering::equal);

    RatMat g(2, 2);
    g(0, 0) = Rat(1, 4);
    g(1, 1) = Rat(1);
    CHECK(gauge_compare(SymmetricBody::ellipsoid(g), rv({3, 0}), Rat(1)) ==
          std::strong_ordering::greater);

    CHECK_THROWS_AS(gauge_compare(unit_disk(), rv({1}), Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(gauge_compare(unit_disk(), rv({1, 0}), Rat(-1)), std::invalid_argument);
}

TEST_CASE("gauge axioms hold exactly") {
    const CounterRng rng(7, 1);
    const SymmetricBody bodies[] = {unit_disk(), box2(Rat(3, 2), Rat(2, 3))};
    std::uint64_t ctr = 0;
    for (const SymmetricBody& body : bodies) {
        for (int trial = 0; trial < 50; ++trial) {
            RatVec x = {make_rat(rng.uniform_int(ctr++, -8, 8), 4),
                        make_rat(rng.uniform_int(ctr++, -8, 8), 4)};
            Rat t = make_rat(rng.uniform_int(ctr++, 0, 5), 2);
            // symmetry
            CHECK(gauge_compare(body, x, t) == gauge_compare(body, vec_neg(x), t));
            // scaling: gauge(t*x) vs t*s == gauge(x) vs s
            Rat s = make_rat(rng.uniform_int(ctr++, 1, 5), 2);
            Rat lam = make_rat(rng.uniform_int(ctr++, 1, 6), 3);
            CHECK(gauge_compare(body, vec_scale(x, lam), lam * s) == gauge_compare(body, x, s));
        }
        // midpoint convexity on members
        for (int trial = 0; trial < 30; ++trial) {
            RatVec x = {make_rat(rng.uniform_int(ctr++, -4, 4), 8),
                        make_rat(rng.uniform_int(ctr++, -4, 4), 8)};
            RatVec y = {make_rat(rng.uniform_int(ctr++, -4, 4), 8),
                        make_rat(rng.uniform_int(ctr++, -4, 4), 8)};
            if (gauge_compare(body, x, Rat(1)) == std::strong_ordering::greater) continue;
            if (gauge_compare(body, y, Rat(1)) == std::strong_ordering::greater) continue;
            RatVec mid = vec_scale(vec_add(x, y), Rat(1, 2));
            CHECK(gauge_compare(body, mid, Rat(1)) != std::strong_ordering::greater);
        }
    }
}

TEST_CASE("support_point closed forms") {
    SUBCASE("ellipsoid unit direction") {
        const SupportPoint sp = support_point(unit_disk(), rv({0, 1}));
        CHECK(sp.value == doctest::Approx(1.0));
        CHECK(sp.point[0] == doctest::Approx(0.0));
        CHECK(sp.point[1] == doctest::Approx(1.0));
    }
    SUBCASE("box corner") {
        const SupportPoint sp = support_point(box2(Rat(2), Rat(1)), rv({1, 1}));
        CHECK(sp.value == doctest::Approx(3.0));
        CHECK(sp.point[0] == doctest::Approx(2.0));
        CHECK(sp.point[1] == doctest::Approx(1.0));
    }
    SUBCASE("cross polytope vertex") {
        RatMat f(2, 2);
        f(0, 0) = 1;
        f(0, 1) = 1;
        f(1, 0) = 1;
        f(1, 1) = -1;
        const SymmetricBody cross = SymmetricBody::polytope(std::move(f));
        const PolytopeSupport ps = polytope_support(cross, rv({1, 0}));
        CHECK(ps.value == Rat(1));
        CHECK(ps.vertex == rv({1, 0}));
    }
    SUBCASE("degenerate direction picks the lex-smallest optimal vertex") {
        // u = (1, 0) on the unit box: the whole edge x = 1 is optimal
        const PolytopeSupport ps = polytope_support(box2(Rat(1), Rat(1)), rv({1, 0}));
        CHECK(ps.value == Rat(1));
        CHECK(ps.vertex == rv({1, -1}));
    }
    CHECK_THROWS_AS(support_point(unit_disk(), rv({0, 0})), std::invalid_argument);
}

TEST_CASE("polytope support dominates random members") {
    const SymmetricBody body = box2(Rat(3, 2), Rat(5, 7));
    const RatVec u = {Rat(2), Rat(-3)};
    const PolytopeSupport ps = polytope_support(body, u);
    const std::vector<RatVec> members = uniform_sample(body, 10000, 99);
    bool all_below = true;
    for (const RatVec& p : members) all_below = all_below && dot(u, p) <= ps.value;
    CHECK(all_below);
}

TEST_CASE("ellipsoid support dominates random members within 1e-9") {
    RatMat g(2, 2);
    g(0, 0) = Rat(1, 4);
    g(0, 1) = Rat(1, 8);
    g(1, 0) = Rat(1, 8);
    g(1, 1) = Rat(1);
    const SymmetricBody body = SymmetricBody::ellipsoid(std::move(g));
    const RatVec u = {Rat(1), Rat(2)};
    const SupportPoint sp = support_point(body, u);
    const std::vector<RatVec> members = uniform_sample(body, 10000, 5);
    for (const RatVec& p : members)
        CHECK(to_double(dot(u, p)) <= sp.value + 1e-9);
}

TEST_CASE("scale_body identities") {
    const SymmetricBody disk = unit_disk();
    const SymmetricBody half = scale_body(disk, Rat(1, 2));
    CHECK(half.gram()(0, 0) == Rat(4));
    CHECK(scale_body(disk, Rat(1)) == disk);
    CHECK(scale_body(scale_body(disk, Rat(2)), Rat(1, 2)) == disk);

    // gauge of t*body scales exactly: compare against scaled thresholds
    const SymmetricBody b = box2(Rat(2), Rat(3));
    const SymmetricBody b3 = scale_body(b, Rat(3));
    const RatVec x = {Rat(5, 2), Rat(7, 3)};
    CHECK(gauge_compare(b3, x, Rat(1, 3)) == gauge_compare(b, x, Rat(1)));
}

TEST_CASE("volume exact paths") {
    CHECK(volume(unit_disk()).value == doctest::Approx(M_PI));
    CHECK(volume(unit_disk()).method == VolumeMethod::Exact);

    RatMat g(2, 2);
    g(0, 0) = Rat(1, 4);
    g(1, 1) = Rat(1, 9);
    CHECK(volume(SymmetricBody::ellipsoid(g)).value == doctest::Approx(6.0 * M_PI));

    CHECK(volume(box2(Rat(3, 2), Rat(3, 2))).value == doctest::Approx(9.0));
}

TEST_CASE("volume of the cross polytope is exact") {
    // parallelotope path: 2^d / |det F|
    RatMat f(2, 2);
    f(0, 0) = 1;
    f(0, 1) = 1;
    f(1, 0) = 1;
    f(1, 1) = -1;
    const SymmetricBody cross = SymmetricBody::polytope(std::move(f));
    const VolumeEstimate v = volume(cross);
    CHECK(v.method == VolumeMethod::Exact);
    CHECK(v.value == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("volume of a hexagon by Monte Carlo") {
    // square [-1,1]^2 cut by |x+y| <= 1: area 3
    RatMat f(3, 2);
    f(0, 0) = 1;
    f(1, 1) = 1;
    f(2, 0) = 1;
    f(2, 1) = 1;
    const SymmetricBody hex = SymmetricBody::polytope(std::move(f));
    const VolumeEstimate v = volume(hex, 1000000, 3);
    CHECK(v.method == VolumeMethod::MonteCarlo);
    CHECK(v.std_error > 0.0);
    CHECK(std::fabs(v.value - 3.0) <= 3.0 * v.std_error);
    CHECK_THROWS_AS(volume(hex, 0), std::invalid_argument);
}

TEST_CASE("volume scales as t^d") {
    RatMat g(2, 2);
    g(0, 0) = Rat(2, 3);
    g(0, 1) = Rat(1, 5);
    g(1, 0) = Rat(1, 5);
    g(1, 1) = Rat(3, 2);
    const SymmetricBody e = SymmetricBody::ellipsoid(std::move(g));
    const double v1 = volume(e).value;
    const double v2 = volume(scale_body(e, Rat(3, 2))).value;
    CHECK(v2 == doctest::Approx(v1 * 2.25).epsilon(1e-12));

    // MC path within 3 sigma
    RatMat f(3, 2);
    f(0, 0) = 1;
    f(0, 1) = 1;
    f(1, 0) = 1;
    f(1, 1) = -1;
    f(2, 0) = Rat(1, 2);
    const SymmetricBody p = SymmetricBody::polytope(std::move(f));
    const VolumeEstimate a = volume(p, 400000, 11);
    const VolumeEstimate b = volume(scale_body(p, Rat(2)), 400000, 12);
    CHECK(std::fabs(b.value - 4.0 * a.value) <=
          3.0 * std::sqrt(16.0 * a.std_error * a.std_error + b.std_error * b.std_error));
}

TEST_CASE("bounding_box closed forms") {
    RatMat g(2, 2);
    g(0, 0) = Rat(1, 4);
    g(1, 1) = Rat(1);
    const std::vector<double> bb = bounding_box(SymmetricBody::ellipsoid(g));
    CHECK(bb[0] == doctest::Approx(2.0));
    CHECK(bb[1] == doctest::Approx(1.0));

    const std::vector<double> bb2 = bounding_box(box2(Rat(1), Rat(1)));
    CHECK(bb2[0] == doctest::Approx(1.0));
    CHECK(bb2[1] == doctest::Approx(1.0));

    // square rotated 45 degrees still has unit axis bounds
    RatMat f(2, 2);
    f(0, 0) = 1;
    f(0, 1) = 1;
    f(1, 0) = 1;
    f(1, 1) = -1;
    const std::vector<double> bb3 = bounding_box(SymmetricBody::polytope(std::move(f)));
    CHECK(bb3[0] == doctest::Approx(1.0));
    CHECK(bb3[1] == doctest::Approx(1.0));
}

TEST_CASE("minkowski_member closed-form agreement") {
    const SymmetricBody disk = unit_disk();
    const SymmetricBody box = box2(Rat(1), Rat(1));

    const std::vector<double> zero{0.0, 0.0};
    CHECK(minkowski_member(zero, disk, 1.0, disk, 1.0));
    CHECK(minkowski_member(zero, box, 1.0, disk, 1.0));

    const std::vector<double> boundary{2.0, 0.0};
    CHECK(minkowski_member(boundary, disk, 1.0, disk, 1.0, 1e-6));

    const std::vector<double> outside{2.01, 0.0};
    CHECK_FALSE(minkowski_member(outside, box, 1.0, box, 1.0, 1e-6));
    const std::vector<double> corner{2.0, 0.0};
    CHECK(minkowski_member(corner, box, 1.0, box, 1.0, 1e-6));
}

TEST_CASE("minkowski_member mixed bodies against geometry") {
    // [-1,1]^2 + unit disk: (2,0) is on the boundary, (1.6,1.6) is inside
    // (corner (1,1) + (0.6,0.6), norm 0.849 < 1), (2.1,0) is outside
    const SymmetricBody disk = unit_disk();
    const SymmetricBody box = box2(Rat(1), Rat(1));
    const std::vector<double> diag_in{1.6, 1.6}, far_x{2.1, 0.0}, near_x{1.99, 0.0},
        diag_out{1.8, 1.8};
    CHECK(minkowski_member(diag_in, box, 1.0, disk, 1.0, 1e-6));
    CHECK_FALSE(minkowski_member(far_x, box, 1.0, disk, 1.0, 1e-6));
    CHECK(minkowski_member(near_x, box, 1.0, disk, 1.0, 1e-6));
    CHECK_FALSE(minkowski_member(diag_out, box, 1.0, disk, 1.0, 1e-6));
}

TEST_CASE("minkowski_member on non-proportional ellipsoids") {
    // disk + diag(1/4,1) ellipse: the sum reaches exactly (3,0) and (0,2)
    const SymmetricBody disk = unit_disk();
    RatMat g(2, 2);
    g(0, 0) = Rat(1, 4);
    g(1, 1) = Rat(1);
    const SymmetricBody ell = SymmetricBody::ellipsoid(std::move(g));
    const std::vector<double> inside_x{2.99, 0.0}, outside_x{3.02, 0.0}, inside_y{0.0, 1.99},
        outside_y{0.0, 2.02};
    CHECK(minkowski_member(inside_x, disk, 1.0, ell, 1.0, 1e-6));
    CHECK_FALSE(minkowski_member(outside_x, disk, 1.0, ell, 1.0, 1e-6));
    CHECK(minkowski_member(inside_y, disk, 1.0, ell, 1.0, 1e-6));
    CHECK_FALSE(minkowski_member(outside_y, disk, 1.0, ell, 1.0, 1e-6));
}

TEST_CASE("minkowski_member on a skewed polytope pair in 3-d") {
    // C = [-1,1]^3, B = {|x| <= 1, |y| <= 1, |z - x| <= 1}: along (2,2,z)
    // the sum reaches z in [-3,3] (corner (1,1,c) plus B point (1,1,b),
    // b in [0,2]); x caps at 2
    RatMat fc(3, 3);
    fc(0, 0) = 1;
    fc(1, 1) = 1;
    fc(2, 2) = 1;
    const SymmetricBody cube = SymmetricBody::polytope(std::move(fc));
    RatMat fb(3, 3);
    fb(0, 0) = 1;
    fb(1, 1) = 1;
    fb(2, 0) = -1;
    fb(2, 2) = 1;
    const SymmetricBody skew = SymmetricBody::polytope(std::move(fb));

    const std::vector<double> deep{2.0, 2.0, 2.9}, boundary{2.0, 2.0, 3.0},
        past{2.0, 2.0, 3.05}, wide{2.05, 0.0, 0.0}, inside{1.5, -1.2, 2.0};
    CHECK(minkowski_member(deep, cube, 1.0, skew, 1.0, 1e-6));
    CHECK(minkowski_member(boundary, cube, 1.0, skew, 1.0, 1e-6));
    CHECK_FALSE(minkowski_member(past, cube, 1.0, skew, 1.0, 1e-6));
    CHECK_FALSE(minkowski_member(wide, cube, 1.0, skew, 1.0, 1e-6));
    CHECK(minkowski_member(inside, cube, 1.0, skew, 1.0, 1e-6));
}

TEST_CASE("minkowski_volume_mc trivial sums") {
    const SymmetricBody disk = unit_disk();
    SUBCASE("disk plus disk is the radius-2 disk") {
        const VolumeEstimate v = minkowski_volume_mc(disk, 1.0, 1.0, disk, 200000, 21);
        CHECK(std::fabs(v.value - 4.0 * M_PI) <= 3.0 * v.std_error);
    }
    SUBCASE("Steiner formula for box plus disk") {
        const SymmetricBody box = box2(Rat(1), Rat(1));
        const VolumeEstimate v = minkowski_volume_mc(box, 1.0, 1.0, disk, 400000, 22);
        CHECK(std::fabs(v.value - (12.0 + M_PI)) <= 3.0 * v.std_error);
    }
    SUBCASE("cube plus cube") {
        RatMat f(3, 3);
        f(0, 0) = 1;
        f(1, 1) = 1;
        f(2, 2) = 1;
        const SymmetricBody cube = SymmetricBody::polytope(std::move(f));
        const VolumeEstimate v = minkowski_volume_mc(cube, 1.0, 1.0, cube, 100000, 23);
        CHECK(std::fabs(v.value - 64.0) <= 3.0 * v.std_error + 1e-9);
    }
    CHECK_THROWS_AS(minkowski_volume_mc(disk, 1.0, 1.0, disk, 10, 1), std::invalid_argument);
}

TEST_CASE("forward Brunn-Minkowski floor on the MC estimate") {
    const SymmetricBody disk = unit_disk();
    const SymmetricBody box = box2(Rat(1), Rat(2));
    const double t1 = 1.0, t2 = 0.5;
    const VolumeEstimate v = minkowski_volume_mc(box, t1, t2, disk, 300000, 31);
    const double floor_val = t1 * std::sqrt(volume(box).value) + t2 * std::sqrt(volume(disk).value);
    CHECK(std::sqrt(v.value) + 3.0 * v.std_error / (2.0 * std::sqrt(v.value)) >= floor_val - 1e-9);
}

TEST_CASE("minkowski_volume_mc is deterministic per seed") {
    const SymmetricBody disk = unit_disk();
    const SymmetricBody box = box2(Rat(1), Rat(1));
    const VolumeEstimate a = minkowski_volume_mc(box, 1.0, 1.0, disk, 50000, 77);
    const VolumeEstimate b = minkowski_volume_mc(box, 1.0, 1.0, disk, 50000, 77);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
    const VolumeEstimate c = minkowski_volume_mc(box, 1.0, 1.0, disk, 50000, 78);
    CHECK(a.value != c.value); // different stream actually moves
}
