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

#include "progkit/fitting.hpp"

#include "progkit/lattice.hpp"
#include "progkit/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace progkit;

namespace {

RatVec rv2(long a, long b) { return {Rat(a), Rat(b)}; }

double frobenius_rel_diff(const RatMat& a, const RatMat& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.a.size(); ++i) {
        const double x = to_double(a.a[i]), y = to_double(b.a[i]);
        num += (x - y) * (x - y);
        den += x * x;
    }
    return std::sqrt(num / den);
}

} // namespace

TEST_CASE("mvee of the coordinate cross is the unit disk") {
    const EllipsoidCandidate c = mvee({rv2(1, 0), rv2(0, 1)}, 1e-6);
    CHECK(to_double(c.ellipsoid.gram()(0, 0)) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(to_double(c.ellipsoid.gram()(1, 1)) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(to_double(c.ellipsoid.gram()(0, 1)) == doctest::Approx(0.0).epsilon(1e-5));
    CHECK(c.source == FitSource::Mvee);
}

TEST_CASE("mvee of an axis-aligned pair") {
    const EllipsoidCandidate c = mvee({rv2(2, 0), rv2(0, 1)}, 1e-6);
    CHECK(to_double(c.ellipsoid.gram()(0, 0)) == doctest::Approx(0.25).epsilon(1e-5));
    CHECK(to_double(c.ellipsoid.gram()(1, 1)) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("mvee never excludes an input beyond 1+eps") {
    const CounterRng rng(17, 3);
    std::vector<RatVec> pts;
    std::uint64_t ctr = 0;
    for (int i = 0; i < 100; ++i)
        pts.push_back({make_rat(rng.uniform_int(ctr++, -20, 20), 7), make_rat(rng.uniform_int(ctr++, -20, 20), 7)});
    const double eps = 1e-3;
    const EllipsoidCandidate c = mvee(pts, eps);
    const Rat bound = rat_from_double(1.0 + eps);
    for (const RatVec& p : pts) {
        CHECK(gauge_compare(c.ellipsoid, p, bound) != std::strong_ordering::greater);
        const RatVec n = vec_neg(p); // symmetrized input is covered too
        CHECK(gauge_compare(c.ellipsoid, n, bound) != std::strong_ordering::greater);
    }
    CHECK_THROWS_AS(mvee({rv2(1, 0), rv2(-1, 0), rv2(2, 0)}, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(mvee(pts, 0.0), std::invalid_argument);
}

TEST_CASE("inertia of uniform disk samples is proportional to the identity") {
    const SymmetricBody disk = SymmetricBody::ellipsoid(RatMat::identity(2));
    const std::vector<RatVec> samples = uniform_sample(disk, 60000, 12);
    std::vector<std::vector<double>> dbl;
    for (const RatVec& p : samples) dbl.push_back({to_double(p[0]), to_double(p[1])});
    const EllipsoidCandidate c = inertia_ellipsoid(dbl);
    // second moment of the unit disk is I/4; the Gram is its inverse
    const double g00 = to_double(c.ellipsoid.gram()(0, 0));
    const double g11 = to_double(c.ellipsoid.gram()(1, 1));
    const double g01 = to_double(c.ellipsoid.gram()(0, 1));
    CHECK(g00 == doctest::Approx(4.0).epsilon(0.05));
    CHECK(g11 == doctest::Approx(4.0).epsilon(0.05));
    CHECK(std::fabs(g01) < 0.15);
}

TEST_CASE("inertia of the 1-d integer segment matches the closed-form sum") {
    const long n = 30;
    std::vector<std::vector<double>> pts;
    double mean = 0.0;
    for (long k = -n; k <= n; ++k) {
        pts.push_back({static_cast<double>(k)});
        mean += static_cast<double>(k);
    }
    CHECK(mean == 0.0); // symmetric input has exactly zero mean
    const EllipsoidCandidate c = inertia_ellipsoid(pts);
    // mean square is N(N+1)/3 over 2N+1 points
    const double m = static_cast<double>(n) * (n + 1) / 3.0;
    CHECK(to_double(c.ellipsoid.gram()(0, 0)) == doctest::Approx(1.0 / m).epsilon(1e-9));
}

TEST_CASE("equalize_volume hits the target") {
    SUBCASE("identity to 4pi scales the Gram to I/4") {
        const EllipsoidCandidate c{SymmetricBody::ellipsoid(RatMat::identity(2)),
                                   FitSource::Inertia, 0.0};
        const SymmetricBody out = equalize_volume(c, 4.0 * M_PI);
        CHECK(to_double(out.gram()(0, 0)) == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(volume(out).value == doctest::Approx(4.0 * M_PI).epsilon(1e-9));
    }
    SUBCASE("identity target is a fixed point") {
        RatMat g(2, 2);
        g(0, 0) = Rat(3, 7);
        g(0, 1) = Rat(1, 9);
        g(1, 0) = Rat(1, 9);
        g(1, 1) = Rat(5, 3);
        const EllipsoidCandidate c{SymmetricBody::ellipsoid(std::move(g)), FitSource::Mvee, 1e-3};
        const double v = volume(c.ellipsoid).value;
        const SymmetricBody once = equalize_volume(c, v);
        CHECK(volume(once).value == doctest::Approx(v).epsilon(1e-9));
        const SymmetricBody twice =
            equalize_volume({once, FitSource::Mvee, 1e-3}, v);
        CHECK(volume(twice).value == doctest::Approx(v).epsilon(1e-9));
    }
    SUBCASE("anisotropic case verified through the volume formula") {
        RatMat g(2, 2);
        g(0, 0) = 1;
        g(1, 1) = 4;
        const EllipsoidCandidate c{SymmetricBody::ellipsoid(std::move(g)), FitSource::Inertia, 0.0};
        const SymmetricBody out = equalize_volume(c, M_PI);
        CHECK(volume(out).value == doctest::Approx(M_PI).epsilon(1e-9));
        // shape ratio is preserved
        CHECK(to_double(out.gram()(1, 1)) / to_double(out.gram()(0, 0)) ==
              doctest::Approx(4.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(equalize_volume({SymmetricBody::ellipsoid(RatMat::identity(1)),
                                     FitSource::Inertia, 0.0},
                                    0.0),
                    std::invalid_argument);
}

TEST_CASE("uniform_sample contracts") {
    RatMat f(2, 2);
    f(0, 0) = Rat(1, 2);
    f(1, 1) = Rat(2, 3);
    const SymmetricBody box = SymmetricBody::polytope(std::move(f));

    const std::vector<RatVec> a = uniform_sample(box, 1000, 42);
    const std::vector<RatVec> b = uniform_sample(box, 1000, 42);
    CHECK(a == b); // determinism
    for (const RatVec& p : a)
        CHECK(gauge_compare(box, p, Rat(1)) != std::strong_ordering::greater);

    // componentwise mean within 3 sigma of zero
    const std::size_t n = 100000;
    const std::vector<RatVec> big = uniform_sample(box, n, 7);
    for (std::size_t axis = 0; axis < 2; ++axis) {
        double mean = 0.0, var = 0.0;
        for (const RatVec& p : big) mean += to_double(p[axis]);
        mean /= static_cast<double>(n);
        for (const RatVec& p : big) {
            const double dlt = to_double(p[axis]) - mean;
            var += dlt * dlt;
        }
        var /= static_cast<double>(n - 1);
        CHECK(std::fabs(mean) <= 3.0 * std::sqrt(var / static_cast<double>(n)));
    }
}

TEST_CASE("candidate_ellipsoids contracts") {
    SUBCASE("ellipsoid input: every candidate matches its shape") {
        RatMat g(2, 2);
        g(0, 0) = Rat(1, 9);
        g(1, 1) = Rat(1, 2);
        const SymmetricBody c = SymmetricBody::ellipsoid(std::move(g));
        const LatticePointSet pts = enumerate_lattice(c, RatVec(2, Rat(0)));
        const std::vector<SymmetricBody> cands = candidate_ellipsoids(c, pts, 100000, 3);
        REQUIRE(!cands.empty());
        const double vol_c = volume(c).value;
        for (const SymmetricBody& cand : cands) {
            CHECK(std::fabs(volume(cand).value - vol_c) <= 1e-6 * vol_c);
            CHECK(frobenius_rel_diff(c.gram(), cand.gram()) < 0.05);
        }
    }
    SUBCASE("box input: volumes equalized to 4") {
        RatMat f(2, 2);
        f(0, 0) = 1;
        f(1, 1) = 1;
        const SymmetricBody box = SymmetricBody::polytope(std::move(f));
        const LatticePointSet pts = enumerate_lattice(box, RatVec(2, Rat(0)));
        const std::vector<SymmetricBody> cands = candidate_ellipsoids(box, pts, 100000, 4);
        for (const SymmetricBody& cand : cands)
            CHECK(std::fabs(volume(cand).value - 4.0) <= 1e-6 * 4.0);
    }
    SUBCASE("no lattice points: the lattice-inertia candidate is absent") {
        const SymmetricBody c = SymmetricBody::ellipsoid(RatMat::identity(2));
        LatticePointSet empty;
        empty.dim = 2;
        const std::vector<SymmetricBody> cands = candidate_ellipsoids(c, empty, 50000, 5);
        CHECK(cands.size() == 2); // MVEE and sample inertia only
    }
}
