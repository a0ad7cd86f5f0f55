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

#include "progkit/errors.hpp"
#include "progkit/lattice.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace progkit;
using namespace progkit::testing;

namespace {

RatVec origin(std::size_t d) { return RatVec(d, Rat(0)); }

} // namespace

TEST_CASE("unit disk lattice points") {
    const SymmetricBody disk = SymmetricBody::ellipsoid(RatMat::identity(2));
    const LatticePointSet pts = enumerate_lattice(disk, origin(2));
    CHECK(pts.size() == 5);
    CHECK_FALSE(pts.truncated);
    CHECK(pts.contains(std::array<std::int64_t, 2>{0, 0}));
    CHECK(pts.contains(std::array<std::int64_t, 2>{-1, 0}));
    CHECK(pts.contains(std::array<std::int64_t, 2>{0, 1}));
    CHECK_FALSE(pts.contains(std::array<std::int64_t, 2>{1, 1}));
}

TEST_CASE("radius-2 disk count matches the grid oracle") {
    RatMat g = RatMat::identity(2);
    for (Rat& q : g.a) q /= 4;
    const SymmetricBody disk2 = SymmetricBody::ellipsoid(std::move(g));
    CHECK(count_lattice(disk2, origin(2)) == 13);
    CHECK(brute_force_lattice(disk2, origin(2)).size() == 13);
}

TEST_CASE("box [-3/2,3/2]^2 has the nine lattice points") {
    RatMat f(2, 2);
    f(0, 0) = Rat(2, 3);
    f(1, 1) = Rat(2, 3);
    const SymmetricBody box = SymmetricBody::polytope(std::move(f));
    const LatticePointSet pts = enumerate_lattice(box, origin(2));
    CHECK(pts.size() == 9);
    for (std::int64_t a = -1; a <= 1; ++a)
        for (std::int64_t b = -1; b <= 1; ++b)
            CHECK(pts.contains(std::array<std::int64_t, 2>{a, b}));
}

TEST_CASE("interval [-N,N] counts 2N+1") {
    for (long n = 1; n <= 12; ++n) {
        RatMat f(1, 1);
        f(0, 0) = Rat(1, n);
        CHECK(count_lattice(SymmetricBody::polytope(std::move(f)), origin(1)) ==
              static_cast<std::uint64_t>(2 * n + 1));
    }
}

TEST_CASE("random ellipsoids agree with the brute-force oracle") {
    for (std::size_t d = 1; d <= 4; ++d) {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const SymmetricBody body = random_rational_ellipsoid(d, seed * 131 + d, 20, 3000);
            RatVec center(d, Rat(0));
            if (seed % 2 == 1) center[0] = Rat(1, 2); // shifted case
            const LatticePointSet pts = enumerate_lattice(body, center);
            const std::vector<IntVec> oracle = brute_force_lattice(body, center);
            REQUIRE(pts.size() == oracle.size());
            for (std::size_t i = 0; i < oracle.size(); ++i) {
                const auto got = pts.point(i);
                CHECK(std::equal(got.begin(), got.end(), oracle[i].begin()));
            }
        }
    }
}

TEST_CASE("random polytopes agree with the brute-force oracle") {
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const SymmetricBody body =
                random_rational_polytope(d, d + 1 + seed % 2, seed * 57 + d, 15, 2000);
            const LatticePointSet pts = enumerate_lattice(body, origin(d));
            const std::vector<IntVec> oracle = brute_force_lattice(body, origin(d));
            REQUIRE(pts.size() == oracle.size());
            for (std::size_t i = 0; i < oracle.size(); ++i) {
                const auto got = pts.point(i);
                CHECK(std::equal(got.begin(), got.end(), oracle[i].begin()));
            }
        }
    }
}

TEST_CASE("unimodular change of basis preserves the count") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const std::size_t d = 2 + seed % 3;
        const SymmetricBody body = random_rational_ellipsoid(d, seed * 19 + 5, 30, 2000);
        const RatMat u = random_unimodular(d, seed);
        const Rat du = det(u);
        REQUIRE((du == 1 || du == -1));
        const RatMat g2 = mat_mul(transpose(u), mat_mul(body.gram(), u));
        CHECK(count_lattice(body, origin(d)) ==
              count_lattice(SymmetricBody::ellipsoid(g2), origin(d)));
    }
}

TEST_CASE("negation symmetry at center zero") {
    const SymmetricBody body = random_rational_ellipsoid(3, 77, 50, 2000);
    const LatticePointSet pts = enumerate_lattice(body, origin(3));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto p = pts.point(i);
        IntVec neg(3);
        for (std::size_t j = 0; j < 3; ++j) neg[j] = -p[j];
        CHECK(pts.contains(neg));
    }
}

TEST_CASE("count is monotone in the scale") {
    const SymmetricBody body = random_rational_polytope(2, 3, 4242, 10, 500);
    std::uint64_t prev = 0;
    for (long t = 1; t <= 8; ++t) {
        const std::uint64_t c = count_lattice(scale_body(body, make_rat(t, 2)), origin(2));
        CHECK(c >= prev);
        prev = c;
    }
}

TEST_CASE("higher dimensions stay exact") {
    SUBCASE("unit ball in d = 6") {
        const SymmetricBody ball = SymmetricBody::ellipsoid(RatMat::identity(6));
        CHECK(count_lattice(ball, origin(6)) == 13); // origin and the 12 signed units
    }
    SUBCASE("radius-2 ball in d = 5 against the grid oracle") {
        RatMat g = RatMat::identity(5);
        for (Rat& q : g.a) q /= 4;
        const SymmetricBody ball = SymmetricBody::ellipsoid(std::move(g));
        const LatticePointSet pts = enumerate_lattice(ball, origin(5));
        CHECK(pts.size() == brute_force_lattice(ball, origin(5)).size());
    }
    SUBCASE("skewed d = 5 ellipsoid against the grid oracle") {
        const SymmetricBody body = random_rational_ellipsoid(5, 777, 50, 4000);
        const LatticePointSet pts = enumerate_lattice(body, origin(5));
        const std::vector<IntVec> oracle = brute_force_lattice(body, origin(5));
        REQUIRE(pts.size() == oracle.size());
        for (std::size_t i = 0; i < oracle.size(); ++i) {
            const auto got = pts.point(i);
            CHECK(std::equal(got.begin(), got.end(), oracle[i].begin()));
        }
    }
}

TEST_CASE("truncation is loud and yields a lex prefix") {
    RatMat g = RatMat::identity(2);
    for (Rat& q : g.a) q /= 100;
    const SymmetricBody big = SymmetricBody::ellipsoid(std::move(g));

    const LatticePointSet full = enumerate_lattice(big, origin(2));
    REQUIRE_FALSE(full.truncated);
    REQUIRE(full.size() > 40);

    const LatticePointSet cut = enumerate_lattice(big, origin(2), 40);
    CHECK(cut.truncated);
    CHECK(cut.size() == 40);
    for (std::size_t i = 0; i < cut.size(); ++i) {
        const auto a = cut.point(i);
        const auto b = full.point(i);
        CHECK(std::equal(a.begin(), a.end(), b.begin()));
    }
    CHECK_THROWS_AS(count_lattice(big, origin(2), 40), TruncationError);
}
