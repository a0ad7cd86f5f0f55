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

#include "progkit/json_io.hpp"

#include "progkit/instances.hpp"
#include "progkit/rng.hpp"

#include <doctest.h>

using namespace progkit;
using nlohmann::json;

TEST_CASE("body JSON round trip and schema") {
    const SymmetricBody disk = SymmetricBody::ellipsoid(RatMat::identity(2));
    const json j = body_to_json(disk);
    CHECK(j["type"] == "ellipsoid");
    CHECK(j["gram"][0][0] == "1/1"); // rationals always travel as p/q strings
    CHECK(body_from_json(j) == disk);

    const json parsed = json::parse(
        R"({"type":"polytope","forms":[["1/2","0/1"],["0/1","1/1"]]})");
    const SymmetricBody box = body_from_json(parsed);
    CHECK(box.kind() == BodyKind::Polytope);
    CHECK(box.forms()(0, 0) == Rat(1, 2));
    CHECK(body_from_json(body_to_json(box)) == box);

    CHECK_THROWS_AS(body_from_json(json::parse(R"({"type":"torus"})")), std::invalid_argument);
    CHECK_THROWS_AS(
        body_from_json(json::parse(R"({"type":"ellipsoid","gram":[["1/1","0/1"],["0/1","-1/1"]]})")),
        std::invalid_argument);
}

TEST_CASE("set and progression round trips on random instances") {
    const CounterRng rng(3, 0);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        std::vector<RatVec> pts;
        for (int i = 0; i < 20; ++i)
            pts.push_back({make_rat(rng.uniform_int(seed * 64 + i * 2, -50, 50), 3),
                           make_rat(rng.uniform_int(seed * 64 + i * 2 + 1, -50, 50), 7)});
        const FiniteSet s = FiniteSet::from_points(AmbientGroup{2, CoordKind::Rational}, std::move(pts));
        CHECK(set_from_json(set_to_json(s)) == s);
    }

    const Instance inst = make_ap(6, Rat(2, 3), Rat(-1, 2));
    const json pj = progression_to_json(inst.p);
    CHECK(pj["kind"] == "gap");
    const Progression back = progression_from_json(pj);
    CHECK(back.body == inst.p.body);
    CHECK(back.center == inst.p.center);
    CHECK(back.frame.a0 == inst.p.frame.a0);
    CHECK(back.kind == inst.p.kind);
}

TEST_CASE("malformed rationals are rejected") {
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
    CHECK(rat_from_string("-3/6") == Rat(-1, 2));
    CHECK(rat_from_string("4") == Rat(4));
    CHECK(rat_to_string(Rat(-1, 2)) == "-1/2");
}

TEST_CASE("point set JSON carries the truncation flag") {
    const SymmetricBody disk = SymmetricBody::ellipsoid(RatMat::identity(2));
    const LatticePointSet pts = enumerate_lattice(disk, RatVec(2, Rat(0)));
    const json j = pointset_to_json(pts);
    CHECK(j["truncated"] == false);
    CHECK(j["points"].size() == 5);
}
