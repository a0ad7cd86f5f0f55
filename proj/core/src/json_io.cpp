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

#include <stdexcept>

namespace progkit {

using nlohmann::json;

namespace {

json rat_mat_to_json(const RatMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(rat_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMat rat_mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: array of rows expected");
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).size();
    RatMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = rat_from_string(row.at(c).get<std::string>());
    }
    return m;
}

} // namespace

json rat_vec_to_json(const RatVec& v) {
    json out = json::array();
    for (const Rat& q : v) out.push_back(rat_to_string(q));
    return out;
}

RatVec rat_vec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector: array expected");
    RatVec v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(rat_from_string(e.get<std::string>()));
    return v;
}

json body_to_json(const SymmetricBody& body) {
    json out;
    if (body.kind() == BodyKind::Ellipsoid) {
        out["type"] = "ellipsoid";
        out["gram"] = rat_mat_to_json(body.gram());
    } else {
        out["type"] = "polytope";
        out["forms"] = rat_mat_to_json(body.forms());
    }
    return out;
}

SymmetricBody body_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "ellipsoid") return SymmetricBody::ellipsoid(rat_mat_from_json(j.at("gram")));
    if (type == "polytope") return SymmetricBody::polytope(rat_mat_from_json(j.at("forms")));
    throw std::invalid_argument("body: unknown type " + type);
}

json set_to_json(const FiniteSet& s) {
    json out;
    out["m"] = s.group().m;
    json elems = json::array();
    for (const RatVec& p : s.elements()) elems.push_back(rat_vec_to_json(p));
    out["elements"] = std::move(elems);
    return out;
}

FiniteSet set_from_json(const json& j) {
    AmbientGroup g{j.at("m").get<std::size_t>(), CoordKind::Rational};
    std::vector<RatVec> pts;
    for (const auto& e : j.at("elements")) pts.push_back(rat_vec_from_json(e));
    return FiniteSet::from_points(g, std::move(pts));
}

namespace {

std::string kind_to_string(ProgressionKind k) {
    switch (k) {
        case ProgressionKind::Gap: return "gap";
        case ProgressionKind::Convex: return "convex";
        case ProgressionKind::Ellipsoid: return "ellipsoid";
        case ProgressionKind::Skew: return "skew";
    }
    return "convex";
}

ProgressionKind kind_from_string(const std::string& s) {
    if (s == "gap") return ProgressionKind::Gap;
    if (s == "convex") return ProgressionKind::Convex;
    if (s == "ellipsoid") return ProgressionKind::Ellipsoid;
    if (s == "skew") return ProgressionKind::Skew;
    throw std::invalid_argument("progression: unknown kind " + s);
}

} // namespace

json progression_to_json(const Progression& p) {
    json frame;
    frame["a0"] = rat_vec_to_json(p.frame.a0);
    json gens = json::array();
    for (const RatVec& g : p.frame.generators) gens.push_back(rat_vec_to_json(g));
    frame["gens"] = std::move(gens);

    json out;
    out["frame"] = std::move(frame);
    out["body"] = body_to_json(p.body);
    out["center"] = rat_vec_to_json(p.center);
    out["kind"] = kind_to_string(p.kind);
    return out;
}

Progression progression_from_json(const json& j) {
    const json& jf = j.at("frame");
    RatVec a0 = rat_vec_from_json(jf.at("a0"));
    std::vector<RatVec> gens;
    for (const auto& g : jf.at("gens")) gens.push_back(rat_vec_from_json(g));
    AmbientGroup group{a0.size(), CoordKind::Rational};
    Progression p{Frame{group, std::move(a0), std::move(gens)}, body_from_json(j.at("body")),
                  rat_vec_from_json(j.at("center")), kind_from_string(j.at("kind").get<std::string>())};
    p.validate();
    return p;
}

json pointset_to_json(const LatticePointSet& s) {
    json pts = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        json pt = json::array();
        for (std::int64_t v : s.point(i)) pt.push_back(v);
        pts.push_back(std::move(pt));
    }
    json out;
    out["points"] = std::move(pts);
    out["truncated"] = s.truncated;
    return out;
}

json volume_to_json(const VolumeEstimate& v) {
    json out;
    out["value"] = v.value;
    out["std_error"] = v.std_error;
    out["method"] = v.method == VolumeMethod::Exact ? "exact" : "monte_carlo";
    out["samples"] = v.samples;
    return out;
}

json covering_bound_to_json(const CoveringBound& cb) {
    json out;
    out["lhs"] = cb.lhs;
    out["rhs"] = cb.rhs;
    out["rhs_std_error"] = cb.rhs_std_error;
    out["ok"] = cb.ok;
    return out;
}

json rbm_to_json(const RbmResult& r) {
    json grid = json::array();
    for (const RbmPoint& p : r.grid) {
        json e;
        e["t1"] = p.t1;
        e["t2"] = p.t2;
        e["ratio"] = p.ratio;
        e["error"] = p.error;
        grid.push_back(std::move(e));
    }
    json out;
    out["grid"] = std::move(grid);
    out["max_ratio"] = r.max_ratio;
    out["max_ratio_error"] = r.max_ratio_error;
    return out;
}

json transfer_report_to_json(const TransferReport& r) {
    json out;
    out["verified"] = r.verified;
    out["surrogate"] = body_to_json(r.surrogate);
    out["p_prime"] = progression_to_json(r.p_prime);
    out["x_prime"] = set_to_json(r.x_prime);

    const auto int_list = [](const std::vector<IntVec>& vs) {
        json arr = json::array();
        for (const IntVec& v : vs) {
            json pt = json::array();
            for (std::int64_t c : v) pt.push_back(c);
            arr.push_back(std::move(pt));
        }
        return arr;
    };
    out["Y"] = int_list(r.y);
    out["Z"] = int_list(r.z);

    json counts;
    counts["c_lattice"] = r.counts.c_lattice;
    counts["c_lattice_origin"] = r.counts.c_lattice_origin;
    counts["b_lattice"] = r.counts.b_lattice;
    counts["y"] = r.counts.y;
    counts["z"] = r.counts.z;
    counts["x"] = r.counts.x;
    counts["x_prime"] = r.counts.x_prime;
    out["counts"] = std::move(counts);

    json ratios;
    ratios["b_over_c"] = rat_to_string(r.count_ratio);
    ratios["bound_y"] = covering_bound_to_json(r.bound_y);
    ratios["bound_z"] = covering_bound_to_json(r.bound_z);
    out["ratios"] = std::move(ratios);

    if (r.rbm) out["rbm"] = rbm_to_json(*r.rbm);
    if (!r.failures.empty()) out["failures"] = r.failures;
    return out;
}

} // namespace progkit
