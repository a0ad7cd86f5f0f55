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

#include "progkit/errors.hpp"
#include "progkit/rng.hpp"
#include "progkit/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace progkit {

SymmetricBody::SymmetricBody(BodyKind k, std::size_t d, RatMat data)
    : kind_(k), dim_(d), data_(std::move(data)) {}

SymmetricBody SymmetricBody::ellipsoid(RatMat gram) {
    if (gram.rows == 0 || gram.rows != gram.cols)
        throw std::invalid_argument("ellipsoid: square Gram matrix of dim >= 1 required");
    if (!is_symmetric(gram)) throw std::invalid_argument("ellipsoid: Gram matrix not symmetric");
    if (!ldl(gram).positive_definite)
        throw std::invalid_argument("ellipsoid: Gram matrix not positive definite");
    const std::size_t d = gram.rows;
    return SymmetricBody(BodyKind::Ellipsoid, d, std::move(gram));
}

SymmetricBody SymmetricBody::polytope(RatMat forms) {
    if (forms.cols == 0 || forms.rows < forms.cols)
        throw std::invalid_argument("polytope: need k >= d >= 1 form rows");
    if (rank(forms) != forms.cols)
        throw std::invalid_argument("polytope: forms must have full column rank (bounded body)");
    const std::size_t d = forms.cols;
    return SymmetricBody(BodyKind::Polytope, d, std::move(forms));
}

const RatMat& SymmetricBody::gram() const {
    if (kind_ != BodyKind::Ellipsoid) throw std::logic_error("gram(): not an ellipsoid");
    return data_;
}

const RatMat& SymmetricBody::forms() const {
    if (kind_ != BodyKind::Polytope) throw std::logic_error("forms(): not a polytope");
    return data_;
}

bool SymmetricBody::is_axis_box() const {
    if (kind_ != BodyKind::Polytope) return false;
    for (std::size_t i = 0; i < data_.rows; ++i) {
        std::size_t nonzero = 0;
        for (std::size_t j = 0; j < data_.cols; ++j)
            if (data_(i, j) != 0) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

RatVec SymmetricBody::axis_box_radii() const {
    if (!is_axis_box()) throw std::logic_error("axis_box_radii(): not an axis box");
    RatVec best(dim_, Rat(0)); // max |coefficient| per axis
    for (std::size_t i = 0; i < data_.rows; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const Rat c = rat_abs(data_(i, j));
            if (c > best[j]) best[j] = c;
        }
    RatVec radii(dim_);
    for (std::size_t j = 0; j < dim_; ++j) radii[j] = Rat(1) / best[j]; // rank d: best > 0
    return radii;
}

bool SymmetricBody::operator==(const SymmetricBody& o) const {
    return kind_ == o.kind_ && dim_ == o.dim_ && data_ == o.data_;
}

std::strong_ordering gauge_compare(const SymmetricBody& body, std::span<const Rat> x,
                                   const Rat& t) {
    if (x.size() != body.dim()) throw std::invalid_argument("gauge_compare: dimension mismatch");
    if (t < 0) throw std::invalid_argument("gauge_compare: t must be nonnegative");
    if (body.kind() == BodyKind::Ellipsoid) return rat_cmp(quad_form(body.gram(), x), t * t);
    const RatMat& f = body.forms();
    Rat m(0);
    for (std::size_t i = 0; i < f.rows; ++i) {
        const Rat v = rat_abs(dot(f.row(i), x));
        if (v > m) m = v;
    }
    return rat_cmp(m, t);
}

Rat gauge_key(const SymmetricBody& body, std::span<const Rat> x) {
    if (x.size() != body.dim()) throw std::invalid_argument("gauge_key: dimension mismatch");
    if (body.kind() == BodyKind::Ellipsoid) return quad_form(body.gram(), x);
    const RatMat& f = body.forms();
    Rat m(0);
    for (std::size_t i = 0; i < f.rows; ++i) {
        const Rat v = rat_abs(dot(f.row(i), x));
        if (v > m) m = v;
    }
    return m;
}

Rat ellipsoid_support_sq(const SymmetricBody& body, const RatVec& u) {
    if (body.kind() != BodyKind::Ellipsoid)
        throw std::invalid_argument("ellipsoid_support_sq: ellipsoid required");
    return quad_form(inverse(body.gram()), u);
}

PolytopeSupport polytope_support(const SymmetricBody& body, const RatVec& u) {
    if (body.kind() != BodyKind::Polytope)
        throw std::invalid_argument("polytope_support: polytope required");
    if (u.size() != body.dim()) throw std::invalid_argument("polytope_support: dimension mismatch");
    if (vec_is_zero(u)) throw std::invalid_argument("polytope_support: zero direction");

    // max u.x over |<f_i, x>| <= 1, i.e. [F; -F] x <= 1; secondary objectives
    // pick the lexicographically smallest optimal vertex.
    const RatMat& f = body.forms();
    const std::size_t k = f.rows, d = f.cols;
    RatMat a(2 * k, d);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            a(i, j) = f(i, j);
            a(k + i, j) = -f(i, j);
        }
    RatVec b(2 * k, Rat(1));
    std::vector<RatVec> objectives;
    objectives.push_back(u);
    for (std::size_t j = 0; j < d; ++j) {
        RatVec e(d, Rat(0));
        e[j] = -1;
        objectives.push_back(std::move(e));
    }
    LexLpResult lp = lex_simplex(a, b, objectives);
    return {std::move(lp.point), std::move(lp.value)};
}

SupportPoint support_point(const SymmetricBody& body, const RatVec& u) {
    if (u.size() != body.dim()) throw std::invalid_argument("support_point: dimension mismatch");
    if (vec_is_zero(u)) throw std::invalid_argument("support_point: zero direction");
    SupportPoint sp;
    if (body.kind() == BodyKind::Ellipsoid) {
        const RatVec w = mat_vec(inverse(body.gram()), u);
        const double value = std::sqrt(to_double(dot(u, w)));
        sp.value = value;
        sp.point.resize(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) sp.point[i] = to_double(w[i]) / value;
        return sp;
    }
    PolytopeSupport ps = polytope_support(body, u);
    sp.value = to_double(ps.value);
    sp.point.resize(ps.vertex.size());
    for (std::size_t i = 0; i < ps.vertex.size(); ++i) sp.point[i] = to_double(ps.vertex[i]);
    return sp;
}

SymmetricBody scale_body(const SymmetricBody& body, const Rat& t) {
    if (t <= 0) throw std::invalid_argument("scale_body: t must be positive");
    if (body.kind() == BodyKind::Ellipsoid) {
        RatMat g = body.gram();
        const Rat t2 = t * t;
        for (Rat& q : g.a) q /= t2;
        return SymmetricBody::ellipsoid(std::move(g));
    }
    RatMat f = body.forms();
    for (Rat& q : f.a) q /= t;
    return SymmetricBody::polytope(std::move(f));
}

double unit_ball_volume(std::size_t d) {
    if (d == 0) return 1.0;
    if (d == 1) return 2.0;
    double prev2 = 1.0, prev1 = 2.0;
    for (std::size_t k = 2; k <= d; ++k) {
        const double cur = prev2 * 2.0 * M_PI / static_cast<double>(k);
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

namespace {

double outward(double r) {
    return std::nextafter(r * (1.0 + 1e-12), std::numeric_limits<double>::infinity());
}

} // namespace

AxisBound axis_bound_exact(const SymmetricBody& body, std::size_t axis) {
    if (axis >= body.dim()) throw std::invalid_argument("axis_bound_exact: axis out of range");
    if (body.kind() == BodyKind::Ellipsoid) {
        const RatMat inv = inverse(body.gram());
        return {inv(axis, axis), true};
    }
    RatVec e(body.dim(), Rat(0));
    e[axis] = 1;
    return {polytope_support(body, e).value, false};
}

std::vector<double> bounding_box(const SymmetricBody& body) {
    std::vector<double> radii(body.dim());
    if (body.kind() == BodyKind::Ellipsoid) {
        const RatMat inv = inverse(body.gram());
        for (std::size_t i = 0; i < body.dim(); ++i)
            radii[i] = outward(std::sqrt(to_double(inv(i, i))));
        return radii;
    }
    for (std::size_t i = 0; i < body.dim(); ++i) {
        RatVec e(body.dim(), Rat(0));
        e[i] = 1;
        radii[i] = outward(to_double(polytope_support(body, e).value));
    }
    return radii;
}

std::vector<RatVec> polytope_vertices(const SymmetricBody& body) {
    const RatMat& f = body.forms();
    const std::size_t k = f.rows, d = f.cols;
    std::vector<RatVec> verts;

    std::vector<std::size_t> idx(d);
    // iterate over d-subsets of the k form rows
    std::vector<std::size_t> comb(d);
    for (std::size_t i = 0; i < d; ++i) comb[i] = i;
    const auto next_comb = [&]() -> bool {
        std::size_t i = d;
        while (i-- > 0) {
            if (comb[i] != i + k - d) {
                ++comb[i];
                for (std::size_t j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    do {
        RatMat sub(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) sub(i, j) = f(comb[i], j);
        RatMat inv;
        try {
            inv = inverse(sub);
        } catch (const std::invalid_argument&) {
            continue; // dependent rows, no vertex here
        }
        for (std::uint64_t signs = 0; signs < (1ull << d); ++signs) {
            RatVec rhs(d);
            for (std::size_t i = 0; i < d; ++i) rhs[i] = (signs >> i) & 1 ? Rat(-1) : Rat(1);
            RatVec x = mat_vec(inv, rhs);
            bool feasible = true;
            for (std::size_t i = 0; i < k && feasible; ++i)
                if (rat_abs(dot(f.row(i), x)) > 1) feasible = false;
            if (feasible) verts.push_back(std::move(x));
        }
    } while (next_comb());

    std::sort(verts.begin(), verts.end(), lex_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

VolumeEstimate volume(const SymmetricBody& body, std::uint64_t mc_samples, std::uint64_t seed) {
    VolumeEstimate v;
    if (body.kind() == BodyKind::Ellipsoid) {
        v.value = unit_ball_volume(body.dim()) / std::sqrt(to_double(det(body.gram())));
        return v;
    }
    if (body.is_axis_box()) {
        Rat prod(1);
        for (const Rat& r : body.axis_box_radii()) prod *= 2 * r;
        v.value = to_double(prod);
        return v;
    }
    if (body.forms().rows == body.dim()) {
        // parallelotope {|Fx| <= 1} = F^-1 [-1,1]^d, volume 2^d / |det F|
        Rat pow2(1);
        for (std::size_t i = 0; i < body.dim(); ++i) pow2 *= 2;
        v.value = to_double(pow2 / rat_abs(det(body.forms())));
        return v;
    }
    if (mc_samples == 0)
        throw std::invalid_argument("volume: general polytope needs mc_samples > 0");

    const std::size_t d = body.dim();
    const std::vector<double> box = bounding_box(body);
    double box_vol = 1.0;
    for (double r : box) box_vol *= 2.0 * r;

    // double-precision form rows for the hot rejection loop
    const RatMat& f = body.forms();
    DMat fd = to_dmat(f);
    const CounterRng rng(seed, 0x76f01ull);
    std::uint64_t hits = 0;
    std::vector<double> x(d);
    for (std::uint64_t i = 0; i < mc_samples; ++i) {
        for (std::size_t j = 0; j < d; ++j)
            x[j] = rng.uniform(i * d + j, -box[j], box[j]);
        bool inside = true;
        for (std::size_t r = 0; r < fd.rows && inside; ++r) {
            double s = 0.0;
            for (std::size_t j = 0; j < d; ++j) s += fd(r, j) * x[j];
            if (std::fabs(s) > 1.0) inside = false;
        }
        hits += inside;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(mc_samples);
    v.value = box_vol * p;
    v.std_error = box_vol * std::sqrt(p * (1.0 - p) / static_cast<double>(mc_samples));
    v.method = VolumeMethod::MonteCarlo;
    v.samples = mc_samples;
    return v;
}

} // namespace progkit
