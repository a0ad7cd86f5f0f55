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
#include <stdexcept>

namespace progkit {

namespace {

// Proportionality factor alpha with gram_b == alpha * gram_c, if any.
std::optional<Rat> gram_ratio(const RatMat& gc, const RatMat& gb) {
    Rat alpha(0);
    for (std::size_t i = 0; i < gc.a.size(); ++i) {
        if (gc.a[i] == 0) {
            if (gb.a[i] != 0) return std::nullopt;
            continue;
        }
        const Rat r = gb.a[i] / gc.a[i];
        if (alpha == 0) alpha = r;
        else if (r != alpha) return std::nullopt;
    }
    if (alpha <= 0) return std::nullopt;
    return alpha;
}

int quadrant(const Rat& x, const Rat& y) {
    // counterclockwise from the positive x axis; origin never queried
    if (x > 0 && y >= 0) return 0;
    if (x <= 0 && y > 0) return 1;
    if (x < 0 && y <= 0) return 2;
    return 3;
}

Rat cross2(const RatVec& a, const RatVec& b) { return a[0] * b[1] - a[1] * b[0]; }

// CCW polar order around the origin (inside the symmetric polygon).
bool angle_less(const RatVec& a, const RatVec& b) {
    const int qa = quadrant(a[0], a[1]), qb = quadrant(b[0], b[1]);
    if (qa != qb) return qa < qb;
    const Rat c = cross2(a, b);
    if (c != 0) return c > 0;
    // collinear: nearer point first (harmless for convex-position input)
    return a[0] * a[0] + a[1] * a[1] < b[0] * b[0] + b[1] * b[1];
}

// Exact Minkowski sum of two convex polygons given by their vertices
// (convex position, origin interior); returns the sum's vertices in CCW
// order by the classic edge merge.
std::vector<RatVec> polygon_sum(std::vector<RatVec> p, std::vector<RatVec> q) {
    std::sort(p.begin(), p.end(), angle_less);
    std::sort(q.begin(), q.end(), angle_less);

    const auto bottom = [](const std::vector<RatVec>& poly) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < poly.size(); ++i) {
            const int c = cmp(poly[i][1], poly[best][1]);
            if (c < 0 || (c == 0 && poly[i][0] > poly[best][0])) best = i;
        }
        return best;
    };
    const std::size_t n = p.size(), m = q.size();
    std::size_t i0 = bottom(p), j0 = bottom(q);

    std::vector<RatVec> out;
    std::size_t i = 0, j = 0;
    while (i < n || j < m) {
        const RatVec& pv = p[(i0 + i) % n];
        const RatVec& qv = q[(j0 + j) % m];
        out.push_back(vec_add(pv, qv));
        if (i == n) {
            ++j;
            continue;
        }
        if (j == m) {
            ++i;
            continue;
        }
        const RatVec ep = vec_sub(p[(i0 + i + 1) % n], pv);
        const RatVec eq = vec_sub(q[(j0 + j + 1) % m], qv);
        const Rat c = cross2(ep, eq);
        if (c > 0) ++i;
        else if (c < 0) ++j;
        else {
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

MinkowskiSum::MinkowskiSum(const SymmetricBody& c, double t1, const SymmetricBody& b, double t2) {
    if (c.dim() != b.dim()) throw std::invalid_argument("minkowski: dimension mismatch");
    if (!(t1 > 0.0) || !(t2 > 0.0)) throw std::invalid_argument("minkowski: scales must be positive");
    dim_ = c.dim();

    const auto box_of = [](const SymmetricBody& body) {
        std::vector<double> r(body.dim());
        if (body.kind() == BodyKind::Ellipsoid) {
            const RatMat inv = inverse(body.gram());
            for (std::size_t i = 0; i < body.dim(); ++i) r[i] = std::sqrt(to_double(inv(i, i)));
        } else {
            for (std::size_t i = 0; i < body.dim(); ++i) {
                RatVec e(body.dim(), Rat(0));
                e[i] = 1;
                r[i] = to_double(polytope_support(body, e).value);
            }
        }
        return r;
    };
    const std::vector<double> rc = box_of(c), rb = box_of(b);
    box_radius_.resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        box_radius_[i] = std::nextafter((t1 * rc[i] + t2 * rb[i]) * (1.0 + 1e-12),
                                        std::numeric_limits<double>::infinity());

    // exact closed form: two axis boxes sum to the box of summed radii
    if (c.is_axis_box() && b.is_axis_box()) {
        path_ = Path::BoxBox;
        const RatVec rrc = c.axis_box_radii(), rrb = b.axis_box_radii();
        box_sum_radii_.resize(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            box_sum_radii_[i] =
                to_double(rat_from_double(t1) * rrc[i] + rat_from_double(t2) * rrb[i]);
        return;
    }

    // exact closed form: proportional ellipsoids sum to a scaled ellipsoid
    if (c.kind() == BodyKind::Ellipsoid && b.kind() == BodyKind::Ellipsoid) {
        if (auto alpha = gram_ratio(c.gram(), b.gram())) {
            path_ = Path::ScaledEllipsoid;
            gram_c_ = to_dmat(c.gram());
            scaled_radius_ = t1 + t2 / std::sqrt(to_double(*alpha));
            return;
        }
    }

    // exact planar case: polygon edge merge
    if (dim_ == 2 && c.kind() == BodyKind::Polytope && b.kind() == BodyKind::Polytope) {
        path_ = Path::PolygonSum;
        const Rat rt1 = rat_from_double(t1), rt2 = rat_from_double(t2);
        std::vector<RatVec> pv = polytope_vertices(c), qv = polytope_vertices(b);
        for (RatVec& v : pv) v = vec_scale(v, rt1);
        for (RatVec& v : qv) v = vec_scale(v, rt2);
        const std::vector<RatVec> sum = polygon_sum(std::move(pv), std::move(qv));
        const std::size_t n = sum.size();
        for (std::size_t i = 0; i < n; ++i) {
            const RatVec& v0 = sum[i];
            const RatVec& v1 = sum[(i + 1) % n];
            const Rat ex = v1[0] - v0[0], ey = v1[1] - v0[1];
            if (ex == 0 && ey == 0) continue;
            const Rat a = ey, bb = -ex;           // outward normal for CCW boundary
            const Rat rhs = a * v0[0] + bb * v0[1];
            if (rhs <= 0) throw InternalError("polygon_sum: origin not interior");
            hull_forms_.push_back({to_double(a / rhs), to_double(bb / rhs)});
        }
        return;
    }

    // both polytopes, d >= 3: exact rational LP on (y, tau), minimizing the
    // B-gauge of x - y over y in t1*C. A subgradient scheme can stall on
    // this doubly polyhedral case, so it gets the exact treatment instead.
    if (c.kind() == BodyKind::Polytope && b.kind() == BodyKind::Polytope) {
        path_ = Path::ExactLp;
        const Rat rt1 = rat_from_double(t1), rt2 = rat_from_double(t2);
        lp_c_forms_ = c.forms();
        for (Rat& q : lp_c_forms_.a) q /= rt1;
        lp_b_forms_ = b.forms();
        for (Rat& q : lp_b_forms_.a) q /= rt2;
        // the constraint matrix over (y, tau) is query-independent
        const std::size_t kc = lp_c_forms_.rows, kb = lp_b_forms_.rows;
        lp_matrix_ = RatMat(2 * kc + 2 * kb, dim_ + 1);
        for (std::size_t i = 0; i < kc; ++i)
            for (std::size_t jj = 0; jj < dim_; ++jj) {
                lp_matrix_(i, jj) = lp_c_forms_(i, jj);
                lp_matrix_(kc + i, jj) = -lp_c_forms_(i, jj);
            }
        for (std::size_t j = 0; j < kb; ++j) {
            for (std::size_t jj = 0; jj < dim_; ++jj) {
                lp_matrix_(2 * kc + j, jj) = lp_b_forms_(j, jj);
                lp_matrix_(2 * kc + kb + j, jj) = -lp_b_forms_(j, jj);
            }
            lp_matrix_(2 * kc + j, dim_) = -1;
            lp_matrix_(2 * kc + kb + j, dim_) = -1;
        }
        return;
    }

    // remaining cases have an ellipsoid: Frank-Wolfe with the ellipsoid
    // supplying the smooth gauge and the other body the support-oracle domain
    path_ = Path::FrankWolfe;
    budget_ = static_cast<int>(200 * dim_);

    const SymmetricBody* dom_body = &c;
    double dom_t = t1;
    const SymmetricBody* gauge_body = &b;
    double gauge_t = t2;
    if (b.kind() == BodyKind::Polytope && c.kind() == BodyKind::Ellipsoid) {
        std::swap(dom_body, gauge_body);
        std::swap(dom_t, gauge_t);
    }

    const auto fill = [](FwBody& fb, const SymmetricBody& body, double t) {
        fb.scale = t;
        if (body.kind() == BodyKind::Ellipsoid) {
            fb.ellipsoid = true;
            // gauge data for t*body: gram / t^2; support data: t^2 * gram^-1
            fb.gram = to_dmat(body.gram());
            for (double& v : fb.gram.a) v /= t * t;
            fb.gram_inv = fb.gram;
            if (!dmat_invert(fb.gram_inv)) throw InternalError("minkowski: singular Gram");
        } else {
            fb.ellipsoid = false;
            const std::vector<RatVec> verts = polytope_vertices(body);
            for (const RatVec& v : verts) {
                std::vector<double> w(v.size());
                for (std::size_t i = 0; i < v.size(); ++i) w[i] = to_double(v[i]) * t;
                fb.vertices.push_back(std::move(w));
            }
        }
    };
    fill(domain_, *dom_body, dom_t);
    fill(gauge_, *gauge_body, gauge_t);
}

// Exact minimum of gauge_{t2 B}(x - y) over y in t1 C, both polytopes: the
// epigraph LP min tau s.t. |Fc y| <= 1, |Fb (x - y)| <= tau, started from
// the strictly interior point (y, tau) = (0, tau0) via variable translation
// so the slack basis is immediately feasible.
bool MinkowskiSum::lp_contains(std::span<const double> x, double tol) const {
    const std::size_t d = dim_;
    const std::size_t kc = lp_c_forms_.rows, kb = lp_b_forms_.rows;

    RatVec xr(d);
    for (std::size_t i = 0; i < d; ++i) xr[i] = rat_from_double(x[i]);

    // sound shortcut: inside either summand alone means inside the sum
    const auto inside = [&](const RatMat& forms) {
        for (std::size_t r = 0; r < forms.rows; ++r)
            if (rat_abs(dot(forms.row(r), xr)) > 1) return false;
        return true;
    };
    if (inside(lp_c_forms_) || inside(lp_b_forms_)) return true;

    RatVec bx(kb); // Fb x
    for (std::size_t j = 0; j < kb; ++j) bx[j] = dot(lp_b_forms_.row(j), xr);
    Rat tau0(1);
    for (std::size_t j = 0; j < kb; ++j) {
        const Rat m = rat_abs(bx[j]) + 1;
        if (m > tau0) tau0 = m;
    }

    // variables z = (y, tau - tau0); only the right-hand side is per-query
    RatVec rhs(2 * kc + 2 * kb, Rat(1));
    for (std::size_t j = 0; j < kb; ++j) {
        rhs[2 * kc + j] = bx[j] + tau0;      // Fb y - tau <= Fb x, shifted by tau0
        rhs[2 * kc + kb + j] = tau0 - bx[j]; // -Fb y - tau <= -Fb x, shifted
    }

    RatVec objective(d + 1, Rat(0));
    objective[d] = -1; // maximize -tau
    const LexLpResult lp = lex_simplex(lp_matrix_, rhs, {objective});
    const Rat gauge = lp.point[d] + tau0; // forms were pre-scaled: tau is the gauge
    return gauge <= rat_from_double(1.0 + tol);
}

namespace {

double vdot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<double> matv(const DMat& m, std::span<const double> x) {
    std::vector<double> r(m.rows, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r[i] += m(i, j) * x[j];
    return r;
}

} // namespace

bool MinkowskiSum::fw_contains(std::span<const double> x, double tol) const {
    const std::size_t d = dim_;

    // support of the domain body in direction u, and its value
    const auto dom_support = [&](std::span<const double> u, std::vector<double>& s) -> double {
        if (domain_.ellipsoid) {
            const std::vector<double> w = matv(domain_.gram_inv, u);
            const double val = std::sqrt(std::max(vdot(u, w), 0.0));
            if (val <= 0.0) {
                std::fill(s.begin(), s.end(), 0.0);
                return 0.0;
            }
            for (std::size_t i = 0; i < d; ++i) s[i] = w[i] / val;
            return val;
        }
        double best = -std::numeric_limits<double>::infinity();
        const std::vector<double>* arg = nullptr;
        for (const auto& v : domain_.vertices) {
            const double t = vdot(u, v);
            if (t > best) {
                best = t;
                arg = &v;
            }
        }
        std::copy(arg->begin(), arg->end(), s.begin());
        return best;
    };

    // gauge of the residual w.r.t. the (ellipsoid) gauge body, plus the
    // oracle direction u maximizing <u, .>
    const auto gauge_val = [&](std::span<const double> v, std::vector<double>& u) -> double {
        const std::vector<double> gv = matv(gauge_.gram, v);
        std::copy(gv.begin(), gv.end(), u.begin());
        return std::sqrt(std::max(vdot(v, gv), 0.0));
    };

    const auto gauge_support = [&](std::span<const double> u) -> double {
        const std::vector<double> w = matv(gauge_.gram_inv, u);
        return std::sqrt(std::max(vdot(u, w), 0.0));
    };

    std::vector<double> y(d, 0.0), v(d), u(d), s(d), step(d);
    double achieved = std::numeric_limits<double>::infinity();

    for (int it = 0; it <= budget_; ++it) {
        for (std::size_t i = 0; i < d; ++i) v[i] = x[i] - y[i];
        const double g = gauge_val(v, u);
        achieved = std::min(achieved, g);
        if (achieved <= 1.0 + tol) return true;

        const double h_dom = dom_support(u, s);
        const double h_gauge = gauge_support(u);
        const double denom = h_dom + h_gauge;
        if (denom > 0.0) {
            const double lower = vdot(u, x) / denom;
            if (lower > 1.0 + tol) return false; // separating certificate
        }

        for (std::size_t i = 0; i < d; ++i) step[i] = s[i] - y[i];
        // exact line search on the quadratic (x - y - gamma*step)^T G (..)
        const std::vector<double> gs = matv(gauge_.gram, step);
        const double quad = vdot(step, gs);
        if (quad <= 0.0) break;
        const double gamma = std::clamp(vdot(v, gs) / quad, 0.0, 1.0);
        if (gamma <= 0.0) break; // no progress along the oracle direction
        for (std::size_t i = 0; i < d; ++i) y[i] += gamma * step[i];
    }
    return achieved <= 1.0 + tol;
}

bool MinkowskiSum::contains(std::span<const double> x, double tol) const {
    if (x.size() != dim_) throw std::invalid_argument("minkowski contains: dimension mismatch");
    if (!(tol > 0.0)) throw std::invalid_argument("minkowski contains: tol must be positive");
    switch (path_) {
        case Path::BoxBox: {
            for (std::size_t i = 0; i < dim_; ++i)
                if (std::fabs(x[i]) > box_sum_radii_[i] * (1.0 + tol)) return false;
            return true;
        }
        case Path::ScaledEllipsoid: {
            const std::vector<double> gx = matv(gram_c_, x);
            return std::sqrt(std::max(vdot(x, gx), 0.0)) <= scaled_radius_ * (1.0 + tol);
        }
        case Path::PolygonSum: {
            for (const auto& form : hull_forms_)
                if (form[0] * x[0] + form[1] * x[1] > 1.0 + tol) return false;
            return true;
        }
        case Path::FrankWolfe:
            return fw_contains(x, tol);
        case Path::ExactLp:
            return lp_contains(x, tol);
    }
    return false;
}

bool minkowski_member(std::span<const double> x, const SymmetricBody& c, double t1,
                      const SymmetricBody& b, double t2, double tol) {
    const MinkowskiSum sum(c, t1, b, t2);
    return sum.contains(x, tol);
}

VolumeEstimate minkowski_volume_mc(const SymmetricBody& c, double t1, double t2,
                                   const SymmetricBody& b, std::uint64_t samples,
                                   std::uint64_t seed, double tol) {
    if (samples < 1000) throw std::invalid_argument("minkowski_volume_mc: samples >= 1000 required");
    const MinkowskiSum sum(c, t1, b, t2);
    const std::size_t d = sum.dim();
    const std::vector<double>& box = sum.box_radius();
    double box_vol = 1.0;
    for (double r : box) box_vol *= 2.0 * r;

    const CounterRng rng(seed, 0x3a11ull);
    std::uint64_t hits = 0;
    std::vector<double> x(d);
    for (std::uint64_t i = 0; i < samples; ++i) {
        for (std::size_t j = 0; j < d; ++j) x[j] = rng.uniform(i * d + j, -box[j], box[j]);
        hits += sum.contains(x, tol);
    }
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    VolumeEstimate v;
    v.value = box_vol * p;
    v.std_error = box_vol * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    v.method = VolumeMethod::MonteCarlo;
    v.samples = samples;
    return v;
}

} // namespace progkit
