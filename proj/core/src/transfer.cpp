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

#include "progkit/transfer.hpp"

#include "progkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace progkit {

namespace {

// Denominator-cleared gauge comparisons against 1 for integer vectors; the
// packing loops run millions of these.
struct IntGauge {
    bool ellipsoid = false;
    std::size_t d = 0;
    std::vector<Int> num;     // ellipsoid: d*d scaled Gram; polytope: k*d scaled forms
    Int den;                  // ellipsoid threshold
    std::vector<Int> row_den; // polytope per-row thresholds
    std::size_t k = 0;

    explicit IntGauge(const SymmetricBody& body) : d(body.dim()) {
        if (body.kind() == BodyKind::Ellipsoid) {
            ellipsoid = true;
            const RatMat& g = body.gram();
            Int l(1);
            for (const Rat& q : g.a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
            num.resize(d * d);
            for (std::size_t i = 0; i < d * d; ++i) {
                Rat scaled = g.a[i] * Rat(l);
                num[i] = scaled.get_num(); // exact: l clears every denominator
            }
            den = l;
        } else {
            const RatMat& f = body.forms();
            k = f.rows;
            num.resize(k * d);
            row_den.resize(k);
            for (std::size_t r = 0; r < k; ++r) {
                Int l(1);
                for (std::size_t j = 0; j < d; ++j)
                    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f(r, j).get_den().get_mpz_t());
                for (std::size_t j = 0; j < d; ++j) {
                    Rat scaled = f(r, j) * Rat(l);
                    num[r * d + j] = scaled.get_num();
                }
                row_den[r] = l;
            }
        }
    }

    // sign of gauge(v) - 1: negative, zero, positive
    int compare_one(std::span<const std::int64_t> v) const {
        if (ellipsoid) {
            Int s(0);
            for (std::size_t i = 0; i < d; ++i) {
                if (v[i] == 0) continue;
                Int row(0);
                for (std::size_t j = 0; j < d; ++j) {
                    if (v[j] == 0) continue;
                    row += num[i * d + j] * static_cast<long>(v[j]);
                }
                s += row * static_cast<long>(v[i]);
            }
            return cmp(s, den);
        }
        bool any_eq = false;
        for (std::size_t r = 0; r < k; ++r) {
            Int s(0);
            for (std::size_t j = 0; j < d; ++j) {
                if (v[j] == 0) continue;
                s += num[r * d + j] * static_cast<long>(v[j]);
            }
            const int c = cmp(abs(s), row_den[r]);
            if (c > 0) return 1;
            if (c == 0) any_eq = true;
        }
        return any_eq ? 0 : -1;
    }

    // exact ordering key: the squared gauge (ellipsoid) or max form ratio
    // (polytope), as a rational
    Rat key(std::span<const std::int64_t> v) const {
        if (ellipsoid) {
            Int s(0);
            for (std::size_t i = 0; i < d; ++i) {
                if (v[i] == 0) continue;
                Int row(0);
                for (std::size_t j = 0; j < d; ++j) {
                    if (v[j] == 0) continue;
                    row += num[i * d + j] * static_cast<long>(v[j]);
                }
                s += row * static_cast<long>(v[i]);
            }
            return Rat(s) / Rat(den);
        }
        Rat best(0);
        for (std::size_t r = 0; r < k; ++r) {
            Int s(0);
            for (std::size_t j = 0; j < d; ++j) {
                if (v[j] == 0) continue;
                s += num[r * d + j] * static_cast<long>(v[j]);
            }
            Rat val = Rat(abs(s)) / Rat(row_den[r]);
            if (val > best) best = val;
        }
        return best;
    }
};

IntVec diff(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    IntVec v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] - b[i];
    return v;
}

} // namespace

std::vector<IntVec> greedy_packing(const LatticePointSet& points, const SymmetricBody& b) {
    if (points.truncated) throw TruncationError("greedy_packing: input point set is truncated");
    if (points.dim != b.dim()) throw std::invalid_argument("greedy_packing: dimension mismatch");

    const IntGauge gauge(b);
    const std::size_t n = points.size();

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::vector<Rat> keys(n);
    for (std::size_t i = 0; i < n; ++i) keys[i] = gauge.key(points.point(i));
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const int c = cmp(keys[i], keys[j]);
        if (c != 0) return c < 0;
        return lex_less_i64(points.point(i), points.point(j));
    });

    std::vector<IntVec> y;
    for (std::size_t oi = 0; oi < n; ++oi) {
        const auto cand = points.point(order[oi]);
        bool ok = true;
        for (const IntVec& acc : y) {
            // interior-disjoint half-translates: reject only strictly inside
            if (gauge.compare_one(diff(cand, acc)) < 0) {
                ok = false;
                break;
            }
        }
        if (ok) y.emplace_back(cand.begin(), cand.end());
    }
    return y;
}

bool verify_packing_covering(const LatticePointSet& points, const SymmetricBody& b,
                             const std::vector<IntVec>& y) {
    if (points.dim != b.dim()) throw std::invalid_argument("verify_packing_covering: dimension mismatch");
    const IntGauge gauge(b);

    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = i + 1; j < y.size(); ++j)
            if (gauge.compare_one(diff(y[i], y[j])) < 0) return false;

    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto x = points.point(i);
        bool covered = false;
        for (const IntVec& acc : y) {
            if (gauge.compare_one(diff(x, acc)) <= 0) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

CoveringBound covering_bound_check(const SymmetricBody& c, const SymmetricBody& b,
                                   std::size_t y_count, std::uint64_t samples,
                                   std::uint64_t seed, double tol) {
    if (c.dim() != b.dim()) throw std::invalid_argument("covering_bound_check: dimension mismatch");
    const VolumeEstimate numer = minkowski_volume_mc(c, 1.0, 0.5, b, samples, seed, tol);
    const VolumeEstimate denom = volume(scale_body(b, Rat(1, 2)), samples, seed + 1);

    CoveringBound out;
    out.lhs = y_count;
    out.rhs = numer.value / denom.value;
    double rel = 0.0;
    if (numer.value > 0.0) rel += (numer.std_error / numer.value) * (numer.std_error / numer.value);
    if (denom.value > 0.0) rel += (denom.std_error / denom.value) * (denom.std_error / denom.value);
    out.rhs_std_error = out.rhs * std::sqrt(rel);
    out.ok = static_cast<double>(out.lhs) <= out.rhs + 3.0 * out.rhs_std_error;
    return out;
}

RbmResult rbm_ratio(const SymmetricBody& c, const SymmetricBody& b,
                    const std::vector<std::pair<double, double>>& t_grid,
                    std::uint64_t samples, std::uint64_t seed, double tol) {
    if (c.dim() != b.dim()) throw std::invalid_argument("rbm_ratio: dimension mismatch");
    if (t_grid.empty()) throw std::invalid_argument("rbm_ratio: empty grid");
    const double dd = static_cast<double>(c.dim());

    const VolumeEstimate vc = volume(c, samples, seed + 101);
    const VolumeEstimate vb = volume(b, samples, seed + 102);
    if (std::fabs(vc.value - vb.value) > 1e-3 * std::max(vc.value, vb.value))
        throw std::invalid_argument("rbm_ratio: vol(C) and vol(B) differ beyond 1e-3 relative");
    const double v = vc.value;
    const double v_rel = vc.value > 0.0 && vc.std_error > 0.0 ? vc.std_error / (dd * vc.value) : 0.0;

    RbmResult out;
    std::size_t grid_index = 0;
    for (const auto& [t1, t2] : t_grid) {
        if (!(t1 > 0.0) || !(t2 > 0.0))
            throw std::invalid_argument("rbm_ratio: grid scales must be positive");
        const VolumeEstimate mv = minkowski_volume_mc(c, t1, t2, b, samples, seed + grid_index, tol);
        RbmPoint pt;
        pt.t1 = t1;
        pt.t2 = t2;
        pt.ratio = std::pow(mv.value, 1.0 / dd) / ((t1 + t2) * std::pow(v, 1.0 / dd));
        const double mv_rel = mv.value > 0.0 ? mv.std_error / (dd * mv.value) : 0.0;
        pt.error = pt.ratio * std::sqrt(mv_rel * mv_rel + v_rel * v_rel);
        out.grid.push_back(pt);
        ++grid_index;
    }
    const auto best = std::max_element(out.grid.begin(), out.grid.end(),
                                       [](const RbmPoint& a, const RbmPoint& b2) {
                                           return a.ratio < b2.ratio;
                                       });
    out.max_ratio = best->ratio;
    out.max_ratio_error = best->error;
    return out;
}

SurrogateChoice select_surrogate(const SymmetricBody& c, const LatticePointSet& c_points,
                                 std::uint64_t mc_samples, std::uint64_t seed,
                                 std::uint64_t limit, double fit_eps) {
    if (c_points.truncated) throw TruncationError("select_surrogate: C point set is truncated");
    const std::vector<SymmetricBody> candidates =
        candidate_ellipsoids(c, c_points, mc_samples, seed, fit_eps);

    std::optional<SurrogateChoice> best;
    std::uint64_t best_score = 0;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        LatticePointSet b_pts = enumerate_lattice(candidates[idx], RatVec(c.dim(), Rat(0)), limit);
        if (b_pts.truncated) continue; // this candidate is too fat to enumerate; skip it
        std::vector<IntVec> y = greedy_packing(c_points, candidates[idx]);
        std::vector<IntVec> z = greedy_packing(b_pts, c);
        const std::uint64_t score =
            static_cast<std::uint64_t>(y.size()) * static_cast<std::uint64_t>(z.size());
        const bool better =
            !best || score < best_score ||
            (score == best_score && y.size() < best->y.size());
        if (better) {
            best_score = score;
            best = SurrogateChoice{candidates[idx], std::move(y), std::move(z), std::move(b_pts), idx};
        }
    }
    if (!best) throw TruncationError("select_surrogate: every candidate enumeration truncated");
    return std::move(*best);
}

TransferReport transfer_pipeline(const FiniteSet& a, const Progression& p, const FiniteSet& x,
                                 const TransferConfig& cfg) {
    p.validate();
    if (!(a.group() == p.frame.group) || !(a.group() == x.group()))
        throw std::invalid_argument("transfer_pipeline: group mismatch");

    // precondition: X must cover A through P
    {
        const CoverResult pre = verify_cover(a, p, x, cfg.limit);
        if (!pre.ok)
            throw CoverError("transfer_pipeline: A is not covered by P + X",
                             vec_to_string(*pre.witness));
    }

    const std::size_t d = p.rank();
    const RatVec origin(d, Rat(0));

    LatticePointSet c_pts = enumerate_lattice(p.body, p.center, cfg.limit);
    if (c_pts.truncated) throw TruncationError("transfer_pipeline: C enumeration exceeded limit");

    const bool centered = vec_is_zero(p.center);
    LatticePointSet c_origin_pts =
        centered ? c_pts : enumerate_lattice(p.body, origin, cfg.limit);
    if (c_origin_pts.truncated)
        throw TruncationError("transfer_pipeline: origin C enumeration exceeded limit");

    SurrogateChoice choice =
        select_surrogate(p.body, c_pts, cfg.mc_samples, cfg.seed, cfg.limit, cfg.fit_eps);

    // P' keeps the frame but gets the surrogate body around the origin: the
    // covering decomposition x = y + m produces m in B (not B + center), so
    // an origin-centered P' is what makes A inside P' + X' exact.
    Progression p_prime{p.frame, choice.body, origin, ProgressionKind::Ellipsoid};
    p_prime.validate();

    // X' = X + { a . y : y in Y }, the frame's linear part only
    Frame linear = p.frame;
    linear.a0.assign(linear.group.m, Rat(0));
    std::vector<RatVec> y_images;
    y_images.reserve(choice.y.size());
    for (const IntVec& yv : choice.y) y_images.push_back(ev(linear, yv));
    const FiniteSet y_set = FiniteSet::from_points(a.group(), std::move(y_images));
    const FiniteSet x_prime = sumset(x, y_set);

    TransferReport rep{choice.body,
                       choice.y,
                       choice.z,
                       std::move(p_prime),
                       x_prime,
                       {},
                       Rat(0),
                       {},
                       {},
                       std::nullopt,
                       false,
                       {}};

    rep.counts.c_lattice = c_pts.size();
    rep.counts.c_lattice_origin = c_origin_pts.size();
    rep.counts.b_lattice = choice.b_points.size();
    rep.counts.y = choice.y.size();
    rep.counts.z = choice.z.size();
    rep.counts.x = x.size();
    rep.counts.x_prime = x_prime.size();
    rep.count_ratio = Rat(static_cast<long>(rep.counts.b_lattice)) /
                      Rat(static_cast<long>(rep.counts.c_lattice));

    // exact verification chain
    std::vector<std::string> failures;
    if (!verify_packing_covering(c_pts, choice.body, choice.y))
        failures.push_back("packing/covering of C-points by Y with body B failed");
    if (!verify_packing_covering(choice.b_points, p.body, choice.z))
        failures.push_back("packing/covering of B-points by Z with body C failed");

    // literal subset checks via point-set membership
    for (std::size_t i = 0; i < c_pts.size() && failures.empty(); ++i) {
        const auto pt = c_pts.point(i);
        bool hit = false;
        for (const IntVec& yv : choice.y) {
            if (choice.b_points.contains(diff(pt, yv))) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            failures.push_back("C lattice point not in Y + (B lattice)");
            break;
        }
    }
    for (std::size_t i = 0; i < choice.b_points.size() && failures.empty(); ++i) {
        const auto pt = choice.b_points.point(i);
        bool hit = false;
        for (const IntVec& zv : choice.z) {
            if (c_origin_pts.contains(diff(pt, zv))) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            failures.push_back("B lattice point not in Z + (C lattice)");
            break;
        }
    }

    const CoverResult cover = verify_cover(a, rep.p_prime, x_prime, cfg.limit);
    if (!cover.ok)
        failures.push_back("A not covered by P' + X'; witness " + vec_to_string(*cover.witness));

    if (rep.counts.x_prime > rep.counts.x * rep.counts.y)
        failures.push_back("|X'| <= |X| |Y| violated");
    if (rep.counts.b_lattice > rep.counts.z * rep.counts.c_lattice_origin)
        failures.push_back("|B lattice| <= |Z| |C lattice| violated");

    rep.bound_y = covering_bound_check(p.body, choice.body, choice.y.size(), cfg.mc_samples,
                                       cfg.seed + 7, cfg.tol);
    rep.bound_z = covering_bound_check(choice.body, p.body, choice.z.size(), cfg.mc_samples,
                                       cfg.seed + 8, cfg.tol);
    if (!cfg.t_grid.empty())
        rep.rbm = rbm_ratio(p.body, choice.body, cfg.t_grid, cfg.mc_samples, cfg.seed + 9, cfg.tol);

    rep.failures = std::move(failures);
    rep.verified = rep.failures.empty();
    return rep;
}

} // namespace progkit
