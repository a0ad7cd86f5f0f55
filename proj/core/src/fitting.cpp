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

#include "progkit/errors.hpp"
#include "progkit/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace progkit {

namespace {

// Snap a floating symmetric matrix to rationals (48 significant bits per
// entry) and re-verify positive definiteness, nudging the diagonal if the
// snap landed on a semidefinite edge.
RatMat snap_spd(const DMat& m) {
    const std::size_t d = m.rows;
    RatMat g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            const Rat q = snap_dyadic(0.5 * (m(i, j) + m(j, i)));
            g(i, j) = q;
            g(j, i) = q;
        }
    for (int tries = 0; tries < 4; ++tries) {
        if (ldl(g).positive_definite) return g;
        Rat trace(0);
        for (std::size_t i = 0; i < d; ++i) trace += g(i, i);
        const Rat ridge = trace / Rat(static_cast<long>(d)) / Rat(1099511627776L); // 2^-40
        for (std::size_t i = 0; i < d; ++i) g(i, i) += ridge;
    }
    throw InternalError("snap_spd: could not restore positive definiteness");
}

} // namespace

EllipsoidCandidate mvee(const std::vector<RatVec>& points, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("mvee: eps must be positive");
    if (points.empty()) throw std::invalid_argument("mvee: no points");
    const std::size_t d = points.front().size();

    // symmetrize and go to doubles
    std::vector<std::vector<double>> pts;
    pts.reserve(2 * points.size());
    for (const RatVec& p : points) {
        if (p.size() != d) throw std::invalid_argument("mvee: dimension mismatch");
        std::vector<double> v(d), w(d);
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = to_double(p[i]);
            w[i] = -v[i];
        }
        pts.push_back(std::move(v));
        pts.push_back(std::move(w));
    }
    const std::size_t n = pts.size();

    {
        RatMat stack(points.size(), d);
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = 0; j < d; ++j) stack(i, j) = points[i][j];
        if (rank(stack) != d) throw std::invalid_argument("mvee: points do not span R^d");
    }

    // Khachiyan ascent on the origin-centered problem: maximize
    // log det sum_i w_i p_i p_i^T; stop when max_i p_i^T M^-1 p_i <= d(1+eps).
    std::vector<double> w(n, 1.0 / static_cast<double>(n));
    DMat minv(d, d);
    const std::size_t iter_cap = 200000;
    for (std::size_t iter = 0;; ++iter) {
        if (iter >= iter_cap) throw InternalError("mvee: iteration cap exceeded");
        DMat m(d, d);
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] == 0.0) continue;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) m(r, c) += w[i] * pts[i][r] * pts[i][c];
        }
        minv = m;
        if (!dmat_invert(minv)) throw std::invalid_argument("mvee: degenerate moment matrix");

        double kmax = -1.0;
        std::size_t jmax = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double k = 0.0;
            for (std::size_t r = 0; r < d; ++r) {
                double row = 0.0;
                for (std::size_t c = 0; c < d; ++c) row += minv(r, c) * pts[i][c];
                k += pts[i][r] * row;
            }
            if (k > kmax) {
                kmax = k;
                jmax = i;
            }
        }
        const double dd = static_cast<double>(d);
        if (kmax <= dd * (1.0 + eps)) break;
        const double beta = (kmax - dd) / (dd * (kmax - 1.0));
        for (std::size_t i = 0; i < n; ++i) w[i] *= 1.0 - beta;
        w[jmax] += beta;
    }

    // Q = M^-1 / d contains all points with gauge^2 <= 1 + eps
    DMat q = minv;
    for (double& v : q.a) v /= static_cast<double>(d);
    EllipsoidCandidate cand{SymmetricBody::ellipsoid(snap_spd(q)), FitSource::Mvee, eps};
    return cand;
}

EllipsoidCandidate inertia_ellipsoid(const std::vector<std::vector<double>>& samples) {
    if (samples.empty()) throw std::invalid_argument("inertia_ellipsoid: no samples");
    const std::size_t d = samples.front().size();
    if (samples.size() < 10 * d * d)
        throw std::invalid_argument("inertia_ellipsoid: need at least 10 d^2 samples");

    DMat m(d, d);
    for (const auto& s : samples) {
        if (s.size() != d) throw std::invalid_argument("inertia_ellipsoid: dimension mismatch");
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) m(r, c) += s[r] * s[c];
    }
    for (double& v : m.a) v /= static_cast<double>(samples.size());
    if (!dmat_invert(m)) throw std::invalid_argument("inertia_ellipsoid: singular moment matrix");
    return {SymmetricBody::ellipsoid(snap_spd(m)), FitSource::Inertia, 0.0};
}

SymmetricBody equalize_volume(const EllipsoidCandidate& e, double target_vol) {
    if (!(target_vol > 0.0)) throw std::invalid_argument("equalize_volume: target must be positive");
    const RatMat& g = e.ellipsoid.gram();
    const std::size_t d = g.rows;
    // vol = omega_d / sqrt(det(s*G)) = omega_d / (s^(d/2) sqrt(det G))
    const double det_g = to_double(det(g));
    const double s = std::pow(unit_ball_volume(d) / (target_vol * std::sqrt(det_g)),
                              2.0 / static_cast<double>(d));
    const Rat sr = snap_dyadic(s);
    RatMat scaled = g;
    for (Rat& q : scaled.a) q *= sr;
    SymmetricBody out = SymmetricBody::ellipsoid(std::move(scaled));
    const double got = volume(out).value;
    if (std::fabs(got - target_vol) > 1e-9 * target_vol)
        throw InternalError("equalize_volume: snap failed the 1e-9 contract");
    return out;
}

namespace {

// Greedy choice of d linearly independent form rows (exact rank test); the
// parallelotope they cut contains the body and makes a rejection proposal
// whose acceptance rate does not collapse for skewed bodies the way an
// axis-aligned box does.
std::vector<std::size_t> independent_rows(const RatMat& forms) {
    const std::size_t d = forms.cols;
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < forms.rows && rows.size() < d; ++r) {
        RatMat trial(rows.size() + 1, d);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < d; ++j) trial(i, j) = forms(rows[i], j);
        for (std::size_t j = 0; j < d; ++j) trial(rows.size(), j) = forms(r, j);
        if (rank(trial) == rows.size() + 1) rows.push_back(r);
    }
    return rows;
}

} // namespace

std::vector<RatVec> uniform_sample(const SymmetricBody& body, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("uniform_sample: n must be >= 1");
    const std::size_t d = body.dim();

    // proposal: a linear image of the cube or ball that contains the body
    // snugly; map = columns act on the raw uniform/gaussian draw
    DMat map(d, d);
    bool ball_proposal = false;
    std::size_t reject_rows = 0;
    DMat extra_forms(0, 0);
    if (body.kind() == BodyKind::Ellipsoid) {
        // body = L^-T (unit ball) for gram = L L^T
        ball_proposal = true;
        DMat lower;
        if (!dmat_cholesky(to_dmat(body.gram()), lower))
            throw InternalError("uniform_sample: Gram lost positive definiteness in doubles");
        // invert the lower factor and transpose: map = L^-T
        DMat linv = lower;
        if (!dmat_invert(linv)) throw InternalError("uniform_sample: singular Cholesky factor");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) map(i, j) = linv(j, i);
    } else {
        const RatMat& f = body.forms();
        const std::vector<std::size_t> rows = independent_rows(f);
        RatMat sub(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) sub(i, j) = f(rows[i], j);
        map = to_dmat(inverse(sub)); // parallelotope {|sub x| <= 1} = sub^-1 [-1,1]^d
        reject_rows = f.rows - d;
        extra_forms = DMat(reject_rows, d);
        std::size_t out_row = 0;
        for (std::size_t r = 0; r < f.rows; ++r) {
            if (std::find(rows.begin(), rows.end(), r) != rows.end()) continue;
            for (std::size_t j = 0; j < d; ++j) extra_forms(out_row, j) = to_double(f(r, j));
            ++out_row;
        }
    }

    std::vector<RatVec> out;
    out.reserve(n);
    RatVec p(d);
    std::vector<double> raw(d), x(d);
    for (std::size_t slot = 0; slot < n; ++slot) {
        const CounterRng rng(seed, slot);
        const std::uint64_t stride = 2 * d + 2;
        for (std::uint64_t a = 0;; ++a) {
            if (a > 4'000'000)
                throw std::runtime_error("uniform_sample: acceptance rate below 1e-6");
            const std::uint64_t base = a * stride;
            if (ball_proposal) {
                // gaussian direction, radius U^(1/d): uniform in the ball
                double norm2 = 0.0;
                for (std::size_t j = 0; j < d; ++j) {
                    const double u1 = std::max(rng.uniform01(base + 2 * j), 1e-300);
                    const double u2 = rng.uniform01(base + 2 * j + 1);
                    raw[j] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
                    norm2 += raw[j] * raw[j];
                }
                const double r = std::pow(rng.uniform01(base + 2 * d), 1.0 / static_cast<double>(d));
                const double scale = norm2 > 0.0 ? r / std::sqrt(norm2) : 0.0;
                for (std::size_t j = 0; j < d; ++j) raw[j] *= scale;
            } else {
                for (std::size_t j = 0; j < d; ++j) raw[j] = rng.uniform(base + j, -1.0, 1.0);
            }
            for (std::size_t i = 0; i < d; ++i) {
                double s = 0.0;
                for (std::size_t j = 0; j < d; ++j) s += map(i, j) * raw[j];
                x[i] = s;
            }
            bool plausible = true;
            for (std::size_t r = 0; r < reject_rows && plausible; ++r) {
                double s = 0.0;
                for (std::size_t j = 0; j < d; ++j) s += extra_forms(r, j) * x[j];
                if (std::fabs(s) > 1.0) plausible = false;
            }
            if (!plausible) continue;
            for (std::size_t j = 0; j < d; ++j) p[j] = rat_from_double(x[j]);
            // the exact gate: floating boundary fuzz gets resampled
            if (gauge_compare(body, p, Rat(1)) != std::strong_ordering::greater) {
                out.push_back(p);
                break;
            }
        }
    }
    return out;
}

std::vector<SymmetricBody> candidate_ellipsoids(const SymmetricBody& c,
                                                const LatticePointSet& lattice_points,
                                                std::uint64_t mc_samples, std::uint64_t seed,
                                                double fit_eps) {
    const std::size_t d = c.dim();
    const double target = volume(c, mc_samples == 0 ? 100000 : mc_samples, seed).value;

    const std::size_t pool_n = std::max<std::size_t>(2000, 1000 * d);
    const std::vector<RatVec> pool = uniform_sample(c, pool_n, seed + 1);

    std::vector<SymmetricBody> out;

    // MVEE of lattice points plus hull proxies from the uniform pool
    {
        std::vector<RatVec> input;
        const std::size_t lat_n = lattice_points.size();
        const std::size_t lat_stride = lat_n > 4000 ? lat_n / 4000 + 1 : 1;
        for (std::size_t i = 0; i < lat_n; i += lat_stride)
            input.push_back(rat_vec_of(lattice_points.point(i)));
        for (std::size_t i = 0; i < std::min<std::size_t>(1000 * d, pool.size()); ++i)
            input.push_back(pool[i]);
        try {
            out.push_back(equalize_volume(mvee(input, fit_eps), target));
        } catch (const std::invalid_argument&) {
            // rank-deficient input: skip this candidate
        }
    }

    // inertia of the uniform pool
    {
        std::vector<std::vector<double>> dbl;
        dbl.reserve(pool.size());
        for (const RatVec& p : pool) {
            std::vector<double> v(d);
            for (std::size_t j = 0; j < d; ++j) v[j] = to_double(p[j]);
            dbl.push_back(std::move(v));
        }
        try {
            out.push_back(equalize_volume(inertia_ellipsoid(dbl), target));
        } catch (const std::invalid_argument&) {
        }
    }

    // inertia of the lattice points, when there are enough of them
    if (lattice_points.size() >= 10 * d * d) {
        std::vector<std::vector<double>> dbl;
        dbl.reserve(lattice_points.size());
        for (std::size_t i = 0; i < lattice_points.size(); ++i) {
            const auto pt = lattice_points.point(i);
            std::vector<double> v(d);
            for (std::size_t j = 0; j < d; ++j) v[j] = static_cast<double>(pt[j]);
            dbl.push_back(std::move(v));
        }
        try {
            out.push_back(equalize_volume(inertia_ellipsoid(dbl), target));
        } catch (const std::invalid_argument&) {
        }
    }

    if (out.empty()) throw InternalError("candidate_ellipsoids: every fitter failed");
    return out;
}

} // namespace progkit
