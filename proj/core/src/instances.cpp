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

#include "progkit/instances.hpp"

#include "progkit/errors.hpp"
#include "progkit/rng.hpp"
#include "progkit/setops.hpp"

#include <cmath>
#include <stdexcept>

namespace progkit {

namespace {

FiniteSet singleton_zero(AmbientGroup g) {
    return FiniteSet::from_points(g, {RatVec(g.m, Rat(0))});
}

void assert_cover(const Instance& inst, std::uint64_t limit) {
    const CoverResult r = verify_cover(inst.a, inst.p, inst.x, limit);
    if (!r.ok) throw InternalError("instance generator produced a non-covering triple");
}

} // namespace

Instance make_ap(std::uint64_t n, const Rat& step, const Rat& base) {
    if (n < 1) throw std::invalid_argument("make_ap: N must be >= 1");
    AmbientGroup g{1, step.get_den() == 1 && base.get_den() == 1 ? CoordKind::Integer
                                                                 : CoordKind::Rational};
    Frame frame{g, {base}, {{step}}};
    Instance inst{FiniteSet(g), gap_to_convex({n}, frame), singleton_zero(g)};
    inst.a = image_set(inst.p).set;
    assert_cover(inst, kDefaultLatticeLimit);
    return inst;
}

Instance make_gap(const Frame& frame, const std::vector<std::uint64_t>& lengths,
                  std::uint64_t limit) {
    Instance inst{FiniteSet(frame.group), gap_to_convex(lengths, frame),
                  singleton_zero(frame.group)};
    inst.a = image_set(inst.p, limit).set;
    assert_cover(inst, limit);
    return inst;
}

Progression make_random_convex_progression(std::size_t d, std::size_t k, std::uint64_t seed,
                                           double scale, std::uint64_t count_lo,
                                           std::uint64_t count_hi, std::uint64_t limit) {
    if (d < 1 || k < d) throw std::invalid_argument("make_random_convex_progression: need k >= d >= 1");
    if (count_lo < 1 || count_hi <= count_lo)
        throw std::invalid_argument("make_random_convex_progression: bad count range");

    const CounterRng rng(seed, 0x9e0);

    // full-rank random rational forms
    RatMat forms(k, d);
    std::uint64_t ctr = 0;
    for (int attempt = 0; attempt < 64; ++attempt) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const long num = rng.uniform_int(ctr++, -9, 9);
                const long den = rng.uniform_int(ctr++, 1, 3);
                forms(i, j) = make_rat(num, den);
            }
        if (rank(forms) == d) break;
        if (attempt == 63)
            throw std::runtime_error("make_random_convex_progression: resample budget exhausted");
    }

    const RatVec origin(d, Rat(0));
    const auto count_at = [&](const Rat& s) -> std::uint64_t {
        RatMat f = forms;
        for (Rat& q : f.a) q /= s;
        const LatticePointSet pts =
            enumerate_lattice(SymmetricBody::polytope(std::move(f)), origin,
                              std::min<std::uint64_t>(limit, count_hi + 1));
        if (pts.truncated) return count_hi + 1; // "too many"
        return pts.size();
    };

    // bracket then bisect: the count is monotone in the scale
    Rat s = snap_dyadic(scale > 0.0 ? scale : 1.0);
    std::uint64_t c = count_at(s);
    int guard = 0;
    Rat lo = s, hi = s;
    while (c < count_lo && guard++ < 80) {
        s *= 2;
        c = count_at(s);
        hi = s;
    }
    while (c > count_hi && guard++ < 80) {
        s /= 2;
        c = count_at(s);
        lo = s;
    }
    while ((c < count_lo || c > count_hi) && guard++ < 160) {
        if (c < count_lo) lo = s;
        else hi = s;
        if (lo == hi) break;
        if (lo > hi) std::swap(lo, hi);
        s = (lo + hi) / 2;
        c = count_at(s);
    }
    if (c < count_lo || c > count_hi)
        throw std::runtime_error("make_random_convex_progression: scale search failed");

    RatMat scaled = forms;
    for (Rat& q : scaled.a) q /= s;

    AmbientGroup g{d, CoordKind::Integer};
    Frame frame{g, RatVec(d, Rat(0)), {}};
    frame.generators.resize(d, RatVec(d, Rat(0)));
    for (std::size_t i = 0; i < d; ++i) frame.generators[i][i] = 1;

    Progression p{frame, SymmetricBody::polytope(std::move(scaled)), origin,
                  k == d ? ProgressionKind::Skew : ProgressionKind::Convex};
    p.validate();
    return p;
}

LovettRegevInstance make_lovett_regev(std::size_t m, double r, std::int64_t entry_bound,
                                      std::uint64_t seed, std::uint64_t limit) {
    if (m < 1) throw std::invalid_argument("make_lovett_regev: m must be >= 1");
    if (!(r > 0.0)) throw std::invalid_argument("make_lovett_regev: R must be positive");
    if (entry_bound < 1) throw std::invalid_argument("make_lovett_regev: entry bound must be >= 1");

    const CounterRng rng(seed, 0x17e6);
    RatMat basis(m, m);
    std::uint64_t ctr = 0;
    bool ok = false;
    for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                basis(i, j) = Rat(rng.uniform_int(ctr++, -entry_bound, entry_bound));
        ok = det(basis) != 0;
    }
    if (!ok) throw std::runtime_error("make_lovett_regev: singular basis after 100 resamples");

    // rational rescale to covolume about 1
    const double det_abs = std::fabs(to_double(det(basis)));
    const Rat s = snap_dyadic(std::pow(det_abs, 1.0 / static_cast<double>(m)));
    for (Rat& q : basis.a) q /= s;

    // gram for ||M n||_2 <= R:  n^T (M^T M / R^2) n <= 1
    const Rat r2 = rat_from_double(r) * rat_from_double(r);
    RatMat gram = mat_mul(transpose(basis), basis);
    for (Rat& q : gram.a) q /= r2;

    AmbientGroup g{m, CoordKind::Rational};
    Frame frame{g, RatVec(m, Rat(0)), {}};
    frame.generators.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        RatVec col(m);
        for (std::size_t i = 0; i < m; ++i) col[i] = basis(i, j);
        frame.generators[j] = std::move(col);
    }

    Progression p{frame, SymmetricBody::ellipsoid(std::move(gram)), RatVec(m, Rat(0)),
                  ProgressionKind::Ellipsoid};
    p.validate();

    LovettRegevInstance inst{image_set(p, limit).set, std::move(p), basis, r};
    const CoverResult cover = verify_cover(inst.a, inst.p_exact, singleton_zero(g), limit);
    if (!cover.ok) throw InternalError("make_lovett_regev: exact progression does not cover A");
    return inst;
}

LovettRegevInstance make_lovett_regev_sized(std::size_t m, std::uint64_t size_lo,
                                            std::uint64_t size_hi, std::int64_t entry_bound,
                                            std::uint64_t seed, std::uint64_t limit) {
    if (size_lo < 1 || size_hi <= size_lo)
        throw std::invalid_argument("make_lovett_regev_sized: bad size range");
    // covolume is about 1, so |A| ~ omega_m R^m
    const double mid = 0.5 * (static_cast<double>(size_lo) + static_cast<double>(size_hi));
    double r = std::pow(mid / unit_ball_volume(m), 1.0 / static_cast<double>(m));
    double lo = 0.0, hi = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
        LovettRegevInstance inst = make_lovett_regev(m, r, entry_bound, seed, limit);
        const std::uint64_t n = inst.a.size();
        if (n >= size_lo && n <= size_hi) return inst;
        if (n < size_lo) {
            lo = r;
            r = hi > 0.0 ? 0.5 * (r + hi) : r * 1.5;
        } else {
            hi = r;
            r = lo > 0.0 ? 0.5 * (r + lo) : r / 1.5;
        }
    }
    throw std::runtime_error("make_lovett_regev_sized: radius search failed");
}

} // namespace progkit
