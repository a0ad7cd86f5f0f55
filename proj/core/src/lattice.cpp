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

#include "progkit/lattice.hpp"

#include "progkit/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace progkit {

bool LatticePointSet::contains(std::span<const std::int64_t> p) const {
    if (p.size() != dim) return false;
    const std::size_t n = size();
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (lex_less_i64(point(mid), p)) lo = mid + 1;
        else hi = mid;
    }
    if (lo == n) return false;
    const auto q = point(lo);
    return std::equal(q.begin(), q.end(), p.begin());
}

namespace {

struct Sink {
    std::vector<std::int64_t>* out; // null when only counting
    std::uint64_t limit;
    std::uint64_t count = 0;
    bool truncated = false;

    bool emit(std::span<const std::int64_t> pt) {
        if (count >= limit) {
            truncated = true;
            return false;
        }
        ++count;
        if (out) out->insert(out->end(), pt.begin(), pt.end());
        return true;
    }
};

// Fincke-Pohst with coordinate 0 as the outer variable, so points stream in
// lexicographic order and a truncated run yields a lex prefix. The Gram
// matrix is factored in reversed index order to make the completed squares
// reference earlier coordinates only:
//   Q(x) = sum_g e_g * (y_g + sum_{h<g} w(g,h) y_h)^2,   y = x - center.
struct EllipsoidEnum {
    std::size_t d;
    std::vector<Rat> e;   // positive pivots, one per level
    RatMat w;             // strictly lower coefficients w(g,h), h < g
    RatVec center;
    Sink* sink;
    std::vector<std::int64_t> x;
    std::vector<Rat> y;   // x_g - center_g for fixed levels

    bool run() { return level(0, Rat(1)); }

    // rem = 1 - sum of completed terms above; exact.
    bool level(std::size_t g, const Rat& rem) {
        Rat lin(0);
        for (std::size_t h = 0; h < g; ++h) lin += w(g, h) * y[h];
        const Rat mid = center[g] - lin; // infeasible outside mid +- sqrt(rem/e_g)

        // The level constraint e_g (x - mid)^2 <= rem is minimized at mid and
        // monotone away from it, so walking outward from the adjacent
        // integers finds the exact range; no floating estimate involved.
        const auto feasible = [&](std::int64_t v) {
            const Rat t = Rat(static_cast<long>(v)) - mid;
            return e[g] * t * t <= rem;
        };
        const std::int64_t anchor = rat_floor_i64(mid);
        std::int64_t lo, hi;
        if (feasible(anchor)) {
            lo = hi = anchor;
        } else if (feasible(anchor + 1)) {
            lo = hi = anchor + 1;
        } else {
            return true; // no integer satisfies this level
        }
        while (feasible(lo - 1)) --lo;
        while (feasible(hi + 1)) ++hi;

        for (std::int64_t v = lo; v <= hi; ++v) {
            const Rat yv = Rat(static_cast<long>(v)) - center[g];
            const Rat dev = Rat(static_cast<long>(v)) - mid;
            const Rat term = e[g] * dev * dev;
            x[g] = v;
            if (g + 1 == d) {
                if (!sink->emit(x)) return false;
            } else {
                y[g] = yv;
                if (!level(g + 1, rem - term)) return false;
            }
        }
        return true;
    }
};

void enumerate_ellipsoid(const SymmetricBody& body, const RatVec& center, Sink& sink) {
    const std::size_t d = body.dim();
    const RatMat& g = body.gram();
    RatMat rev(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) rev(i, j) = g(d - 1 - i, d - 1 - j);
    const LdlResult f = ldl(rev);
    if (!f.positive_definite) throw std::invalid_argument("enumerate: Gram not positive definite");

    EllipsoidEnum en;
    en.d = d;
    en.e.resize(d);
    en.w = RatMat(d, d);
    for (std::size_t gidx = 0; gidx < d; ++gidx) {
        en.e[gidx] = f.pivots[d - 1 - gidx];
        for (std::size_t h = 0; h < gidx; ++h)
            en.w(gidx, h) = f.unit_lower(d - 1 - h, d - 1 - gidx);
    }
    en.center = center;
    en.sink = &sink;
    en.x.assign(d, 0);
    en.y.assign(d, Rat(0));
    en.run();
}

// Box scan for polytopes: exact per-axis ranges, incremental form values,
// and a tail bound prune so skewed bodies do not degenerate into a full
// box walk.
struct PolytopeEnum {
    std::size_t d, k;
    const RatMat* forms;
    RatVec center;
    std::vector<std::int64_t> lo, hi;
    RatMat tail_max;     // tail_max(j, g) = sum_{h >= g} |f(j,h)| * r_h
    Sink* sink;
    std::vector<std::int64_t> x;
    std::vector<Rat> partial; // per form, over fixed levels

    bool run() { return level(0); }

    bool level(std::size_t g) {
        for (std::int64_t v = lo[g]; v <= hi[g]; ++v) {
            x[g] = v;
            const Rat yv = Rat(static_cast<long>(v)) - center[g];
            bool viable = true;
            std::vector<Rat> next(k);
            for (std::size_t j = 0; j < k; ++j) {
                next[j] = partial[j] + (*forms)(j, g) * yv;
                if (g + 1 == d) {
                    if (rat_abs(next[j]) > 1) {
                        viable = false;
                        break;
                    }
                } else if (rat_abs(next[j]) > Rat(1) + tail_max(j, g + 1)) {
                    viable = false;
                    break;
                }
            }
            if (!viable) continue;
            if (g + 1 == d) {
                if (!sink->emit(x)) return false;
            } else {
                std::swap(partial, next);
                const bool ok = level(g + 1);
                std::swap(partial, next);
                if (!ok) return false;
            }
        }
        return true;
    }
};

void enumerate_polytope(const SymmetricBody& body, const RatVec& center, Sink& sink) {
    const std::size_t d = body.dim();
    const RatMat& f = body.forms();
    PolytopeEnum en;
    en.d = d;
    en.k = f.rows;
    en.forms = &f;
    en.center = center;
    en.sink = &sink;
    en.x.assign(d, 0);
    en.partial.assign(f.rows, Rat(0));
    en.lo.resize(d);
    en.hi.resize(d);
    RatVec radii(d);
    for (std::size_t g = 0; g < d; ++g) {
        RatVec e(d, Rat(0));
        e[g] = 1;
        radii[g] = polytope_support(body, e).value;
        en.lo[g] = rat_ceil_i64(center[g] - radii[g]);
        en.hi[g] = rat_floor_i64(center[g] + radii[g]);
    }
    en.tail_max = RatMat(f.rows, d + 1);
    for (std::size_t j = 0; j < f.rows; ++j) {
        en.tail_max(j, d) = 0;
        for (std::size_t g = d; g-- > 0;)
            en.tail_max(j, g) = en.tail_max(j, g + 1) + rat_abs(f(j, g)) * radii[g];
    }
    en.run();
}

} // namespace

LatticePointSet enumerate_lattice(const SymmetricBody& body, const RatVec& center,
                                  std::uint64_t limit) {
    if (center.size() != body.dim())
        throw std::invalid_argument("enumerate_lattice: center dimension mismatch");
    if (limit < 1) throw std::invalid_argument("enumerate_lattice: limit must be >= 1");

    LatticePointSet set;
    set.dim = body.dim();
    set.body = body;
    set.center = center;
    Sink sink{&set.flat, limit};
    if (body.kind() == BodyKind::Ellipsoid) enumerate_ellipsoid(body, center, sink);
    else enumerate_polytope(body, center, sink);
    set.truncated = sink.truncated;
    return set;
}

std::uint64_t count_lattice(const SymmetricBody& body, const RatVec& center,
                            std::uint64_t limit) {
    if (center.size() != body.dim())
        throw std::invalid_argument("count_lattice: center dimension mismatch");
    if (limit < 1) throw std::invalid_argument("count_lattice: limit must be >= 1");

    Sink sink{nullptr, limit};
    if (body.kind() == BodyKind::Ellipsoid) enumerate_ellipsoid(body, center, sink);
    else enumerate_polytope(body, center, sink);
    if (sink.truncated)
        throw TruncationError("count_lattice: enumeration exceeded limit " + std::to_string(limit));
    return sink.count;
}

} // namespace progkit
