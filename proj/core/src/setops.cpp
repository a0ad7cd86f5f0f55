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

#include "progkit/setops.hpp"

#include "progkit/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace progkit {

FiniteSet sumset(const FiniteSet& a, const FiniteSet& b) {
    if (!(a.group() == b.group())) throw std::invalid_argument("sumset: group mismatch");
    const std::uint64_t pairs =
        static_cast<std::uint64_t>(a.size()) * static_cast<std::uint64_t>(b.size());
    if (pairs > 1'000'000'000ull) throw std::invalid_argument("sumset: |A|*|B| guard exceeded");

    std::vector<RatVec> sums;
    sums.reserve(pairs);
    for (const RatVec& x : a.elements())
        for (const RatVec& y : b.elements()) sums.push_back(vec_add(x, y));
    return FiniteSet::from_points(a.group(), std::move(sums));
}

Rat doubling_constant(const FiniteSet& a) {
    if (a.empty()) throw std::invalid_argument("doubling_constant: empty set");
    const FiniteSet aa = sumset(a, a);
    return Rat(static_cast<long>(aa.size())) / Rat(static_cast<long>(a.size()));
}

CoverResult verify_cover(const FiniteSet& a, const Progression& p, const FiniteSet& x,
                         std::uint64_t limit) {
    if (!(a.group() == p.frame.group) || !(a.group() == x.group()))
        throw std::invalid_argument("verify_cover: group mismatch");
    const FiniteSet image = image_set(p, limit).set;
    for (const RatVec& elem : a.elements()) {
        bool covered = false;
        for (const RatVec& t : x.elements()) {
            if (image.contains(vec_sub(elem, t))) {
                covered = true;
                break;
            }
        }
        if (!covered) return {false, elem};
    }
    return {true, std::nullopt};
}

FiniteSet greedy_cover(const FiniteSet& a, const Progression& p, std::uint64_t limit) {
    if (!(a.group() == p.frame.group)) throw std::invalid_argument("greedy_cover: group mismatch");
    const LatticePointSet pts = enumerate_lattice(p.body, p.center, limit);
    if (pts.truncated) throw TruncationError("greedy_cover: lattice enumeration exceeded limit");
    if (pts.size() == 0) throw std::invalid_argument("greedy_cover: empty progression image");

    // n*: the lattice point of minimal body gauge around the center, ties lex
    std::size_t best = 0;
    RatVec diff(p.body.dim());
    const auto key_of = [&](std::size_t i) {
        const auto n = pts.point(i);
        for (std::size_t j = 0; j < diff.size(); ++j)
            diff[j] = Rat(static_cast<long>(n[j])) - p.center[j];
        return gauge_key(p.body, diff);
    };
    Rat best_key = key_of(0);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Rat k = key_of(i);
        if (k < best_key) { // lex ties resolve to the earlier (lex-smaller) point
            best_key = k;
            best = i;
        }
    }
    const RatVec anchor = ev(p.frame, pts.point(best));

    std::vector<RatVec> image_pts;
    image_pts.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) image_pts.push_back(ev(p.frame, pts.point(i)));
    const FiniteSet image = FiniteSet::from_points(p.frame.group, std::move(image_pts));

    std::vector<bool> covered(a.size(), false);
    std::vector<RatVec> xs;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (covered[i]) continue;
        const RatVec x = vec_sub(a.elements()[i], anchor);
        // mark everything x + image reaches
        for (std::size_t j = i; j < a.size(); ++j) {
            if (covered[j]) continue;
            if (image.contains(vec_sub(a.elements()[j], x))) covered[j] = true;
        }
        xs.push_back(x);
    }
    return FiniteSet::from_points(a.group(), std::move(xs));
}

} // namespace progkit
