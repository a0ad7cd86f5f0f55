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

#include "progkit/progressions.hpp"

#include "progkit/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace progkit {

void Progression::validate() const {
    frame.validate();
    if (body.dim() != frame.rank())
        throw std::invalid_argument("Progression: body dimension must equal frame rank");
    if (center.size() != body.dim())
        throw std::invalid_argument("Progression: center dimension mismatch");
    switch (kind) {
        case ProgressionKind::Gap:
            if (!body.is_axis_box())
                throw std::invalid_argument("Progression: GAP kind needs axis-aligned box forms");
            break;
        case ProgressionKind::Convex:
            if (body.kind() != BodyKind::Polytope)
                throw std::invalid_argument("Progression: convex kind needs a polytope body");
            break;
        case ProgressionKind::Ellipsoid:
            if (body.kind() != BodyKind::Ellipsoid)
                throw std::invalid_argument("Progression: ellipsoid kind needs an ellipsoid body");
            break;
        case ProgressionKind::Skew:
            if (body.kind() != BodyKind::Polytope || body.forms().rows != body.dim())
                throw std::invalid_argument("Progression: skew kind needs exactly d forms");
            break;
    }
}

RatVec ev(const Frame& frame, std::span<const std::int64_t> n) {
    if (n.size() != frame.rank()) throw std::invalid_argument("ev: coefficient dimension mismatch");
    RatVec out = frame.a0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0) continue;
        const Rat c(static_cast<long>(n[i]));
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * frame.generators[i][j];
    }
    return out;
}

std::uint64_t progression_size(const Progression& p, std::uint64_t limit) {
    return count_lattice(p.body, p.center, limit);
}

ImageResult image_set(const Progression& p, std::uint64_t limit) {
    const LatticePointSet pts = enumerate_lattice(p.body, p.center, limit);
    if (pts.truncated)
        throw TruncationError("image_set: lattice enumeration exceeded limit");
    std::vector<RatVec> images;
    images.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) images.push_back(ev(p.frame, pts.point(i)));
    ImageResult r;
    r.size = pts.size();
    r.set = FiniteSet::from_points(p.frame.group, std::move(images));
    r.cardinality = r.set.size();
    r.improper = r.cardinality < r.size;
    return r;
}

Progression gap_to_convex(const std::vector<std::uint64_t>& lengths, const Frame& frame) {
    frame.validate();
    const std::size_t d = lengths.size();
    if (frame.rank() != d) throw std::invalid_argument("gap_to_convex: rank mismatch");
    for (std::uint64_t n : lengths)
        if (n < 1) throw std::invalid_argument("gap_to_convex: lengths must be >= 1");

    // box radii (N-1)/2 with center (N-1)/2 puts the lattice points at
    // {0,...,N-1}; a length-1 axis gets coefficient 2, pinning it to 0
    RatMat forms(d, d);
    RatVec center(d, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (lengths[i] == 1) {
            forms(i, i) = 2;
        } else {
            forms(i, i) = Rat(2) / Rat(static_cast<long>(lengths[i] - 1));
            center[i] = Rat(static_cast<long>(lengths[i] - 1)) / 2;
        }
    }
    Progression p{frame, SymmetricBody::polytope(std::move(forms)), std::move(center),
                  ProgressionKind::Gap};
    p.validate();
    return p;
}

double GaussianDensity::total_mass() const {
    double s = 0.0;
    for (const auto& [k, v] : weights) s += v;
    return s;
}

double GaussianDensity::l2_norm() const {
    double s = 0.0;
    for (const auto& [k, v] : weights) s += v * v;
    return std::sqrt(s);
}

GaussianDensity gaussian_density(const Frame& frame, const RatMat& gram, double tail_eps,
                                 std::uint64_t limit) {
    frame.validate();
    const std::size_t d = frame.rank();
    if (gram.rows != d || gram.cols != d)
        throw std::invalid_argument("gaussian_density: gram dimension mismatch");
    if (!is_symmetric(gram) || !ldl(gram).positive_definite)
        throw std::invalid_argument("gaussian_density: gram must be symmetric positive definite");
    if (!(tail_eps > 0.0)) throw std::invalid_argument("gaussian_density: tail_eps must be positive");

    // Certified lower bound on the smallest eigenvalue: G - lambda*I must
    // pass the exact positive-definiteness test.
    RatMat ginv_d = gram;
    DMat gd = to_dmat(gram);
    if (!dmat_invert(gd)) throw std::invalid_argument("gaussian_density: singular gram");
    double row_norm = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < d; ++j) s += std::fabs(gd(i, j));
        row_norm = std::max(row_norm, s);
    }
    double lambda = 0.9 / row_norm;
    const auto certified = [&](double lam) {
        RatMat shifted = gram;
        const Rat rl = rat_from_double(lam);
        for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= rl;
        return ldl(shifted).positive_definite;
    };
    for (int tries = 0; tries < 80 && !certified(lambda); ++tries) lambda *= 0.5;
    if (!certified(lambda))
        throw InternalError("gaussian_density: could not certify an eigenvalue floor");

    // Tail of the shell Q(n) > T:  exp(-Q) <= exp(-T/2) exp(-Q/2) and
    // sum exp(-Q/2) <= (1 + 2/(e^(lambda/2)-1))^d, summed over all of Z^d.
    const double theta_factor = 1.0 + 2.0 / std::expm1(lambda / 2.0);
    const auto dropped_bound = [&](double t) {
        return std::exp(-t / 2.0) * std::pow(theta_factor, static_cast<double>(d));
    };
    double t = std::max(std::log(1.0 / tail_eps) + d * std::log(static_cast<double>(d + 1)),
                        lambda);
    int grow = 0;
    while (dropped_bound(t) > tail_eps && grow++ < 64) t *= 2.0;
    if (dropped_bound(t) > tail_eps)
        throw InternalError("gaussian_density: truncation bound did not certify");

    // Enumerate the shell n^T gram n <= T exactly.
    RatMat shell = gram;
    const Rat rt = rat_from_double(t);
    for (Rat& q : shell.a) q /= rt;
    const SymmetricBody body = SymmetricBody::ellipsoid(std::move(shell));
    const LatticePointSet pts = enumerate_lattice(body, RatVec(d, Rat(0)), limit);
    if (pts.truncated) throw TruncationError("gaussian_density: shell enumeration exceeded limit");

    GaussianDensity out;
    out.truncation_bound = t;
    out.total_dropped = dropped_bound(t);
    RatVec nr(d);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto n = pts.point(i);
        for (std::size_t j = 0; j < d; ++j) nr[j] = Rat(static_cast<long>(n[j]));
        const double q = to_double(quad_form(gram, nr));
        out.weights[ev(frame, n)] += std::exp(-q);
    }
    return out;
}

double gaussian_correlation(const FiniteSet& a, const GaussianDensity& theta) {
    if (a.empty()) throw std::invalid_argument("gaussian_correlation: empty set");
    if (theta.weights.empty()) throw std::invalid_argument("gaussian_correlation: empty density");
    double hit = 0.0;
    for (const RatVec& p : a.elements()) {
        const auto it = theta.weights.find(p);
        if (it != theta.weights.end()) hit += it->second;
    }
    return hit / (theta.l2_norm() * std::sqrt(static_cast<double>(a.size())));
}

} // namespace progkit
