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

#include "progkit/simplex.hpp"

#include "progkit/errors.hpp"

#include <stdexcept>

namespace progkit {

namespace {

// First nonzero entry positive?
bool lex_positive(std::span<const Rat> v) {
    for (const Rat& q : v) {
        if (q > 0) return true;
        if (q < 0) return false;
    }
    return false;
}

} // namespace

LexLpResult lex_simplex(const RatMat& a, const RatVec& b, const std::vector<RatVec>& objectives) {
    const std::size_t m = a.rows;
    const std::size_t d = a.cols;
    if (b.size() != m) throw std::invalid_argument("lex_simplex: rhs size mismatch");
    if (objectives.empty()) throw std::invalid_argument("lex_simplex: no objective");
    for (const RatVec& c : objectives)
        if (c.size() != d) throw std::invalid_argument("lex_simplex: objective size mismatch");
    for (const Rat& bi : b)
        if (bi <= 0) throw std::invalid_argument("lex_simplex: requires b > 0");

    const std::size_t ncols = 2 * d + m; // x+, x-, slacks
    const std::size_t nobj = objectives.size();

    // Constraint tableau [A, -A, I | b], slack basis (feasible since b > 0).
    RatMat t(m, ncols + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            t(i, j) = a(i, j);
            t(i, d + j) = -a(i, j);
        }
        t(i, 2 * d + i) = 1;
        t(i, ncols) = b[i];
    }
    // Reduced-cost rows (maximization: improving columns have lex-positive cost).
    RatMat z(nobj, ncols);
    for (std::size_t r = 0; r < nobj; ++r)
        for (std::size_t j = 0; j < d; ++j) {
            z(r, j) = objectives[r][j];
            z(r, d + j) = -objectives[r][j];
        }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = 2 * d + i;
    std::vector<bool> is_basic(ncols, false);
    for (std::size_t j : basis) is_basic[j] = true;

    RatVec cost_col(nobj);
    const std::size_t iter_cap = 100000;
    for (std::size_t iter = 0;; ++iter) {
        if (iter >= iter_cap) throw InternalError("lex_simplex: iteration cap exceeded");

        // Bland: smallest-index entering column with lex-positive reduced cost.
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (is_basic[j]) continue;
            for (std::size_t r = 0; r < nobj; ++r) cost_col[r] = z(r, j);
            if (lex_positive(cost_col)) {
                enter = j;
                break;
            }
        }
        if (enter == ncols) break; // optimal

        // Ratio test; ties resolved by smallest basic variable index (Bland).
        std::size_t leave = m;
        Rat best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t(i, enter) <= 0) continue;
            Rat ratio = t(i, ncols) / t(i, enter);
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) throw InternalError("lex_simplex: unbounded (rank invariant violated)");

        // Pivot.
        const Rat piv = t(leave, enter);
        for (std::size_t j = 0; j <= ncols; ++j) t(leave, j) /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t(i, enter) == 0) continue;
            const Rat f = t(i, enter);
            for (std::size_t j = 0; j <= ncols; ++j) t(i, j) -= f * t(leave, j);
        }
        for (std::size_t r = 0; r < nobj; ++r) {
            if (z(r, enter) == 0) continue;
            const Rat f = z(r, enter);
            for (std::size_t j = 0; j < ncols; ++j) z(r, j) -= f * t(leave, j);
        }
        is_basic[basis[leave]] = false;
        is_basic[enter] = true;
        basis[leave] = enter;
    }

    RatVec xplus(d, Rat(0)), xminus(d, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < d) xplus[basis[i]] = t(i, ncols);
        else if (basis[i] < 2 * d) xminus[basis[i] - d] = t(i, ncols);
    }
    LexLpResult res;
    res.point.resize(d);
    for (std::size_t j = 0; j < d; ++j) res.point[j] = xplus[j] - xminus[j];
    res.value = dot(objectives[0], res.point);
    return res;
}

} // namespace progkit
