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

#include "progkit/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace progkit {

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool is_symmetric(const RatMat& m) {
    if (m.rows != m.cols) return false;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = i + 1; j < m.cols; ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

LdlResult ldl(const RatMat& sym) {
    const std::size_t n = sym.rows;
    LdlResult r;
    r.unit_lower = RatMat::identity(n);
    r.pivots.assign(n, Rat(0));
    RatMat w = sym; // working copy, lower triangle updated in place
    for (std::size_t j = 0; j < n; ++j) {
        Rat d = w(j, j);
        for (std::size_t k = 0; k < j; ++k)
            d -= r.unit_lower(j, k) * r.unit_lower(j, k) * r.pivots[k];
        r.pivots[j] = d;
        if (d <= 0) {
            r.positive_definite = false;
            return r;
        }
        for (std::size_t i = j + 1; i < n; ++i) {
            Rat v = w(i, j);
            for (std::size_t k = 0; k < j; ++k)
                v -= r.unit_lower(i, k) * r.unit_lower(j, k) * r.pivots[k];
            r.unit_lower(i, j) = v / d;
        }
    }
    r.positive_definite = true;
    return r;
}

namespace {

// Gaussian elimination with exact pivoting; returns (echelon, det, rank).
struct Echelon {
    RatMat m;
    Rat determinant;
    std::size_t rank = 0;
};

Echelon eliminate(RatMat m) {
    Echelon e{m, Rat(1), 0};
    const std::size_t rows = m.rows, cols = m.cols;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t piv = lead;
        while (piv < rows && e.m(piv, col) == 0) ++piv;
        if (piv == rows) {
            e.determinant = 0;
            continue;
        }
        if (piv != lead) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(e.m(piv, j), e.m(lead, j));
            e.determinant = -e.determinant;
        }
        e.determinant *= e.m(lead, col);
        for (std::size_t i = lead + 1; i < rows; ++i) {
            if (e.m(i, col) == 0) continue;
            const Rat f = e.m(i, col) / e.m(lead, col);
            for (std::size_t j = col; j < cols; ++j) e.m(i, j) -= f * e.m(lead, j);
        }
        ++lead;
        ++e.rank;
    }
    if (e.rank < std::min(rows, cols)) e.determinant = 0;
    return e;
}

} // namespace

Rat det(const RatMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: square matrix required");
    if (m.rows == 0) return Rat(1);
    return eliminate(m).determinant;
}

std::size_t rank(const RatMat& m) { return eliminate(m).rank; }

RatMat inverse(const RatMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse: square matrix required");
    const std::size_t n = m.rows;
    RatMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    // Gauss-Jordan
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug(piv, col) == 0) ++piv;
        if (piv == n) throw std::invalid_argument("inverse: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(col, j));
        const Rat p = aug(col, col);
        for (std::size_t j = 0; j < 2 * n; ++j) aug(col, j) /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug(i, col) == 0) continue;
            const Rat f = aug(i, col);
            for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(col, j);
        }
    }
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

RatVec mat_vec(const RatMat& m, std::span<const Rat> x) {
    if (m.cols != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    RatVec r(m.rows, Rat(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r[i] += m(i, j) * x[j];
    return r;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    RatMat r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

RatMat transpose(const RatMat& m) {
    RatMat t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

Rat quad_form(const RatMat& m, std::span<const Rat> x) {
    if (m.rows != m.cols || m.cols != x.size())
        throw std::invalid_argument("quad_form: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        // split diagonal and off-diagonal to halve the multiplies
        s += m(i, i) * x[i] * x[i];
        Rat row(0);
        for (std::size_t j = i + 1; j < m.cols; ++j) row += m(i, j) * x[j];
        s += 2 * row * x[i];
    }
    return s;
}

DMat to_dmat(const RatMat& m) {
    DMat d(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) d(i, j) = to_double(m(i, j));
    return d;
}

bool dmat_invert(DMat& m) {
    const std::size_t n = m.rows;
    if (n != m.cols) return false;
    DMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1.0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::fabs(aug(i, col)) > std::fabs(aug(piv, col))) piv = i;
        if (std::fabs(aug(piv, col)) < 1e-300) return false;
        if (piv != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(col, j));
        const double p = aug(col, col);
        for (std::size_t j = 0; j < 2 * n; ++j) aug(col, j) /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            const double f = aug(i, col);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(col, j);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = aug(i, n + j);
    return true;
}

double dmat_det(DMat m) {
    const std::size_t n = m.rows;
    double d = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::fabs(m(i, col)) > std::fabs(m(piv, col))) piv = i;
        if (m(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            const double f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

bool dmat_cholesky(const DMat& m, DMat& lower) {
    const std::size_t n = m.rows;
    lower = DMat(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k);
            if (i == j) {
                if (s <= 0.0) return false;
                lower(i, i) = std::sqrt(s);
            } else {
                lower(i, j) = s / lower(j, j);
            }
        }
    }
    return true;
}

} // namespace progkit
