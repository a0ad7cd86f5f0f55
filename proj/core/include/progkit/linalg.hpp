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

#pragma once

#include "progkit/rational.hpp"

#include <cstddef>
#include <vector>

namespace progkit {

/// Dense row-major matrix of exact rationals. Small: d stays in single
/// digits at desk scale, so no effort is spent on sparsity or blocking.
struct RatMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rat& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    std::span<const Rat> row(std::size_t i) const { return {a.data() + i * cols, cols}; }

    static RatMat identity(std::size_t n);
    bool operator==(const RatMat& o) const = default;
};

bool is_symmetric(const RatMat& m);

/// Exact LDL^T of a symmetric matrix, no pivoting. `positive_definite` is
/// true iff all pivots are > 0; on an indefinite or singular input the
/// factors are only valid up to the failing pivot.
struct LdlResult {
    bool positive_definite = false;
    std::vector<Rat> pivots;   // D
    RatMat unit_lower;         // L, unit diagonal
};
LdlResult ldl(const RatMat& sym);

Rat det(const RatMat& m);
RatMat inverse(const RatMat& m);     // throws std::invalid_argument if singular
std::size_t rank(const RatMat& m);
RatVec mat_vec(const RatMat& m, std::span<const Rat> x);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatMat transpose(const RatMat& m);

/// x^T M x for symmetric M.
Rat quad_form(const RatMat& m, std::span<const Rat> x);

// -- double-precision helpers for the floating paths -------------------------

struct DMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    DMat() = default;
    DMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

DMat to_dmat(const RatMat& m);

/// In-place Gauss-Jordan inverse with partial pivoting. Returns false when
/// the matrix is numerically singular.
bool dmat_invert(DMat& m);

double dmat_det(DMat m);

/// Cholesky factor (lower) of an SPD matrix in doubles; returns false if a
/// pivot is not positive. Used only for reporting gamma from a Gram matrix.
bool dmat_cholesky(const DMat& m, DMat& lower);

} // namespace progkit
