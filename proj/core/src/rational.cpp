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

#include "progkit/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace progkit {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("malformed rational literal: " + s);
    }
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    Rat q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

Rat snap_dyadic(double x) {
    if (x == 0.0) return Rat(0);
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    int e = 0;
    const double m = std::frexp(x, &e); // x = m * 2^e, |m| in [0.5, 1)
    const long long mant = std::llround(std::ldexp(m, 48));
    Rat q(static_cast<long>(mant));
    const int shift = e - 48;
    Rat pow2(1);
    mpq_mul_2exp(pow2.get_mpq_t(), pow2.get_mpq_t(), static_cast<unsigned long>(std::abs(shift)));
    if (shift >= 0) q *= pow2;
    else q /= pow2;
    q.canonicalize();
    return q;
}

std::int64_t rat_floor_i64(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!f.fits_slong_p()) throw std::overflow_error("lattice coordinate out of int64 range");
    return f.get_si();
}

std::int64_t rat_ceil_i64(const Rat& q) {
    Int f;
    mpz_cdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!f.fits_slong_p()) throw std::overflow_error("lattice coordinate out of int64 range");
    return f.get_si();
}

bool lex_less(const RatVec& a, const RatVec& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

bool lex_less_i64(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec vec_add(std::span<const Rat> a, std::span<const Rat> b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: dimension mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec vec_sub(std::span<const Rat> a, std::span<const Rat> b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: dimension mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec vec_scale(std::span<const Rat> a, const Rat& t) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t;
    return r;
}

RatVec vec_neg(std::span<const Rat> a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool vec_is_zero(std::span<const Rat> a) {
    for (const Rat& q : a)
        if (q != 0) return false;
    return true;
}

std::string vec_to_string(std::span<const Rat> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(v[i]);
    }
    return s + ")";
}

} // namespace progkit
