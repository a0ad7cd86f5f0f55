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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace progkit {

// Exact rational scalar. Everything that decides membership, packing or
// covering runs on these; doubles are reserved for volumes and fitting.
using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<std::int64_t>;

/// Parse "p/q" or "p" (decimal integers, optional sign). Throws
/// std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

/// Canonical "p/q" form, denominator always present and positive.
std::string rat_to_string(const Rat& q);

inline double to_double(const Rat& q) { return q.get_d(); }

/// Exact conversion; every finite double is a dyadic rational.
Rat rat_from_double(double x);

/// Round to the nearest rational with 48 significant mantissa bits.
/// Relative error at most 2^-48; exact for zero.
Rat snap_dyadic(double x);

/// Canonicalized fraction. The two-argument mpq_class constructor does not
/// reduce, and non-canonical values break exact comparison, so every
/// num/den construction goes through here.
inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::strong_ordering rat_cmp(const Rat& a, const Rat& b) {
    const int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

/// Largest integer <= q and smallest integer >= q, as int64. Throws if the
/// result does not fit (desk-scale guard).
std::int64_t rat_floor_i64(const Rat& q);
std::int64_t rat_ceil_i64(const Rat& q);

// -- small exact-vector helpers ---------------------------------------------

bool lex_less(const RatVec& a, const RatVec& b);
bool lex_less_i64(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

Rat dot(std::span<const Rat> a, std::span<const Rat> b);
RatVec vec_add(std::span<const Rat> a, std::span<const Rat> b);
RatVec vec_sub(std::span<const Rat> a, std::span<const Rat> b);
RatVec vec_scale(std::span<const Rat> a, const Rat& t);
RatVec vec_neg(std::span<const Rat> a);
bool vec_is_zero(std::span<const Rat> a);

inline RatVec rat_vec_of(std::span<const std::int64_t> n) {
    RatVec v(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) v[i] = Rat(static_cast<long>(n[i]));
    return v;
}

std::string vec_to_string(std::span<const Rat> v);

} // namespace progkit
