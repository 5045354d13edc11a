/*
 * Copyright 2026 the ghilb authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Monomials (fixed-capacity exponent vectors with cached total degree) and
// the three monomial orders: graded reverse lexicographic, lexicographic,
// and the Elim(k) block order (grevlex within the leading k-variable block,
// grevlex on the rest) used for variable elimination.

#ifndef GHILB_MONOMIAL_HPP
#define GHILB_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

#include "ring.hpp"

namespace ghilb {

// Total degrees beyond this are treated as runaway computations.
inline constexpr std::uint32_t kDegreeCap = 10'000;

struct Monomial {
    std::uint32_t deg = 0;
    std::array<std::uint16_t, kMaxVars> e{}; // zero beyond nvars

    static Monomial one() { return Monomial{}; }

    static Monomial var(int i, int power = 1) {
        Monomial m;
        m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(power);
        m.deg = static_cast<std::uint32_t>(power);
        return m;
    }

    bool is_one() const { return deg == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg == b.deg && a.e == b.e;
    }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.deg = a.deg + b.deg;
    if (r.deg > kDegreeCap) throw std::overflow_error("monomial degree exceeds cap");
    for (int i = 0; i < kMaxVars; ++i)
        r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // a | b
    if (a.deg > b.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

// b / a; caller guarantees divisibility (checked).
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        if (a.e[i] > b.e[i]) throw std::domain_error("mono_div: not divisible");
        r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
    }
    r.deg = b.deg - a.deg;
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::uint32_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        d += r.e[i];
    }
    r.deg = d;
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Orders
// ---------------------------------------------------------------------------

enum class OrderKind : std::uint8_t { GrevLex, Lex, Elim };

struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::uint8_t block = 0; // Elim only: size of the leading elimination block

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && a.block == b.block;
    }
};

inline constexpr MonomialOrder grevlex_order{OrderKind::GrevLex, 0};
inline constexpr MonomialOrder lex_order{OrderKind::Lex, 0};

inline MonomialOrder elim_order(int block) {
    if (block < 1 || block > kMaxVars) throw std::invalid_argument("elim_order: bad block size");
    return MonomialOrder{OrderKind::Elim, static_cast<std::uint8_t>(block)};
}

// Graded reverse lexicographic comparison of exponent ranges [lo, hi):
// higher total degree wins; on ties the smaller exponent in the *last*
// differing position wins.
inline int grevlex_cmp_range(const Monomial& a, const Monomial& b, int lo, int hi, std::uint32_t dega,
                             std::uint32_t degb) {
    if (dega != degb) return dega > degb ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}

// Returns +1 if a > b, 0 if equal, -1 if a < b under the order.
inline int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord, int nvars) {
    switch (ord.kind) {
    case OrderKind::GrevLex:
        return grevlex_cmp_range(a, b, 0, nvars, a.deg, b.deg);
    case OrderKind::Lex:
        for (int i = 0; i < nvars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
    case OrderKind::Elim: {
        const int k = ord.block;
        std::uint32_t ba = 0, bb = 0;
        for (int i = 0; i < k; ++i) {
            ba += a.e[i];
            bb += b.e[i];
        }
        if (int c = grevlex_cmp_range(a, b, 0, k, ba, bb)) return c;
        return grevlex_cmp_range(a, b, k, nvars, a.deg - ba, b.deg - bb);
    }
    }
    return 0; // unreachable
}

inline bool mono_less(const Monomial& a, const Monomial& b, const MonomialOrder& ord, int nvars) {
    return mono_cmp(a, b, ord, nvars) < 0;
}

// True when the exponents in the leading elimination block are all zero,
// i.e. the monomial survives contraction to the remaining variables.
inline bool mono_free_of_block(const Monomial& m, int block) {
    for (int i = 0; i < block; ++i)
        if (m.e[i] != 0) return false;
    return true;
}

} // namespace ghilb

#endif // GHILB_MONOMIAL_HPP
