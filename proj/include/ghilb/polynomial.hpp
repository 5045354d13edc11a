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

// Sparse multivariate polynomials over F_p: term lists kept strictly
// decreasing in the active monomial order, coefficients nonzero. Values are
// immutable after construction; all operations return new polynomials.

#ifndef GHILB_POLYNOMIAL_HPP
#define GHILB_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "common.hpp"
#include "monomial.hpp"
#include "ring.hpp"

namespace ghilb {

struct Term {
    Monomial m;
    std::uint32_t c = 0; // in [1, p) inside a normalized polynomial

    friend bool operator==(const Term& a, const Term& b) { return a.c == b.c && a.m == b.m; }
};

class Polynomial {
public:
    Polynomial() = default; // zero polynomial of no ring; usable as a placeholder only

    static Polynomial zero(RingPtr ring, MonomialOrder ord = grevlex_order) {
        Polynomial f;
        f.ring_ = std::move(ring);
        f.ord_ = ord;
        f.homogeneous_ = true;
        return f;
    }

    // Normalizing constructor: sorts, merges duplicate monomials, reduces
    // coefficients, drops zeros.
    static Polynomial make(RingPtr ring, MonomialOrder ord, std::vector<Term> terms) {
        const Fp& fp = ring->fp();
        const int n = ring->nvars();
        for (Term& t : terms) t.c %= fp.modulus();
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return mono_cmp(a.m, b.m, ord, n) > 0;
        });
        std::vector<Term> out;
        out.reserve(terms.size());
        for (const Term& t : terms) {
            if (!out.empty() && out.back().m == t.m)
                out.back().c = fp.add(out.back().c, t.c);
            else
                out.push_back(t);
            if (!out.empty() && out.back().c == 0) out.pop_back();
        }
        Polynomial f;
        f.ring_ = std::move(ring);
        f.ord_ = ord;
        f.terms_ = std::move(out);
        f.recompute_homogeneous();
        return f;
    }

    static Polynomial constant(RingPtr ring, long long v, MonomialOrder ord = grevlex_order) {
        std::uint32_t c = ring->fp().reduce(v);
        Polynomial f = zero(std::move(ring), ord);
        if (c != 0) f.terms_.push_back(Term{Monomial::one(), c});
        return f;
    }

    static Polynomial variable(RingPtr ring, int i, MonomialOrder ord = grevlex_order) {
        if (i < 0 || i >= ring->nvars()) throw std::invalid_argument("Polynomial::variable: index out of range");
        Polynomial f = zero(std::move(ring), ord);
        f.terms_.push_back(Term{Monomial::var(i), 1});
        return f;
    }

    static Polynomial monomial(RingPtr ring, const Monomial& m, std::uint32_t c = 1,
                               MonomialOrder ord = grevlex_order) {
        Polynomial f = zero(std::move(ring), ord);
        std::uint32_t cr = f.ring_->fp().reduce(c);
        if (cr != 0) f.terms_.push_back(Term{m, cr});
        return f;
    }

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const { return homogeneous_; }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().m; }
    std::uint32_t leading_coeff() const { return leading_term().c; }

    // Maximal total degree among terms; 0 for the zero polynomial.
    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (const Term& t : terms_)
            if (t.m.deg > d) d = t.m.deg;
        return d;
    }

    // Same terms re-sorted under another order.
    Polynomial with_order(MonomialOrder ord) const {
        if (ord == ord_) return *this;
        return make(ring_, ord, terms_);
    }

    Polynomial scaled(std::uint32_t c) const {
        const Fp& fp = ring_->fp();
        c = c % fp.modulus();
        Polynomial f = zero(ring_, ord_);
        if (c == 0) return f;
        f.terms_.reserve(terms_.size());
        for (const Term& t : terms_) f.terms_.push_back(Term{t.m, fp.mul(t.c, c)});
        f.homogeneous_ = homogeneous_;
        return f;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(ring_->fp().inv(leading_coeff()));
    }

    // Multiply by the single term c * m (order-preserving, no re-sort needed:
    // monomial orders are multiplicative).
    Polynomial times_term(const Monomial& m, std::uint32_t c) const {
        const Fp& fp = ring_->fp();
        c = c % fp.modulus();
        Polynomial f = zero(ring_, ord_);
        if (c == 0) return f;
        f.terms_.reserve(terms_.size());
        for (const Term& t : terms_) f.terms_.push_back(Term{mono_mul(t.m, m), fp.mul(t.c, c)});
        f.recompute_homogeneous();
        return f;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.require_compatible(b);
        const Fp& fp = a.ring_->fp();
        const int n = a.ring_->nvars();
        std::vector<Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = mono_cmp(a.terms_[i].m, b.terms_[j].m, a.ord_, n);
            if (c > 0)
                out.push_back(a.terms_[i++]);
            else if (c < 0)
                out.push_back(b.terms_[j++]);
            else {
                std::uint32_t s = fp.add(a.terms_[i].c, b.terms_[j].c);
                if (s != 0) out.push_back(Term{a.terms_[i].m, s});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
        Polynomial f = zero(a.ring_, a.ord_);
        f.terms_ = std::move(out);
        f.recompute_homogeneous();
        return f;
    }

    friend Polynomial operator-(const Polynomial& a) { return a.scaled(a.ring_->fp().modulus() - 1); }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_compatible(b);
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        const Fp& fp = a.ring_->fp();
        for (const Term& s : a.terms_)
            for (const Term& t : b.terms_) prod.push_back(Term{mono_mul(s.m, t.m), fp.mul(s.c, t.c)});
        return make(a.ring_, a.ord_, std::move(prod));
    }

    // Structural equality of the term multisets (order-insensitive).
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.ring_.get() != b.ring_.get()) return false;
        if (a.ord_ == b.ord_) return a.terms_ == b.terms_;
        return a.terms_ == b.with_order(a.ord_).terms_;
    }

private:
    void require_compatible(const Polynomial& b) const {
        require_same_ring(ring_, b.ring_);
        if (!(ord_ == b.ord_)) throw std::invalid_argument("operands carry different monomial orders");
    }

    void recompute_homogeneous() {
        homogeneous_ = true;
        for (const Term& t : terms_)
            if (t.m.deg != terms_.front().m.deg) {
                homogeneous_ = false;
                break;
            }
    }

    RingPtr ring_;
    MonomialOrder ord_ = grevlex_order;
    std::vector<Term> terms_;
    bool homogeneous_ = true;
};

// out = f[f_begin..] - c * m * g, all term lists sorted under ord. The
// workhorse of polynomial reduction; a single linear merge, no allocation
// beyond `out`.
inline void axpy_merge(const std::vector<Term>& f, std::uint32_t c, const Monomial& m,
                       const std::vector<Term>& g, const Fp& fp, const MonomialOrder& ord, int nvars,
                       std::vector<Term>& out, std::size_t f_begin = 0) {
    out.clear();
    out.reserve(f.size() - f_begin + g.size());
    const std::uint32_t nc = fp.neg(c);
    std::size_t i = f_begin, j = 0;
    Monomial gm;
    while (i < f.size() && j < g.size()) {
        gm = mono_mul(g[j].m, m);
        int cc = mono_cmp(f[i].m, gm, ord, nvars);
        if (cc > 0)
            out.push_back(f[i++]);
        else if (cc < 0) {
            out.push_back(Term{gm, fp.mul(g[j].c, nc)});
            ++j;
        } else {
            std::uint32_t s = fp.add(f[i].c, fp.mul(g[j].c, nc));
            if (s != 0) out.push_back(Term{f[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) out.push_back(Term{mono_mul(g[j].m, m), fp.mul(g[j].c, nc)});
}

// ---------------------------------------------------------------------------
// General elements: seeded random linear combinations of generators
// ---------------------------------------------------------------------------

struct RandomCombination {
    std::vector<Polynomial> elements;
    // matrix[i][j] is the coefficient of gens[j] in elements[i]; recorded so
    // every "general element" is reproducible from the report alone.
    std::vector<std::vector<std::uint32_t>> matrix;
};

inline RandomCombination random_linear_combination(const std::vector<Polynomial>& gens, int count,
                                                   unsigned long long seed) {
    if (gens.empty()) throw std::invalid_argument("random_linear_combination: empty generator list");
    RandomCombination out;
    if (count < 0) throw std::invalid_argument("random_linear_combination: negative count");
    SeededRng rng(seed);
    const RingPtr& ring = gens.front().ring();
    const std::uint32_t p = ring->characteristic();
    for (int i = 0; i < count; ++i) {
        std::vector<std::uint32_t> row;
        row.reserve(gens.size());
        Polynomial xi = Polynomial::zero(ring, gens.front().order());
        for (const Polynomial& g : gens) {
            require_same_ring(ring, g.ring());
            std::uint32_t lambda = rng.nonzero_mod(p);
            row.push_back(lambda);
            xi = xi + g.scaled(lambda);
        }
        out.elements.push_back(std::move(xi));
        out.matrix.push_back(std::move(row));
    }
    return out;
}

} // namespace ghilb

#endif // GHILB_POLYNOMIAL_HPP
