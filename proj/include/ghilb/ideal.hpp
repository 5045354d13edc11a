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

// Ideal-level operations: sums, products, interreduced powers, colon,
// saturation, intersection and elimination via auxiliary variables, Hilbert
// series through the lead-term ideal, exact finite-length measurement, and
// determinantal ideals.

#ifndef GHILB_IDEAL_HPP
#define GHILB_IDEAL_HPP

#include "groebner.hpp"

namespace ghilb {

// Immutable ideal value: normalized generators plus a canonical byte
// identity used for caching. Groebner bases live in the global cache keyed
// by (ring, order, identity).
class Ideal {
public:
    Ideal() = default;

    static Ideal make(RingPtr ring, std::vector<Polynomial> gens) {
        Ideal J;
        J.ring_ = std::move(ring);
        for (Polynomial& g : gens) {
            require_same_ring(J.ring_, g.ring());
            if (g.is_zero()) continue;
            J.gens_.push_back(g.with_order(grevlex_order).monic());
        }
        // deterministic generator order; exact duplicates collapse
        std::sort(J.gens_.begin(), J.gens_.end(),
                  [](const Polynomial& a, const Polynomial& b) {
                      return detail::canonical_gen_bytes(a) < detail::canonical_gen_bytes(b);
                  });
        J.gens_.erase(std::unique(J.gens_.begin(), J.gens_.end()), J.gens_.end());
        J.homogeneous_ = true;
        for (const Polynomial& g : J.gens_)
            if (!g.is_homogeneous()) J.homogeneous_ = false;
        J.identity_ = ideal_identity(J.gens_);
        return J;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool homogeneous() const { return homogeneous_; }
    bool is_zero() const { return gens_.empty(); }
    const std::string& identity() const { return identity_; }

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    bool homogeneous_ = true;
    std::string identity_;
};

inline std::shared_ptr<const GroebnerBasis> ideal_gb(const Ideal& J,
                                                     MonomialOrder ord = grevlex_order) {
    return groebner_basis_cached(J.ring(), J.gens(), ord);
}

inline bool ideal_contains(const Ideal& J, const Polynomial& f) {
    if (f.is_zero()) return true;
    return normal_form(f.with_order(grevlex_order), *ideal_gb(J)).is_zero();
}

inline bool ideal_contains(const Ideal& J, const Ideal& K) {
    require_same_ring(J.ring(), K.ring());
    for (const Polynomial& g : K.gens())
        if (!ideal_contains(J, g)) return false;
    return true;
}

inline bool ideal_equal(const Ideal& J, const Ideal& K) {
    require_same_ring(J.ring(), K.ring());
    if (J.identity() == K.identity()) return true;
    return ideal_contains(J, K) && ideal_contains(K, J);
}

inline Ideal ideal_sum(const Ideal& J, const Ideal& K) {
    require_same_ring(J.ring(), K.ring());
    std::vector<Polynomial> gens = J.gens();
    gens.insert(gens.end(), K.gens().begin(), K.gens().end());
    return Ideal::make(J.ring(), std::move(gens));
}

namespace detail {

// Drop generators lying in the ideal of the others. Homogeneous membership
// only ever involves generators of lower or equal degree, so one ascending
// pass is exact; the all-one-degree case reduces to linear algebra over the
// coefficient rows and is handled by the same incremental scheme.
inline std::vector<Polynomial> interreduce_generators(const RingPtr& ring,
                                                      std::vector<Polynomial> gens) {
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        int c = mono_cmp(a.leading_monomial(), b.leading_monomial(), grevlex_order, ring->nvars());
        if (c != 0) return c < 0;
        return canonical_gen_bytes(a) < canonical_gen_bytes(b);
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gens) {
        if (!kept.empty()) {
            auto gb = groebner_basis_cached(ring, kept, grevlex_order);
            if (normal_form(g, *gb).is_zero()) continue;
        }
        kept.push_back(g);
    }
    return kept;
}

} // namespace detail

inline Ideal ideal_product(const Ideal& J, const Ideal& K) {
    require_same_ring(J.ring(), K.ring());

    // Memoized: bigraded tables request the same q^{s+1} * I^t products for
    // every cell of a grid. Products are commutative, so order the key halves.
    static std::unordered_map<std::string, std::shared_ptr<const Ideal>> memo;
    const std::string &a = J.identity(), &b = K.identity();
    std::string key = std::to_string(J.ring()->id()) + "#" + (a <= b ? a : b) + "#" + (a <= b ? b : a);
    if (auto it = memo.find(key); it != memo.end()) return *it->second;

    std::vector<Polynomial> gens;
    for (const Polynomial& p : J.gens())
        for (const Polynomial& q : K.gens()) gens.push_back(p * q);
    Ideal result = Ideal::make(J.ring(), std::move(gens));
    memo.emplace(std::move(key), std::make_shared<const Ideal>(result));
    return result;
}

// t-fold generator products, interreduced. Memoized: powers recur in every
// degreewise length computation.
inline Ideal ideal_power(const Ideal& J, int t) {
    if (t < 0) throw std::invalid_argument("ideal_power: negative exponent");
    if (t == 0) return Ideal::make(J.ring(), {Polynomial::constant(J.ring(), 1)});
    if (t == 1) return J;

    static std::unordered_map<std::string, std::shared_ptr<const Ideal>> memo;
    std::string key = std::to_string(J.ring()->id()) + "#" + std::to_string(t) + "#" + J.identity();
    if (auto it = memo.find(key); it != memo.end()) return *it->second;

    Ideal lower = ideal_power(J, t - 1);
    std::vector<Polynomial> gens;
    for (const Polynomial& a : lower.gens())
        for (const Polynomial& b : J.gens()) gens.push_back(a * b);
    Ideal result = Ideal::make(
        J.ring(), detail::interreduce_generators(J.ring(), std::move(gens)));
    memo.emplace(std::move(key), std::make_shared<const Ideal>(result));
    return result;
}

// ---------------------------------------------------------------------------
// Auxiliary-variable constructions: intersection and elimination
// ---------------------------------------------------------------------------

namespace detail {

// Fresh variable name not used by the ring.
inline std::string fresh_var_name(const RingPtr& ring) {
    std::string name = "#w";
    for (;;) {
        bool clash = false;
        for (const std::string& v : ring->vars())
            if (v == name) clash = true;
        if (!clash) return name;
        name += "#";
    }
}

// Ring with one auxiliary variable prepended; memoized so repeated
// intersections share one ring (and hence one Groebner cache namespace).
inline RingPtr extended_ring(const RingPtr& ring) {
    static std::unordered_map<std::uint64_t, RingPtr> memo;
    if (auto it = memo.find(ring->id()); it != memo.end()) return it->second;
    if (ring->nvars() + 1 > kMaxVars)
        throw std::invalid_argument("intersect: ring already has the maximum number of variables");
    std::vector<std::string> vars = {fresh_var_name(ring)};
    for (const std::string& v : ring->vars()) vars.push_back(v);
    RingPtr ext = make_ring(vars, ring->fp().modulus());
    memo.emplace(ring->id(), ext);
    return ext;
}

// Ring with variables permuted; perm[i] is the source index of slot i.
inline RingPtr permuted_ring(const RingPtr& ring, const std::vector<int>& perm) {
    bool identity = static_cast<int>(perm.size()) == ring->nvars();
    for (std::size_t i = 0; identity && i < perm.size(); ++i)
        identity = perm[i] == static_cast<int>(i);
    if (identity) return ring;
    static std::map<std::pair<std::uint64_t, std::vector<int>>, RingPtr> memo;
    auto key = std::make_pair(ring->id(), perm);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::string> vars;
    for (int src : perm) vars.push_back(ring->var_name(src));
    RingPtr out = make_ring(vars, ring->fp().modulus());
    memo.emplace(std::move(key), out);
    return out;
}

// Transport f into `target` sending source variable i to slot where[i].
inline Polynomial map_vars(const Polynomial& f, const RingPtr& target,
                           const std::vector<int>& where, MonomialOrder ord) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
        Monomial m = Monomial::one();
        for (int i = 0; i < f.ring()->nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            m.e[where[static_cast<std::size_t>(i)]] += t.m.e[i];
            m.deg += t.m.e[i];
        }
        terms.push_back(Term{m, t.c});
    }
    return Polynomial::make(target, ord, std::move(terms));
}

} // namespace detail

// Contraction J ∩ k[vars outside block]: Groebner basis under a block
// elimination order, keep the elements free of the block variables.
inline Ideal eliminate(const Ideal& J, const std::vector<int>& block) {
    if (block.empty()) return J;
    const RingPtr& R = J.ring();
    const int n = R->nvars();
    std::vector<bool> inBlock(static_cast<std::size_t>(n), false);
    for (int i : block) {
        if (i < 0 || i >= n) throw std::invalid_argument("eliminate: variable index out of range");
        inBlock[static_cast<std::size_t>(i)] = true;
    }
    // permutation: block variables first, then the rest, original order kept
    std::vector<int> perm;
    for (int i = 0; i < n; ++i)
        if (inBlock[static_cast<std::size_t>(i)]) perm.push_back(i);
    for (int i = 0; i < n; ++i)
        if (!inBlock[static_cast<std::size_t>(i)]) perm.push_back(i);
    const int k = static_cast<int>(block.size());

    RingPtr ext = detail::permuted_ring(R, perm);
    std::vector<int> where(static_cast<std::size_t>(n));
    for (int slot = 0; slot < n; ++slot) where[static_cast<std::size_t>(perm[slot])] = slot;

    MonomialOrder ord = elim_order(k);
    std::vector<Polynomial> mapped;
    for (const Polynomial& g : J.gens()) mapped.push_back(detail::map_vars(g, ext, where, ord));
    auto gb = groebner_basis_cached(ext, mapped, ord);

    std::vector<Polynomial> out;
    for (const Polynomial& g : gb->elements)
        if (mono_free_of_block(g.leading_monomial(), k)) {
            // lead free of the block forces the whole element free of it
            // only for true elimination orders, which Elim(k) is; map back
            out.push_back(detail::map_vars(g, R, perm, grevlex_order));
        }
    return Ideal::make(R, std::move(out));
}

// J ∩ K via the auxiliary variable w: eliminate w from w·J + (1−w)·K.
inline Ideal intersect(const Ideal& J, const Ideal& K) {
    require_same_ring(J.ring(), K.ring());
    if (J.is_zero() || K.is_zero()) return Ideal::make(J.ring(), {});
    if (J.identity() == K.identity()) return J;
    const RingPtr& R = J.ring();
    const int n = R->nvars();
    RingPtr ext = detail::extended_ring(R);
    std::vector<int> shift(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) shift[static_cast<std::size_t>(i)] = i + 1;

    MonomialOrder ord = elim_order(1);
    Polynomial w = Polynomial::variable(ext, 0, ord);
    Polynomial oneMinusW = Polynomial::constant(ext, 1, ord) - w;
    std::vector<Polynomial> mapped;
    for (const Polynomial& g : J.gens())
        mapped.push_back(w * detail::map_vars(g, ext, shift, ord));
    for (const Polynomial& g : K.gens())
        mapped.push_back(oneMinusW * detail::map_vars(g, ext, shift, ord));
    auto gb = groebner_basis_cached(ext, mapped, ord);

    std::vector<Polynomial> out;
    std::vector<int> back(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) back[static_cast<std::size_t>(i) + 1] = i;
    for (const Polynomial& g : gb->elements)
        if (mono_free_of_block(g.leading_monomial(), 1))
            out.push_back(detail::map_vars(g, R, back, grevlex_order));
    return Ideal::make(R, std::move(out));
}

// ---------------------------------------------------------------------------
// Colon and saturation
// ---------------------------------------------------------------------------

namespace detail {

// g / f for exact polynomial division (g known to lie in (f)).
inline Polynomial exact_quotient(const Polynomial& g, const Polynomial& f) {
    const RingPtr& R = g.ring();
    const Fp& fp = R->fp();
    const int n = R->nvars();
    const std::uint32_t leadInv = fp.inv(f.leading_term().c);
    std::vector<Term> rem = g.terms(), buf, quot;
    while (!rem.empty()) {
        const Term& lt = rem.front();
        if (!mono_divides(f.leading_monomial(), lt.m))
            throw std::logic_error("exact_quotient: division is not exact");
        Monomial m = mono_div(lt.m, f.leading_monomial());
        std::uint32_t c = fp.mul(lt.c, leadInv);
        quot.push_back(Term{m, c});
        axpy_merge(rem, c, m, f.terms(), fp, g.order(), n, buf);
        rem.swap(buf);
    }
    return Polynomial::make(R, g.order(), std::move(quot));
}

} // namespace detail

// J : f = (J ∩ (f)) / f.
inline Ideal colon(const Ideal& J, const Polynomial& f) {
    require_same_ring(J.ring(), f.ring());
    if (f.is_zero()) throw std::invalid_argument("colon: zero polynomial");
    Polynomial g = f.with_order(grevlex_order).monic();
    if (g.terms().size() == 1 && g.leading_monomial().is_one()) return J; // J : unit
    Ideal Jf = intersect(J, Ideal::make(J.ring(), {g}));
    std::vector<Polynomial> out;
    for (const Polynomial& h : Jf.gens()) out.push_back(detail::exact_quotient(h, g));
    return Ideal::make(J.ring(), std::move(out));
}

// J : K = ∩ over generators of K.
inline Ideal colon(const Ideal& J, const Ideal& K) {
    require_same_ring(J.ring(), K.ring());
    if (K.is_zero()) throw std::invalid_argument("colon: zero ideal");
    bool first = true;
    Ideal acc;
    for (const Polynomial& f : K.gens()) {
        Ideal part = colon(J, f);
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    return acc;
}

struct SaturationResult {
    Ideal ideal;
    int iterations = 0; // colon steps taken until the chain stabilized
};

// Least stable value of J ⊆ J:K ⊆ J:K² ⊆ …; each step is one colon by K.
inline SaturationResult saturate(const Ideal& J, const Ideal& K, int cap = 50) {
    Ideal cur = J;
    for (int i = 0; i < cap; ++i) {
        Ideal next = colon(cur, K);
        if (ideal_equal(next, cur)) return SaturationResult{cur, i};
        cur = next;
    }
    throw budget_exceeded("saturate: chain did not stabilize within " + std::to_string(cap) +
                          " colon iterations");
}

// ---------------------------------------------------------------------------
// Hilbert series and lengths
// ---------------------------------------------------------------------------

// HS(R/J) = N(z)/(1-z)^n via the grevlex lead-term ideal.
inline RationalSeries hilbert_series(const Ideal& J) {
    if (!J.homogeneous())
        throw std::invalid_argument("hilbert_series: ideal is not homogeneous");
    auto gb = ideal_gb(J);
    return RationalSeries{hilbert_numerator_monomial(gb->leads, J.ring()->nvars()),
                          J.ring()->nvars(), false};
}

inline int ideal_dimension(const Ideal& J) { return hilbert_series(J).dimension(); }

// λ(U/J) for J ⊆ U, via the Hilbert-series difference. The difference of
// numerators must be divisible by (1-z)^n — that exactness check is the
// finiteness certificate — and the quotient evaluated at 1 is the length.
inline long long length_between(const Ideal& J, const Ideal& U) {
    require_same_ring(J.ring(), U.ring());
    if (!J.homogeneous() || !U.homogeneous())
        throw std::invalid_argument("length_between: ideals must be homogeneous");
    if (!ideal_contains(U, J))
        throw std::invalid_argument("length_between: first ideal is not contained in the second");
    const int n = J.ring()->nvars();
    zpoly::Z diff = zpoly::sub(hilbert_series(J).numerator, hilbert_series(U).numerator);
    for (int i = 0; i < n; ++i) {
        zpoly::Z q;
        if (!zpoly::div_one_minus_z(diff, q))
            throw infinite_length_error("length_between: quotient has infinite length");
        diff = std::move(q);
    }
    return zpoly::eval1(diff);
}

// ---------------------------------------------------------------------------
// Determinantal ideals
// ---------------------------------------------------------------------------

namespace detail {

inline Polynomial det_expand(const std::vector<std::vector<Polynomial>>& M,
                             const std::vector<int>& rows, const std::vector<int>& cols,
                             const RingPtr& R) {
    const std::size_t k = rows.size();
    if (k == 1) return M[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(cols[0])];
    Polynomial acc = Polynomial::zero(R);
    std::vector<int> subRows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<int> subCols;
        for (std::size_t jj = 0; jj < k; ++jj)
            if (jj != j) subCols.push_back(cols[jj]);
        Polynomial cof = M[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(cols[j])] *
                         det_expand(M, subRows, subCols, R);
        acc = (j % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

inline void subsets_rec(int from, int n, int k, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = from; i <= n - (k - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        subsets_rec(i + 1, n, k, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_rec(0, n, k, cur, out);
    return out;
}

} // namespace detail

// Ideal of all k×k minors of a matrix of polynomials.
inline Ideal minors(int k, const std::vector<std::vector<Polynomial>>& M, const RingPtr& R) {
    const int nrows = static_cast<int>(M.size());
    const int ncols = nrows > 0 ? static_cast<int>(M[0].size()) : 0;
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != ncols)
            throw std::invalid_argument("minors: ragged matrix");
    if (k < 1 || k > nrows || k > ncols)
        throw std::invalid_argument("minors: size must satisfy 1 <= k <= min(rows, cols)");
    std::vector<Polynomial> gens;
    for (const auto& rows : detail::subsets(nrows, k))
        for (const auto& cols : detail::subsets(ncols, k))
            gens.push_back(detail::det_expand(M, rows, cols, R));
    return Ideal::make(R, std::move(gens));
}

} // namespace ghilb

#endif // GHILB_IDEAL_HPP
