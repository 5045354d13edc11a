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

// Groebner kernel: normal forms, Buchberger's algorithm with Gebauer-Moeller
// pair pruning and the normal selection strategy, a global basis cache, and
// Hilbert numerators of monomial quotients by pivot splitting.

#ifndef GHILB_GROEBNER_HPP
#define GHILB_GROEBNER_HPP

#include <map>
#include <memory>
#include <set>
#include <unordered_map>

#include "polynomial.hpp"
#include "series.hpp"

namespace ghilb {

// Compressed divisibility signature: 4 threshold bits (>=1, >=2, >=4, >=8)
// per variable. a | b requires mask(a) & ~mask(b) == 0; the converse is a
// fast necessary test only.
inline std::uint64_t divmask(const Monomial& m) {
    std::uint64_t mask = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        unsigned e = m.e[i];
        std::uint64_t bits = (e >= 1 ? 1u : 0u) | (e >= 2 ? 2u : 0u) | (e >= 4 ? 4u : 0u) | (e >= 8 ? 8u : 0u);
        mask |= bits << (4 * i);
    }
    return mask;
}

struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> elements; // reduced, monic, sorted by increasing lead monomial
    std::string source;               // canonical identity of the generating ideal

    // derived lookup tables
    std::vector<Monomial> leads;
    std::vector<std::uint64_t> masks;

    void rebuild_tables() {
        leads.clear();
        masks.clear();
        for (const Polynomial& g : elements) {
            leads.push_back(g.leading_monomial());
            masks.push_back(divmask(g.leading_monomial()));
        }
    }

    bool contains_one() const {
        return elements.size() == 1 && elements[0].terms().size() == 1 &&
               elements[0].leading_monomial().is_one();
    }
};

namespace detail {

// Index of the first basis element whose lead divides m, or -1. `skip`
// excludes one element (used when reducing a basis element against the rest).
inline int find_reducer(const GroebnerBasis& G, const Monomial& m, std::uint64_t mmask,
                        int skip = -1) {
    for (std::size_t i = 0; i < G.leads.size(); ++i) {
        if (static_cast<int>(i) == skip) continue;
        if (G.masks[i] & ~mmask) continue;
        if (mono_divides(G.leads[i], m)) return static_cast<int>(i);
    }
    return -1;
}

// Full reduction of a term list: no term of the result is divisible by any
// lead of G (excluding `skip`). Terms already past the irreducible frontier
// are never rescanned.
inline std::vector<Term> reduce_full(std::vector<Term> work, const GroebnerBasis& G,
                                     int skip = -1) {
    const Fp& fp = G.ring->fp();
    const int n = G.ring->nvars();
    std::vector<Term> out, buf;
    std::size_t pos = 0;
    while (pos < work.size()) {
        const Term& head = work[pos];
        int r = find_reducer(G, head.m, divmask(head.m), skip);
        if (r < 0) {
            out.push_back(head);
            ++pos;
            continue;
        }
        reduction_budget::step();
        axpy_merge(work, head.c, mono_div(head.m, G.leads[r]), G.elements[r].terms(), fp, G.order,
                   n, buf, pos);
        work.swap(buf);
        pos = 0;
    }
    return out;
}

// Reduce `work` until its lead is irreducible or it vanishes (lead terms
// only; tails are handled by the caller when full reduction is wanted).
// Basis elements are monic.
inline void reduce_lead(std::vector<Term>& work, std::vector<Term>& buf, const GroebnerBasis& G) {
    const Fp& fp = G.ring->fp();
    const int n = G.ring->nvars();
    while (!work.empty()) {
        int r = find_reducer(G, work.front().m, divmask(work.front().m));
        if (r < 0) return;
        reduction_budget::step();
        axpy_merge(work, work.front().c, mono_div(work.front().m, G.leads[r]),
                   G.elements[r].terms(), fp, G.order, n, buf);
        work.swap(buf);
    }
}

} // namespace detail

// Full normal form: no term of the result is divisible by any lead monomial
// of G. For a reduced basis this is the canonical representative mod the
// ideal.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    require_same_ring(f.ring(), G.ring);
    if (!(f.order() == G.order))
        throw std::invalid_argument("normal_form: polynomial and basis carry different orders");
    return Polynomial::make(G.ring, G.order, detail::reduce_full(f.terms(), G));
}

namespace detail {

struct Pair {
    Monomial lcm;
    int i, j; // i < j

    struct Less {
        MonomialOrder ord;
        int nvars;
        bool operator()(const Pair& a, const Pair& b) const {
            // normal strategy: smallest lcm degree first, then order, then indices
            if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
            int c = mono_cmp(a.lcm, b.lcm, ord, nvars);
            if (c != 0) return c < 0;
            if (a.j != b.j) return a.j < b.j;
            return a.i < b.i;
        }
    };
};

inline std::string canonical_gen_bytes(const Polynomial& f) {
    // grevlex-sorted serialization, independent of the active order
    Polynomial g = f.with_order(grevlex_order);
    std::string s;
    const int n = g.ring()->nvars();
    for (const Term& t : g.terms()) {
        for (int i = 0; i < n; ++i) {
            s.push_back(static_cast<char>(t.m.e[i] & 0xff));
            s.push_back(static_cast<char>(t.m.e[i] >> 8));
        }
        for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((t.c >> (8 * b)) & 0xff));
    }
    return s;
}

} // namespace detail

// Canonical byte identity of a generator list (sorted, deduplicated); used
// as the ideal identity for caching.
inline std::string ideal_identity(const std::vector<Polynomial>& gens) {
    std::vector<std::string> parts;
    for (const Polynomial& g : gens)
        if (!g.is_zero()) parts.push_back(detail::canonical_gen_bytes(g));
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    std::string all;
    for (const std::string& p : parts) {
        all += std::to_string(p.size());
        all += ':';
        all += p;
    }
    return all;
}

// Buchberger with Gebauer-Moeller pruning. Deterministic: input generators
// are interreduced and sorted, pairs are processed in normal-strategy order
// with fixed tie-breaks, and the final basis is reduced, monic, and sorted
// by increasing lead monomial.
inline GroebnerBasis groebner_basis(const RingPtr& ring, std::vector<Polynomial> gens,
                                    MonomialOrder ord) {
    reduction_budget::reset_counter();
    GroebnerBasis G;
    G.ring = ring;
    G.order = ord;
    G.source = ideal_identity(gens);
    const int n = ring->nvars();

    // normalize input: active order, monic, drop zeros, sort by lead
    std::vector<Polynomial> input;
    for (Polynomial& g : gens) {
        require_same_ring(ring, g.ring());
        if (g.is_zero()) continue;
        input.push_back(g.with_order(ord).monic());
    }
    std::sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
        return mono_cmp(a.leading_monomial(), b.leading_monomial(), ord, n) < 0;
    });

    auto add_element = [&](const Polynomial& g) {
        G.elements.push_back(g);
        G.leads.push_back(g.leading_monomial());
        G.masks.push_back(divmask(g.leading_monomial()));
    };

    detail::Pair::Less pless{ord, n};
    std::set<detail::Pair, detail::Pair::Less> pairs(pless);

    auto gm_update = [&](int t) {
        const Monomial& lt = G.leads[static_cast<std::size_t>(t)];
        // criterion B: drop old pairs whose lcm is a proper multiple through lt
        for (auto it = pairs.begin(); it != pairs.end();) {
            const detail::Pair& pr = *it;
            if (mono_divides(lt, pr.lcm) &&
                !(mono_lcm(G.leads[static_cast<std::size_t>(pr.i)], lt) == pr.lcm) &&
                !(mono_lcm(G.leads[static_cast<std::size_t>(pr.j)], lt) == pr.lcm))
                it = pairs.erase(it);
            else
                ++it;
        }
        // candidate pairs (i, t)
        std::vector<detail::Pair> cand;
        for (int i = 0; i < t; ++i)
            cand.push_back(detail::Pair{mono_lcm(G.leads[static_cast<std::size_t>(i)], lt), i, t});
        // criterion M: drop candidates whose lcm is a proper multiple of another's
        std::vector<bool> drop(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a)
            for (std::size_t b = 0; b < cand.size(); ++b) {
                if (a == b || drop[a]) continue;
                if (!(cand[b].lcm == cand[a].lcm) && mono_divides(cand[b].lcm, cand[a].lcm)) {
                    drop[a] = true;
                    break;
                }
            }
        // criterion F + product criterion: one representative per lcm class,
        // none at all if some class member has coprime leads
        std::map<std::string, std::vector<std::size_t>> classes;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            std::string key;
            for (int i = 0; i < n; ++i) key += std::to_string(cand[a].lcm.e[i]) + ",";
            classes[key].push_back(a);
        }
        for (const auto& [key, members] : classes) {
            bool coprime = false;
            for (std::size_t a : members)
                if (mono_coprime(G.leads[static_cast<std::size_t>(cand[a].i)], lt)) {
                    coprime = true;
                    break;
                }
            if (coprime) continue;
            pairs.insert(cand[members.front()]); // members sorted by i already
        }
    };

    for (const Polynomial& g : input) {
        // interreduce input as it enters
        std::vector<Term> work = g.terms(), buf;
        detail::reduce_lead(work, buf, G);
        if (work.empty()) continue;
        Polynomial h = Polynomial::make(ring, ord, std::move(work)).monic();
        if (h.leading_monomial().is_one()) {
            G.elements = {Polynomial::constant(ring, 1, ord)};
            G.rebuild_tables();
            return G;
        }
        add_element(h);
        gm_update(static_cast<int>(G.elements.size()) - 1);
    }

    std::vector<Term> work, buf;
    while (!pairs.empty()) {
        detail::Pair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        const Polynomial& fi = G.elements[static_cast<std::size_t>(pr.i)];
        const Polynomial& fj = G.elements[static_cast<std::size_t>(pr.j)];
        // S-polynomial of monic elements
        Polynomial s = fi.times_term(mono_div(pr.lcm, fi.leading_monomial()), 1) -
                       fj.times_term(mono_div(pr.lcm, fj.leading_monomial()), 1);
        work = s.terms();
        detail::reduce_lead(work, buf, G);
        if (work.empty()) continue;
        Polynomial h = Polynomial::make(ring, ord, std::move(work)).monic();
        if (h.leading_monomial().is_one()) {
            G.elements = {Polynomial::constant(ring, 1, ord)};
            G.rebuild_tables();
            return G;
        }
        add_element(h);
        gm_update(static_cast<int>(G.elements.size()) - 1);
    }

    // minimalize: drop elements whose lead is divisible by another surviving lead
    std::vector<Polynomial> kept;
    {
        std::vector<std::size_t> idx(G.elements.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return mono_cmp(G.leads[a], G.leads[b], ord, n) < 0;
        });
        std::vector<Monomial> keptLeads;
        for (std::size_t k : idx) {
            bool divisible = false;
            for (const Monomial& lm : keptLeads)
                if (mono_divides(lm, G.leads[k])) {
                    divisible = true;
                    break;
                }
            if (!divisible) {
                kept.push_back(G.elements[k]);
                keptLeads.push_back(G.leads[k]);
            }
        }
    }
    // interreduce: full normal form of each element against the others (leads
    // are pairwise non-divisible, so one pass suffices and leads are stable)
    GroebnerBasis R;
    R.ring = ring;
    R.order = ord;
    R.source = G.source;
    GroebnerBasis all;
    all.ring = ring;
    all.order = ord;
    all.elements = kept;
    all.rebuild_tables();
    for (std::size_t i = 0; i < kept.size(); ++i) {
        Polynomial red = Polynomial::make(
            ring, ord, detail::reduce_full(kept[i].terms(), all, static_cast<int>(i)));
        if (!red.is_zero()) R.elements.push_back(red.monic());
    }
    std::sort(R.elements.begin(), R.elements.end(), [&](const Polynomial& a, const Polynomial& b) {
        return mono_cmp(a.leading_monomial(), b.leading_monomial(), ord, n) < 0;
    });
    R.rebuild_tables();
    return R;
}

// ---------------------------------------------------------------------------
// Global basis cache, keyed by (ring, order, ideal identity)
// ---------------------------------------------------------------------------

namespace detail {

struct GBCacheKey {
    std::uint64_t ring_id;
    MonomialOrder ord;
    std::string identity;
    friend bool operator==(const GBCacheKey& a, const GBCacheKey& b) {
        return a.ring_id == b.ring_id && a.ord == b.ord && a.identity == b.identity;
    }
};

struct GBCacheKeyHash {
    std::size_t operator()(const GBCacheKey& k) const {
        std::size_t h = std::hash<std::string>()(k.identity);
        h ^= std::hash<std::uint64_t>()(k.ring_id) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= static_cast<std::size_t>(k.ord.kind) * 1315423911u + k.ord.block;
        return h;
    }
};

inline std::unordered_map<GBCacheKey, std::shared_ptr<const GroebnerBasis>, GBCacheKeyHash>&
gb_cache() {
    static std::unordered_map<GBCacheKey, std::shared_ptr<const GroebnerBasis>, GBCacheKeyHash> c;
    return c;
}

} // namespace detail

inline std::shared_ptr<const GroebnerBasis> groebner_basis_cached(const RingPtr& ring,
                                                                  const std::vector<Polynomial>& gens,
                                                                  MonomialOrder ord) {
    detail::GBCacheKey key{ring->id(), ord, ideal_identity(gens)};
    auto& cache = detail::gb_cache();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto gb = std::make_shared<const GroebnerBasis>(groebner_basis(ring, gens, ord));
    cache.emplace(std::move(key), gb);
    return gb;
}

inline void clear_groebner_cache() { detail::gb_cache().clear(); }

// ---------------------------------------------------------------------------
// Hilbert numerator of a monomial quotient
// ---------------------------------------------------------------------------

namespace detail {

inline void minimalize_monomials(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.e < b.e;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const Monomial& g : gens) {
        bool divisible = false;
        for (const Monomial& h : out)
            if (mono_divides(h, g)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(g);
    }
    gens.swap(out);
}

inline std::string monomial_list_key(const std::vector<Monomial>& gens, int n) {
    std::string key;
    key += static_cast<char>(n);
    for (const Monomial& g : gens)
        for (int i = 0; i < n; ++i) {
            key.push_back(static_cast<char>(g.e[i] & 0xff));
            key.push_back(static_cast<char>(g.e[i] >> 8));
        }
    return key;
}

inline std::unordered_map<std::string, zpoly::Z>& hilbert_memo() {
    static std::unordered_map<std::string, zpoly::Z> m;
    return m;
}

} // namespace detail

// N(z) with HS(R/(gens)) = N(z)/(1-z)^n, by recursive pivot splitting
//   N(J) = N(J + (x_j)) + z * N(J : x_j)
// on a most-frequent variable; pure-power base case N = prod (1 - z^{a_i}).
inline zpoly::Z hilbert_numerator_monomial(std::vector<Monomial> gens, int nvars) {
    detail::minimalize_monomials(gens);
    if (gens.empty()) return zpoly::Z{1};
    if (gens.front().deg == 0) return zpoly::Z{}; // unit ideal: HS = 0
    // Bare-variable generators each contribute an exact factor (1 - z); by
    // minimality no other generator involves those variables. Stripping them
    // first also guarantees the pivot recursion below strictly shrinks total
    // degree (a bare-variable pivot would reproduce its own input).
    {
        std::vector<Monomial> rest;
        int nbare = 0;
        for (const Monomial& g : gens) {
            if (g.deg == 1)
                ++nbare;
            else
                rest.push_back(g);
        }
        if (nbare > 0)
            return zpoly::mul_one_minus_z_pow(hilbert_numerator_monomial(std::move(rest), nvars),
                                              nbare);
    }
    // pure powers in distinct variables?
    {
        bool pure = true;
        for (const Monomial& g : gens) {
            int support = 0;
            for (int i = 0; i < nvars; ++i)
                if (g.e[i]) ++support;
            if (support != 1) {
                pure = false;
                break;
            }
        }
        if (pure) {
            // distinct variables guaranteed by minimality
            zpoly::Z num{1};
            for (const Monomial& g : gens) {
                zpoly::Z f(static_cast<std::size_t>(g.deg) + 1, 0);
                f[0] = 1;
                f[g.deg] = -1;
                num = zpoly::mul(num, f);
            }
            return num;
        }
    }
    std::string key = detail::monomial_list_key(gens, nvars);
    auto& memo = detail::hilbert_memo();
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // pivot: variable hitting the most generators (ties to the smallest index)
    int best = -1, bestCount = -1;
    for (int i = 0; i < nvars; ++i) {
        int cnt = 0;
        for (const Monomial& g : gens)
            if (g.e[i]) ++cnt;
        if (cnt > bestCount) {
            bestCount = cnt;
            best = i;
        }
    }
    std::vector<Monomial> plus, colon;
    for (const Monomial& g : gens) {
        if (g.e[best] == 0) {
            plus.push_back(g);
            colon.push_back(g); // g lies in J : x_best as well
        } else {
            Monomial h = g;
            h.e[best] -= 1;
            h.deg -= 1;
            colon.push_back(h);
        }
    }
    plus.push_back(Monomial::var(best));
    zpoly::Z nplus = hilbert_numerator_monomial(std::move(plus), nvars);
    zpoly::Z ncolon = hilbert_numerator_monomial(std::move(colon), nvars);
    // colon part shifted by z
    zpoly::Z shifted(ncolon.size() + 1, 0);
    for (std::size_t i = 0; i < ncolon.size(); ++i) shifted[i + 1] = ncolon[i];
    zpoly::Z result = zpoly::add(nplus, shifted);
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace ghilb

#endif // GHILB_GROEBNER_HPP
