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

// Generalized Hilbert-Samuel machinery for cyclic modules M = R/A:
// degreewise torsion lengths, the generalized function/series/polynomial and
// its j-coefficients, analytic spread, minimal reductions, general sections,
// and residual-intersection series.

#ifndef GHILB_GENHILBERT_HPP
#define GHILB_GENHILBERT_HPP

#include <optional>

#include "ideal.hpp"

namespace ghilb {

inline Ideal maximal_ideal(const RingPtr& ring) {
    std::vector<Polynomial> vars;
    for (int i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
    return Ideal::make(ring, std::move(vars));
}

inline Ideal unit_ideal(const RingPtr& ring) {
    return Ideal::make(ring, {Polynomial::constant(ring, 1)});
}

// λ(R/J); throws infinite_length_error unless J is m-primary or the unit.
inline long long length_of_quotient(const Ideal& J) {
    return length_between(J, unit_ideal(J.ring()));
}

inline bool equigenerated(const Ideal& I) {
    if (!I.homogeneous()) return false;
    for (const Polynomial& g : I.gens())
        if (g.degree() != I.gens().front().degree()) return false;
    return true;
}

// Default series horizon: generous for small rings, tighter when every
// extra degree is expensive.
inline int default_t_max(int nvars) { return nvars <= 4 ? 8 : 6; }

// ---------------------------------------------------------------------------
// Saturation machinery
// ---------------------------------------------------------------------------

// J : f^∞ in one Groebner computation: eliminate w from J + (w·f − 1).
inline Ideal element_saturation(const Ideal& J, const Polynomial& f0) {
    require_same_ring(J.ring(), f0.ring());
    Polynomial f = f0.with_order(grevlex_order);
    if (f.is_zero()) throw std::invalid_argument("element_saturation: zero polynomial");
    if (f.degree() == 0) return J; // unit: J : 1 = J
    const RingPtr& R = J.ring();
    const int n = R->nvars();
    RingPtr ext = detail::extended_ring(R);
    std::vector<int> shift(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) shift[static_cast<std::size_t>(i)] = i + 1;
    MonomialOrder ord = elim_order(1);

    std::vector<Polynomial> mapped;
    for (const Polynomial& g : J.gens()) mapped.push_back(detail::map_vars(g, ext, shift, ord));
    Polynomial w = Polynomial::variable(ext, 0, ord);
    mapped.push_back(w * detail::map_vars(f, ext, shift, ord) - Polynomial::constant(ext, 1, ord));
    auto gb = groebner_basis_cached(ext, mapped, ord);

    std::vector<Polynomial> out;
    std::vector<int> back(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) back[static_cast<std::size_t>(i) + 1] = i;
    for (const Polynomial& g : gb->elements)
        if (mono_free_of_block(g.leading_monomial(), 1))
            out.push_back(detail::map_vars(g, R, back, grevlex_order));
    return Ideal::make(R, std::move(out));
}

// J : K^∞, exactly, through the identity J : K^∞ = ∩_i (J : f_i^∞) over the
// generators of K.
inline Ideal full_saturation(const Ideal& J, const Ideal& K) {
    require_same_ring(J.ring(), K.ring());
    if (K.is_zero()) throw std::invalid_argument("full_saturation: zero ideal");
    bool first = true;
    Ideal acc;
    for (const Polynomial& f : K.gens()) {
        Ideal part = element_saturation(J, f);
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    return acc;
}

// J : m^∞ for the irrelevant ideal m. Fast path: one general linear form ℓ
// gives L = J : ℓ^∞ ⊇ J : m^∞; whenever λ(L/J) is finite, L is killed into
// J by a power of m, so L ⊆ J : m^∞ and the two agree — the finiteness check
// is a complete certificate, and a failed certificate falls back to the
// exact per-variable intersection.
inline Ideal irrelevant_saturation(const Ideal& J) {
    const RingPtr& R = J.ring();
    if (J.is_zero()) return J;
    if (!J.homogeneous())
        throw std::invalid_argument("irrelevant_saturation: ideal is not homogeneous");
    const int dim = ideal_dimension(J);
    if (dim == -1) return J;                 // unit ideal
    if (dim == 0) return unit_ideal(R);      // m-primary: saturation is everything
    for (unsigned attempt = 0; attempt < 3; ++attempt) {
        SeededRng rng(0xC0FFEEu + 7919u * attempt);
        std::vector<Term> terms;
        for (int i = 0; i < R->nvars(); ++i)
            terms.push_back(Term{Monomial::var(i), rng.nonzero_mod(R->fp().modulus())});
        Polynomial ell = Polynomial::make(R, grevlex_order, std::move(terms));
        Ideal L = element_saturation(J, ell);
        try {
            length_between(J, L);
            return L;
        } catch (const infinite_length_error&) {
            continue; // ℓ missed a component; try another form
        }
    }
    return full_saturation(J, maximal_ideal(R));
}

// ---------------------------------------------------------------------------
// Module specification and degreewise torsion lengths
// ---------------------------------------------------------------------------

// The cyclic module M = R/A together with the ideal I acting on it.
struct ModuleSpec {
    Ideal I;
    Ideal A;
    int d = 0; // dim R/A
};

inline ModuleSpec make_module_spec(Ideal I, Ideal A) {
    require_same_ring(I.ring(), A.ring());
    if (!I.homogeneous() || !A.homogeneous())
        throw std::invalid_argument("module spec: ideals must be homogeneous");
    int d = ideal_dimension(A);
    if (d < 0) throw std::invalid_argument("module spec: A is the unit ideal (zero module)");
    return ModuleSpec{std::move(I), std::move(A), d};
}

// ε(t) = λ(Γ_m(I^t M / I^{t+1} M)) for M = R/A. With J = I^{t+1} + A,
// V = I^t + A and S = J : m^∞, the torsion submodule is (S ∩ V)/J and
//   λ((S ∩ V)/J) = λ(S/J) − λ(S/(S ∩ V)) = λ(S/J) − λ((S+V)/V),
// which avoids computing the intersection itself.
inline long long gamma_length(const ModuleSpec& spec, int t) {
    if (t < 0) throw std::invalid_argument("gamma_length: negative degree");
    Ideal J = ideal_sum(ideal_power(spec.I, t + 1), spec.A);
    Ideal V = ideal_sum(ideal_power(spec.I, t), spec.A);
    Ideal S = irrelevant_saturation(J);
    long long whole = length_between(J, S);
    long long outside = length_between(V, ideal_sum(S, V));
    return whole - outside;
}

// Same value through the definition, one intersection and a chain
// saturation; kept as a cross-check for the formula above.
inline long long gamma_length_literal(const ModuleSpec& spec, int t) {
    if (t < 0) throw std::invalid_argument("gamma_length: negative degree");
    Ideal J = ideal_sum(ideal_power(spec.I, t + 1), spec.A);
    Ideal V = ideal_sum(ideal_power(spec.I, t), spec.A);
    Ideal S = saturate(J, maximal_ideal(spec.I.ring())).ideal;
    return length_between(J, intersect(S, V));
}

// ---------------------------------------------------------------------------
// Series fitting
// ---------------------------------------------------------------------------

inline long long binomial(long long n, long long k) {
    if (k < 0 || n < k) return 0;
    long long r = 1;
    for (long long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

struct SeriesFit {
    bool stable = false;
    RationalSeries series;           // N(z)/(1-z)^k, unnormalized shape
    int firstPolynomialIndex = 0;    // least t with seq(t) already polynomial
    std::string message;
};

// Fit seq(0..t_max) to N(z)/(1-z)^k, k = (expected polynomial degree) + 1.
// T = seq · (1-z)^k is the k-th backward difference; stability means the
// last two computable entries vanish (equivalently the (k-1)-th differences
// are constant on the trailing window of three points), and then T itself
// is the numerator.
inline SeriesFit fit_series(const std::vector<long long>& seq, int k) {
    SeriesFit fit;
    const int t_max = static_cast<int>(seq.size()) - 1;
    if (t_max < k + 1) {
        fit.message = "unstable - increase t_max (need at least " + std::to_string(k + 1) +
                      " values beyond degree 0)";
        return fit;
    }
    zpoly::Z T(seq.size(), 0);
    for (int t = 0; t <= t_max; ++t) {
        long long s = 0;
        for (int i = 0; i <= k && i <= t; ++i)
            s += ((i % 2 == 0) ? 1 : -1) * binomial(k, i) * seq[static_cast<std::size_t>(t - i)];
        T[static_cast<std::size_t>(t)] = s;
    }
    if (T[static_cast<std::size_t>(t_max)] != 0 || T[static_cast<std::size_t>(t_max - 1)] != 0) {
        fit.message = "unstable - increase t_max";
        return fit;
    }
    zpoly::trim(T);
    fit.stable = true;
    fit.series = RationalSeries{T, k, false};
    fit.firstPolynomialIndex = std::max(0, static_cast<int>(T.size()) - k);
    return fit;
}

// ---------------------------------------------------------------------------
// The generalized Hilbert-Samuel data
// ---------------------------------------------------------------------------

struct GeneralizedHilbertData {
    std::vector<long long> epsilon;    // ε(t), t = 0..t_max
    std::vector<long long> cumulative; // H(t) = Σ_{ν ≤ t} ε(ν)
    RationalSeries series;             // Σ H(t) z^t = N(z)/(1-z)^{d+1}
    int r = -1;                        // pole order − 1 of the normalized series
    std::vector<long long> jCoeffs;    // (j_0, …, j_d)
    int d = 0;
    int stabilizationDegree = -1;      // first t where H agrees with the polynomial
    std::pair<int, int> fitWindow{0, 0};
    bool stable = false;
    std::string message;
};

// j_i = Σ_k C(k, i) N_k over the numerator in (1-z)^{d+1} form. (When the
// normalized pole order is lower, that numerator carries the padding
// (1-z)^{d-r} already, and j_0, …, j_{d-r-1} come out zero.)
inline std::vector<long long> j_from_numerator(const zpoly::Z& N, int d) {
    std::vector<long long> j(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i <= d; ++i)
        for (std::size_t k = 0; k < N.size(); ++k)
            j[static_cast<std::size_t>(i)] += binomial(static_cast<long long>(k), i) * N[k];
    return j;
}

inline GeneralizedHilbertData generalized_series(const ModuleSpec& spec, int t_max) {
    GeneralizedHilbertData data;
    data.d = spec.d;
    if (t_max < 0) throw std::invalid_argument("generalized_series: negative t_max");
    for (int t = 0; t <= t_max; ++t) {
        data.epsilon.push_back(gamma_length(spec, t));
        data.cumulative.push_back(data.epsilon.back() +
                                  (t > 0 ? data.cumulative.back() : 0));
    }
    SeriesFit fit = fit_series(data.cumulative, spec.d + 1);
    data.stable = fit.stable;
    data.message = fit.message;
    if (!fit.stable) return data;
    data.series = fit.series;
    data.r = fit.series.normalize().denomExponent - 1;
    data.jCoeffs = j_from_numerator(fit.series.numerator, spec.d);
    data.stabilizationDegree = fit.firstPolynomialIndex;
    data.fitWindow = {t_max - 2, t_max};
    return data;
}

inline std::vector<long long> j_coefficients(const GeneralizedHilbertData& data) {
    if (!data.stable)
        throw std::invalid_argument("j_coefficients: series did not stabilize (" + data.message +
                                    ")");
    return data.jCoeffs;
}

// ---------------------------------------------------------------------------
// Analytic spread, reductions, sections
// ---------------------------------------------------------------------------

namespace detail {

// Ring k[x_1..x_n, #y1..#yk] for fiber-cone eliminations, and the target
// ring k[#y1..#yk]; memoized per (ring, k).
inline std::pair<RingPtr, RingPtr> fiber_rings(const RingPtr& ring, int k) {
    static std::map<std::pair<std::uint64_t, int>, std::pair<RingPtr, RingPtr>> memo;
    auto key = std::make_pair(ring->id(), k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (ring->nvars() + k > kMaxVars)
        throw std::invalid_argument("analytic_spread: too many generators for the variable cap");
    std::vector<std::string> combined = ring->vars(), ys;
    for (int i = 1; i <= k; ++i) {
        std::string y = "#y" + std::to_string(i);
        combined.push_back(y);
        ys.push_back(y);
    }
    auto out = std::make_pair(make_ring(combined, ring->fp().modulus()),
                              make_ring(ys, ring->fp().modulus()));
    memo.emplace(std::move(key), out);
    return out;
}

} // namespace detail

// Fiber-cone dimension ℓ(I) = dim k[y]/Q, Q the contraction of
// (y_1 − f_1, …, y_k − f_k) to k[y]. Requires I equigenerated so that the
// fiber cone is the standard-graded algebra generated by the f_i.
inline int analytic_spread(const Ideal& I) {
    if (I.is_zero()) return 0;
    if (!equigenerated(I))
        throw std::invalid_argument("analytic_spread: ideal is not equigenerated");
    const RingPtr& R = I.ring();
    const int n = R->nvars();
    const int k = static_cast<int>(I.gens().size());
    auto [combined, yring] = detail::fiber_rings(R, k);

    std::vector<int> whereX(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) whereX[static_cast<std::size_t>(i)] = i;
    std::vector<Polynomial> gens;
    for (int i = 0; i < k; ++i)
        gens.push_back(Polynomial::variable(combined, n + i) -
                       detail::map_vars(I.gens()[static_cast<std::size_t>(i)], combined, whereX,
                                        grevlex_order));
    std::vector<int> xblock;
    for (int i = 0; i < n; ++i) xblock.push_back(i);
    Ideal Q = eliminate(Ideal::make(combined, std::move(gens)), xblock);

    std::vector<int> whereY(static_cast<std::size_t>(n) + static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) whereY[static_cast<std::size_t>(n + i)] = i;
    std::vector<Polynomial> qgens;
    for (const Polynomial& g : Q.gens()) {
        for (const Term& t : g.terms())
            for (int i = 0; i < n; ++i)
                if (t.m.e[i] != 0)
                    throw std::logic_error("analytic_spread: contraction is not y-only");
        qgens.push_back(detail::map_vars(g, yring, whereY, grevlex_order));
    }
    return ideal_dimension(Ideal::make(yring, std::move(qgens)));
}

struct MinimalReduction {
    Ideal J;                  // candidate reduction: ℓ(I) general combinations
    RandomCombination combo;  // recorded coefficient matrix
    int ell = 0;
    bool found = false;       // J I^r = I^{r+1} reached within r_max
    int reductionNumber = -1;
    std::vector<std::optional<long long>> lengths; // λ(I^{t+1}/J I^t), t ≤ r; nullopt = infinite
    std::string message;
};

inline MinimalReduction minimal_reduction(const Ideal& I, unsigned long long seed, int r_max) {
    MinimalReduction out;
    out.ell = analytic_spread(I);
    out.combo = random_linear_combination(I.gens(), out.ell, seed);
    out.J = Ideal::make(I.ring(), out.combo.elements);
    for (int r = 0; r <= r_max; ++r) {
        Ideal lhs = ideal_product(out.J, ideal_power(I, r));
        Ideal rhs = ideal_power(I, r + 1);
        try {
            out.lengths.push_back(length_between(lhs, rhs)); // J I^r ⊆ I^{r+1} always
        } catch (const infinite_length_error&) {
            out.lengths.push_back(std::nullopt);
        }
        if (ideal_contains(lhs, rhs)) {
            out.found = true;
            out.reductionNumber = r;
            return out;
        }
    }
    out.message = "not a reduction within r <= " + std::to_string(r_max) +
                  " at this seed; raise r_max or reseed";
    return out;
}

struct SectionResult {
    ModuleSpec spec;          // A replaced by A + (ξ_1, …, ξ_k)
    RandomCombination xi;     // recorded general elements of I
    bool dimensionDropped = false; // new d == old d − k
    std::string message;
};

// Mod out k seeded general elements of I: M ↦ M/(ξ_1, …, ξ_k)M, encoded by
// enlarging A. Generic sections drop the dimension by exactly k.
inline SectionResult section(const ModuleSpec& spec, int k, unsigned long long seed) {
    if (k < 0 || k > spec.d) throw std::invalid_argument("section: need 0 <= k <= d");
    SectionResult out;
    if (k == 0) {
        out.spec = spec;
        out.dimensionDropped = true;
        return out;
    }
    if (!equigenerated(spec.I))
        throw std::invalid_argument("section: ideal is not equigenerated");
    out.xi = random_linear_combination(spec.I.gens(), k, seed);
    std::vector<Polynomial> agens = spec.A.gens();
    agens.insert(agens.end(), out.xi.elements.begin(), out.xi.elements.end());
    out.spec = make_module_spec(spec.I, Ideal::make(spec.A.ring(), std::move(agens)));
    out.dimensionDropped = (out.spec.d == spec.d - k);
    if (!out.dimensionDropped)
        out.message = "dimension dropped to " + std::to_string(out.spec.d) + ", expected " +
                      std::to_string(spec.d - k) + "; seed looks non-generic";
    return out;
}

// ---------------------------------------------------------------------------
// Residual-intersection series and the ε₀/ε₁ pair
// ---------------------------------------------------------------------------

struct ResidualResult {
    RationalSeries series;   // Σ λ(R/(Ā + I^{t+1})) z^t as N(z)/(1-z)²
    bool zeroModule = false; // ℓ(I) < d: the residual module vanishes
    int ell = 0;
    Ideal Abar;              // (A + (x_1..x_{d-1})) : I^∞
    RandomCombination xs;    // the recorded general elements
    std::vector<long long> lengths;
    bool stable = false;
    std::string message;
};

inline ResidualResult residual_series(const ModuleSpec& spec, unsigned long long seed,
                                      int t_max) {
    ResidualResult out;
    out.ell = analytic_spread(spec.I);
    if (out.ell < spec.d) {
        out.zeroModule = true;
        out.stable = true;
        out.series = RationalSeries::zero();
        out.message = "analytic spread " + std::to_string(out.ell) + " < d = " +
                      std::to_string(spec.d) + ": residual module is zero";
        return out;
    }
    if (spec.d >= 2) out.xs = random_linear_combination(spec.I.gens(), spec.d - 1, seed);
    std::vector<Polynomial> agens = spec.A.gens();
    agens.insert(agens.end(), out.xs.elements.begin(), out.xs.elements.end());
    out.Abar = full_saturation(Ideal::make(spec.A.ring(), std::move(agens)), spec.I);
    for (int t = 0; t <= t_max; ++t)
        out.lengths.push_back(
            length_of_quotient(ideal_sum(out.Abar, ideal_power(spec.I, t + 1))));
    SeriesFit fit = fit_series(out.lengths, 2);
    out.stable = fit.stable;
    out.message = fit.message;
    if (fit.stable) out.series = fit.series;
    return out;
}

struct ClassicalReport {
    bool mPrimary = false;
    bool allEqual = false;
    std::vector<long long> viaGamma;   // ε(t)
    std::vector<long long> viaLengths; // λ((I^t + A)/(I^{t+1} + A))
};

// For I + A m-primary, Γ_m fixes I^tM/I^{t+1}M, so the generalized function
// must coincide with the classical one degree by degree.
inline ClassicalReport classical_consistency(const ModuleSpec& spec, int t_max) {
    ClassicalReport rep;
    rep.mPrimary = ideal_dimension(ideal_sum(spec.I, spec.A)) <= 0;
    if (!rep.mPrimary) return rep;
    rep.allEqual = true;
    for (int t = 0; t <= t_max; ++t) {
        rep.viaGamma.push_back(gamma_length(spec, t));
        rep.viaLengths.push_back(length_between(ideal_sum(ideal_power(spec.I, t + 1), spec.A),
                                                ideal_sum(ideal_power(spec.I, t), spec.A)));
        if (rep.viaGamma.back() != rep.viaLengths.back()) rep.allEqual = false;
    }
    return rep;
}

struct Epsilon01 {
    long long eps0 = 0;     // λ(Γ_m(IM/I²M))
    long long h0plush1 = 0; // λ(IM/((x_1..x_{d-1})M + I²M))
    long long eps1 = 0;     // h₀ + h₁ − ε₀
    long long h0 = 0;       // λ(M̄/IM̄)
    RandomCombination xs;
    Ideal Abar;
};

inline Epsilon01 epsilon0_epsilon1(const ModuleSpec& spec, unsigned long long seed) {
    if (analytic_spread(spec.I) != spec.d)
        throw std::invalid_argument("epsilon0_epsilon1: requires analytic spread equal to d");
    Epsilon01 out;
    out.eps0 = gamma_length(spec, 1);
    if (spec.d >= 2) out.xs = random_linear_combination(spec.I.gens(), spec.d - 1, seed);
    std::vector<Polynomial> agens = spec.A.gens();
    agens.insert(agens.end(), out.xs.elements.begin(), out.xs.elements.end());
    Ideal AX = Ideal::make(spec.A.ring(), agens);
    Ideal I2 = ideal_power(spec.I, 2);
    out.h0plush1 = length_between(ideal_sum(AX, I2), ideal_sum(spec.A, spec.I));
    out.eps1 = out.h0plush1 - out.eps0;
    out.Abar = full_saturation(AX, spec.I);
    out.h0 = length_of_quotient(ideal_sum(out.Abar, spec.I));
    return out;
}

} // namespace ghilb

#endif // GHILB_GENHILBERT_HPP
