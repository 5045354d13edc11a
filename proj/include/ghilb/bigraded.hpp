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

// Bigraded Hilbert functions of a pair of ideals (q, I) acting on M = R/A:
// the layer functions h^(0,0), h^(1,0), h^(1,1) on an (s,t) grid, exact
// integer bivariate polynomial fitting in the binomial basis, the triangle
// of normalized coefficients, and the structural checks built on them
// (coefficient/j-coefficient comparison, the inductive length formula for a
// general element, hyperplane-section invariance, and the intersection
// probe for partial systems of general elements).

#ifndef GHILB_BIGRADED_HPP
#define GHILB_BIGRADED_HPP

#include <algorithm>

#include "genhilbert.hpp"

namespace ghilb {

// ---------------------------------------------------------------------------
// Bigraded layer functions
// ---------------------------------------------------------------------------
//
//   h10(s,t) = λ( I^t M / (q^{s+1} I^t M + I^{t+1} M) )
//   h00(s,t) = λ( q^s I^t M / (q^{s+1} I^t M + I^{t+1} M) )  (q^0 = R)
//   h11(s,t) = Σ_{ν=0}^{t} h10(s,ν)
//
// All three are finite for every (s,t) once q + I + A is m-primary, because
// each quotient is killed by a power of q + I + A.

namespace detail {

// q^{s+1} I^t + I^{t+1} + A, the denominator ideal shared by every layer.
inline Ideal layer_floor(const Ideal& q, const Ideal& I, const Ideal& A, int s, int t) {
    Ideal qs = ideal_power(q, s + 1);
    Ideal it = ideal_power(I, t);
    return ideal_sum(ideal_sum(ideal_product(qs, it), ideal_power(I, t + 1)), A);
}

inline void require_layer_inputs(const Ideal& q, const Ideal& I, const Ideal& A) {
    require_same_ring(q.ring(), I.ring());
    require_same_ring(q.ring(), A.ring());
    if (!q.homogeneous() || !I.homogeneous() || !A.homogeneous())
        throw std::invalid_argument("bigraded: ideals must be homogeneous");
    if (ideal_dimension(ideal_sum(ideal_sum(q, I), A)) > 0)
        throw std::invalid_argument("bigraded: q + I + A must be m-primary");
}

} // namespace detail

inline long long bigraded_h10(const Ideal& q, const Ideal& I, const Ideal& A, int s, int t) {
    if (s < 0 || t < 0) throw std::invalid_argument("bigraded_h10: negative index");
    return length_between(detail::layer_floor(q, I, A, s, t),
                          ideal_sum(ideal_power(I, t), A));
}

struct BigradedPoint {
    long long h00 = 0;
    long long h10 = 0;
    long long h11 = 0;
};

// Single grid point, each layer computed from its own defining quotient
// (h11 as the partial sum over ν ≤ t). Tests compare these direct values
// against the difference/prefix-sum constructions used by bigraded_table.
inline BigradedPoint bigraded_h(const Ideal& q, const Ideal& I, const Ideal& A, int s, int t) {
    detail::require_layer_inputs(q, I, A);
    if (s < 0 || t < 0) throw std::invalid_argument("bigraded_h: negative index");
    BigradedPoint out;
    out.h10 = bigraded_h10(q, I, A, s, t);
    Ideal floor = detail::layer_floor(q, I, A, s, t);
    Ideal qsit = ideal_sum(ideal_sum(ideal_product(ideal_power(q, s), ideal_power(I, t)),
                                     ideal_power(I, t + 1)),
                           A);
    out.h00 = length_between(floor, qsit);
    for (int nu = 0; nu <= t; ++nu) out.h11 += bigraded_h10(q, I, A, s, nu);
    return out;
}

struct BigradedTable {
    Ideal q, I, A;
    int d = 0; // dim R/A: total degree of the h11 polynomial
    int s_max = 0, t_max = 0;
    // Indexed [s][t], 0 ≤ s ≤ s_max, 0 ≤ t ≤ t_max.
    std::vector<std::vector<long long>> h00, h10, h11;
};

inline int default_grid(int d) { return d + 3; }

// Full grid: h10 cells are computed directly, h11 rows as prefix sums and
// h00 rows as successive s-differences of h10 (h10(-1,t) = 0).
inline BigradedTable bigraded_table(const Ideal& q, const Ideal& I, const Ideal& A,
                                    int s_max = -1, int t_max = -1) {
    detail::require_layer_inputs(q, I, A);
    BigradedTable T;
    T.q = q;
    T.I = I;
    T.A = A;
    int dimA = ideal_dimension(A);
    T.d = dimA < 0 ? 0 : dimA;
    if (s_max < 0) s_max = default_grid(T.d);
    if (t_max < 0) t_max = default_grid(T.d);
    T.s_max = s_max;
    T.t_max = t_max;
    auto rows = static_cast<std::size_t>(s_max) + 1;
    auto cols = static_cast<std::size_t>(t_max) + 1;
    T.h10.assign(rows, std::vector<long long>(cols, 0));
    T.h11 = T.h10;
    T.h00 = T.h10;
    for (int s = 0; s <= s_max; ++s) {
        long long acc = 0;
        for (int t = 0; t <= t_max; ++t) {
            long long v = bigraded_h10(q, I, A, s, t);
            T.h10[s][t] = v;
            acc += v;
            T.h11[s][t] = acc;
            T.h00[s][t] = v - (s > 0 ? T.h10[s - 1][t] : 0);
        }
    }
    return T;
}

// ---------------------------------------------------------------------------
// Exact polynomial fitting in the binomial basis
// ---------------------------------------------------------------------------

// Fit vals[k] = f(n0 + k) by f(n) = Σ_{i ≤ degree} out[i]·C(n+i, i), peeling
// the top coefficient as the degree-th finite difference and subtracting.
// All arithmetic is exact; returns false when the window is too short or the
// residual fails to vanish at every point (f is not such a polynomial there).
inline bool binomial_basis_fit(const std::vector<long long>& vals, int n0, int degree,
                               std::vector<long long>& out) {
    if (degree < 0 || static_cast<int>(vals.size()) < degree + 1) return false;
    std::vector<long long> work = vals;
    out.assign(static_cast<std::size_t>(degree) + 1, 0);
    for (int i = degree; i >= 0; --i) {
        // i-th forward difference at the left end of the window.
        std::vector<long long> diff = work;
        for (int r = 0; r < i; ++r)
            for (std::size_t k = 0; k + 1 < diff.size(); ++k) diff[k] = diff[k + 1] - diff[k];
        out[static_cast<std::size_t>(i)] = diff[0];
        for (std::size_t k = 0; k < work.size(); ++k)
            work[k] -= diff[0] * binomial(n0 + static_cast<long long>(k) + i, i);
    }
    for (long long r : work)
        if (r != 0) return false;
    return true;
}

struct BivariateFit {
    bool ok = false;
    int degree = 0;
    // a[i][j]: coefficient of C(s+i,i)·C(t+j,j), 0 ≤ i,j ≤ degree.
    std::vector<std::vector<long long>> a;
    // Top-left corner of the largest lower-right rectangle on which the
    // fitted polynomial matches the grid exactly.
    std::pair<int, int> firstAgreement{-1, -1};
    std::string message;
};

inline long long evaluate_fit(const BivariateFit& fit, long long s, long long t) {
    long long v = 0;
    for (int i = 0; i <= fit.degree; ++i)
        for (int j = 0; j <= fit.degree; ++j)
            if (fit.a[i][j] != 0) v += fit.a[i][j] * binomial(s + i, i) * binomial(t + j, j);
    return v;
}

// Fit grid[s][t] by a polynomial Σ a(i,j)·C(s+i,i)·C(t+j,j) of total degree
// ≤ degree, exactly: interpolate each of the top degree+1 rows in t over the
// last degree+1 columns, interpolate the resulting row coefficients in s,
// then validate on a held-out margin of width one (row s_max-degree-1 and
// column t_max-degree-1). Grid values must already be polynomial there.
inline BivariateFit fit_grid(const std::vector<std::vector<long long>>& grid, int degree) {
    BivariateFit fit;
    fit.degree = degree;
    int s_max = static_cast<int>(grid.size()) - 1;
    int t_max = s_max >= 0 ? static_cast<int>(grid[0].size()) - 1 : -1;
    if (degree < 0 || s_max < degree + 1 || t_max < degree + 1) {
        fit.message = "grid too small: need s_max and t_max at least degree+1";
        return fit;
    }
    int s0 = s_max - degree, t0 = t_max - degree;
    // Row interpolation: grid[s][·] = Σ_j c[s][j]·C(t+j,j) on the anchor window.
    std::vector<std::vector<long long>> c(static_cast<std::size_t>(degree) + 1);
    for (int s = s0; s <= s_max; ++s) {
        std::vector<long long> row(grid[static_cast<std::size_t>(s)].begin() + t0,
                                   grid[static_cast<std::size_t>(s)].begin() + t_max + 1);
        if (!binomial_basis_fit(row, t0, degree, c[static_cast<std::size_t>(s - s0)])) {
            fit.message = "no stable polynomial region found";
            return fit;
        }
    }
    // Column interpolation of each t-coefficient in s.
    fit.a.assign(static_cast<std::size_t>(degree) + 1,
                 std::vector<long long>(static_cast<std::size_t>(degree) + 1, 0));
    for (int j = 0; j <= degree; ++j) {
        std::vector<long long> col(static_cast<std::size_t>(degree) + 1);
        for (int s = s0; s <= s_max; ++s)
            col[static_cast<std::size_t>(s - s0)] = c[static_cast<std::size_t>(s - s0)][static_cast<std::size_t>(j)];
        std::vector<long long> as;
        if (!binomial_basis_fit(col, s0, degree, as)) {
            fit.message = "no stable polynomial region found";
            return fit;
        }
        for (int i = 0; i <= degree; ++i) fit.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = as[static_cast<std::size_t>(i)];
    }
    // Total degree bound: coefficients beyond it must vanish.
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; j <= degree; ++j)
            if (i + j > degree && fit.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
                fit.message = "no stable polynomial region found (total degree exceeded)";
                return fit;
            }
    // Held-out margin: the L-shaped band one step outside the anchor block.
    for (int s = s0 - 1; s <= s_max; ++s)
        for (int t = t0 - 1; t <= t_max; ++t) {
            if (s >= s0 && t >= t0) continue;
            if (evaluate_fit(fit, s, t) != grid[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]) {
                fit.message = "no stable polynomial region found";
                return fit;
            }
        }
    fit.ok = true;
    // Largest lower-right rectangle of exact agreement: per row, the first
    // column from which the tail matches; take the worst row over a suffix.
    std::vector<int> rowFrom(static_cast<std::size_t>(s_max) + 1, t_max + 1);
    for (int s = 0; s <= s_max; ++s) {
        int from = t_max + 1;
        for (int t = t_max; t >= 0; --t) {
            if (evaluate_fit(fit, s, t) != grid[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]) break;
            from = t;
        }
        rowFrom[static_cast<std::size_t>(s)] = from;
    }
    int sFirst = s_max, tFirst = rowFrom[static_cast<std::size_t>(s_max)];
    for (int s = s_max; s >= 0; --s) {
        if (rowFrom[static_cast<std::size_t>(s)] > t_max) break;
        sFirst = s;
        tFirst = std::max(tFirst, rowFrom[static_cast<std::size_t>(s)]);
    }
    fit.firstAgreement = {sFirst, tFirst};
    return fit;
}

// h11 carries the full invariant package: total degree equals d = dim R/A.
inline BivariateFit fit_bivariate(const BigradedTable& table) {
    return fit_grid(table.h11, table.d);
}

// ---------------------------------------------------------------------------
// Normalized coefficient triangle
// ---------------------------------------------------------------------------

// For each codimension step i the tuple (a(i,d-i), a(i-1,d-i), …, a(0,d-i)):
// the column j = d-i of the fitted coefficients read from the diagonal down.
struct CiupercaTuple {
    int i = 0;
    std::vector<long long> values;
};

struct CiupercaData {
    int d = 0;
    std::vector<CiupercaTuple> tuples;
    long long a0d = 0; // a(0,d): the leading normalized coefficient
};

inline CiupercaData ciuperca_coefficients(const BigradedTable& table, const BivariateFit& fit) {
    if (!fit.ok) throw std::invalid_argument("ciuperca_coefficients: fit is not stable");
    if (fit.degree != table.d)
        throw std::invalid_argument("ciuperca_coefficients: fit degree does not match dim R/A");
    CiupercaData out;
    out.d = table.d;
    for (int i = 0; i <= table.d; ++i) {
        CiupercaTuple tup;
        tup.i = i;
        for (int k = i; k >= 0; --k)
            tup.values.push_back(fit.a[static_cast<std::size_t>(k)][static_cast<std::size_t>(table.d - i)]);
        out.tuples.push_back(std::move(tup));
    }
    out.a0d = fit.a[0][static_cast<std::size_t>(table.d)];
    return out;
}

// ---------------------------------------------------------------------------
// Coefficient comparison: a(0, d-i) against (-1)^i j_i
// ---------------------------------------------------------------------------

struct CoefficientComparison {
    bool ok = false;           // every pair matched for some q on the ladder
    bool inconclusive = false; // no q on the ladder produced a stable fit
    int attempts = 0;
    Ideal qUsed;               // the q that produced the verdict
    std::string qDescription;
    std::vector<long long> a;        // a(0, d-i), i = 0..d
    std::vector<long long> expected; // (-1)^i j_i,  i = 0..d
    std::string message;
};

// Compare the fitted a(0, d-i) against (-1)^i j_i for i = 0..d. Starts from
// the supplied q and, if the bivariate fit is unstable or disagrees, retries
// with q = (y_1^n, …, y_d^n) for seeded general linear forms y_i and rising
// n: instability on every rung is reported as inconclusive, never as a
// falsified identity.
inline CoefficientComparison verify_prop24(const ModuleSpec& spec, const Ideal& q,
                                           unsigned long long seed = 1,
                                           int s_max = -1, int t_max = -1) {
    CoefficientComparison out;
    const int d = spec.d;
    GeneralizedHilbertData data = generalized_series(spec, std::max(default_grid(d),
                                                                    t_max < 0 ? 0 : t_max));
    if (!data.stable) {
        out.inconclusive = true;
        out.message = "generalized series did not stabilize: " + data.message;
        return out;
    }
    out.expected.resize(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        out.expected[static_cast<std::size_t>(i)] =
            (i % 2 == 0 ? 1 : -1) * data.jCoeffs[static_cast<std::size_t>(i)];

    const RingPtr& R = spec.I.ring();
    std::string lastMismatch;
    for (int attempt = 0; attempt <= 3; ++attempt) {
        Ideal qa = q;
        std::string desc = "caller-supplied q";
        if (attempt > 0 && d == 0) break;
        if (attempt > 0) {
            std::vector<Polynomial> forms = random_linear_combination(
                maximal_ideal(R).gens(), d,
                seed + 1000ULL * static_cast<unsigned long long>(attempt)).elements;
            std::vector<Polynomial> gens;
            for (const Polynomial& y : forms) {
                Polynomial p = y;
                for (int e = 1; e < attempt; ++e) p = p * y;
                gens.push_back(std::move(p));
            }
            qa = Ideal::make(R, std::move(gens));
            desc = "general forms to the power " + std::to_string(attempt);
        }
        if (ideal_dimension(ideal_sum(ideal_sum(qa, spec.I), spec.A)) > 0) continue;
        ++out.attempts;
        BigradedTable table = bigraded_table(qa, spec.I, spec.A, s_max, t_max);
        BivariateFit fit = fit_bivariate(table);
        if (!fit.ok) {
            out.message = fit.message;
            continue;
        }
        std::vector<long long> a(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i)
            a[static_cast<std::size_t>(i)] = fit.a[0][static_cast<std::size_t>(d - i)];
        if (a == out.expected) {
            out.ok = true;
            out.qUsed = qa;
            out.qDescription = desc;
            out.a = std::move(a);
            out.message = "a(0,d-i) matches (-1)^i j_i for all i";
            return out;
        }
        out.qUsed = qa;
        out.qDescription = desc;
        out.a = a;
        lastMismatch = "stable fit disagrees with the j-coefficients (" + desc + ")";
    }
    if (!lastMismatch.empty()) {
        out.message = lastMismatch;
    } else {
        out.inconclusive = true;
        if (out.message.empty()) out.message = "no q on the ladder was an ideal of definition";
        else out.message = "no stable fit on any rung: " + out.message;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Inductive length formula for a general element x of I
// ---------------------------------------------------------------------------
//
// With M̄ = M/xM the identity checked at every grid point is
//
//   h10_{(q,I,M)}(s,t) = h11_{(q,I,M̄)}(s,t)
//     + Σ_{ν=2}^{t} λ( (I^ν M :_M x) / [ ((q^{s+1} I^ν M + I^{ν+1} M) :_M x) + I^{ν-1} M ] )
//     - Σ_{ν=1}^{t} λ( ((q^{s+1} I^ν M + I^{ν+1} M) :_{I^{ν-1} M} x) / [ q^{s+1} I^{ν-1} M + I^ν M ] )
//
// For M = R/A every module colon is the ideal colon of the lifted ideal
// (which contains A), so each term is a length_between of explicit ideals.
// Both correction quotients are killed by q^{s+1} + I + A, hence finite.

struct SinghReport {
    int s_max = 0, t_max = 0;
    bool allEqual = false;
    bool nonGeneric = false; // a cell failed containment/finiteness for this x
    std::vector<std::vector<long long>> lhs;        // h10 of (q, I, M)
    std::vector<std::vector<long long>> rhs;        // h11 of M̄ plus corrections
    std::vector<std::vector<long long>> correction; // Σ pos - Σ neg per cell
    int stabilizationT = -1; // first t with correction(s,·) constant from t on, all s
    std::vector<long long> beta; // correction(s, t ≥ t0) = Σ beta[i]·C(s+i,i)
    bool betaFit = false;
    int betaFrom = 0; // first s of the window the beta fit is exact on
    std::string message;
};

inline SinghReport singh_check(const Ideal& q, const ModuleSpec& spec, const Polynomial& x,
                               int s_max = -1, int t_max = -1) {
    detail::require_layer_inputs(q, spec.I, spec.A);
    if (x.is_zero() || !x.is_homogeneous())
        throw std::invalid_argument("singh_check: x must be nonzero homogeneous");
    if (!ideal_contains(spec.I, x))
        throw std::invalid_argument("singh_check: x must be an element of I");
    SinghReport out;
    const Ideal& I = spec.I;
    const Ideal& A = spec.A;
    const int d = spec.d;
    if (s_max < 0) s_max = default_grid(d);
    if (t_max < 0) t_max = default_grid(d);
    out.s_max = s_max;
    out.t_max = t_max;
    Ideal Abar = ideal_sum(A, Ideal::make(x.ring(), {x}));

    auto rows = static_cast<std::size_t>(s_max) + 1;
    auto cols = static_cast<std::size_t>(t_max) + 1;
    out.lhs.assign(rows, std::vector<long long>(cols, 0));
    out.rhs = out.lhs;
    out.correction = out.lhs;
    out.allEqual = true;
    for (int s = 0; s <= s_max; ++s) {
        long long barSum = 0, posSum = 0, negSum = 0;
        for (int nu = 0; nu <= t_max; ++nu) {
            try {
                barSum += bigraded_h10(q, I, Abar, s, nu);
                if (nu >= 1) {
                    Ideal floorNu = detail::layer_floor(q, I, A, s, nu);
                    Ideal floorColon = colon(floorNu, x);
                    Ideal lower = ideal_sum(ideal_power(I, nu - 1), A);
                    if (nu >= 2)
                        posSum += length_between(ideal_sum(floorColon, lower),
                                                 colon(ideal_sum(ideal_power(I, nu), A), x));
                    negSum += length_between(detail::layer_floor(q, I, A, s, nu - 1),
                                             intersect(floorColon, lower));
                }
            } catch (const std::exception& e) {
                out.nonGeneric = true;
                out.allEqual = false;
                out.message = "cell (s=" + std::to_string(s) + ", nu=" + std::to_string(nu) +
                              ") failed: " + e.what();
                return out;
            }
            out.lhs[s][nu] = bigraded_h10(q, I, A, s, nu);
            out.correction[s][nu] = posSum - negSum;
            out.rhs[s][nu] = barSum + posSum - negSum;
            if (out.lhs[s][nu] != out.rhs[s][nu]) out.allEqual = false;
        }
    }
    if (!out.allEqual && out.message.empty())
        out.message = "length formula failed at some grid point";

    // Where does the correction become independent of t? A stabilization
    // claim needs at least two equal tail entries, so t0 = t_max (a
    // one-point tail) never counts as evidence.
    for (int t0 = 0; t0 <= t_max - 1; ++t0) {
        bool stable = true;
        for (int s = 0; s <= s_max && stable; ++s)
            for (int t = t0; t <= t_max && stable; ++t)
                stable = out.correction[s][t] == out.correction[s][t0];
        if (stable) {
            out.stabilizationT = t0;
            break;
        }
    }
    // Fit the stabilized correction as Σ beta_i C(s+i,i), degree ≤ d-1,
    // allowing the polynomial behaviour to start at some s > 0.
    if (out.stabilizationT >= 0 && d >= 1) {
        for (int sFrom = 0; sFrom + d <= s_max + 1 && !out.betaFit; ++sFrom) {
            std::vector<long long> tail;
            for (int s = sFrom; s <= s_max; ++s)
                tail.push_back(out.correction[s][t_max]);
            if (binomial_basis_fit(tail, sFrom, d - 1, out.beta)) {
                out.betaFit = true;
                out.betaFrom = sFrom;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hyperplane-section invariance of the j-coefficients
// ---------------------------------------------------------------------------

struct SeedInvariance {
    unsigned long long seed = 0;
    bool dimensionDropped = false;
    bool stable = false;
    std::vector<long long> jAfter;
    bool preserved = false; // j_i agrees for i = 0 .. d-2
    long long delta = 0;    // j_{d-1}(after) - j_{d-1}(before)
    bool probePassed = false; // (I^{t+1}+A) : xi == I^t+A for t = 1..probe_t_max
    std::string message;
};

struct InvarianceReport {
    int d = 0;
    std::vector<long long> jBefore;
    std::vector<SeedInvariance> perSeed;
    bool allPreserved = false; // every seed with a dropped dimension and stable fit
    bool remarkHolds = false;  // delta >= 0 on every seed whose probe passed
    std::string message;
};

// One general hyperplane section per seed: the first d-1 j-coefficients must
// survive, and when the initial form of the section element is regular (the
// colon probe) the top coefficient may only grow.
inline InvarianceReport hyperplane_invariance_check(const ModuleSpec& spec,
                                                    const std::vector<unsigned long long>& seeds,
                                                    int t_max, int probe_t_max = 4) {
    InvarianceReport out;
    out.d = spec.d;
    if (spec.d < 1) throw std::invalid_argument("hyperplane_invariance_check: need dim >= 1");
    GeneralizedHilbertData before = generalized_series(spec, t_max);
    if (!before.stable) {
        out.message = "series before the section did not stabilize: " + before.message;
        return out;
    }
    out.jBefore = before.jCoeffs;
    bool anyQualified = false, allPreserved = true, remark = true, anyProbe = false;
    for (unsigned long long seed : seeds) {
        SeedInvariance row;
        row.seed = seed;
        SectionResult cut = section(spec, 1, seed);
        row.dimensionDropped = cut.dimensionDropped;
        if (!cut.dimensionDropped) {
            row.message = "section did not drop the dimension";
            out.perSeed.push_back(std::move(row));
            continue;
        }
        GeneralizedHilbertData after = generalized_series(cut.spec, t_max);
        row.stable = after.stable;
        if (!after.stable) {
            row.message = "series after the section did not stabilize: " + after.message;
            out.perSeed.push_back(std::move(row));
            continue;
        }
        row.jAfter = after.jCoeffs;
        row.preserved = true;
        for (int i = 0; i + 2 <= spec.d; ++i)
            if (after.jCoeffs[static_cast<std::size_t>(i)] != before.jCoeffs[static_cast<std::size_t>(i)])
                row.preserved = false;
        row.delta = after.jCoeffs[static_cast<std::size_t>(spec.d - 1)] -
                    before.jCoeffs[static_cast<std::size_t>(spec.d - 1)];
        row.probePassed = true;
        const Polynomial& xi = cut.xi.elements.front();
        for (int t = 1; t <= probe_t_max && row.probePassed; ++t)
            row.probePassed = ideal_equal(colon(ideal_sum(ideal_power(spec.I, t + 1), spec.A), xi),
                                          ideal_sum(ideal_power(spec.I, t), spec.A));
        anyQualified = true;
        allPreserved = allPreserved && row.preserved;
        if (row.probePassed) {
            anyProbe = true;
            remark = remark && row.delta >= 0;
        }
        out.perSeed.push_back(std::move(row));
    }
    out.allPreserved = anyQualified && allPreserved;
    out.remarkHolds = anyProbe && remark;
    if (!anyQualified) out.message = "no seed produced a dimension-dropping stable section";
    return out;
}

// ---------------------------------------------------------------------------
// Intersection probe for partial systems of general elements
// ---------------------------------------------------------------------------

// For general x_1,…,x_d in I and J_i = (x_1,…,x_i) the probe tests, at each
// supplied finite s and for i = 1..d-1, the module equality
//
//   J_i I M ∩ (q^{s+1} I·IM + I^2·IM)  =  J_i (q^{s+1} I M + I^2 M),
//
// i.e. as ideals containing A:
//
//   (J_i I + A) ∩ (q^{s+1} I^2 + I^3 + A)  =  J_i (q^{s+1} I + I^2) + A.

struct IntersectionProbe {
    bool applicable = false;
    RandomCombination xs; // the recorded general elements x_1..x_d
    std::vector<int> sValues;
    std::vector<std::vector<bool>> equal; // [i-1][k] for J_i at s = sValues[k]
    bool allEqual = false;
    std::string message;
};

inline IntersectionProbe thm34_probe(const ModuleSpec& spec, const Ideal& q,
                                     const std::vector<int>& sValues,
                                     unsigned long long seed) {
    require_same_ring(spec.I.ring(), q.ring());
    IntersectionProbe out;
    out.sValues = sValues;
    const int d = spec.d;
    if (d < 2) {
        out.message = "probe needs dim >= 2 (tests J_1..J_{d-1})";
        return out;
    }
    out.xs = random_linear_combination(spec.I.gens(), d, seed);
    out.applicable = true;
    Ideal I2 = ideal_power(spec.I, 2);
    Ideal I3 = ideal_power(spec.I, 3);
    out.allEqual = true;
    for (int i = 1; i <= d - 1; ++i) {
        Ideal Ji = Ideal::make(spec.I.ring(), std::vector<Polynomial>(out.xs.elements.begin(),
                                                                      out.xs.elements.begin() + i));
        Ideal JiI = ideal_sum(ideal_product(Ji, spec.I), spec.A);
        std::vector<bool> row;
        for (int s : sValues) {
            Ideal qs1 = ideal_power(q, s + 1);
            Ideal lhs = intersect(JiI, ideal_sum(ideal_sum(ideal_product(qs1, I2), I3), spec.A));
            Ideal rhs = ideal_sum(ideal_product(Ji, ideal_sum(ideal_product(qs1, spec.I), I2)),
                                  spec.A);
            bool eq = ideal_equal(lhs, rhs);
            row.push_back(eq);
            if (!eq) out.allEqual = false;
        }
        out.equal.push_back(std::move(row));
    }
    out.message = out.allEqual ? "probe equality holds at every sampled (i, s)"
                               : "probe equality failed at some (i, s)";
    return out;
}

} // namespace ghilb

#endif // GHILB_BIGRADED_HPP
