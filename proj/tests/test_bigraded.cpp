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

#include <catch2/catch_amalgamated.hpp>

#include "ghilb/bigraded.hpp"
#include "testutil.hpp"

using namespace ghilb;

namespace {

ModuleSpec spec_of(const RingPtr& R, const std::vector<std::string>& igens,
                   const std::vector<std::string>& agens = {}) {
    return make_module_spec(tu::ideal_of(R, igens), Ideal::make(R, tu::parse_all(R, agens)));
}

using Grid = std::vector<std::vector<long long>>;

} // namespace

TEST_CASE("bigraded layer functions on the maximal ideal") {
    RingPtr R = make_ring({"x", "y"});
    Ideal m = maximal_ideal(R);
    Ideal A = Ideal::make(R, {});

    // h10(s,t) = dim m^t/m^{t+1} = t+1, independent of s because
    // m^{s+1} m^t lies inside m^{t+1} already.
    for (int t = 0; t <= 4; ++t) CHECK(bigraded_h10(m, m, A, 0, t) == t + 1);
    CHECK(bigraded_h10(m, m, A, 2, 3) == 4);

    BigradedTable T = bigraded_table(m, m, A, 4, 4);
    CHECK(T.d == 2);
    for (int t = 0; t <= 4; ++t) {
        CHECK(T.h00[0][t] == T.h10[0][t]); // q^0 = R makes the layers agree at s = 0
    }
    CHECK(T.h11[0][2] == 1 + 2 + 3);

    // Direct point computation agrees with the prefix-sum/difference grids.
    BigradedPoint p = bigraded_h(m, m, A, 2, 3);
    CHECK(p.h10 == T.h10[2][3]);
    CHECK(p.h00 == T.h00[2][3]);
    CHECK(p.h11 == T.h11[2][3]);

    CHECK_THROWS_AS(bigraded_h(m, m, A, -1, 0), std::invalid_argument);
    Ideal principal = tu::ideal_of(R, {"x"});
    CHECK_THROWS_AS(bigraded_h(principal, principal, A, 0, 0), std::invalid_argument);
}

TEST_CASE("bigraded layers of a non-m-primary ideal") {
    RingPtr R = make_ring({"x", "y"});
    Ideal m = maximal_ideal(R);
    Ideal I = tu::ideal_of(R, {"x^2", "x*y"});
    Ideal A = Ideal::make(R, {});

    CHECK(bigraded_h(m, I, A, 0, 0).h11 == 1);

    // Closed forms: h10(0,t) = t+1 and h10(s,t) = s+2t+2 for s,t >= 1.
    CHECK(bigraded_h10(m, I, A, 0, 1) == 2);
    CHECK(bigraded_h10(m, I, A, 0, 2) == 3);
    CHECK(bigraded_h10(m, I, A, 1, 1) == 5);
    CHECK(bigraded_h10(m, I, A, 2, 3) == 10);

    BigradedTable T = bigraded_table(m, I, A, 5, 5);
    BigradedPoint p = bigraded_h(m, I, A, 2, 3);
    CHECK(p.h00 == T.h00[2][3]); // direct q^s-floor quotient vs. s-difference
    CHECK(p.h00 == 1);
    CHECK(p.h11 == T.h11[2][3]);
}

TEST_CASE("binomial basis interpolation") {
    // f(n) = 3 C(n+2,2) - 1, sampled on n = 2..8.
    std::vector<long long> vals;
    for (long long n = 2; n <= 8; ++n) vals.push_back(3 * binomial(n + 2, 2) - 1);
    std::vector<long long> c;
    REQUIRE(binomial_basis_fit(vals, 2, 2, c));
    CHECK(c == std::vector<long long>{-1, 0, 3});
    CHECK_FALSE(binomial_basis_fit(vals, 2, 1, c)); // quadratic data, linear model
    CHECK_FALSE(binomial_basis_fit({1, 2}, 0, 2, c)); // window shorter than degree+1

    std::vector<long long> fives(4, 5);
    REQUIRE(binomial_basis_fit(fives, 3, 0, c));
    CHECK(c == std::vector<long long>{5});
}

TEST_CASE("bivariate fitting on synthetic grids") {
    SECTION("constant grid") {
        Grid g(4, std::vector<long long>(4, 7));
        BivariateFit fit = fit_grid(g, 0);
        REQUIRE(fit.ok);
        CHECK(fit.a[0][0] == 7);
        CHECK(fit.firstAgreement == std::pair<int, int>{0, 0});
    }
    SECTION("product grid (s+1)(t+1)") {
        Grid g(6, std::vector<long long>(6, 0));
        for (int s = 0; s < 6; ++s)
            for (int t = 0; t < 6; ++t) g[s][t] = (s + 1LL) * (t + 1);
        BivariateFit fit = fit_grid(g, 2);
        REQUIRE(fit.ok);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) CHECK(fit.a[i][j] == ((i == 1 && j == 1) ? 1 : 0));
        CHECK(fit.firstAgreement == std::pair<int, int>{0, 0});
    }
    SECTION("total degree above the bound is rejected") {
        Grid g(6, std::vector<long long>(6, 0));
        for (int s = 0; s < 6; ++s)
            for (int t = 0; t < 6; ++t) g[s][t] = binomial(s + 2, 2) * binomial(t + 2, 2);
        BivariateFit fit = fit_grid(g, 2);
        CHECK_FALSE(fit.ok);
    }
    SECTION("agreement region that starts late in t") {
        Grid g(6, std::vector<long long>(6, 0));
        for (int s = 0; s < 6; ++s)
            for (int t = 0; t < 6; ++t) g[s][t] = t >= 2 ? t + 1 : 99;
        BivariateFit fit = fit_grid(g, 1);
        REQUIRE(fit.ok);
        CHECK(fit.a[0][1] == 1);
        CHECK(fit.firstAgreement == std::pair<int, int>{0, 2});
    }
    SECTION("grid too small") {
        Grid g(2, std::vector<long long>(2, 1));
        CHECK_FALSE(fit_grid(g, 1).ok);
    }
}

TEST_CASE("fitted coefficients of bigraded tables") {
    RingPtr R = make_ring({"x", "y"});
    Ideal m = maximal_ideal(R);
    Ideal A = Ideal::make(R, {});

    SECTION("maximal ideal: pure leading coefficient") {
        BigradedTable T = bigraded_table(m, m, A, 5, 5);
        BivariateFit fit = fit_bivariate(T);
        REQUIRE(fit.ok);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) CHECK(fit.a[i][j] == ((i == 0 && j == 2) ? 1 : 0));
        CiupercaData cd = ciuperca_coefficients(T, fit);
        CHECK(cd.a0d == 1);
        REQUIRE(cd.tuples.size() == 3);
        CHECK(cd.tuples[1].values == std::vector<long long>{0, 0}); // ideal of definition:
        CHECK(cd.tuples[2].values == std::vector<long long>{0, 0, 0}); // a(l,d-i) = 0 for l > 0
    }
    SECTION("height-one ideal with torsion: mixed coefficients") {
        Ideal I = tu::ideal_of(R, {"x^2", "x*y"});
        BigradedTable T = bigraded_table(m, I, A, 5, 5);
        BivariateFit fit = fit_bivariate(T);
        REQUIRE(fit.ok);
        CHECK(fit.a[0][2] == 2);
        CHECK(fit.a[1][1] == 1);
        CHECK(fit.a[0][1] == -1);
        CHECK(fit.a[0][0] == 0);
        CHECK(fit.a[1][0] == 0);
        CHECK(fit.firstAgreement == std::pair<int, int>{1, 0});
        CiupercaData cd = ciuperca_coefficients(T, fit);
        CHECK(cd.tuples[1].values == std::vector<long long>{1, -1});
        // a(0,d) equals the leading j-coefficient of the torsion series.
        GeneralizedHilbertData data = generalized_series(spec_of(R, {"x^2", "x*y"}), 6);
        REQUIRE(data.stable);
        CHECK(cd.a0d == data.jCoeffs[0]);
    }
    SECTION("m-primary complete intersection: a(0,d) is the multiplicity") {
        BigradedTable T = bigraded_table(m, tu::ideal_of(R, {"x^2", "y^2"}), A, 5, 5);
        BivariateFit fit = fit_bivariate(T);
        REQUIRE(fit.ok);
        CHECK(fit.a[0][2] == 4);
    }
    SECTION("fit-table agreement is required for the coefficient triangle") {
        BigradedTable T = bigraded_table(m, m, A, 5, 5);
        BivariateFit bad;
        CHECK_THROWS_AS(ciuperca_coefficients(T, bad), std::invalid_argument);
    }
}

TEST_CASE("coefficient shifts between the layer polynomials") {
    RingPtr R = make_ring({"x", "y"});
    Ideal m = maximal_ideal(R);
    Ideal I = tu::ideal_of(R, {"x^2", "x*y"});
    Ideal A = Ideal::make(R, {});
    BigradedTable T = bigraded_table(m, I, A, 5, 5);

    BivariateFit f11 = fit_bivariate(T);
    BivariateFit f10 = fit_grid(T.h10, 1);
    BivariateFit f00 = fit_grid(T.h00, 0);
    REQUIRE(f11.ok);
    REQUIRE(f10.ok);
    REQUIRE(f00.ok);
    // Summation in t shifts the t-index, differencing in s drops the s-index:
    //   a10(i,j) = a11(i,j+1) and a00(i,j) = a10(i+1,j).
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j + i <= 1; ++j) CHECK(f10.a[i][j] == f11.a[i][j + 1]);
    CHECK(f00.a[0][0] == f10.a[1][0]);
    CHECK(f10.a[1][0] == 1);
    CHECK(f10.a[0][1] == 2);
    CHECK(f10.a[0][0] == -1);
}

TEST_CASE("normalized coefficients match the j-coefficients") {
    RingPtr R = make_ring({"x", "y"});
    Ideal m = maximal_ideal(R);

    SECTION("maximal ideal") {
        CoefficientComparison rep = verify_prop24(spec_of(R, {"x", "y"}), m);
        REQUIRE(rep.ok);
        CHECK(rep.attempts == 1);
        CHECK(rep.a == std::vector<long long>{1, 0, 0});
        CHECK(rep.a == rep.expected);
    }
    SECTION("height-one ideal with torsion") {
        CoefficientComparison rep = verify_prop24(spec_of(R, {"x^2", "x*y"}), m);
        REQUIRE(rep.ok);
        CHECK(rep.a == std::vector<long long>{2, -1, 0});
    }
    SECTION("m-primary complete intersection") {
        CoefficientComparison rep = verify_prop24(spec_of(R, {"x^2", "y^2"}), m);
        REQUIRE(rep.ok);
        CHECK(rep.a == std::vector<long long>{4, 0, 0});
    }
}

TEST_CASE("inductive length formula for an element of I") {
    RingPtr R = make_ring({"x", "y"});
    Ideal m = maximal_ideal(R);

    SECTION("classical branch: regular linear element of the maximal ideal") {
        ModuleSpec spec = spec_of(R, {"x", "y"});
        Polynomial x = random_linear_combination(m.gens(), 1, 17).elements[0];
        SinghReport rep = singh_check(m, spec, x, 4, 4);
        CHECK(rep.allEqual);
        CHECK_FALSE(rep.nonGeneric);
        for (const auto& row : rep.correction)
            for (long long c : row) CHECK(c == 0);
        CHECK(rep.stabilizationT == 0);
        REQUIRE(rep.betaFit);
        CHECK(rep.beta == std::vector<long long>{0, 0});

        // The t-graded slice of the same identity, checked directly:
        // λ(I^t/I^{t+1}) = λ(M/(I^{t+1}+xM)) - λ((I^{t+1}:x)/I^t).
        Ideal xI = Ideal::make(R, {x});
        for (int t = 1; t <= 5; ++t) {
            Ideal It = ideal_power(spec.I, t), It1 = ideal_power(spec.I, t + 1);
            long long lhs = length_between(It1, It);
            long long rhs = length_of_quotient(ideal_sum(It1, xI)) -
                            length_between(It, colon(It1, x));
            CHECK(lhs == rhs);
        }
    }
    SECTION("general element of a torsion ideal: corrections cancel") {
        ModuleSpec spec = spec_of(R, {"x^2", "x*y"});
        Polynomial x = random_linear_combination(spec.I.gens(), 1, 19).elements[0];
        SinghReport rep = singh_check(m, spec, x, 4, 4);
        CHECK(rep.allEqual);
        for (const auto& row : rep.correction)
            for (long long c : row) CHECK(c == 0);
        CHECK(rep.stabilizationT == 0);
        REQUIRE(rep.betaFit);
        CHECK(rep.beta == std::vector<long long>{0, 0});
    }
    SECTION("non-superficial generator: identity still exact, corrections drift") {
        ModuleSpec spec = spec_of(R, {"x^2", "x*y"});
        SinghReport rep = singh_check(m, spec, tu::parse_all(R, {"x^2"})[0], 4, 4);
        CHECK(rep.allEqual);
        CHECK_FALSE(rep.nonGeneric);
        CHECK(rep.correction[0][2] == 1); // first nonzero positive correction
        CHECK(rep.stabilizationT == -1);  // 2t - s - 1 never settles in t
        CHECK_FALSE(rep.betaFit);
    }
    SECTION("input validation") {
        ModuleSpec spec = spec_of(R, {"x^2", "x*y"});
        CHECK_THROWS_AS(singh_check(m, spec, tu::parse_all(R, {"y"})[0], 2, 2), std::invalid_argument);
        CHECK_THROWS_AS(singh_check(m, spec, Polynomial::constant(R, 0), 2, 2), std::invalid_argument);
        CHECK_THROWS_AS(singh_check(m, spec, tu::parse_all(R, {"x^2+x"})[0], 2, 2),
                        std::invalid_argument);
    }
}

TEST_CASE("hyperplane sections preserve the lower j-coefficients") {
    RingPtr R = make_ring({"x", "y"});
    ModuleSpec spec = spec_of(R, {"x^2", "x*y"});
    InvarianceReport rep = hyperplane_invariance_check(spec, {41, 52}, 6);
    CHECK(rep.jBefore == std::vector<long long>{2, 1, 0});
    REQUIRE(rep.perSeed.size() == 2);
    for (const SeedInvariance& row : rep.perSeed) {
        CHECK(row.dimensionDropped);
        CHECK(row.stable);
        CHECK(row.jAfter == std::vector<long long>{2, 1});
        CHECK(row.preserved);
        CHECK(row.delta == 0);
        CHECK(row.probePassed);
    }
    CHECK(rep.allPreserved);
    CHECK(rep.remarkHolds);
}

TEST_CASE("intersection probe for partial systems of general elements") {
    RingPtr R = make_ring({"x", "y"});
    ModuleSpec spec = spec_of(R, {"x^2", "x*y"});
    IntersectionProbe probe = thm34_probe(spec, maximal_ideal(R), {0, 1, 2}, 7);
    REQUIRE(probe.applicable);
    REQUIRE(probe.equal.size() == 1); // J_1 only: d - 1 = 1
    REQUIRE(probe.equal[0].size() == 3);
    CHECK(probe.allEqual);

    RingPtr R1 = make_ring({"x"});
    IntersectionProbe low = thm34_probe(spec_of(R1, {"x"}), maximal_ideal(R1), {0}, 7);
    CHECK_FALSE(low.applicable);
}
