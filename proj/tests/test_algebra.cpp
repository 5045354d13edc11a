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

// Arithmetic foundation: field elements, monomials and their orders, sparse
// polynomials, and seeded general elements.

#include <catch2/catch_amalgamated.hpp>

#include <ghilb/common.hpp>
#include <ghilb/io.hpp>
#include <ghilb/polynomial.hpp>

using namespace ghilb;

namespace {

Monomial mono(std::initializer_list<int> exps) {
    Monomial m;
    int i = 0;
    for (int e : exps) {
        m.e[i++] = static_cast<std::uint16_t>(e);
        m.deg += static_cast<std::uint32_t>(e);
    }
    return m;
}

Monomial random_monomial(SeededRng& rng, int nvars, int maxexp) {
    Monomial m;
    for (int i = 0; i < nvars; ++i) {
        m.e[i] = static_cast<std::uint16_t>(rng.below(maxexp + 1));
        m.deg += m.e[i];
    }
    return m;
}

Polynomial random_poly(SeededRng& rng, const RingPtr& ring, int maxterms, int maxexp) {
    std::vector<Term> terms;
    int nt = 1 + static_cast<int>(rng.below(maxterms));
    for (int i = 0; i < nt; ++i)
        terms.push_back(Term{random_monomial(rng, ring->nvars(), maxexp),
                             rng.nonzero_mod(ring->characteristic())});
    return Polynomial::make(ring, grevlex_order, std::move(terms));
}

} // namespace

TEST_CASE("field arithmetic in F_p", "[algebra]") {
    Fp F(32003);
    SECTION("inverse of 2 is 16002 when p = 32003") {
        CHECK(F.inv(2) == 16002);
        CHECK(F.mul(2, 16002) == 1);
    }
    SECTION("additive identity") {
        for (std::uint32_t a : {0u, 1u, 7u, 31999u}) CHECK(F.add(a, 0) == a);
    }
    SECTION("inverse in F_7 by exhaustive cross-check") {
        Fp F7(7);
        CHECK(F7.inv(3) == 5);
        for (std::uint32_t a = 1; a < 7; ++a) CHECK(F7.mul(a, F7.inv(a)) == 1);
    }
    SECTION("inversion of zero is a domain error") {
        CHECK_THROWS_AS(F.inv(0), std::domain_error);
    }
    SECTION("sub and neg") {
        CHECK(F.sub(3, 5) == 32001);
        CHECK(F.neg(0) == 0);
        CHECK(F.add(F.neg(123), 123) == 0);
    }
    SECTION("non-prime characteristic is rejected") {
        CHECK_THROWS_AS(make_ring({"x"}, 32004), std::invalid_argument);
    }
}

TEST_CASE("monomial order examples", "[algebra]") {
    const int n = 2;
    Monomial x2 = mono({2, 0}), xy = mono({1, 1}), y2 = mono({0, 2});
    Monomial x = mono({1, 0}), y = mono({0, 1}), one = mono({0, 0});

    SECTION("grevlex on (x,y): x^2 > xy > y^2 > x > y > 1") {
        std::vector<Monomial> chain{x2, xy, y2, x, y, one};
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            CHECK(mono_cmp(chain[i], chain[i + 1], grevlex_order, n) > 0);
    }
    SECTION("Elim(1) on (x,y): anything with x beats every pure-y monomial") {
        MonomialOrder e1 = elim_order(1);
        for (int k = 0; k <= 5; ++k) {
            Monomial yk = mono({0, k});
            CHECK(mono_cmp(x, yk, e1, n) > 0);
            CHECK(mono_cmp(mono({1, 3}), yk, e1, n) > 0);
        }
    }
    SECTION("lcm(x^2 y, x y^3) = x^2 y^3") {
        CHECK(mono_lcm(mono({2, 1}), mono({1, 3})) == mono({2, 3}));
    }
    SECTION("quotient requires divisibility") {
        CHECK(mono_div(mono({2, 1}), mono({1, 1})) == mono({1, 0}));
        CHECK_THROWS_AS(mono_div(mono({1, 0}), mono({0, 1})), std::domain_error);
    }
}

TEST_CASE("order axioms hold on random triples", "[algebra][property]") {
    // totality/antisymmetry, multiplicativity, and 1 as the minimum, for all
    // three order kinds on random monomials.
    const int n = 3;
    std::vector<MonomialOrder> orders{grevlex_order, lex_order, elim_order(2)};
    SeededRng rng(20260817);
    for (const MonomialOrder& ord : orders) {
        for (int iter = 0; iter < 300; ++iter) {
            Monomial a = random_monomial(rng, n, 6);
            Monomial b = random_monomial(rng, n, 6);
            Monomial c = random_monomial(rng, n, 6);
            int ab = mono_cmp(a, b, ord, n);
            CHECK(ab == -mono_cmp(b, a, ord, n));          // antisymmetry
            CHECK((ab == 0) == (a == b));                   // totality: ties only on equality
            if (ab != 0)                                    // multiplicativity
                CHECK(mono_cmp(mono_mul(a, c), mono_mul(b, c), ord, n) == ab);
            if (!(a == Monomial::one()))                    // well-order: 1 minimal
                CHECK(mono_cmp(a, Monomial::one(), ord, n) > 0);
            // transitivity spot check
            int bc = mono_cmp(b, c, ord, n);
            if (ab > 0 && bc > 0) CHECK(mono_cmp(a, c, ord, n) > 0);
        }
    }
}

TEST_CASE("polynomial arithmetic basics", "[algebra]") {
    RingPtr R = make_ring({"x", "y"});
    Polynomial x = Polynomial::variable(R, 0);
    Polynomial y = Polynomial::variable(R, 1);

    SECTION("(x+y)*(x-y) = x^2 - y^2") {
        CHECK((x + y) * (x - y) == x * x - y * y);
    }
    SECTION("f + (-1)f = 0") {
        Polynomial f = x * x + y.scaled(3);
        CHECK((f + f.scaled(32002)).is_zero());
        CHECK((f - f).is_zero());
    }
    SECTION("leading term of x^2 + xy + y^2 under grevlex is x^2") {
        Polynomial f = x * x + x * y + y * y;
        CHECK(f.leading_monomial() == mono({2, 0}));
        CHECK(f.leading_coeff() == 1);
    }
    SECTION("homogeneous flag") {
        CHECK((x * x + x * y).is_homogeneous());
        CHECK(!(x * x + y).is_homogeneous());
        CHECK(Polynomial::zero(R).is_homogeneous());
    }
    SECTION("mixed-ring operands are structural errors") {
        RingPtr R2 = make_ring({"x", "y"});
        CHECK_THROWS_AS(x + Polynomial::variable(R2, 0), std::invalid_argument);
    }
    SECTION("order change preserves the term multiset") {
        Polynomial f = x * x + x * y + y * y * y;
        Polynomial g = f.with_order(lex_order);
        CHECK(f == g);
        CHECK(g.leading_monomial() == mono({2, 0})); // lex: x^2 > xy > y^3
    }
}

TEST_CASE("ring axioms on random polynomials", "[algebra][property]") {
    RingPtr R = make_ring({"x", "y", "z"});
    SeededRng rng(424242);
    for (int iter = 0; iter < 60; ++iter) {
        Polynomial f = random_poly(rng, R, 5, 3);
        Polynomial g = random_poly(rng, R, 5, 3);
        Polynomial h = random_poly(rng, R, 5, 3);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
    }
}

TEST_CASE("degree additivity for homogeneous products", "[algebra][property]") {
    RingPtr R = make_ring({"x", "y", "z"});
    SeededRng rng(7);
    auto random_homog = [&](int deg) {
        std::vector<Term> terms;
        for (int i = 0; i < 4; ++i) {
            Monomial m;
            int left = deg;
            for (int v = 0; v < 2; ++v) {
                int e = static_cast<int>(rng.below(left + 1));
                m.e[v] = static_cast<std::uint16_t>(e);
                left -= e;
            }
            m.e[2] = static_cast<std::uint16_t>(left);
            m.deg = deg;
            terms.push_back(Term{m, rng.nonzero_mod(32003)});
        }
        return Polynomial::make(R, grevlex_order, std::move(terms));
    };
    for (int iter = 0; iter < 40; ++iter) {
        Polynomial f = random_homog(1 + static_cast<int>(rng.below(3)));
        Polynomial g = random_homog(1 + static_cast<int>(rng.below(3)));
        Polynomial fg = f * g;
        if (!fg.is_zero()) {
            CHECK(fg.is_homogeneous());
            CHECK(fg.degree() == f.degree() + g.degree());
        }
    }
}

TEST_CASE("polynomial parsing and printing", "[algebra]") {
    RingPtr R = make_ring({"x", "y", "z"});
    SECTION("basic expressions") {
        CHECK(parse_polynomial(R, "x^2 - y^2") ==
              Polynomial::variable(R, 0) * Polynomial::variable(R, 0) -
                  Polynomial::variable(R, 1) * Polynomial::variable(R, 1));
        CHECK(parse_polynomial(R, "3*x*y + 2*z^2").terms().size() == 2);
        CHECK(parse_polynomial(R, "0").is_zero());
        CHECK(parse_polynomial(R, "x - x").is_zero());
        CHECK(parse_polynomial(R, "(x + y)*(x - y)") == parse_polynomial(R, "x^2 - y^2"));
    }
    SECTION("coefficients reduce mod p") {
        CHECK(parse_polynomial(R, "32003*x").is_zero());
        CHECK(parse_polynomial(R, "32004*x") == Polynomial::variable(R, 0));
    }
    SECTION("parse errors carry positions") {
        CHECK_THROWS_AS(parse_polynomial(R, "x + q"), parse_error);
        CHECK_THROWS_AS(parse_polynomial(R, "x^"), parse_error);
        CHECK_THROWS_AS(parse_polynomial(R, "(x + y"), parse_error);
        CHECK_THROWS_AS(parse_polynomial(R, "x y"), parse_error); // no implicit product
        try {
            parse_polynomial(R, "x + w^2");
        } catch (const parse_error& e) {
            CHECK(e.position == 4);
        }
    }
    SECTION("printer uses balanced coefficients and round-trips") {
        Polynomial f = parse_polynomial(R, "x^2 - 3*y*z + 5");
        CHECK(print_polynomial(f) == "x^2 - 3*y*z + 5");
        SeededRng rng(99);
        for (int iter = 0; iter < 50; ++iter) {
            Polynomial g = random_poly(rng, R, 6, 4);
            CHECK(parse_polynomial(R, print_polynomial(g)) == g);
        }
        CHECK(print_polynomial(Polynomial::zero(R)) == "0");
    }
    SECTION("display minus sign is accepted") {
        CHECK(parse_polynomial(R, "x\xE2\x88\x92y") == parse_polynomial(R, "x - y"));
    }
}

TEST_CASE("random linear combinations are seeded and recorded", "[algebra]") {
    RingPtr R = make_ring({"x", "y"});
    Polynomial x2 = parse_polynomial(R, "x^2");
    Polynomial xy = parse_polynomial(R, "x*y");
    std::vector<Polynomial> gens{x2, xy};

    SECTION("determinism and coefficient recording") {
        RandomCombination a = random_linear_combination(gens, 1, 42);
        RandomCombination b = random_linear_combination(gens, 1, 42);
        REQUIRE(a.elements.size() == 1);
        CHECK(a.elements[0] == b.elements[0]);
        CHECK(a.matrix == b.matrix);
        REQUIRE(a.matrix[0].size() == 2);
        CHECK(a.matrix[0][0] >= 1);
        CHECK(a.matrix[0][1] >= 1);
        // element equals the recorded combination
        CHECK(a.elements[0] == x2.scaled(a.matrix[0][0]) + xy.scaled(a.matrix[0][1]));
        // distinct seeds give distinct elements (32003^2 combinations; equality
        // would be a bug, not bad luck)
        RandomCombination c = random_linear_combination(gens, 1, 43);
        CHECK(!(a.elements[0] == c.elements[0]));
    }
    SECTION("equigenerated inputs give homogeneous outputs") {
        RandomCombination a = random_linear_combination(gens, 3, 7);
        for (const Polynomial& xi : a.elements) {
            CHECK(xi.is_homogeneous());
            CHECK(xi.degree() == 2);
        }
    }
    SECTION("count 0 gives the empty sequence") {
        CHECK(random_linear_combination(gens, 0, 1).elements.empty());
    }
    SECTION("empty generator list is an error") {
        CHECK_THROWS_AS(random_linear_combination({}, 1, 1), std::invalid_argument);
    }
}
