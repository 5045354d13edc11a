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

// Conversions between engine types and the reference oracle's types, plus
// small parsing conveniences shared by the test binaries.

#pragma once

#include "ghilb/ideal.hpp"
#include "ghilb/io.hpp"
#include "oracle.hpp"

namespace tu {

inline oracle::Expo to_expo(const ghilb::Monomial& m, int n) {
    oracle::Expo e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = m.e[i];
    return e;
}

inline oracle::PolyMap to_map(const ghilb::Polynomial& f) {
    oracle::PolyMap out;
    for (const ghilb::Term& t : f.terms()) out[to_expo(t.m, f.ring()->nvars())] = t.c;
    return out;
}

inline ghilb::Monomial to_mono(const oracle::Expo& e) {
    ghilb::Monomial m = ghilb::Monomial::one();
    for (std::size_t i = 0; i < e.size(); ++i) {
        m.e[i] = static_cast<std::uint16_t>(e[i]);
        m.deg += static_cast<std::uint32_t>(e[i]);
    }
    return m;
}

inline std::vector<ghilb::Polynomial> parse_all(const ghilb::RingPtr& ring,
                                                const std::vector<std::string>& texts,
                                                ghilb::MonomialOrder ord = ghilb::grevlex_order) {
    std::vector<ghilb::Polynomial> out;
    for (const std::string& s : texts) out.push_back(ghilb::parse_polynomial(ring, s, ord));
    return out;
}

inline ghilb::Ideal ideal_of(const ghilb::RingPtr& ring, const std::vector<std::string>& texts) {
    return ghilb::Ideal::make(ring, parse_all(ring, texts));
}

// Engine ideal generated by the oracle monomial ideal's generators.
inline ghilb::Ideal from_monomial_ideal(const ghilb::RingPtr& ring,
                                        const oracle::MonomialIdeal& J) {
    std::vector<ghilb::Polynomial> gens;
    for (const oracle::Expo& e : J.gens)
        gens.push_back(ghilb::Polynomial::monomial(ring, to_mono(e)));
    return ghilb::Ideal::make(ring, std::move(gens));
}

// Random homogeneous polynomial: `nterms` draws of degree-`deg` monomials
// with nonzero coefficients (may merge; can cancel to zero).
inline ghilb::Polynomial random_homogeneous(const ghilb::RingPtr& ring, ghilb::SeededRng& rng,
                                            int deg, int nterms) {
    auto mons = oracle::monomials_of_degree(ring->nvars(), deg);
    std::vector<ghilb::Term> terms;
    for (int t = 0; t < nterms; ++t) {
        const oracle::Expo& e = mons[rng.below(mons.size())];
        terms.push_back(ghilb::Term{to_mono(e), rng.nonzero_mod(ring->fp().modulus())});
    }
    return ghilb::Polynomial::make(ring, ghilb::grevlex_order, std::move(terms));
}

} // namespace tu
