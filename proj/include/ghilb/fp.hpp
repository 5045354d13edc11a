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

// Arithmetic in the prime field F_p. Elements are residues in [0, p) stored
// as uint32_t; p is a runtime value (default 32003) carried by the ring.

#ifndef GHILB_FP_HPP
#define GHILB_FP_HPP

#include <cstdint>
#include <stdexcept>

namespace ghilb {

// Arithmetic context for one prime modulus. All results are reduced to [0, p).
class Fp {
public:
    explicit Fp(std::uint32_t p) : p_(p) {}

    std::uint32_t modulus() const { return p_; }

    std::uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        if (s >= p_) s -= p_;
        return s;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }

    // Extended Euclid. Inversion of zero is a domain error.
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("Fp::inv: division by zero");
        long long t = 0, nt = 1;
        long long r = p_, nr = a % p_;
        while (nr != 0) {
            long long q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        // r == 1 is guaranteed for prime p and a != 0
        if (t < 0) t += p_;
        return static_cast<std::uint32_t>(t);
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    std::uint32_t pow(std::uint32_t a, unsigned long long e) const {
        std::uint32_t r = 1 % p_, base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

private:
    std::uint32_t p_;
};

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace ghilb

#endif // GHILB_FP_HPP
