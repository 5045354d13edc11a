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

// Shared error types, the reduction-step budget, and the seeded RNG that
// backs every "general element" choice in the engine.

#ifndef GHILB_COMMON_HPP
#define GHILB_COMMON_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace ghilb {

// Thrown when a Groebner computation exceeds its reduction-step budget.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a quotient that must have finite length does not.
struct infinite_length_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reduction-step budget. The cap applies per top-level Groebner-basis
// computation (each public groebner_basis call resets the step counter),
// so one runaway basis cannot be masked by many cheap ones. Default cap:
// 5e6 division steps.
class reduction_budget {
public:
    static long long& cap() {
        static long long c = 5'000'000;
        return c;
    }
    static long long& used() {
        static long long u = 0;
        return u;
    }
    // Lifetime total, never reset: a deterministic effort metric (identical
    // inputs take identical step counts), unlike wall-clock time.
    static long long& total() {
        static long long t = 0;
        return t;
    }
    static void reset_counter() { used() = 0; }
    static void set_cap(long long c) { cap() = c; }
    static void step() {
        ++total();
        if (++used() > cap())
            throw budget_exceeded("reduction budget exceeded (" + std::to_string(cap()) +
                                  " steps); raise the cap to continue");
    }
};

// Deterministic seeded randomness. std::mt19937_64 has a portable, fully
// specified output sequence; the rejection sampler below avoids the
// implementation-defined std::uniform_int_distribution, so identical seeds
// give identical field elements on every platform.
class SeededRng {
public:
    explicit SeededRng(unsigned long long seed) : eng_(seed) {}

    // uniform in [1, p-1]
    std::uint32_t nonzero_mod(std::uint32_t p) {
        const std::uint64_t n = p - 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            std::uint64_t x = eng_();
            if (x < limit) return static_cast<std::uint32_t>(1 + x % n);
        }
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            std::uint64_t x = eng_();
            if (x < limit) return x % n;
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace ghilb

#endif // GHILB_COMMON_HPP
