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

// Rational series N(z)/(1-z)^k with exact integer numerators: the universal
// output shape for every Hilbert-type series in the engine, plus the small
// integer z-polynomial toolkit (zpoly) it is built from.

#ifndef GHILB_SERIES_HPP
#define GHILB_SERIES_HPP

#include <string>
#include <vector>

#include "common.hpp"

namespace ghilb {

// Integer polynomials in z as coefficient vectors, constant term first,
// normalized to have no trailing zeros (the zero polynomial is {}).
namespace zpoly {

using Z = std::vector<long long>;

inline void trim(Z& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Z add(const Z& a, const Z& b) {
    Z r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline Z sub(const Z& a, const Z& b) {
    Z r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline Z mul(const Z& a, const Z& b) {
    if (a.empty() || b.empty()) return {};
    Z r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline long long eval1(const Z& a) {
    long long s = 0;
    for (long long c : a) s += c;
    return s;
}

inline long long coeff(const Z& a, std::size_t i) { return i < a.size() ? a[i] : 0; }

// a / (1-z) when the division is exact (a(1) == 0); quotient by prefix sums.
// Returns false when the division is not exact.
inline bool div_one_minus_z(const Z& a, Z& q) {
    if (a.empty()) {
        q.clear();
        return true;
    }
    if (eval1(a) != 0) return false;
    q.assign(a.size() - 1, 0);
    long long run = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        run += a[i];
        q[i] = run;
    }
    trim(q);
    return true;
}

// multiply by (1-z)^k
inline Z mul_one_minus_z_pow(Z a, int k) {
    for (int i = 0; i < k; ++i) a = mul(a, Z{1, -1});
    return a;
}

} // namespace zpoly

// N(z)/(1-z)^k. `normalized` means N(1) != 0 or N == 0 (no common (1-z)
// factor remains).
struct RationalSeries {
    zpoly::Z numerator;
    int denomExponent = 0;
    bool normalized = false;

    static RationalSeries zero() { return RationalSeries{{}, 0, true}; }

    bool is_zero() const { return numerator.empty(); }

    // Strip common (1-z) factors.
    RationalSeries normalize() const {
        RationalSeries r = *this;
        zpoly::Z q;
        while (!r.numerator.empty() && r.denomExponent > 0 && zpoly::div_one_minus_z(r.numerator, q)) {
            r.numerator = q;
            --r.denomExponent;
        }
        // a polynomial numerator with positive (1-z) content but k == 0 stays as is
        if (r.numerator.empty()) r.denomExponent = 0;
        r.normalized = true;
        return r;
    }

    // Coefficients of the power-series expansion up to degree t_max.
    std::vector<long long> expand(int t_max) const {
        std::vector<long long> out(static_cast<std::size_t>(t_max) + 1, 0);
        if (numerator.empty()) return out;
        // 1/(1-z)^k has coefficients C(t+k-1, k-1)
        for (int t = 0; t <= t_max; ++t) {
            long long s = 0;
            for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) <= t; ++i) {
                long long c;
                if (denomExponent == 0)
                    c = (static_cast<int>(i) == t) ? 1 : 0;
                else {
                    // C(t-i+k-1, k-1)
                    long long n = t - static_cast<long long>(i) + denomExponent - 1;
                    long long k = denomExponent - 1;
                    long long b = 1;
                    for (long long j = 1; j <= k; ++j) b = b * (n - k + j) / j;
                    c = b;
                }
                s += numerator[i] * c;
            }
            out[static_cast<std::size_t>(t)] = s;
        }
        return out;
    }

    // Krull dimension read off the normalized pole order at z = 1.
    // The zero series (empty module) gets -1.
    int dimension() const {
        RationalSeries n = normalize();
        if (n.is_zero()) return -1;
        return n.denomExponent;
    }

    friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
        RationalSeries na = a.normalize(), nb = b.normalize();
        return na.numerator == nb.numerator && na.denomExponent == nb.denomExponent;
    }
};

// Render in display form: "(z+z^2+z^3+z^4)/(1-z)^6", "(3+z)/(1-z)^2",
// "4z/(1-z)^2" (single positive term: no parentheses), "4z+z^2" for k == 0,
// "0" for the zero series.
inline std::string series_to_string(const RationalSeries& s) {
    if (s.numerator.empty()) return "0";
    std::string num;
    for (std::size_t i = 0; i < s.numerator.size(); ++i) {
        long long c = s.numerator[i];
        if (c == 0) continue;
        bool neg = c < 0;
        long long mag = neg ? -c : c;
        if (num.empty()) {
            if (neg) num += "-";
        } else {
            num += neg ? "-" : "+";
        }
        if (i == 0)
            num += std::to_string(mag);
        else {
            if (mag != 1) num += std::to_string(mag);
            num += "z";
            if (i >= 2) num += "^" + std::to_string(i);
        }
    }
    if (s.denomExponent == 0) return num;
    int nonzero = 0;
    for (long long c : s.numerator)
        if (c != 0) ++nonzero;
    std::string out = (nonzero == 1 && num[0] != '-') ? num : "(" + num + ")";
    out += "/(1-z)";
    if (s.denomExponent >= 2) out += "^" + std::to_string(s.denomExponent);
    return out;
}

} // namespace ghilb

#endif // GHILB_SERIES_HPP
