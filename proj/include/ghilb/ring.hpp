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

// The ambient standard-graded polynomial ring: named variables over F_p.
// Rings are immutable and shared by pointer; pointer identity is ring
// identity (operations on operands from different Ring objects are
// structural errors even if the data coincide).

#ifndef GHILB_RING_HPP
#define GHILB_RING_HPP

#include <atomic>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fp.hpp"

namespace ghilb {

inline constexpr int kMaxVars = 16;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
public:
    Ring(std::vector<std::string> vars, std::uint32_t p) : vars_(std::move(vars)), fp_(p), id_(next_id()++) {
        if (vars_.empty()) throw std::invalid_argument("Ring: no variables");
        if (static_cast<int>(vars_.size()) > kMaxVars)
            throw std::invalid_argument("Ring: at most " + std::to_string(kMaxVars) + " variables supported");
        if (!is_prime(p)) throw std::invalid_argument("Ring: characteristic must be prime");
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j]) throw std::invalid_argument("Ring: duplicate variable " + vars_[i]);
    }

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(int i) const { return vars_.at(i); }
    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }
    const Fp& fp() const { return fp_; }
    std::uint32_t characteristic() const { return fp_.modulus(); }
    std::uint64_t id() const { return id_; }

private:
    static std::atomic<std::uint64_t>& next_id() {
        static std::atomic<std::uint64_t> n{1};
        return n;
    }
    std::vector<std::string> vars_;
    Fp fp_;
    std::uint64_t id_;
};

inline RingPtr make_ring(std::vector<std::string> vars, std::uint32_t p = 32003) {
    return std::make_shared<const Ring>(std::move(vars), p);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() != b.get())
        throw std::invalid_argument("operands live in different rings");
}

} // namespace ghilb

#endif // GHILB_RING_HPP
