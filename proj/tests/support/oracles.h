/*
 * SPDX-FileCopyrightText: <text>Copyright 2026 The hdpa-sim authors</text>
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Independent reference computations used by the tests. Everything here is
// written bit by bit, without the word-level code paths of the library.

#pragma once

#include "hdpa/curve.h"
#include "hdpa/field.h"
#include "hdpa/netlist.h"
#include "hdpa/random.h"

#include <boost/integer/mod_inverse.hpp>

#include <cstdint>
#include <vector>

namespace hdpa::oracle {

using Bits = std::vector<uint8_t>;

/// Carry-less product by shifting and XOR-ing the whole left operand.
inline Bits shift_xor_mul(const Bits &a, const Bits &b) {
    Bits c(a.size() + b.size() - 1, 0);
    for (std::size_t l = 0; l < b.size(); l++) {
        if (!b[l])
            continue;
        for (std::size_t k = 0; k < a.size(); k++)
            c[k + l] ^= a[k];
    }
    return c;
}

/// c_i = XOR over k + l = i of a_k b_l, computed coefficient by coefficient.
inline Bits coefficient_mul(const Bits &a, const Bits &b, std::size_t n) {
    Bits c(2 * n - 1, 0);
    for (std::size_t i = 0; i < 2 * n - 1; i++)
        for (std::size_t k = 0; k < n; k++)
            if (i >= k && i - k < n)
                c[i] ^= uint8_t(a[k] & b[i - k]);
    return c;
}

inline uint64_t shift_xor_mul64(uint64_t a, uint64_t b, uint64_t &high) {
    uint64_t lo = 0, hi = 0;
    for (unsigned l = 0; l < 64; l++)
        if ((b >> l) & 1U) {
            lo ^= a << l;
            hi ^= l ? a >> (64 - l) : 0;
        }
    high = hi;
    return lo;
}

inline Bits to_bits(uint64_t v, std::size_t n) {
    Bits b(n);
    for (std::size_t i = 0; i < n; i++)
        b[i] = (v >> i) & 1U;
    return b;
}

inline Bits to_bits(const gf::FieldElement &x) {
    Bits b(gf::kFieldBits);
    for (unsigned i = 0; i < gf::kFieldBits; i++)
        b[i] = x.bit(i);
    return b;
}

/// Long division by t^233 + t^74 + 1, one leading term at a time.
inline gf::FieldElement reduce_bits(Bits c) {
    for (std::size_t i = c.size(); i-- > gf::kFieldBits;) {
        if (!c[i])
            continue;
        c[i] = 0;
        c[i - gf::kFieldBits + gf::kReductionMiddle] ^= 1;
        c[i - gf::kFieldBits] ^= 1;
    }
    gf::FieldElement r;
    for (unsigned i = 0; i < gf::kFieldBits && i < c.size(); i++)
        r.set_bit(i, c[i]);
    return r;
}

inline gf::FieldElement field_mul(const gf::FieldElement &a,
                                  const gf::FieldElement &b) {
    return reduce_bits(shift_xor_mul(to_bits(a), to_bits(b)));
}

inline gf::FieldElement random_element(Rng &rng) {
    gf::FieldElement::Words w{rng(), rng(), rng(), rng()};
    w[3] &= (uint64_t(1) << (gf::kFieldBits - 192)) - 1;
    return gf::FieldElement::from_words(w);
}

inline uint64_t random_bits(Rng &rng, unsigned n) {
    return n >= 64 ? rng() : rng() & ((uint64_t(1) << n) - 1);
}

/// Evaluates every gate from scratch with a plain switch.
inline std::vector<uint8_t> evaluate_all(const netlist::GateNetlist &nl,
                                         uint64_t a, uint64_t b) {
    std::vector<uint8_t> v(nl.signal_count(), 0);
    for (std::size_t i = 0; i < nl.operand_bits(); i++) {
        v[nl.input_a(i)] = (a >> i) & 1U;
        v[nl.input_b(i)] = (b >> i) & 1U;
    }
    for (std::size_t g = 0; g < nl.gates().size(); g++) {
        const auto &gate = nl.gates()[g];
        switch (gate.kind) {
        case netlist::GateKind::And:
            v[nl.first_gate() + g] = v[gate.in0] && v[gate.in1];
            break;
        case netlist::GateKind::Xor:
            v[nl.first_gate() + g] = v[gate.in0] != v[gate.in1];
            break;
        }
    }
    return v;
}

/// s = k^-1 (e + r * key) mod order.
inline ec::BigInt ecdsa_sign_s(const ec::BigInt &e, const ec::BigInt &r,
                               const ec::BigInt &key, const ec::BigInt &k,
                               const ec::BigInt &order) {
    const ec::BigInt kinv = boost::integer::mod_inverse(ec::BigInt(k % order), order);
    ec::BigInt s = (kinv * ((e + r * key) % order)) % order;
    return s < 0 ? s + order : s;
}

inline ec::BigInt random_below(Rng &rng, const ec::BigInt &bound) {
    const unsigned bits = ec::bit_length(bound);
    for (;;) {
        ec::BigInt v = 0;
        for (unsigned w = 0; w < (bits + 63) / 64; w++)
            v = (v << 64) | ec::BigInt(rng());
        v &= (ec::BigInt(1) << bits) - 1;
        if (v < bound)
            return v;
    }
}

} // namespace hdpa::oracle
