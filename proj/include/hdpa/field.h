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

// Arithmetic in GF(2^233) with f(t) = t^233 + t^74 + 1.
//
// Bit i of every polynomial holds the coefficient of t^i. Hex strings are
// written most significant nibble first.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hdpa::gf {

inline constexpr unsigned kFieldBits = 233;
/// Middle exponent of the reduction trinomial t^233 + t^74 + 1.
inline constexpr unsigned kReductionMiddle = 74;
/// Largest degree accepted by reduce(): a full 233x233 product.
inline constexpr unsigned kMaxReducibleDegree = 2 * (kFieldBits - 1);
/// Number of hex digits in the fixed-width textual form (236 bits).
inline constexpr unsigned kHexDigits = 59;

/// Exponents of the fixed reduction polynomial, highest first.
struct ReductionPolynomial {
    static constexpr std::array<unsigned, 3> exponents{kFieldBits,
                                                       kReductionMiddle, 0};
};

class FieldElement {
  public:
    static constexpr std::size_t kWords = 4;
    using Words = std::array<uint64_t, kWords>;

    constexpr FieldElement() = default;

    /// Throws std::invalid_argument if any bit at or above 233 is set.
    static FieldElement from_words(const Words &words);
    static FieldElement one();
    static FieldElement monomial(unsigned exponent);
    /// Accepts exactly 59 hex digits with an optional "0x" prefix.
    static FieldElement from_hex(std::string_view hex);

    const Words &words() const { return w_; }
    bool bit(unsigned i) const { return (w_[i / 64] >> (i % 64)) & 1U; }
    void set_bit(unsigned i, bool value);
    bool is_zero() const { return (w_[0] | w_[1] | w_[2] | w_[3]) == 0; }
    /// Degree of the polynomial, -1 for zero.
    int degree() const;
    unsigned weight() const;
    std::string to_hex() const;

    FieldElement &operator^=(const FieldElement &o) {
        for (std::size_t i = 0; i < kWords; i++)
            w_[i] ^= o.w_[i];
        return *this;
    }
    friend FieldElement operator^(FieldElement a, const FieldElement &b) {
        return a ^= b;
    }
    friend bool operator==(const FieldElement &, const FieldElement &) = default;

  private:
    Words w_{};
};

/// Unreduced polynomial with an explicit bit length (degree bound + 1).
class RawPolynomial {
  public:
    RawPolynomial() = default;
    explicit RawPolynomial(std::size_t bit_length);

    static RawPolynomial from_field(const FieldElement &a,
                                    std::size_t bit_length = kFieldBits);
    /// Low `bit_length` bits of `value`; higher bits must be clear.
    static RawPolynomial from_u64(uint64_t value, std::size_t bit_length);
    static RawPolynomial from_words(std::span<const uint64_t> words,
                                    std::size_t bit_length);

    std::size_t bit_length() const { return bits_; }
    std::span<const uint64_t> words() const { return words_; }
    bool bit(std::size_t i) const {
        return i < bits_ && ((words_[i / 64] >> (i % 64)) & 1U);
    }
    void set_bit(std::size_t i, bool value);
    int degree() const;
    bool is_zero() const { return degree() < 0; }

    /// this ^= other * t^shift. The shifted operand must fit.
    void xor_shifted(const RawPolynomial &other, std::size_t shift);

    friend bool operator==(const RawPolynomial &,
                           const RawPolynomial &) = default;

  private:
    std::size_t bits_ = 0;
    std::vector<uint64_t> words_;
};

FieldElement gf_add(const FieldElement &a, const FieldElement &b);

/// Schoolbook product c_i = XOR_{k+l=i} a_k b_l of two polynomials of
/// degree < n; the result has bit length 2n-1.
RawPolynomial classical_poly_mul(const RawPolynomial &a,
                                 const RawPolynomial &b, std::size_t n);

/// Remainder modulo f(t). Throws std::invalid_argument above degree 464.
FieldElement reduce(const RawPolynomial &c);

/// Golden product: classical_poly_mul(.,.,233) followed by reduce.
FieldElement gf_mul_ref(const FieldElement &a, const FieldElement &b);
FieldElement gf_square(const FieldElement &a);
/// a^(2^233 - 2); throws std::domain_error for zero.
FieldElement gf_inv(const FieldElement &a);

inline unsigned hamming_distance(const FieldElement &a, const FieldElement &b) {
    return (a ^ b).weight();
}

/// 64x64 -> 128 bit carry-less product, {low, high}.
std::array<uint64_t, 2> clmul64(uint64_t a, uint64_t b);

/// MSB-first hex of a bit vector (one bit per byte, bit i = coefficient i);
/// ceil(n/4) digits.
std::string bits_to_hex(std::span<const uint8_t> bits);
std::vector<uint8_t> hex_to_bits(std::string_view hex, std::size_t bit_length);

} // namespace hdpa::gf
