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

#include "hdpa/field.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define HDPA_HAVE_X86_CLMUL 1
#endif

namespace hdpa::gf {

namespace {

constexpr uint64_t kTopWordMask = (uint64_t(1) << (kFieldBits - 192)) - 1;

using Wide = std::array<uint64_t, 8>;

std::array<uint64_t, 2> clmul64_portable(uint64_t a, uint64_t b) {
    uint64_t lo = 0;
    uint64_t hi = 0;
    for (unsigned i = 0; i < 64; i++) {
        const uint64_t mask = 0 - ((a >> i) & 1U);
        lo ^= (b << i) & mask;
        if (i != 0)
            hi ^= (b >> (64 - i)) & mask;
    }
    return {lo, hi};
}

#ifdef HDPA_HAVE_X86_CLMUL
__attribute__((target("pclmul,sse2"))) std::array<uint64_t, 2>
clmul64_pclmul(uint64_t a, uint64_t b) {
    const __m128i x = _mm_set_epi64x(0, static_cast<long long>(a));
    const __m128i y = _mm_set_epi64x(0, static_cast<long long>(b));
    const __m128i r = _mm_clmulepi64_si128(x, y, 0x00);
    alignas(16) uint64_t out[2];
    _mm_store_si128(reinterpret_cast<__m128i *>(out), r);
    return {out[0], out[1]};
}
#endif

using ClmulFn = std::array<uint64_t, 2> (*)(uint64_t, uint64_t);

ClmulFn select_clmul() {
#ifdef HDPA_HAVE_X86_CLMUL
    __builtin_cpu_init();
    if (__builtin_cpu_supports("pclmul"))
        return clmul64_pclmul;
#endif
    return clmul64_portable;
}

std::array<uint64_t, 2> clmul_impl(uint64_t a, uint64_t b) {
    static const ClmulFn fn = select_clmul();
    return fn(a, b);
}

// out[0 .. na+nb) = a * b over GF(2)[t]
void mul_words(const uint64_t *a, std::size_t na, const uint64_t *b,
               std::size_t nb, uint64_t *out) {
    std::fill(out, out + na + nb, 0);
    for (std::size_t i = 0; i < na; i++) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < nb; j++) {
            const auto p = clmul_impl(a[i], b[j]);
            out[i + j] ^= p[0];
            out[i + j + 1] ^= p[1];
        }
    }
}

// Folds t^233 -> t^74 + 1 twice; enough for anything below t^512.
FieldElement reduce_wide(Wide c) {
    for (int round = 0; round < 2; round++) {
        std::array<uint64_t, 5> h{};
        for (std::size_t i = 0; i < 5; i++) {
            h[i] = c[i + 3] >> 41;
            if (i + 4 < c.size())
                h[i] |= c[i + 4] << 23;
        }
        c[3] &= kTopWordMask;
        std::fill(c.begin() + 4, c.end(), 0);
        for (std::size_t i = 0; i < 5; i++) {
            c[i] ^= h[i];
            c[i + 1] ^= h[i] << 10;
            c[i + 2] ^= h[i] >> 54;
        }
    }
    return FieldElement::from_words({c[0], c[1], c[2], c[3]});
}

constexpr std::array<uint16_t, 256> make_spread_table() {
    std::array<uint16_t, 256> t{};
    for (unsigned v = 0; v < 256; v++) {
        uint16_t s = 0;
        for (unsigned b = 0; b < 8; b++)
            if ((v >> b) & 1U)
                s |= uint16_t(1U << (2 * b));
        t[v] = s;
    }
    return t;
}

constexpr auto kSpread = make_spread_table();

uint64_t spread32(uint32_t x) {
    uint64_t r = 0;
    for (unsigned i = 0; i < 4; i++)
        r |= uint64_t(kSpread[(x >> (8 * i)) & 0xFF]) << (16 * i);
    return r;
}

int hex_value(char c) {
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

std::string_view strip_hex_prefix(std::string_view s) {
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X'))
        s.remove_prefix(2);
    return s;
}

constexpr char kHexDigitChars[] = "0123456789abcdef";

} // namespace

std::array<uint64_t, 2> clmul64(uint64_t a, uint64_t b) {
    return clmul_impl(a, b);
}

// --- FieldElement ---------------------------------------------------------

FieldElement FieldElement::from_words(const Words &words) {
    if (words[3] & ~kTopWordMask)
        throw std::invalid_argument("field element wider than 233 bits");
    FieldElement r;
    r.w_ = words;
    return r;
}

FieldElement FieldElement::one() { return monomial(0); }

FieldElement FieldElement::monomial(unsigned exponent) {
    if (exponent >= kFieldBits)
        throw std::invalid_argument("monomial exponent out of range");
    FieldElement r;
    r.set_bit(exponent, true);
    return r;
}

void FieldElement::set_bit(unsigned i, bool value) {
    if (i >= kFieldBits)
        throw std::out_of_range("field bit index");
    const uint64_t m = uint64_t(1) << (i % 64);
    if (value)
        w_[i / 64] |= m;
    else
        w_[i / 64] &= ~m;
}

int FieldElement::degree() const {
    for (int i = kWords - 1; i >= 0; i--)
        if (w_[i])
            return i * 64 + 63 - std::countl_zero(w_[i]);
    return -1;
}

unsigned FieldElement::weight() const {
    unsigned n = 0;
    for (auto w : w_)
        n += std::popcount(w);
    return n;
}

std::string FieldElement::to_hex() const {
    std::string s(kHexDigits, '0');
    for (unsigned d = 0; d < kHexDigits; d++) {
        const unsigned lsb = 4 * (kHexDigits - 1 - d);
        unsigned v = 0;
        for (unsigned b = 0; b < 4; b++)
            if (lsb + b < kFieldBits && bit(lsb + b))
                v |= 1U << b;
        s[d] = kHexDigitChars[v];
    }
    return s;
}

FieldElement FieldElement::from_hex(std::string_view hex) {
    hex = strip_hex_prefix(hex);
    if (hex.size() != kHexDigits)
        throw std::invalid_argument("field element hex must have exactly 59 "
                                    "digits, got " +
                                    std::to_string(hex.size()));
    FieldElement r;
    for (unsigned d = 0; d < kHexDigits; d++) {
        const int v = hex_value(hex[d]);
        if (v < 0)
            throw std::invalid_argument("invalid hex digit in field element");
        const unsigned lsb = 4 * (kHexDigits - 1 - d);
        for (unsigned b = 0; b < 4; b++) {
            if (!((v >> b) & 1))
                continue;
            if (lsb + b >= kFieldBits)
                throw std::invalid_argument(
                    "field element hex sets bits above t^232");
            r.set_bit(lsb + b, true);
        }
    }
    return r;
}

// --- RawPolynomial --------------------------------------------------------

RawPolynomial::RawPolynomial(std::size_t bit_length)
    : bits_(bit_length), words_((bit_length + 63) / 64, 0) {}

RawPolynomial RawPolynomial::from_field(const FieldElement &a,
                                        std::size_t bit_length) {
    if (bit_length < std::size_t(a.degree() + 1))
        throw std::invalid_argument("bit length too small for field element");
    RawPolynomial r(bit_length);
    for (std::size_t i = 0; i < r.words_.size() && i < FieldElement::kWords;
         i++)
        r.words_[i] = a.words()[i];
    return r;
}

RawPolynomial RawPolynomial::from_u64(uint64_t value, std::size_t bit_length) {
    if (bit_length < 64 && (value >> bit_length) != 0)
        throw std::invalid_argument("value does not fit the bit length");
    RawPolynomial r(bit_length);
    if (!r.words_.empty())
        r.words_[0] = value;
    else if (value != 0)
        throw std::invalid_argument("value does not fit the bit length");
    return r;
}

RawPolynomial RawPolynomial::from_words(std::span<const uint64_t> words,
                                        std::size_t bit_length) {
    RawPolynomial r(bit_length);
    for (std::size_t i = 0; i < words.size(); i++) {
        if (words[i] == 0)
            continue;
        if (i >= r.words_.size())
            throw std::invalid_argument("value does not fit the bit length");
        r.words_[i] = words[i];
    }
    if (r.degree() >= int(bit_length))
        throw std::invalid_argument("value does not fit the bit length");
    return r;
}

void RawPolynomial::set_bit(std::size_t i, bool value) {
    if (i >= bits_)
        throw std::out_of_range("polynomial bit index");
    const uint64_t m = uint64_t(1) << (i % 64);
    if (value)
        words_[i / 64] |= m;
    else
        words_[i / 64] &= ~m;
}

int RawPolynomial::degree() const {
    for (std::size_t i = words_.size(); i-- > 0;)
        if (words_[i])
            return int(i * 64 + 63 - std::countl_zero(words_[i]));
    return -1;
}

void RawPolynomial::xor_shifted(const RawPolynomial &other,
                                std::size_t shift) {
    const int d = other.degree();
    if (d < 0)
        return;
    if (std::size_t(d) + shift >= bits_)
        throw std::invalid_argument("shifted operand exceeds bit length");
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    for (std::size_t i = 0; i < other.words_.size(); i++) {
        const uint64_t w = other.words_[i];
        if (w == 0)
            continue;
        words_[i + ws] ^= w << bs;
        if (bs != 0 && i + ws + 1 < words_.size())
            words_[i + ws + 1] ^= w >> (64 - bs);
    }
}

// --- operations -----------------------------------------------------------

FieldElement gf_add(const FieldElement &a, const FieldElement &b) {
    return a ^ b;
}

RawPolynomial classical_poly_mul(const RawPolynomial &a,
                                 const RawPolynomial &b, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("classical_poly_mul: n must be >= 1");
    if (a.degree() >= int(n) || b.degree() >= int(n))
        throw std::invalid_argument("classical_poly_mul: operand exceeds n bits");
    const std::size_t words = (n + 63) / 64;
    std::vector<uint64_t> wa(words, 0), wb(words, 0), out(2 * words, 0);
    std::copy_n(a.words().begin(), std::min(words, a.words().size()),
                wa.begin());
    std::copy_n(b.words().begin(), std::min(words, b.words().size()),
                wb.begin());
    mul_words(wa.data(), words, wb.data(), words, out.data());
    return RawPolynomial::from_words(out, 2 * n - 1);
}

FieldElement reduce(const RawPolynomial &c) {
    if (c.degree() > int(kMaxReducibleDegree))
        throw std::invalid_argument("reduce: degree exceeds 464");
    Wide w{};
    for (std::size_t i = 0; i < c.words().size() && i < w.size(); i++)
        w[i] = c.words()[i];
    return reduce_wide(w);
}

FieldElement gf_mul_ref(const FieldElement &a, const FieldElement &b) {
    Wide w{};
    mul_words(a.words().data(), FieldElement::kWords, b.words().data(),
              FieldElement::kWords, w.data());
    return reduce_wide(w);
}

FieldElement gf_square(const FieldElement &a) {
    Wide w{};
    for (std::size_t i = 0; i < FieldElement::kWords; i++) {
        w[2 * i] = spread32(uint32_t(a.words()[i]));
        w[2 * i + 1] = spread32(uint32_t(a.words()[i] >> 32));
    }
    return reduce_wide(w);
}

FieldElement gf_inv(const FieldElement &a) {
    if (a.is_zero())
        throw std::domain_error("gf_inv: zero has no inverse");
    // 2^233 - 2 has bits 232..1 set: square-and-multiply from the top.
    FieldElement r = a;
    for (unsigned i = kFieldBits - 2; i >= 1; i--)
        r = gf_mul_ref(gf_square(r), a);
    return gf_square(r);
}

std::string bits_to_hex(std::span<const uint8_t> bits) {
    const std::size_t digits = (bits.size() + 3) / 4;
    std::string s(digits, '0');
    for (std::size_t d = 0; d < digits; d++) {
        const std::size_t lsb = 4 * (digits - 1 - d);
        unsigned v = 0;
        for (unsigned b = 0; b < 4; b++)
            if (lsb + b < bits.size() && bits[lsb + b])
                v |= 1U << b;
        s[d] = kHexDigitChars[v];
    }
    return s;
}

std::vector<uint8_t> hex_to_bits(std::string_view hex, std::size_t bit_length) {
    hex = strip_hex_prefix(hex);
    if (hex.empty())
        throw std::invalid_argument("empty hex string");
    std::vector<uint8_t> bits(bit_length, 0);
    const std::size_t digits = hex.size();
    for (std::size_t d = 0; d < digits; d++) {
        const int v = hex_value(hex[d]);
        if (v < 0)
            throw std::invalid_argument("invalid hex digit");
        const std::size_t lsb = 4 * (digits - 1 - d);
        for (unsigned b = 0; b < 4; b++) {
            if (!((v >> b) & 1))
                continue;
            if (lsb + b >= bit_length)
                throw std::invalid_argument("hex value exceeds bit length");
            bits[lsb + b] = 1;
        }
    }
    return bits;
}

} // namespace hdpa::gf
