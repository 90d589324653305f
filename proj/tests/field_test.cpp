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
#include "oracles.h"

#include <gtest/gtest.h>

using namespace hdpa;
using gf::FieldElement;
using gf::RawPolynomial;

namespace {

FieldElement poly(std::initializer_list<unsigned> exps) {
    FieldElement r;
    for (unsigned e : exps)
        r.set_bit(e, true);
    return r;
}

RawPolynomial raw(std::initializer_list<unsigned> exps, std::size_t len) {
    RawPolynomial r(len);
    for (unsigned e : exps)
        r.set_bit(e, true);
    return r;
}

} // namespace

TEST(Field, AddIsBitwiseXor) {
    Rng rng(1);
    const auto a = oracle::random_element(rng);
    EXPECT_TRUE(gf::gf_add(a, a).is_zero());
    EXPECT_EQ(gf::gf_add(a, FieldElement{}), a);
    EXPECT_EQ(gf::gf_add(poly({74, 0}), poly({74, 1})), poly({1, 0}));
}

TEST(Field, ClassicalSmallCases) {
    const auto b = raw({0, 3, 4}, 5);
    EXPECT_EQ(gf::classical_poly_mul(raw({0}, 5), b, 5).degree(), 4);
    EXPECT_EQ(gf::classical_poly_mul(raw({0, 1}, 2), raw({0, 1}, 2), 2),
              raw({0, 2}, 3));
    // 0b10011 * 0b00111 = 0b1111001
    const auto c = gf::classical_poly_mul(RawPolynomial::from_u64(0b10011, 5),
                                          RawPolynomial::from_u64(0b00111, 5), 5);
    EXPECT_EQ(c, RawPolynomial::from_u64(0b1111001, 9));
}

TEST(Field, ClassicalExhaustiveFiveBit) {
    for (uint64_t a = 0; a < 32; a++)
        for (uint64_t b = 0; b < 32; b++) {
            const auto c = gf::classical_poly_mul(
                RawPolynomial::from_u64(a, 5), RawPolynomial::from_u64(b, 5), 5);
            const auto want = oracle::shift_xor_mul(oracle::to_bits(a, 5),
                                                    oracle::to_bits(b, 5));
            ASSERT_EQ(c.bit_length(), 9U);
            for (unsigned i = 0; i < 9; i++)
                ASSERT_EQ(c.bit(i), want[i] != 0) << a << "*" << b << " bit " << i;
        }
}

TEST(Field, ClassicalRejectsWideOperand) {
    EXPECT_THROW(gf::classical_poly_mul(raw({5}, 6), raw({0}, 6), 5),
                 std::invalid_argument);
}

TEST(Field, Clmul64MatchesShiftXor) {
    Rng rng(2);
    for (int i = 0; i < 2000; i++) {
        const uint64_t a = rng(), b = rng();
        uint64_t hi;
        const uint64_t lo = oracle::shift_xor_mul64(a, b, hi);
        const auto got = gf::clmul64(a, b);
        ASSERT_EQ(got[0], lo);
        ASSERT_EQ(got[1], hi);
    }
}

TEST(Field, ReduceSpecialValues) {
    EXPECT_TRUE(gf::reduce(raw({233, 74, 0}, 465)).is_zero());
    EXPECT_EQ(gf::reduce(raw({233}, 234)), poly({74, 0}));
    const auto small = raw({0, 100, 232}, 300);
    EXPECT_EQ(gf::reduce(small), poly({0, 100, 232}));
    EXPECT_THROW(gf::reduce(raw({465}, 466)), std::invalid_argument);
    EXPECT_NO_THROW(gf::reduce(raw({464}, 466)));
}

TEST(Field, ReduceMatchesLongDivision) {
    Rng rng(3);
    for (int i = 0; i < 500; i++) {
        RawPolynomial c(465);
        oracle::Bits bits(465);
        for (unsigned k = 0; k < 465; k++) {
            bits[k] = rng() & 1U;
            c.set_bit(k, bits[k]);
        }
        ASSERT_EQ(gf::reduce(c), oracle::reduce_bits(bits));
    }
}

TEST(Field, MulRefMatchesBitOracle) {
    Rng rng(4);
    for (int i = 0; i < 300; i++) {
        const auto a = oracle::random_element(rng);
        const auto b = oracle::random_element(rng);
        ASSERT_EQ(gf::gf_mul_ref(a, b), oracle::field_mul(a, b));
    }
    const auto a = oracle::random_element(rng);
    EXPECT_EQ(gf::gf_mul_ref(a, FieldElement::one()), a);
    EXPECT_TRUE(gf::gf_mul_ref(a, FieldElement{}).is_zero());
}

TEST(Field, RingLaws) {
    Rng rng(5);
    for (int i = 0; i < 10000; i++) {
        const auto a = oracle::random_element(rng);
        const auto b = oracle::random_element(rng);
        const auto c = oracle::random_element(rng);
        ASSERT_EQ(gf::gf_mul_ref(a, b), gf::gf_mul_ref(b, a));
        ASSERT_EQ(gf::gf_mul_ref(gf::gf_mul_ref(a, b), c),
                  gf::gf_mul_ref(a, gf::gf_mul_ref(b, c)));
        ASSERT_EQ(gf::gf_mul_ref(a, b ^ c),
                  gf::gf_mul_ref(a, b) ^ gf::gf_mul_ref(a, c));
    }
}

TEST(Field, Squaring) {
    EXPECT_EQ(gf::gf_square(FieldElement::one()), FieldElement::one());
    EXPECT_EQ(gf::gf_square(poly({1})), poly({2}));
    EXPECT_EQ(gf::gf_square(poly({117})), poly({75, 1}));
    Rng rng(6);
    for (int i = 0; i < 10000; i++) {
        const auto a = oracle::random_element(rng);
        ASSERT_EQ(gf::gf_square(a), gf::gf_mul_ref(a, a));
    }
}

TEST(Field, Inversion) {
    EXPECT_EQ(gf::gf_inv(FieldElement::one()), FieldElement::one());
    EXPECT_THROW(gf::gf_inv(FieldElement{}), std::domain_error);
    Rng rng(7);
    for (int i = 0; i < 1000; i++) {
        auto a = oracle::random_element(rng);
        if (a.is_zero())
            continue;
        ASSERT_EQ(gf::gf_mul_ref(a, gf::gf_inv(a)), FieldElement::one());
    }
}

TEST(Field, HexRoundTrip) {
    Rng rng(8);
    for (int i = 0; i < 100; i++) {
        const auto a = oracle::random_element(rng);
        const auto h = a.to_hex();
        ASSERT_EQ(h.size(), 59U);
        ASSERT_EQ(FieldElement::from_hex(h), a);
        ASSERT_EQ(FieldElement::from_hex("0x" + h), a);
    }
    EXPECT_EQ(poly({0, 232}).to_hex(),
              "10000000000000000000000000000000000000000000000000000000001");
}

TEST(Field, HexRejectsMalformed) {
    EXPECT_THROW(FieldElement::from_hex("123"), std::invalid_argument);
    // bit 233 set
    EXPECT_THROW(FieldElement::from_hex(
                     "20000000000000000000000000000000000000000000000000000000000"),
                 std::invalid_argument);
    EXPECT_THROW(FieldElement::from_hex(
                     "g0000000000000000000000000000000000000000000000000000000000"),
                 std::invalid_argument);
}

TEST(Field, FromWordsRejectsHighBits) {
    FieldElement::Words w{0, 0, 0, uint64_t(1) << 41};
    EXPECT_THROW(FieldElement::from_words(w), std::invalid_argument);
}

TEST(Field, XorShiftedAccumulates) {
    auto acc = raw({0}, 20);
    acc.xor_shifted(raw({0, 2}, 3), 5);
    EXPECT_EQ(acc, raw({0, 5, 7}, 20));
    EXPECT_THROW(acc.xor_shifted(raw({2}, 3), 18), std::invalid_argument);
}
