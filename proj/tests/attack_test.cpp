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

#include "hdpa/attack.h"
#include "oracles.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace hdpa;
using attack::KeyBits;
using trace::SlotMatrix;

namespace {

KeyBits random_key(Rng &rng, std::size_t n = 230) {
    KeyBits k(n);
    for (auto &b : k)
        b = rng() & 1U;
    return k;
}

SlotMatrix noise_matrix(Rng &rng) {
    SlotMatrix m(230, 54);
    for (std::size_t j = 0; j < 230; j++)
        for (std::size_t i = 0; i < 54; i++)
            m.at(j, i) = standard_normal(rng);
    return m;
}

SlotMatrix planted(const KeyBits &key, unsigned column, Rng &rng) {
    SlotMatrix m = noise_matrix(rng);
    for (std::size_t j = 0; j < 230; j++)
        m.at(j, column - 1) = key[j] ? 99.0 : 101.0;
    return m;
}

} // namespace

TEST(MeanProfile, Basics) {
    const auto m = SlotMatrix::from_rows({{1, 2}, {3, 4}});
    EXPECT_EQ(attack::mean_profile(m), (std::vector<double>{2, 3}));
    const auto same = SlotMatrix::from_rows({{5, 6, 7}, {5, 6, 7}, {5, 6, 7}});
    EXPECT_EQ(attack::mean_profile(same), (std::vector<double>{5, 6, 7}));
    EXPECT_THROW(attack::mean_profile(SlotMatrix{}), std::invalid_argument);
}

TEST(MeanProfile, MatchesResummation) {
    Rng rng(1);
    const auto m = noise_matrix(rng);
    const auto p = attack::mean_profile(m);
    for (std::size_t i = 0; i < 54; i++) {
        long double s = 0;
        for (std::size_t j = 230; j-- > 0;)
            s += m.at(j, i);
        EXPECT_NEAR(p[i], double(s / 230), 1e-12);
    }
}

TEST(Candidates, TieMapsToOne) {
    const auto m = SlotMatrix::from_rows({{3, 1}, {3, 5}, {3, 5}});
    const auto c = attack::extract_candidates(m, attack::mean_profile(m));
    EXPECT_EQ(c[0].bits, (KeyBits{1, 1, 1}));
    EXPECT_EQ(c[1].bits, (KeyBits{1, 0, 0}));
    EXPECT_EQ(c[1].clock_index, 2U);
    EXPECT_THROW(attack::extract_candidates(m, {1.0}), std::invalid_argument);
}

TEST(Candidates, PlantedColumn) {
    Rng rng(2);
    const auto key = random_key(rng);
    const auto m = planted(key, 7, rng);
    const auto c = attack::extract_candidates(m, attack::mean_profile(m));
    EXPECT_EQ(c[6].bits, key);
}

TEST(Candidates, ColumnLocal) {
    Rng rng(3);
    const auto m = noise_matrix(rng);
    SlotMatrix swapped = m;
    for (std::size_t j = 0; j < 230; j++)
        std::swap(swapped.at(j, 3), swapped.at(j, 40));
    const auto a = attack::extract_candidates(m, attack::mean_profile(m));
    const auto b =
        attack::extract_candidates(swapped, attack::mean_profile(swapped));
    EXPECT_EQ(a[3].bits, b[40].bits);
    EXPECT_EQ(a[40].bits, b[3].bits);
    EXPECT_EQ(a[10].bits, b[10].bits);
}

TEST(Correctness, Values) {
    KeyBits k(230, 0);
    for (std::size_t j = 0; j < 230; j += 3)
        k[j] = 1;
    KeyBits inv = k;
    for (auto &b : inv)
        b ^= 1;
    EXPECT_EQ(attack::relative_correctness(k, k), 100.0);
    EXPECT_EQ(attack::relative_correctness(inv, k), 0.0);
    KeyBits half = k;
    for (std::size_t j = 0; j < 115; j++)
        half[j] ^= 1;
    EXPECT_EQ(attack::relative_correctness(half, k), 50.0);
    EXPECT_THROW(attack::relative_correctness(KeyBits(3), k), std::invalid_argument);

    EXPECT_EQ(attack::correctness(31), 69.0);
    EXPECT_EQ(attack::correctness(50), 50.0);
    EXPECT_EQ(attack::correctness(100), 100.0);
    EXPECT_THROW(attack::correctness(100.5), std::invalid_argument);
    EXPECT_THROW(attack::correctness(-1), std::invalid_argument);
}

TEST(Correctness, FoldingSymmetry) {
    for (int x = 0; x <= 100; x++) {
        EXPECT_EQ(attack::correctness(x), attack::correctness(100 - x));
        EXPECT_GE(attack::correctness(x), 50.0);
    }
}

TEST(RunAttack, PlantedLeak) {
    Rng rng(4);
    const auto key = random_key(rng);
    const auto rep = attack::run_attack(planted(key, 7, rng), key);
    EXPECT_TRUE(rep.scored);
    EXPECT_EQ(rep.best().delta, 100.0);
    EXPECT_EQ(rep.best().candidate.clock_index, 7U);
    EXPECT_EQ(rep.best().rank, 1U);
}

TEST(RunAttack, ConstantMatrix) {
    SlotMatrix m(230, 54);
    KeyBits key(230, 0);
    for (std::size_t j = 0; j < 161; j++)
        key[j] = 1;
    const auto rep = attack::run_attack(m, key);
    for (const auto &e : rep.entries) {
        EXPECT_EQ(e.candidate.bits, KeyBits(230, 1));
        EXPECT_DOUBLE_EQ(e.delta, 70.0);
    }
    // all tied: ranking keeps clock order
    for (std::size_t r = 0; r < 54; r++)
        EXPECT_EQ(rep.entries[r].candidate.clock_index, r + 1);
}

TEST(RunAttack, SortedPermutationOfScores) {
    Rng rng(5);
    const auto key = random_key(rng);
    const auto m = noise_matrix(rng);
    const auto rep = attack::run_attack(m, key);
    ASSERT_EQ(rep.entries.size(), 54U);
    std::vector<double> sorted, direct;
    for (std::size_t i = 0; i < 54; i++) {
        EXPECT_EQ(rep.entries[i].rank, i + 1);
        if (i > 0) {
            EXPECT_GE(rep.entries[i - 1].delta, rep.entries[i].delta);
        }
        sorted.push_back(rep.entries[i].delta1);
    }
    for (const auto &c : attack::extract_candidates(m, attack::mean_profile(m)))
        direct.push_back(attack::relative_correctness(c.bits, key));
    std::sort(sorted.begin(), sorted.end());
    std::sort(direct.begin(), direct.end());
    EXPECT_EQ(sorted, direct);
}

TEST(RunAttack, AffineInvariance) {
    Rng rng(6);
    const auto key = random_key(rng);
    const auto m = planted(key, 20, rng);
    SlotMatrix scaled = m;
    for (std::size_t j = 0; j < 230; j++)
        for (std::size_t i = 0; i < 54; i++)
            scaled.at(j, i) = 4.0 * m.at(j, i) + 16.0;
    const auto a = attack::run_attack(m, key);
    const auto b = attack::run_attack(scaled, key);
    for (std::size_t r = 0; r < 54; r++) {
        EXPECT_EQ(a.entries[r].candidate.bits, b.entries[r].candidate.bits);
        EXPECT_EQ(a.entries[r].delta, b.entries[r].delta);
    }
}

TEST(RunAttack, NoiseStaysNearHalf) {
    Rng rng(7);
    int within = 0;
    for (int run = 0; run < 100; run++) {
        const auto rep = attack::run_attack(noise_matrix(rng), random_key(rng));
        within += rep.best().delta <= 62.0;
    }
    EXPECT_GE(within, 95);
}

TEST(RunAttack, ShapeChecked) {
    EXPECT_THROW(attack::run_attack(SlotMatrix(229, 54), std::nullopt),
                 std::invalid_argument);
    EXPECT_THROW(attack::run_attack(SlotMatrix(230, 54), KeyBits(5)),
                 std::invalid_argument);
}

TEST(RunAttack, UnscoredProxy) {
    Rng rng(8);
    const auto key = random_key(rng);
    const auto rep = attack::run_attack(planted(key, 9, rng), std::nullopt);
    EXPECT_FALSE(rep.scored);
    ASSERT_EQ(rep.entries.size(), 54U);
    for (std::size_t i = 1; i < 54; i++)
        EXPECT_GE(rep.entries[i - 1].delta, rep.entries[i].delta);
}

TEST(Report, CsvFormat) {
    Rng rng(9);
    const auto key = random_key(rng);
    const auto rep = attack::run_attack(planted(key, 3, rng), key);
    std::ostringstream os;
    attack::write_report_csv(os, rep);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "rank,clock_index,delta1,delta,candidate_hex");
    std::getline(is, line);
    EXPECT_EQ(line.rfind("1,3,", 0), 0U) << line;
    EXPECT_NE(line.find(attack::candidate_hex(key)), std::string::npos);
    int rows = 1;
    std::string last;
    while (std::getline(is, line)) {
        rows++;
        last = line;
    }
    EXPECT_EQ(rows, 55);
    EXPECT_EQ(last, "# best_delta=100.0000 best_clock=3");
    EXPECT_EQ(attack::candidate_hex(key).size(), 58U);
}
