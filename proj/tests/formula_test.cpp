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

#include "hdpa/formula.h"

#include <gtest/gtest.h>

using namespace hdpa::gf;

TEST(GateCost, Classical) {
    EXPECT_EQ(gate_cost(FormulaTree::classical(1)), (GateCost{1, 0}));
    EXPECT_EQ(gate_cost(FormulaTree::classical(5)), (GateCost{25, 16}));
    EXPECT_EQ(gate_cost(FormulaTree::classical(59)), (GateCost{3481, 3364}));
    EXPECT_EQ(gate_cost(classical_pm_formula()), (GateCost{3481, 3364}));
}

TEST(GateCost, CombinedPartialMultiplier) {
    const auto t = FormulaTree::karatsuba2(
        30, FormulaTree::winograd6(5, FormulaTree::classical(5)));
    EXPECT_EQ(gate_cost(t), (GateCost{1350, 2094}));
    EXPECT_EQ(gate_cost(combined_pm_formula()), (GateCost{1350, 2094}));
    EXPECT_EQ(t.operand_length(), 60U);
}

TEST(GateCost, LevelRules) {
    const auto c = FormulaTree::classical(7);
    // 3 * (49, 36) + (0, 7*7 - 3)
    EXPECT_EQ(gate_cost(FormulaTree::karatsuba2(7, c)), (GateCost{147, 154}));
    // 18 * (49, 36) + (0, 72*7 - 19)
    EXPECT_EQ(gate_cost(FormulaTree::winograd6(7, c)), (GateCost{882, 1133}));
}

TEST(GateCost, Additive) {
    const GateCost a{3, 4}, b{10, 20};
    EXPECT_EQ(a + b, (GateCost{13, 24}));
    EXPECT_EQ(3 * a, (GateCost{9, 12}));
}

TEST(FormulaTree, RejectsInconsistentChild) {
    EXPECT_THROW(FormulaTree::karatsuba2(30, FormulaTree::classical(5)),
                 std::invalid_argument);
    EXPECT_THROW(FormulaTree::winograd6(4, FormulaTree::classical(5)),
                 std::invalid_argument);
}

TEST(FormulaTree, Shape) {
    const auto t = combined_pm_formula();
    EXPECT_EQ(t.kind(), FormulaTree::Kind::Karatsuba2);
    EXPECT_EQ(t.child().kind(), FormulaTree::Kind::Winograd6);
    EXPECT_EQ(t.child().child().kind(), FormulaTree::Kind::Classical);
    EXPECT_EQ(t.child().operand_length(), 30U);
    EXPECT_FALSE(t.describe().empty());
}
