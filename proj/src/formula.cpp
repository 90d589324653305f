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

#include <stdexcept>

namespace hdpa::gf {

FormulaTree FormulaTree::classical(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("classical formula needs n >= 1");
    return FormulaTree(Kind::Classical, n, nullptr);
}

FormulaTree FormulaTree::karatsuba2(std::size_t m, FormulaTree child) {
    if (m == 0 || child.operand_length() != m)
        throw std::invalid_argument(
            "karatsuba2: child operand length must equal segment length");
    return FormulaTree(Kind::Karatsuba2, m,
                       std::make_shared<const FormulaTree>(std::move(child)));
}

FormulaTree FormulaTree::winograd6(std::size_t m, FormulaTree child) {
    if (m == 0 || child.operand_length() != m)
        throw std::invalid_argument(
            "winograd6: child operand length must equal segment length");
    return FormulaTree(Kind::Winograd6, m,
                       std::make_shared<const FormulaTree>(std::move(child)));
}

std::size_t FormulaTree::operand_length() const {
    switch (kind_) {
    case Kind::Classical:
        return segment_;
    case Kind::Karatsuba2:
        return 2 * segment_;
    case Kind::Winograd6:
        return 6 * segment_;
    }
    return 0;
}

std::string FormulaTree::describe() const {
    switch (kind_) {
    case Kind::Classical:
        return "Classical(" + std::to_string(segment_) + ")";
    case Kind::Karatsuba2:
        return "Karatsuba2(m=" + std::to_string(segment_) + ", " +
               child_->describe() + ")";
    case Kind::Winograd6:
        return "Winograd6(m=" + std::to_string(segment_) + ", " +
               child_->describe() + ")";
    }
    return {};
}

GateCost gate_cost(const FormulaTree &tree) {
    const uint64_t m = tree.segment_length();
    switch (tree.kind()) {
    case FormulaTree::Kind::Classical:
        return {m * m, (m - 1) * (m - 1)};
    case FormulaTree::Kind::Karatsuba2:
        return 3 * gate_cost(tree.child()) + GateCost{0, 7 * m - 3};
    case FormulaTree::Kind::Winograd6:
        return 18 * gate_cost(tree.child()) + GateCost{0, 72 * m - 19};
    }
    throw std::logic_error("unknown formula kind");
}

FormulaTree combined_pm_formula() {
    return FormulaTree::karatsuba2(
        30, FormulaTree::winograd6(5, FormulaTree::classical(5)));
}

FormulaTree classical_pm_formula(std::size_t n) {
    return FormulaTree::classical(n);
}

} // namespace hdpa::gf
