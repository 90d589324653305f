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

// Polynomial multiplication formulas and their analytic gate complexity.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>

namespace hdpa::gf {

struct GateCost {
    uint64_t and_count = 0;
    uint64_t xor_count = 0;

    friend GateCost operator+(const GateCost &a, const GateCost &b) {
        return {a.and_count + b.and_count, a.xor_count + b.xor_count};
    }
    friend GateCost operator*(uint64_t k, const GateCost &c) {
        return {k * c.and_count, k * c.xor_count};
    }
    friend bool operator==(const GateCost &, const GateCost &) = default;
};

/// A multiplication method applied recursively. The leaf is always
/// Classical(n); Karatsuba2(m) splits 2m-bit operands into two m-bit
/// segments, Winograd6(m) splits 6m-bit operands into six.
class FormulaTree {
  public:
    enum class Kind { Classical, Karatsuba2, Winograd6 };

    static FormulaTree classical(std::size_t n);
    /// Throws std::invalid_argument if the child does not take m-bit operands.
    static FormulaTree karatsuba2(std::size_t m, FormulaTree child);
    static FormulaTree winograd6(std::size_t m, FormulaTree child);

    Kind kind() const { return kind_; }
    /// n for Classical, the segment length m otherwise.
    std::size_t segment_length() const { return segment_; }
    /// Only valid for non-leaf nodes.
    const FormulaTree &child() const { return *child_; }
    std::size_t operand_length() const;
    std::string describe() const;

  private:
    FormulaTree(Kind kind, std::size_t segment,
                std::shared_ptr<const FormulaTree> child)
        : kind_(kind), segment_(segment), child_(std::move(child)) {}

    Kind kind_;
    std::size_t segment_;
    std::shared_ptr<const FormulaTree> child_;
};

GateCost gate_cost(const FormulaTree &tree);

/// Karatsuba2(30) over Winograd6(5) over Classical(5), for 60-bit operands;
/// the 59-bit partial multiplier pads its operands into it.
FormulaTree combined_pm_formula();
FormulaTree classical_pm_formula(std::size_t n = 59);

} // namespace hdpa::gf
