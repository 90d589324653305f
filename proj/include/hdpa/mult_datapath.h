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

// The 233-bit field multiplier: a 9-cycle sequential machine built around
// one 59-bit partial multiplier. Each cycle computes one partial product of
// the 4-segment iterative Karatsuba decomposition and accumulates it, with
// reduction, into the accumulator register.

#pragma once

#include "hdpa/field.h"
#include "hdpa/netlist.h"
#include "hdpa/random.h"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hdpa::mult {

using gf::FieldElement;

inline constexpr unsigned kSegmentBits = 59;
inline constexpr unsigned kSegments = 4;
inline constexpr unsigned kPartialProducts = 9;
/// Pre-reduction accumulator width within a cycle.
inline constexpr unsigned kAccumulatorBits = 465;

struct SegmentPair {
    uint64_t a; // A_j
    uint64_t b; // B_j
    unsigned j; // 1..9
};

/// Static recombination data for partial product j.
struct PartialPlanEntry {
    unsigned j;
    /// Operand j is the XOR of the segments set in this mask (bit s = a_s).
    uint8_t segment_mask;
    /// Shift amounts in units of 59 bits.
    std::vector<unsigned> offsets;
};

/// The accumulation plan, indexed by j - 1.
const std::array<PartialPlanEntry, kPartialProducts> &accumulation_plan();

class Permutation9 {
  public:
    static Permutation9 identity();
    /// Throws std::invalid_argument unless the order is a bijection on 1..9.
    static Permutation9 from_order(const std::array<unsigned, 9> &order);

    const std::array<unsigned, 9> &order() const { return order_; }
    unsigned operator[](std::size_t cycle) const { return order_[cycle]; }
    friend bool operator==(const Permutation9 &, const Permutation9 &) = default;

  private:
    std::array<unsigned, 9> order_{};
};

enum class PmVariant { Combined, Classical };
enum class SequenceMode { Fixed, Randomized };

struct DesignConfig {
    PmVariant pm_variant = PmVariant::Combined;
    SequenceMode sequence_mode = SequenceMode::Fixed;

    /// basic, rand-seq, classical-pm or classical-rand.
    std::string name() const;
    /// Inverse of name(); throws std::invalid_argument.
    static DesignConfig from_name(std::string_view name);
    static std::array<DesignConfig, 4> all();
    const netlist::GateNetlist &netlist() const;

    friend bool operator==(const DesignConfig &, const DesignConfig &) = default;
};

std::string to_string(PmVariant v);
std::string to_string(SequenceMode m);

struct MultCycleActivity {
    uint32_t pm_toggles = 0;
    /// Hamming distance of the (reduced) accumulator register update.
    uint32_t accumulator_hd = 0;
};

/// The nine Karatsuba segment pairs; the operands are padded to 236 bits.
std::array<SegmentPair, kPartialProducts> decompose(const FieldElement &a,
                                                    const FieldElement &b);

/// Fixed -> identity. Randomized -> Fisher-Yates shuffle drawn from the rng.
Permutation9 sample_permutation(SequenceMode mode, Rng &rng);

struct FieldMulResult {
    FieldElement product;
    std::array<MultCycleActivity, kPartialProducts> activity;
    /// Accumulator register contents after each cycle.
    std::array<FieldElement, kPartialProducts> accumulator;
    Permutation9 order;
};

/// Nine cycles with an explicit partial-product order. The accumulator
/// starts from its reset value (zero).
FieldMulResult field_mul_ordered(const FieldElement &a, const FieldElement &b,
                                 const netlist::GateNetlist &pm,
                                 netlist::NetlistState &pm_state,
                                 const Permutation9 &order);

/// Draws the order for this multiplication from the rng (only in Randomized
/// mode) and runs the nine cycles on the design's partial multiplier.
FieldMulResult field_mul(const FieldElement &a, const FieldElement &b,
                         const DesignConfig &config,
                         netlist::NetlistState &pm_state, Rng &rng);

} // namespace hdpa::mult
