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

// Gate-level AND/XOR netlists of the partial multiplier (PM) and a
// zero-delay evaluator that counts switching activity.

#pragma once

#include "hdpa/formula.h"

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hdpa::netlist {

enum class GateKind : uint8_t { And = 0, Xor = 1 };

/// Index into the signal space: 0 is constant zero, then the A operand
/// bits, then the B operand bits, then one signal per gate in id order.
using SignalRef = uint32_t;

struct Gate {
    GateKind kind;
    SignalRef in0;
    SignalRef in1;
};

class GateNetlist {
  public:
    static constexpr SignalRef kZero = 0;

    std::size_t operand_bits() const { return operand_bits_; }
    std::size_t input_count() const { return 2 * operand_bits_; }
    std::size_t signal_count() const { return first_gate() + gates_.size(); }
    SignalRef input_a(std::size_t i) const { return SignalRef(1 + i); }
    SignalRef input_b(std::size_t i) const {
        return SignalRef(1 + operand_bits_ + i);
    }
    SignalRef first_gate() const { return SignalRef(1 + 2 * operand_bits_); }
    bool is_gate(SignalRef s) const { return s >= first_gate(); }

    const std::vector<Gate> &gates() const { return gates_; }
    /// Product bits c_0 .. c_{2n-2}.
    const std::vector<SignalRef> &outputs() const { return outputs_; }
    std::size_t and_count() const;
    std::size_t xor_count() const;
    gf::GateCost cost() const { return {and_count(), xor_count()}; }

    /// Distinguishes netlists when pairing evaluation state.
    uint64_t identity() const { return identity_; }
    const std::string &description() const { return description_; }

    std::string signal_name(SignalRef s) const;
    /// "inputs I outputs O gates N" followed by one "id kind in0 in1" line
    /// per gate.
    void dump(std::ostream &os) const;

  private:
    friend class NetlistBuilder;

    std::size_t operand_bits_ = 0;
    std::vector<Gate> gates_;
    std::vector<SignalRef> outputs_;
    uint64_t identity_ = 0;
    std::string description_;
};

/// Schoolbook multiplier: n^2 AND gates, each c_i an XOR chain.
GateNetlist build_classical_pm(std::size_t n = 59);
/// Karatsuba2 / Winograd6 / Classical(5) multiplier for 59-bit operands.
GateNetlist build_combined_pm();
/// Netlist for any formula tree; operands narrower than the tree are padded
/// with constant zero.
GateNetlist build_from_formula(const gf::FormulaTree &tree,
                               std::size_t operand_bits);

/// Process-wide instances, built on first use.
const GateNetlist &shared_classical_pm();
const GateNetlist &shared_combined_pm();

struct NetlistState {
    uint64_t netlist_identity = 0;
    uint64_t last_a = 0;
    uint64_t last_b = 0;
    std::vector<uint8_t> values; // indexed by SignalRef
};

/// Reset state: all inputs and gate outputs zero.
NetlistState initial_state(const GateNetlist &netlist);

using PmProduct = std::array<uint64_t, 2>;

struct Evaluation {
    PmProduct product;
    uint32_t toggles;
};

/// One PM clock cycle. Toggles count gate outputs (primary outputs are gate
/// outputs) whose value differs from the previous evaluation. Throws
/// std::invalid_argument if the state belongs to another netlist or an
/// operand is too wide.
Evaluation evaluate(const GateNetlist &netlist, uint64_t a, uint64_t b,
                    NetlistState &state);

} // namespace hdpa::netlist
