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

// Montgomery kP ladder in Lopez-Dahab x-only projective coordinates,
// simulated clock cycle by clock cycle on a fixed 54-cycle slot per key bit.

#pragma once

#include "hdpa/curve.h"
#include "hdpa/mult_datapath.h"
#include "hdpa/random.h"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hdpa::kp {

using ec::AffinePoint;
using ec::BigInt;
using ec::CurveParams;
using gf::FieldElement;
using mult::DesignConfig;

inline constexpr unsigned kScalarBits = 232;
inline constexpr unsigned kCyclesPerSlot = 54;
inline constexpr unsigned kMultsPerSlot = 6;

/// A 232-bit scalar with its most significant bit set.
class Scalar {
  public:
    /// Throws std::invalid_argument unless 2^231 <= k < 2^232.
    static Scalar from_bigint(const BigInt &k);
    /// Hex, "0x" optional, at most 58 significant digits.
    static Scalar from_hex(std::string_view hex);
    static Scalar random(Rng &rng);

    const BigInt &value() const { return k_; }
    bool bit(unsigned j) const;
    /// 58 hex digits.
    std::string to_hex() const;
    friend bool operator==(const Scalar &, const Scalar &) = default;

  private:
    BigInt k_;
};

struct CycleActivity {
    uint32_t pm_toggles = 0;
    /// Sum of Hamming distances of all register writes in the cycle,
    /// accumulator included.
    uint32_t register_hd = 0;
    /// Hamming distance between consecutive controller control words.
    uint32_t control_hd = 0;
    friend bool operator==(const CycleActivity &,
                           const CycleActivity &) = default;
};

struct LadderState {
    FieldElement X1, Z1, X2, Z2;
    /// Affine x of the input point.
    FieldElement x;
};

/// X1 = x, Z1 = 1, X2 = x^4 + b, Z2 = x^2.
LadderState initial_ladder_state(const FieldElement &x,
                                 const CurveParams &curve);
/// Scales both projective pairs by lambda; throws for lambda = 0.
LadderState randomize_projective(const LadderState &state,
                                 const FieldElement &lambda);
/// Uniform nonzero field element.
FieldElement random_nonzero_element(Rng &rng);

// --- schedule ------------------------------------------------------------

/// Operand roles. XA/ZA hold the point receiving the addition, XD/ZD the
/// point being doubled; the key bit selects the physical registers.
enum class Operand : uint8_t {
    None,
    XA,
    ZA,
    XD,
    ZD,
    Alu,
    Ma,
    Mb,
    Acc,
    ConstX,
    ConstB
};
enum class AluOp : uint8_t { None = 0, Add = 1, Square = 2 };

struct ScheduleStep {
    unsigned cycle; // 1..54
    Operand load_a = Operand::None;
    Operand load_b = Operand::None;
    AluOp alu = AluOp::None;
    Operand alu_in0 = Operand::None;
    Operand alu_in1 = Operand::None;
    Operand write_dst = Operand::None;
    Operand write_src = Operand::None;
};

const std::array<ScheduleStep, kCyclesPerSlot> &slot_schedule();

/// 4-bit register address driven on the control bus for an operand role
/// when processing a key bit (15 = idle).
unsigned operand_code(Operand role, bool key_bit);
/// 26-bit control word: load_a, load_b, alu op, alu inputs, write dst/src.
uint32_t control_word(const ScheduleStep &step, bool key_bit);
uint32_t idle_control_word();

struct OperationCounts {
    unsigned multiplications = 0;
    unsigned squarings = 0;
    unsigned additions = 0;
};
OperationCounts count_operations(const std::array<ScheduleStep, kCyclesPerSlot> &s);

// --- ladder --------------------------------------------------------------

struct LadderOptions {
    DesignConfig design;
    /// Seeds the partial-product order stream.
    uint64_t seed = 0;
    std::optional<FieldElement> lambda;
    bool record_trace = true;
    /// Called after each processed bit with its index and the registers.
    std::function<void(unsigned, const LadderState &)> on_bit;
};

struct LadderResult {
    FieldElement x;
    bool infinity = false;
    LadderState final_state;
    std::vector<CycleActivity> trace;
    unsigned scalar_bits = 0;
};

/// Runs the ladder for any k >= 2 on P (on the curve, not infinity). The
/// trace covers bits bitlen(k)-2 .. 0, 54 cycles each.
LadderResult run_ladder(const BigInt &k, const AffinePoint &p,
                        const CurveParams &curve, const LadderOptions &opts);

LadderResult montgomery_kp(const Scalar &k, const AffinePoint &p,
                           const CurveParams &curve, const DesignConfig &design,
                           uint64_t seed);

/// k + r * order for a fresh 32-bit r.
BigInt randomize_scalar(const BigInt &k, const CurveParams &curve, Rng &rng);
BigInt randomize_scalar(const BigInt &k, const CurveParams &curve, uint32_t r);

/// Full [k]P from the final ladder registers (x and y of P required).
AffinePoint recover_point(const LadderState &final_state, const AffinePoint &p);

struct BlindedResult {
    AffinePoint point; // [k]P
    LadderResult ladder; // the traced [k](P + R) run
};

/// Traces [k](P + R) and corrects with an untraced [k]R.
/// Throws std::invalid_argument if P + R is the point at infinity.
BlindedResult blind_point(const BigInt &k, const AffinePoint &p,
                          const AffinePoint &r, const CurveParams &curve,
                          const LadderOptions &opts);

} // namespace hdpa::kp
