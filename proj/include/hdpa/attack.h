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

// Horizontal difference-of-means attack on a single slotted trace.

#pragma once

#include "hdpa/trace.h"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hdpa::attack {

using trace::SlotMatrix;
using KeyBits = std::vector<uint8_t>;

/// Column means over all rows of the matrix.
std::vector<double> mean_profile(const SlotMatrix &slots);

struct KeyCandidate {
    unsigned clock_index = 0; // 1-based column
    KeyBits bits;             // bits[j] = hypothesis for k_j
};

/// Candidate i, bit j is 1 iff slots(j, i) <= profile[i].
std::vector<KeyCandidate> extract_candidates(const SlotMatrix &slots,
                                             const std::vector<double> &profile);

/// Percentage of matching bit positions.
double relative_correctness(const KeyBits &candidate, const KeyBits &truth);
/// 50 + |50 - delta1|; throws std::invalid_argument outside [0, 100].
double correctness(double delta1);

struct RankedCandidate {
    unsigned rank = 0;
    KeyCandidate candidate;
    double delta1 = 0;
    double delta = 0;
};

struct AttackReport {
    /// True when scored against the real key; otherwise delta1 is the
    /// agreement with the majority-vote candidate (an attacker-side proxy).
    bool scored = false;
    std::vector<RankedCandidate> entries; // sorted, rank 1 first

    const RankedCandidate &best() const { return entries.front(); }
};

/// Ranks candidates by delta, descending, ties by clock index.
AttackReport rank_candidates(std::vector<KeyCandidate> candidates,
                             const std::optional<KeyBits> &truth);

/// Full pipeline on a 230 x 54 matrix.
AttackReport run_attack(const SlotMatrix &slots,
                        const std::optional<KeyBits> &truth);
/// Compresses and slices the trace first.
AttackReport run_attack(const trace::PowerTrace &trace,
                        const std::optional<KeyBits> &truth);

/// Bits 0..229 of a scalar.
KeyBits attacked_bits(const ec::BigInt &k);

/// MSB-first hex of a candidate (58 digits for 230 bits).
std::string candidate_hex(const KeyBits &bits);

/// "rank,clock_index,delta1,delta,candidate_hex" rows and a trailing
/// "# best_delta=... best_clock=..." line.
void write_report_csv(std::ostream &os, const AttackReport &report);

} // namespace hdpa::attack
