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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace hdpa::attack {

std::vector<double> mean_profile(const SlotMatrix &slots) {
    if (slots.rows() == 0 || slots.cols() == 0)
        throw std::invalid_argument("empty slot matrix");
    std::vector<double> p(slots.cols(), 0.0);
    for (std::size_t j = 0; j < slots.rows(); j++)
        for (std::size_t i = 0; i < slots.cols(); i++)
            p[i] += slots.at(j, i);
    for (double &v : p)
        v /= double(slots.rows());
    return p;
}

std::vector<KeyCandidate> extract_candidates(const SlotMatrix &slots,
                                             const std::vector<double> &profile) {
    if (profile.size() != slots.cols())
        throw std::invalid_argument("mean profile does not match the matrix");
    std::vector<KeyCandidate> out(slots.cols());
    for (std::size_t i = 0; i < slots.cols(); i++) {
        out[i].clock_index = unsigned(i + 1);
        out[i].bits.resize(slots.rows());
        for (std::size_t j = 0; j < slots.rows(); j++)
            out[i].bits[j] = slots.at(j, i) <= profile[i] ? 1 : 0;
    }
    return out;
}

double relative_correctness(const KeyBits &candidate, const KeyBits &truth) {
    if (candidate.size() != truth.size() || truth.empty())
        throw std::invalid_argument("candidate and key lengths differ");
    std::size_t match = 0;
    for (std::size_t j = 0; j < truth.size(); j++)
        match += (candidate[j] != 0) == (truth[j] != 0);
    return 100.0 * double(match) / double(truth.size());
}

double correctness(double delta1) {
    if (!(delta1 >= 0.0 && delta1 <= 100.0))
        throw std::invalid_argument("delta1 must lie in [0, 100]");
    return 50.0 + std::abs(50.0 - delta1);
}

AttackReport rank_candidates(std::vector<KeyCandidate> candidates,
                             const std::optional<KeyBits> &truth) {
    if (candidates.empty())
        throw std::invalid_argument("no candidates");
    AttackReport rep;
    rep.scored = truth.has_value();

    KeyBits reference;
    if (truth) {
        reference = *truth;
    } else {
        // Majority vote per bit across columns, ties to 1.
        const std::size_t n = candidates.front().bits.size();
        reference.assign(n, 0);
        for (std::size_t j = 0; j < n; j++) {
            std::size_t ones = 0;
            for (const auto &c : candidates)
                ones += c.bits.at(j) != 0;
            reference[j] = 2 * ones >= candidates.size() ? 1 : 0;
        }
    }

    for (auto &c : candidates) {
        RankedCandidate r;
        r.delta1 = relative_correctness(c.bits, reference);
        r.delta = correctness(r.delta1);
        r.candidate = std::move(c);
        rep.entries.push_back(std::move(r));
    }
    std::stable_sort(rep.entries.begin(), rep.entries.end(),
                     [](const RankedCandidate &a, const RankedCandidate &b) {
                         if (a.delta != b.delta)
                             return a.delta > b.delta;
                         return a.candidate.clock_index <
                                b.candidate.clock_index;
                     });
    for (std::size_t i = 0; i < rep.entries.size(); i++)
        rep.entries[i].rank = unsigned(i + 1);
    return rep;
}

AttackReport run_attack(const SlotMatrix &slots,
                        const std::optional<KeyBits> &truth) {
    if (slots.rows() != trace::kAttackSlots ||
        slots.cols() != kp::kCyclesPerSlot)
        throw std::invalid_argument(
            "attack expects a 230 x 54 slot matrix, got " +
            std::to_string(slots.rows()) + " x " + std::to_string(slots.cols()));
    if (truth && truth->size() != slots.rows())
        throw std::invalid_argument("true key must have 230 bits");
    return rank_candidates(extract_candidates(slots, mean_profile(slots)),
                           truth);
}

AttackReport run_attack(const trace::PowerTrace &t,
                        const std::optional<KeyBits> &truth) {
    return run_attack(trace::slice_into_slots(trace::compress(t)), truth);
}

KeyBits attacked_bits(const ec::BigInt &k) {
    KeyBits bits(trace::kAttackSlots);
    for (unsigned j = 0; j < trace::kAttackSlots; j++)
        bits[j] = boost::multiprecision::bit_test(k, j) ? 1 : 0;
    return bits;
}

std::string candidate_hex(const KeyBits &bits) {
    return gf::bits_to_hex(bits);
}

void write_report_csv(std::ostream &os, const AttackReport &rep) {
    char buf[64];
    os << "rank,clock_index,delta1,delta,candidate_hex\n";
    for (const auto &e : rep.entries) {
        std::snprintf(buf, sizeof buf, "%.4f,%.4f", e.delta1, e.delta);
        os << e.rank << ',' << e.candidate.clock_index << ',' << buf << ','
           << candidate_hex(e.candidate.bits) << '\n';
    }
    std::snprintf(buf, sizeof buf, "%.4f", rep.best().delta);
    os << "# best_delta=" << buf
       << " best_clock=" << rep.best().candidate.clock_index << '\n';
}

} // namespace hdpa::attack
