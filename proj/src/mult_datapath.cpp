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

#include "hdpa/mult_datapath.h"

#include <stdexcept>

namespace hdpa::mult {

namespace {

constexpr uint64_t kSegmentMask = (uint64_t(1) << kSegmentBits) - 1;

// a_s for s = 0..3 from the 236-bit zero-padded operand.
std::array<uint64_t, kSegments> segments(const FieldElement &x) {
    std::array<uint64_t, kSegments> seg{};
    const auto &w = x.words();
    for (unsigned s = 0; s < kSegments; s++) {
        const unsigned lsb = s * kSegmentBits;
        const unsigned wi = lsb / 64;
        const unsigned bi = lsb % 64;
        uint64_t v = w[wi] >> bi;
        if (bi != 0 && wi + 1 < w.size())
            v |= w[wi + 1] << (64 - bi);
        seg[s] = v & kSegmentMask;
    }
    return seg;
}

uint64_t combine(const std::array<uint64_t, kSegments> &seg, uint8_t mask) {
    uint64_t v = 0;
    for (unsigned s = 0; s < kSegments; s++)
        if ((mask >> s) & 1U)
            v ^= seg[s];
    return v;
}

} // namespace

const std::array<PartialPlanEntry, kPartialProducts> &accumulation_plan() {
    // Two levels of 2-segment Karatsuba: a = (a0 + a1 s) + (a2 + a3 s) s^2.
    static const std::array<PartialPlanEntry, kPartialProducts> plan{{
        {1, 0b0001, {0, 1, 2, 3}}, // a0 b0
        {2, 0b0010, {1, 2, 3, 4}}, // a1 b1
        {3, 0b0011, {1, 3}},       // (a0+a1)(b0+b1)
        {4, 0b0100, {2, 3, 4, 5}}, // a2 b2
        {5, 0b1000, {3, 4, 5, 6}}, // a3 b3
        {6, 0b1100, {3, 5}},       // (a2+a3)(b2+b3)
        {7, 0b0101, {2, 3}},       // (a0+a2)(b0+b2)
        {8, 0b1010, {3, 4}},       // (a1+a3)(b1+b3)
        {9, 0b1111, {3}},          // (a0+a1+a2+a3)(b0+b1+b2+b3)
    }};
    return plan;
}

Permutation9 Permutation9::identity() {
    return from_order({1, 2, 3, 4, 5, 6, 7, 8, 9});
}

Permutation9 Permutation9::from_order(const std::array<unsigned, 9> &order) {
    unsigned seen = 0;
    for (unsigned j : order) {
        if (j < 1 || j > 9 || ((seen >> j) & 1U))
            throw std::invalid_argument("not a permutation of 1..9");
        seen |= 1U << j;
    }
    Permutation9 p;
    p.order_ = order;
    return p;
}

std::string to_string(PmVariant v) {
    return v == PmVariant::Combined ? "combined" : "classical";
}

std::string to_string(SequenceMode m) {
    return m == SequenceMode::Fixed ? "fixed" : "randomized";
}

std::string DesignConfig::name() const {
    if (pm_variant == PmVariant::Combined)
        return sequence_mode == SequenceMode::Fixed ? "basic" : "rand-seq";
    return sequence_mode == SequenceMode::Fixed ? "classical-pm"
                                                : "classical-rand";
}

DesignConfig DesignConfig::from_name(std::string_view name) {
    for (const auto &d : all())
        if (d.name() == name)
            return d;
    throw std::invalid_argument("unknown design '" + std::string(name) +
                                "' (expected basic, rand-seq, classical-pm "
                                "or classical-rand)");
}

std::array<DesignConfig, 4> DesignConfig::all() {
    return {{{PmVariant::Combined, SequenceMode::Fixed},
             {PmVariant::Combined, SequenceMode::Randomized},
             {PmVariant::Classical, SequenceMode::Fixed},
             {PmVariant::Classical, SequenceMode::Randomized}}};
}

const netlist::GateNetlist &DesignConfig::netlist() const {
    return pm_variant == PmVariant::Combined ? netlist::shared_combined_pm()
                                             : netlist::shared_classical_pm();
}

std::array<SegmentPair, kPartialProducts> decompose(const FieldElement &a,
                                                    const FieldElement &b) {
    const auto sa = segments(a);
    const auto sb = segments(b);
    std::array<SegmentPair, kPartialProducts> pairs{};
    for (const auto &e : accumulation_plan())
        pairs[e.j - 1] = {combine(sa, e.segment_mask),
                          combine(sb, e.segment_mask), e.j};
    return pairs;
}

Permutation9 sample_permutation(SequenceMode mode, Rng &rng) {
    if (mode == SequenceMode::Fixed)
        return Permutation9::identity();
    std::array<unsigned, 9> order{1, 2, 3, 4, 5, 6, 7, 8, 9};
    for (unsigned i = 8; i > 0; i--) {
        const auto k = unsigned(uniform_below(rng, i + 1));
        std::swap(order[i], order[k]);
    }
    return Permutation9::from_order(order);
}

FieldMulResult field_mul_ordered(const FieldElement &a, const FieldElement &b,
                                 const netlist::GateNetlist &pm,
                                 netlist::NetlistState &pm_state,
                                 const Permutation9 &order) {
    const auto pairs = decompose(a, b);
    const auto &plan = accumulation_plan();

    FieldMulResult r;
    r.order = order;
    FieldElement acc; // reset
    for (unsigned cycle = 0; cycle < kPartialProducts; cycle++) {
        const unsigned j = order[cycle];
        const SegmentPair &p = pairs[j - 1];
        const auto ev = netlist::evaluate(pm, p.a, p.b, pm_state);

        const auto partial =
            gf::RawPolynomial::from_words(ev.product, 2 * kSegmentBits - 1);
        auto wide = gf::RawPolynomial::from_field(acc, kAccumulatorBits);
        for (unsigned off : plan[j - 1].offsets)
            wide.xor_shifted(partial, off * kSegmentBits);
        const FieldElement next = gf::reduce(wide);

        r.activity[cycle] = {ev.toggles, gf::hamming_distance(acc, next)};
        r.accumulator[cycle] = next;
        acc = next;
    }
    r.product = acc;
    return r;
}

FieldMulResult field_mul(const FieldElement &a, const FieldElement &b,
                         const DesignConfig &config,
                         netlist::NetlistState &pm_state, Rng &rng) {
    const auto order = sample_permutation(config.sequence_mode, rng);
    return field_mul_ordered(a, b, config.netlist(), pm_state, order);
}

} // namespace hdpa::mult
