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

#include "hdpa/ladder.h"

#include <bit>
#include <stdexcept>

namespace hdpa::kp {

namespace {

using gf::gf_inv;
using gf::gf_mul_ref;
using gf::gf_square;
using gf::hamming_distance;
using O = Operand;

const BigInt &scalar_lower_bound() {
    static const BigInt v = BigInt(1) << (kScalarBits - 1);
    return v;
}

std::array<ScheduleStep, kCyclesPerSlot> make_schedule() {
    std::array<ScheduleStep, kCyclesPerSlot> s{};
    for (unsigned c = 0; c < kCyclesPerSlot; c++)
        s[c].cycle = c + 1;
    auto at = [&](unsigned cycle) -> ScheduleStep & { return s[cycle - 1]; };
    auto load = [&](unsigned c, O a, O b) {
        at(c).load_a = a;
        at(c).load_b = b;
    };
    auto alu = [&](unsigned c, AluOp op, O in0, O in1 = O::None) {
        at(c).alu = op;
        at(c).alu_in0 = in0;
        at(c).alu_in1 = in1;
    };
    auto write = [&](unsigned c, O dst, O src) {
        at(c).write_dst = dst;
        at(c).write_src = src;
    };

    // Madd into (XA, ZA), Mdouble of (XD, ZD).
    load(1, O::XA, O::ZD); // T = XA * ZD
    alu(2, AluOp::Square, O::XD);
    write(9, O::XA, O::Acc);
    load(10, O::XD, O::ZA); // U = XD * ZA
    write(11, O::XD, O::Alu); // XD = XD^2
    alu(12, AluOp::Square, O::ZD);
    write(13, O::ZD, O::Alu); // ZD = ZD^2
    write(18, O::ZA, O::Acc);
    load(19, O::XA, O::ZA); // T * U
    alu(20, AluOp::Add, O::Ma, O::Mb);
    alu(21, AluOp::Square, O::Alu); // (T + U)^2
    write(22, O::ZA, O::Alu);
    write(27, O::XA, O::Acc);
    load(28, O::ConstX, O::ZA); // x * ZA'
    alu(36, AluOp::Add, O::XA, O::Acc);
    write(36, O::XA, O::Alu);
    load(37, O::XD, O::ZD); // X^2 * Z^2
    alu(38, AluOp::Square, O::Mb);
    write(39, O::XD, O::Alu); // XD = Z^4
    alu(40, AluOp::Square, O::Ma); // X^4
    write(45, O::ZD, O::Acc);
    load(46, O::XD, O::ConstB); // b * Z^4
    alu(54, AluOp::Add, O::Alu, O::Acc);
    write(54, O::XD, O::Alu);
    return s;
}

enum Phys : unsigned { kX1 = 0, kZ1 = 1, kX2 = 2, kZ2 = 3 };

unsigned physical(Operand role, bool key_bit) {
    switch (role) {
    case O::XA:
        return key_bit ? kX1 : kX2;
    case O::ZA:
        return key_bit ? kZ1 : kZ2;
    case O::XD:
        return key_bit ? kX2 : kX1;
    case O::ZD:
        return key_bit ? kZ2 : kZ1;
    default:
        throw std::logic_error("operand is not a point register");
    }
}

// Cycle-level model of the datapath registers.
class Engine {
  public:
    Engine(const LadderState &init, const CurveParams &curve,
           const LadderOptions &opts)
        : b_(curve.b), x_(init.x), design_(opts.design),
          pm_(netlist::initial_state(opts.design.netlist())),
          rng_(make_rng(opts.seed, Stream::Sequence)),
          control_(idle_control_word()) {
        regs_ = {init.X1, init.Z1, init.X2, init.Z2};
    }

    void run_slot(bool bit, std::vector<CycleActivity> *trace) {
        const auto &sched = slot_schedule();
        mult::FieldMulResult mul;
        for (unsigned c = 0; c < kCyclesPerSlot; c++) {
            const ScheduleStep &st = sched[c];
            const unsigned sub = c % mult::kPartialProducts;
            uint32_t hd = 0;

            if (sub == 0) {
                const FieldElement a = value(st.load_a, bit);
                const FieldElement b = value(st.load_b, bit);
                hd += hamming_distance(ma_, a) + hamming_distance(mb_, b);
                ma_ = a;
                mb_ = b;
                mul = mult::field_mul(ma_, mb_, design_, pm_, rng_);
            }
            const auto &act = mul.activity[sub];
            hd += act.accumulator_hd;
            acc_ = mul.accumulator[sub];

            if (st.alu != AluOp::None) {
                const FieldElement v =
                    st.alu == AluOp::Add
                        ? value(st.alu_in0, bit) ^ value(st.alu_in1, bit)
                        : gf_square(value(st.alu_in0, bit));
                hd += hamming_distance(alu_, v);
                alu_ = v;
            }
            if (st.write_dst != O::None) {
                const FieldElement v = value(st.write_src, bit);
                FieldElement &dst = regs_[physical(st.write_dst, bit)];
                hd += hamming_distance(dst, v);
                dst = v;
            }

            const uint32_t cw = control_word(st, bit);
            const auto chd = uint32_t(std::popcount(cw ^ control_));
            control_ = cw;
            if (trace)
                trace->push_back({act.pm_toggles, hd, chd});
        }
    }

    LadderState state() const {
        return {regs_[kX1], regs_[kZ1], regs_[kX2], regs_[kZ2], x_};
    }

  private:
    FieldElement value(Operand role, bool bit) const {
        switch (role) {
        case O::Alu:
            return alu_;
        case O::Ma:
            return ma_;
        case O::Mb:
            return mb_;
        case O::Acc:
            return acc_;
        case O::ConstX:
            return x_;
        case O::ConstB:
            return b_;
        case O::None:
            throw std::logic_error("schedule reads an unset operand");
        default:
            return regs_[physical(role, bit)];
        }
    }

    std::array<FieldElement, 4> regs_;
    FieldElement ma_, mb_, alu_, acc_;
    FieldElement b_, x_;
    DesignConfig design_;
    netlist::NetlistState pm_;
    Rng rng_;
    uint32_t control_;
};

void check_point(const AffinePoint &p, const CurveParams &curve) {
    if (p.infinity)
        throw std::invalid_argument("kP input is the point at infinity");
    if (!ec::on_curve(p, curve))
        throw std::invalid_argument("kP input point is not on the curve");
}

} // namespace

// --- Scalar --------------------------------------------------------------

Scalar Scalar::from_bigint(const BigInt &k) {
    if (k < scalar_lower_bound() || ec::bit_length(k) > kScalarBits)
        throw std::invalid_argument(
            "scalar must be exactly 232 bits long with bit 231 set");
    Scalar s;
    s.k_ = k;
    return s;
}

Scalar Scalar::from_hex(std::string_view hex) {
    return from_bigint(ec::parse_bigint(hex, false));
}

Scalar Scalar::random(Rng &rng) {
    BigInt k = 0;
    for (int w = 0; w < 4; w++)
        k = (k << 64) | BigInt(rng());
    k &= (BigInt(1) << kScalarBits) - 1;
    k |= scalar_lower_bound();
    return from_bigint(k);
}

bool Scalar::bit(unsigned j) const {
    return boost::multiprecision::bit_test(k_, j);
}

std::string Scalar::to_hex() const {
    std::string h = ec::to_hex(k_);
    return std::string(kScalarBits / 4 - h.size(), '0') + h;
}

// --- state ---------------------------------------------------------------

LadderState initial_ladder_state(const FieldElement &x,
                                 const CurveParams &curve) {
    const FieldElement x2 = gf_square(x);
    return {x, FieldElement::one(), gf_square(x2) ^ curve.b, x2, x};
}

LadderState randomize_projective(const LadderState &s,
                                 const FieldElement &lambda) {
    if (lambda.is_zero())
        throw std::invalid_argument("projective randomizer must be nonzero");
    return {gf_mul_ref(s.X1, lambda), gf_mul_ref(s.Z1, lambda),
            gf_mul_ref(s.X2, lambda), gf_mul_ref(s.Z2, lambda), s.x};
}

FieldElement random_nonzero_element(Rng &rng) {
    for (;;) {
        FieldElement::Words w{rng(), rng(), rng(), rng()};
        w[3] &= (uint64_t(1) << (gf::kFieldBits - 192)) - 1;
        const auto e = FieldElement::from_words(w);
        if (!e.is_zero())
            return e;
    }
}

// --- schedule ------------------------------------------------------------

const std::array<ScheduleStep, kCyclesPerSlot> &slot_schedule() {
    static const auto s = make_schedule();
    return s;
}

unsigned operand_code(Operand role, bool key_bit) {
    switch (role) {
    case O::None:
        return 0xF;
    case O::Alu:
        return 4;
    case O::Ma:
        return 5;
    case O::Mb:
        return 6;
    case O::Acc:
        return 7;
    case O::ConstX:
        return 8;
    case O::ConstB:
        return 9;
    default:
        return physical(role, key_bit);
    }
}

uint32_t control_word(const ScheduleStep &st, bool key_bit) {
    return operand_code(st.load_a, key_bit) |
           operand_code(st.load_b, key_bit) << 4 | uint32_t(st.alu) << 8 |
           operand_code(st.alu_in0, key_bit) << 10 |
           operand_code(st.alu_in1, key_bit) << 14 |
           operand_code(st.write_dst, key_bit) << 18 |
           operand_code(st.write_src, key_bit) << 22;
}

uint32_t idle_control_word() {
    return control_word(ScheduleStep{0}, false);
}

OperationCounts
count_operations(const std::array<ScheduleStep, kCyclesPerSlot> &s) {
    OperationCounts n;
    for (const auto &st : s) {
        n.multiplications += st.load_a != O::None;
        n.squarings += st.alu == AluOp::Square;
        n.additions += st.alu == AluOp::Add;
    }
    return n;
}

// --- ladder --------------------------------------------------------------

LadderResult run_ladder(const BigInt &k, const AffinePoint &p,
                        const CurveParams &curve, const LadderOptions &opts) {
    check_point(p, curve);
    const unsigned bits = ec::bit_length(k);
    if (bits < 2)
        throw std::invalid_argument("ladder scalar must be at least 2");

    LadderState init = initial_ladder_state(p.x, curve);
    if (opts.lambda)
        init = randomize_projective(init, *opts.lambda);

    LadderResult r;
    r.scalar_bits = bits;
    if (opts.record_trace)
        r.trace.reserve(std::size_t(kCyclesPerSlot) * (bits - 1));
    Engine engine(init, curve, opts);
    for (int j = int(bits) - 2; j >= 0; j--) {
        engine.run_slot(boost::multiprecision::bit_test(k, unsigned(j)),
                        opts.record_trace ? &r.trace : nullptr);
        if (opts.on_bit)
            opts.on_bit(unsigned(j), engine.state());
    }
    r.final_state = engine.state();
    r.infinity = r.final_state.Z1.is_zero();
    if (!r.infinity)
        r.x = gf_mul_ref(r.final_state.X1, gf_inv(r.final_state.Z1));
    return r;
}

LadderResult montgomery_kp(const Scalar &k, const AffinePoint &p,
                           const CurveParams &curve, const DesignConfig &design,
                           uint64_t seed) {
    LadderOptions opts;
    opts.design = design;
    opts.seed = seed;
    return run_ladder(k.value(), p, curve, opts);
}

BigInt randomize_scalar(const BigInt &k, const CurveParams &curve,
                        uint32_t r) {
    return k + BigInt(r) * curve.order;
}

BigInt randomize_scalar(const BigInt &k, const CurveParams &curve, Rng &rng) {
    return randomize_scalar(k, curve, uint32_t(rng() >> 32));
}

AffinePoint recover_point(const LadderState &s, const AffinePoint &p) {
    if (s.Z1.is_zero())
        return AffinePoint::at_infinity();
    if (s.Z2.is_zero())
        return ec::negate(p); // [k+1]P = O
    const FieldElement &x = p.x;
    const FieldElement z1z2 = gf_mul_ref(s.Z1, s.Z2);
    const FieldElement xk = gf_mul_ref(s.X1, gf_inv(s.Z1));
    const FieldElement num =
        gf_mul_ref(s.X1 ^ gf_mul_ref(x, s.Z1), s.X2 ^ gf_mul_ref(x, s.Z2)) ^
        gf_mul_ref(gf_square(x) ^ p.y, z1z2);
    const FieldElement yk =
        gf_mul_ref(gf_mul_ref(x ^ xk, num), gf_inv(gf_mul_ref(x, z1z2))) ^ p.y;
    return {xk, yk, false};
}

BlindedResult blind_point(const BigInt &k, const AffinePoint &p,
                          const AffinePoint &r, const CurveParams &curve,
                          const LadderOptions &opts) {
    check_point(p, curve);
    if (!ec::on_curve(r, curve))
        throw std::invalid_argument("blinding point is not on the curve");
    const AffinePoint q = ec::ec_add(p, r, curve);
    if (q.infinity)
        throw std::invalid_argument("degenerate blinding: P + R is infinity");

    BlindedResult out;
    out.ladder = run_ladder(k, q, curve, opts);
    const AffinePoint kq = recover_point(out.ladder.final_state, q);
    if (r.infinity) {
        out.point = kq;
    } else {
        const AffinePoint kr = ec::scalar_mul_ref(k, r, curve);
        out.point = ec::ec_add(kq, ec::negate(kr), curve);
    }
    return out;
}

} // namespace hdpa::kp
