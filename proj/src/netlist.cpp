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

#include "hdpa/netlist.h"

#include <atomic>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace hdpa::netlist {

namespace {

std::atomic<uint64_t> next_identity{1};

using Poly = std::vector<SignalRef>;

Poly slice(const Poly &p, std::size_t begin, std::size_t end) {
    return Poly(p.begin() + begin, p.begin() + end);
}

} // namespace

class NetlistBuilder {
  public:
    explicit NetlistBuilder(std::size_t operand_bits) {
        nl_.operand_bits_ = operand_bits;
        nl_.identity_ = next_identity.fetch_add(1);
    }

    GateNetlist finish(const Poly &product, std::size_t output_bits,
                       std::string description) {
        nl_.outputs_.assign(product.begin(), product.begin() + output_bits);
        nl_.description_ = std::move(description);
        return std::move(nl_);
    }

    Poly operand_a(std::size_t width) const { return operand(width, true); }
    Poly operand_b(std::size_t width) const { return operand(width, false); }

    Poly multiply(const gf::FormulaTree &tree, const Poly &a, const Poly &b) {
        switch (tree.kind()) {
        case gf::FormulaTree::Kind::Classical:
            return classical(a, b);
        case gf::FormulaTree::Kind::Karatsuba2: {
            auto sub = [&](const Poly &x, const Poly &y) {
                return multiply(tree.child(), x, y);
            };
            return karatsuba2(tree.segment_length(), a, b, sub);
        }
        case gf::FormulaTree::Kind::Winograd6: {
            // 2 x 3 composition: two halves of 3m bits, each half product by
            // the three-segment six-product formula -> 18 segment products.
            const std::size_t m = tree.segment_length();
            auto half = [&](const Poly &x, const Poly &y) {
                return three_segment(m, x, y, tree.child());
            };
            return karatsuba2(3 * m, a, b, half);
        }
        }
        throw std::logic_error("unknown formula kind");
    }

  private:
    SignalRef gate(GateKind kind, SignalRef x, SignalRef y) {
        nl_.gates_.push_back({kind, x, y});
        return nl_.first_gate() + SignalRef(nl_.gates_.size() - 1);
    }

    Poly operand(std::size_t width, bool is_a) const {
        Poly p(width, GateNetlist::kZero);
        for (std::size_t i = 0; i < width && i < nl_.operand_bits_; i++)
            p[i] = is_a ? nl_.input_a(i) : nl_.input_b(i);
        return p;
    }

    // XOR over the overlapping part; the longer tail passes through.
    Poly add(const Poly &x, const Poly &y) {
        const Poly &lng = x.size() >= y.size() ? x : y;
        const Poly &sht = x.size() >= y.size() ? y : x;
        Poly r = lng;
        for (std::size_t i = 0; i < sht.size(); i++)
            r[i] = gate(GateKind::Xor, lng[i], sht[i]);
        return r;
    }

    Poly classical(const Poly &a, const Poly &b) {
        const std::size_t n = a.size();
        Poly c(2 * n - 1);
        for (std::size_t i = 0; i < 2 * n - 1; i++) {
            SignalRef acc = 0;
            bool first = true;
            for (std::size_t k = 0; k < n; k++) {
                if (i < k || i - k >= n)
                    continue;
                const SignalRef term = gate(GateKind::And, a[k], b[i - k]);
                acc = first ? term : gate(GateKind::Xor, acc, term);
                first = false;
            }
            c[i] = acc;
        }
        return c;
    }

    // Refined two-segment Karatsuba: 2m + (5m - 3) XOR around three
    // sub-products of m-bit operands.
    template <typename Sub>
    Poly karatsuba2(std::size_t m, const Poly &a, const Poly &b, Sub &&sub) {
        const Poly a0 = slice(a, 0, m), a1 = slice(a, m, 2 * m);
        const Poly b0 = slice(b, 0, m), b1 = slice(b, m, 2 * m);
        const Poly as = add(a0, a1);
        const Poly bs = add(b0, b1);
        const Poly p0 = sub(a0, b0);
        const Poly p1 = sub(a1, b1);
        const Poly pm = sub(as, bs);

        const Poly l0 = slice(p0, 0, m), h0 = slice(p0, m, 2 * m - 1);
        const Poly l1 = slice(p1, 0, m), h1 = slice(p1, m, 2 * m - 1);
        const Poly ml = slice(pm, 0, m), mh = slice(pm, m, 2 * m - 1);

        const Poly s = add(l1, h0);
        const Poly block1 = add(add(s, l0), ml);
        const Poly block2 = add(add(s, h1), mh);

        Poly c;
        c.reserve(4 * m - 1);
        c.insert(c.end(), l0.begin(), l0.end());
        c.insert(c.end(), block1.begin(), block1.end());
        c.insert(c.end(), block2.begin(), block2.end());
        c.insert(c.end(), h1.begin(), h1.end());
        return c;
    }

    // Three segments, six products: a_i b_i and (a_i + a_k)(b_i + b_k).
    Poly three_segment(std::size_t m, const Poly &a, const Poly &b,
                       const gf::FormulaTree &leaf) {
        const Poly a0 = slice(a, 0, m), a1 = slice(a, m, 2 * m),
                   a2 = slice(a, 2 * m, 3 * m);
        const Poly b0 = slice(b, 0, m), b1 = slice(b, m, 2 * m),
                   b2 = slice(b, 2 * m, 3 * m);
        const Poly a01 = add(a0, a1), a02 = add(a0, a2), a12 = add(a1, a2);
        const Poly b01 = add(b0, b1), b02 = add(b0, b2), b12 = add(b1, b2);

        const Poly p00 = multiply(leaf, a0, b0);
        const Poly p11 = multiply(leaf, a1, b1);
        const Poly p22 = multiply(leaf, a2, b2);
        const Poly p01 = multiply(leaf, a01, b01);
        const Poly p02 = multiply(leaf, a02, b02);
        const Poly p12 = multiply(leaf, a12, b12);

        auto lo = [m](const Poly &p) { return slice(p, 0, m); };
        auto hi = [m](const Poly &p) { return slice(p, m, 2 * m - 1); };

        const Poly alpha = add(lo(p00), hi(p00));
        const Poly beta = add(lo(p11), hi(p11));
        const Poly gamma = add(lo(p22), hi(p22));
        const Poly alpha_beta = add(alpha, beta);
        const Poly beta_gamma = add(beta, gamma);

        const Poly block1 = add(add(alpha, lo(p11)), lo(p01));
        const Poly block2 =
            add(add(add(alpha_beta, lo(p22)), lo(p02)), hi(p01));
        const Poly block3 =
            add(add(add(beta_gamma, hi(p00)), lo(p12)), hi(p02));
        const Poly block4 = add(add(gamma, hi(p11)), hi(p12));

        Poly c;
        c.reserve(6 * m - 1);
        const Poly l00 = lo(p00), h22 = hi(p22);
        for (const Poly &blk : {l00, block1, block2, block3, block4, h22})
            c.insert(c.end(), blk.begin(), blk.end());
        return c;
    }

    GateNetlist nl_;
};

std::size_t GateNetlist::and_count() const {
    std::size_t n = 0;
    for (const auto &g : gates_)
        n += g.kind == GateKind::And;
    return n;
}

std::size_t GateNetlist::xor_count() const {
    return gates_.size() - and_count();
}

std::string GateNetlist::signal_name(SignalRef s) const {
    if (s == kZero)
        return "zero";
    if (s < input_b(0))
        return "a" + std::to_string(s - input_a(0));
    if (s < first_gate())
        return "b" + std::to_string(s - input_b(0));
    return "g" + std::to_string(s - first_gate());
}

void GateNetlist::dump(std::ostream &os) const {
    os << "inputs " << input_count() << " outputs " << outputs_.size()
       << " gates " << gates_.size() << '\n';
    for (std::size_t id = 0; id < gates_.size(); id++) {
        const Gate &g = gates_[id];
        os << id << ' ' << (g.kind == GateKind::And ? "AND" : "XOR") << ' '
           << signal_name(g.in0) << ' ' << signal_name(g.in1) << '\n';
    }
}

GateNetlist build_from_formula(const gf::FormulaTree &tree,
                               std::size_t operand_bits) {
    const std::size_t width = tree.operand_length();
    if (operand_bits == 0 || operand_bits > width || operand_bits > 64)
        throw std::invalid_argument("operand width does not fit the formula");
    NetlistBuilder b(operand_bits);
    const auto product =
        b.multiply(tree, b.operand_a(width), b.operand_b(width));
    return b.finish(product, 2 * operand_bits - 1, tree.describe());
}

GateNetlist build_classical_pm(std::size_t n) {
    return build_from_formula(gf::classical_pm_formula(n), n);
}

GateNetlist build_combined_pm() {
    return build_from_formula(gf::combined_pm_formula(), 59);
}

const GateNetlist &shared_classical_pm() {
    static const GateNetlist nl = build_classical_pm(59);
    return nl;
}

const GateNetlist &shared_combined_pm() {
    static const GateNetlist nl = build_combined_pm();
    return nl;
}

NetlistState initial_state(const GateNetlist &netlist) {
    NetlistState s;
    s.netlist_identity = netlist.identity();
    s.values.assign(netlist.signal_count(), 0);
    return s;
}

Evaluation evaluate(const GateNetlist &netlist, uint64_t a, uint64_t b,
                    NetlistState &state) {
    if (state.netlist_identity != netlist.identity() ||
        state.values.size() != netlist.signal_count())
        throw std::invalid_argument("netlist state belongs to another netlist");
    const std::size_t n = netlist.operand_bits();
    if (n < 64 && ((a >> n) != 0 || (b >> n) != 0))
        throw std::invalid_argument("PM operand wider than the netlist input");

    uint8_t *v = state.values.data();
    for (std::size_t i = 0; i < n; i++) {
        v[netlist.input_a(i)] = uint8_t((a >> i) & 1U);
        v[netlist.input_b(i)] = uint8_t((b >> i) & 1U);
    }

    uint32_t toggles = 0;
    uint8_t *out = v + netlist.first_gate();
    for (const Gate &g : netlist.gates()) {
        const uint8_t x = v[g.in0];
        const uint8_t y = v[g.in1];
        const uint8_t t = x & y;
        const uint8_t nv = t ^ (uint8_t(g.kind) & (x ^ y ^ t));
        toggles += uint32_t(nv ^ *out);
        *out++ = nv;
    }
    state.last_a = a;
    state.last_b = b;

    PmProduct p{0, 0};
    const auto &outs = netlist.outputs();
    for (std::size_t i = 0; i < outs.size(); i++)
        p[i / 64] |= uint64_t(v[outs[i]]) << (i % 64);
    return {p, toggles};
}

} // namespace hdpa::netlist
