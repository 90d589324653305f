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

#include "hdpa/trace.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace hdpa::trace {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void fail(int line, const std::string &msg) {
    throw std::runtime_error("trace line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string &s, int line) {
    double v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v))
        fail(line, "invalid number '" + s + "'");
    return v;
}

uint64_t parse_u64(const std::string &s, int line) {
    uint64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        fail(line, "invalid unsigned integer '" + s + "'");
    return v;
}

const char *const kRequired[] = {"design",  "pm_variant",      "sequence_mode",
                                 "key_bits", "cycles_per_slot", "alpha",
                                 "beta",    "sigma",           "seed",
                                 "noise_seed"};

} // namespace

void validate(const PowerModelParams &p) {
    if (!(p.alpha >= 0) || !(p.beta >= 0) || !(p.gamma >= 0) ||
        !(p.sigma >= 0))
        throw std::invalid_argument(
            "power model weights and sigma must be non-negative");
}

double power_of_cycle(const kp::CycleActivity &a, const PowerModelParams &p,
                      Rng &noise) {
    double v = p.alpha * a.pm_toggles + p.beta * a.register_hd +
               p.gamma * a.control_hd;
    if (p.sigma > 0)
        v += p.sigma * standard_normal(noise);
    return v;
}

std::size_t TraceMetadata::cycles() const {
    return key_bits < 1 ? 0 : std::size_t(cycles_per_slot) * (key_bits - 1);
}

PowerTrace make_trace(const std::vector<kp::CycleActivity> &activity,
                      const PowerModelParams &params, TraceMetadata meta) {
    validate(params);
    meta.alpha = params.alpha;
    meta.beta = params.beta;
    meta.gamma = params.gamma;
    meta.sigma = params.sigma;
    meta.noise_seed = params.noise_seed;
    meta.samples_per_cycle = 1;
    if (activity.size() != meta.cycles())
        throw std::invalid_argument(
            "activity length " + std::to_string(activity.size()) +
            " does not match the expected " + std::to_string(meta.cycles()) +
            " cycles");
    PowerTrace t;
    t.meta = std::move(meta);
    t.samples.reserve(activity.size());
    Rng noise(params.noise_seed);
    for (const auto &a : activity)
        t.samples.push_back(power_of_cycle(a, params, noise));
    return t;
}

PowerTrace compress(const PowerTrace &trace) {
    const unsigned spc = trace.meta.samples_per_cycle;
    if (spc == 0 || trace.samples.size() % spc != 0)
        throw std::invalid_argument(
            "sample count " + std::to_string(trace.samples.size()) +
            " is not a multiple of samples_per_cycle " + std::to_string(spc));
    PowerTrace out;
    out.meta = trace.meta;
    out.meta.samples_per_cycle = 1;
    out.samples.reserve(trace.samples.size() / spc);
    for (std::size_t i = 0; i < trace.samples.size(); i += spc) {
        double s = 0;
        for (unsigned k = 0; k < spc; k++)
            s += trace.samples[i + k];
        out.samples.push_back(s / spc);
    }
    return out;
}

SlotMatrix SlotMatrix::from_rows(const std::vector<std::vector<double>> &rows) {
    SlotMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != m.cols())
            throw std::invalid_argument("ragged slot matrix");
        for (std::size_t c = 0; c < m.cols(); c++)
            m.at(r, c) = rows[r][c];
    }
    return m;
}

SlotMatrix slice_into_slots(const std::vector<double> &per_cycle,
                            unsigned key_bits, unsigned cycles_per_slot) {
    if (key_bits < kAttackSlots + 2)
        throw std::invalid_argument("key length " + std::to_string(key_bits) +
                                    " is shorter than 232 bits");
    const std::size_t expected = std::size_t(cycles_per_slot) * (key_bits - 1);
    if (per_cycle.size() != expected)
        throw std::invalid_argument(
            "trace has " + std::to_string(per_cycle.size()) +
            " cycles, expected " + std::to_string(expected) + " for a " +
            std::to_string(key_bits) + "-bit key");
    SlotMatrix m(kAttackSlots, cycles_per_slot);
    for (unsigned j = 0; j < kAttackSlots; j++) {
        const std::size_t base = std::size_t(key_bits - 2 - j) * cycles_per_slot;
        for (unsigned i = 0; i < cycles_per_slot; i++)
            m.at(j, i) = per_cycle[base + i];
    }
    return m;
}

SlotMatrix slice_into_slots(const PowerTrace &t) {
    if (t.meta.samples_per_cycle != 1)
        throw std::invalid_argument("slice_into_slots needs a compressed trace");
    return slice_into_slots(t.samples, t.meta.key_bits, t.meta.cycles_per_slot);
}

std::string format_double(double v) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc())
        throw std::logic_error("double formatting failed");
    return std::string(buf, p);
}

void write_trace(std::ostream &os, const PowerTrace &t) {
    const TraceMetadata &m = t.meta;
    os << "# hdpa-sim power trace, one sample per line\n";
    os << "#design=" << m.design << '\n';
    os << "#pm_variant=" << m.pm_variant << '\n';
    os << "#sequence_mode=" << m.sequence_mode << '\n';
    os << "#countermeasures=" << m.countermeasures << '\n';
    os << "#key_bits=" << m.key_bits << '\n';
    os << "#cycles_per_slot=" << m.cycles_per_slot << '\n';
    os << "#samples_per_cycle=" << m.samples_per_cycle << '\n';
    os << "#cycles=" << m.cycles() << '\n';
    os << "#slot_map=row j <- time slot key_bits-2-j, j=0..229\n";
    os << "#alpha=" << format_double(m.alpha) << '\n';
    os << "#beta=" << format_double(m.beta) << '\n';
    os << "#gamma=" << format_double(m.gamma) << '\n';
    os << "#sigma=" << format_double(m.sigma) << '\n';
    os << "#seed=" << m.seed << '\n';
    os << "#noise_seed=" << m.noise_seed << '\n';
    for (const auto &[k, v] : m.extra)
        os << '#' << k << '=' << v << '\n';
    for (double s : t.samples)
        os << format_double(s) << '\n';
}

void write_trace(const std::filesystem::path &path, const PowerTrace &t) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + path.string());
    write_trace(f, t);
    if (!f)
        throw std::runtime_error("error writing " + path.string());
}

PowerTrace read_trace(std::istream &is) {
    PowerTrace t;
    TraceMetadata &m = t.meta;
    std::vector<std::string> seen;
    std::optional<std::size_t> declared_cycles;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        lineno++;
        const std::string s = trim(line);
        if (s.empty())
            continue;
        if (s[0] != '#') {
            t.samples.push_back(parse_double(s, lineno));
            continue;
        }
        if (!t.samples.empty())
            fail(lineno, "metadata after samples");
        const std::string body = trim(std::string_view(s).substr(1));
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            continue; // free comment
        const std::string key = trim(body.substr(0, eq));
        const std::string val = trim(body.substr(eq + 1));
        for (const auto &k : seen)
            if (k == key)
                fail(lineno, "duplicate metadata key '" + key + "'");
        seen.push_back(key);

        if (key == "design")
            m.design = val;
        else if (key == "pm_variant")
            m.pm_variant = val;
        else if (key == "sequence_mode")
            m.sequence_mode = val;
        else if (key == "countermeasures")
            m.countermeasures = val;
        else if (key == "key_bits")
            m.key_bits = unsigned(parse_u64(val, lineno));
        else if (key == "cycles_per_slot")
            m.cycles_per_slot = unsigned(parse_u64(val, lineno));
        else if (key == "samples_per_cycle")
            m.samples_per_cycle = unsigned(parse_u64(val, lineno));
        else if (key == "cycles")
            declared_cycles = parse_u64(val, lineno);
        else if (key == "slot_map")
            continue;
        else if (key == "alpha")
            m.alpha = parse_double(val, lineno);
        else if (key == "beta")
            m.beta = parse_double(val, lineno);
        else if (key == "gamma")
            m.gamma = parse_double(val, lineno);
        else if (key == "sigma")
            m.sigma = parse_double(val, lineno);
        else if (key == "seed")
            m.seed = parse_u64(val, lineno);
        else if (key == "noise_seed")
            m.noise_seed = parse_u64(val, lineno);
        else
            m.extra.emplace_back(key, val);
    }
    for (const char *req : kRequired) {
        bool found = false;
        for (const auto &k : seen)
            found = found || k == req;
        if (!found)
            fail(lineno, std::string("missing required metadata key '") + req +
                             "'");
    }
    if (m.cycles_per_slot == 0 || m.samples_per_cycle == 0 || m.key_bits < 2)
        fail(lineno, "key_bits, cycles_per_slot and samples_per_cycle must be "
                     "positive (key_bits >= 2)");
    if (declared_cycles && *declared_cycles != m.cycles())
        fail(lineno, "declared cycles=" + std::to_string(*declared_cycles) +
                         " disagrees with key_bits and cycles_per_slot");
    const std::size_t expected = m.cycles() * m.samples_per_cycle;
    if (t.samples.size() != expected)
        fail(lineno, "trace has " + std::to_string(t.samples.size()) +
                         " samples, expected " + std::to_string(expected) +
                         " (" + std::to_string(m.cycles()) + " cycles x " +
                         std::to_string(m.samples_per_cycle) +
                         " samples per cycle)");
    return t;
}

PowerTrace read_trace(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open trace " + path.string());
    return read_trace(f);
}

void write_slot_csv(std::ostream &os, const SlotMatrix &slots) {
    for (std::size_t r = 0; r < slots.rows(); r++) {
        for (std::size_t c = 0; c < slots.cols(); c++)
            os << (c ? "," : "") << format_double(slots.at(r, c));
        os << '\n';
    }
}

} // namespace hdpa::trace
