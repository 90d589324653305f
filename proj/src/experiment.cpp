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

#include "hdpa/experiment.h"

#include <cstdio>
#include <ostream>

namespace hdpa::experiment {

namespace {

struct CmName {
    Countermeasure cm;
    const char *name;
};
constexpr CmName kCmNames[] = {
    {Countermeasure::ScalarRandomization, "scalar-randomization"},
    {Countermeasure::PointBlinding, "point-blinding"},
    {Countermeasure::ProjectiveRandomization, "projective-randomization"},
};

std::string fmt4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace

CountermeasureSet CountermeasureSet::parse(std::string_view text) {
    CountermeasureSet s;
    if (text == "none")
        return s;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('+', pos), text.size());
        const auto part = text.substr(pos, end - pos);
        bool found = false;
        for (const auto &n : kCmNames)
            if (part == n.name) {
                s.add(n.cm);
                found = true;
            }
        if (!found)
            throw std::invalid_argument(
                "unknown countermeasure '" + std::string(part) +
                "' (expected none, scalar-randomization, point-blinding, "
                "projective-randomization, or a '+'-joined combination)");
        pos = end + 1;
    }
    return s;
}

std::string CountermeasureSet::name() const {
    std::string out;
    for (const auto &n : kCmNames)
        if (has(n.cm))
            out += (out.empty() ? "" : "+") + std::string(n.name);
    return out.empty() ? "none" : out;
}

kp::Scalar random_key(uint64_t seed) {
    Rng rng = make_rng(seed, Stream::Key);
    return kp::Scalar::random(rng);
}

ec::AffinePoint random_point(uint64_t seed, const ec::CurveParams &curve) {
    Rng rng = make_rng(seed, Stream::Point);
    for (;;) {
        const kp::Scalar r = kp::Scalar::random(rng);
        const auto p = ec::scalar_mul_ref(r.value(), curve.g, curve);
        if (!p.infinity)
            return p;
    }
}

RunResult simulate(const RunSpec &spec, const ec::CurveParams &curve,
                   bool verify) {
    const auto &cms = spec.countermeasures;
    RunResult out;
    out.processed_scalar = spec.key.value();
    if (cms.has(Countermeasure::ScalarRandomization)) {
        Rng rng = make_rng(spec.seed, Stream::ScalarBlinding);
        out.processed_scalar = kp::randomize_scalar(spec.key.value(), curve, rng);
    }

    kp::LadderOptions opts;
    opts.design = spec.design;
    opts.seed = spec.seed;
    if (cms.has(Countermeasure::ProjectiveRandomization)) {
        Rng rng = make_rng(spec.seed, Stream::Projective);
        opts.lambda = kp::random_nonzero_element(rng);
    }

    kp::LadderResult ladder;
    if (cms.has(Countermeasure::PointBlinding)) {
        Rng rng = make_rng(spec.seed, Stream::PointBlinding);
        ec::AffinePoint r;
        do {
            const auto rs = kp::Scalar::random(rng);
            r = ec::scalar_mul_ref(rs.value(), curve.g, curve);
        } while (r.infinity || ec::ec_add(spec.point, r, curve).infinity);
        auto blinded =
            kp::blind_point(out.processed_scalar, spec.point, r, curve, opts);
        out.result = blinded.point;
        ladder = std::move(blinded.ladder);
    } else {
        ladder = kp::run_ladder(out.processed_scalar, spec.point, curve, opts);
        out.result = {ladder.x, {}, ladder.infinity};
    }

    if (verify) {
        const auto ref = ec::scalar_mul_ref(spec.key.value(), spec.point, curve);
        if (ref.infinity != out.result.infinity ||
            (!ref.infinity && ref.x != out.result.x))
            throw InvariantError("kP result differs from the reference for "
                                 "design " +
                                 spec.design.name() + ", countermeasures " +
                                 cms.name());
    }

    trace::PowerModelParams power = spec.power;
    power.noise_seed =
        spec.noise_seed ? *spec.noise_seed : derive_seed(spec.seed, uint64_t(Stream::Noise));
    trace::TraceMetadata meta;
    meta.design = spec.design.name();
    meta.pm_variant = mult::to_string(spec.design.pm_variant);
    meta.sequence_mode = mult::to_string(spec.design.sequence_mode);
    meta.countermeasures = cms.name();
    meta.key_bits = ladder.scalar_bits;
    meta.seed = spec.seed;
    out.trace = trace::make_trace(ladder.trace, power, std::move(meta));
    return out;
}

ExperimentResult run_experiment(const ExperimentSpec &spec,
                                const ec::CurveParams &curve) {
    if (spec.designs.empty())
        throw std::invalid_argument("experiment needs at least one design");
    if (spec.seeds.empty())
        throw std::invalid_argument("experiment needs at least one seed");
    if (spec.variants.empty())
        throw std::invalid_argument("experiment needs at least one variant");

    ExperimentResult res;
    for (uint64_t seed : spec.seeds) {
        const kp::Scalar key = spec.key ? *spec.key : random_key(seed);
        for (const auto &design : spec.designs)
            for (const auto &cms : spec.variants) {
                RunSpec run{design, key, spec.point, cms, seed, spec.power, {}};
                const RunResult r = simulate(run, curve);
                res.blocks.push_back(
                    {design, cms, seed,
                     attack::run_attack(
                         r.trace, attack::attacked_bits(r.processed_scalar))});
            }
    }
    for (const auto &design : spec.designs)
        for (const auto &cms : spec.variants) {
            SummaryRow row{design, cms, 0.0, 0};
            for (const auto &b : res.blocks)
                if (b.design == design && b.countermeasures == cms) {
                    row.mean_best_delta += b.report.best().delta;
                    row.runs++;
                }
            row.mean_best_delta /= double(row.runs);
            res.summary.push_back(row);
        }
    return res;
}

SpecLines describe(const ExperimentSpec &spec) {
    SpecLines l;
    std::string designs, variants, seeds;
    for (const auto &d : spec.designs)
        designs += (designs.empty() ? "" : ",") + d.name();
    for (const auto &v : spec.variants)
        variants += (variants.empty() ? "" : ",") + v.name();
    for (uint64_t s : spec.seeds)
        seeds += (seeds.empty() ? "" : ",") + std::to_string(s);
    l.emplace_back("designs", designs);
    l.emplace_back("key", spec.key ? spec.key->to_hex() : "random");
    l.emplace_back("point", spec.point_label);
    l.emplace_back("countermeasures", variants);
    l.emplace_back("seeds", seeds);
    l.emplace_back("alpha", trace::format_double(spec.power.alpha));
    l.emplace_back("beta", trace::format_double(spec.power.beta));
    l.emplace_back("gamma", trace::format_double(spec.power.gamma));
    l.emplace_back("sigma", trace::format_double(spec.power.sigma));
    return l;
}

void write_spec_lines(std::ostream &os, const SpecLines &lines) {
    for (const auto &[k, v] : lines)
        os << '#' << k << '=' << v << '\n';
}

void write_experiment_csv(std::ostream &os, const ExperimentSpec &spec,
                          const ExperimentResult &res) {
    write_spec_lines(os, describe(spec));
    os << "kind,design,countermeasures,seed,rank,clock_index,delta1,delta\n";
    for (const auto &b : res.blocks)
        for (const auto &e : b.report.entries)
            os << "candidate," << b.design.name() << ','
               << b.countermeasures.name() << ',' << b.seed << ',' << e.rank
               << ',' << e.candidate.clock_index << ',' << fmt4(e.delta1)
               << ',' << fmt4(e.delta) << '\n';
    for (const auto &s : res.summary)
        os << "summary," << s.design.name() << ',' << s.countermeasures.name()
           << ",mean,1,,," << fmt4(s.mean_best_delta) << '\n';
}

} // namespace hdpa::experiment
