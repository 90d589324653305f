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

// hdpa-sim: simulate kP power traces, attack them, and run the design
// comparison experiments.

#include "hdpa/ecdsa.h"
#include "hdpa/experiment.h"
#include "hdpa/formula.h"
#include "hdpa/netlist.h"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace hdpa;
using experiment::CountermeasureSet;
using experiment::DataError;

namespace {

struct CommonOptions {
    std::vector<std::string> designs;
    std::string key = "random";
    std::string point = "G";
    std::vector<uint64_t> seeds;
    std::vector<std::string> countermeasures;
    double sigma = 0.0;
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = trace::kDefaultGamma;
    std::optional<uint64_t> noise_seed;
    std::string curve_file;
    std::string out;
};

void add_common(CLI::App *cmd, CommonOptions &o) {
    cmd->add_option("--design", o.designs,
                    "basic, rand-seq, classical-pm or classical-rand "
                    "(repeatable)");
    cmd->add_option("--key", o.key, "232-bit key in hex, or 'random'");
    cmd->add_option("--point", o.point, "'G' or 'x,y' in 59-digit hex");
    cmd->add_option("--seed", o.seeds, "experiment seed (repeatable)");
    cmd->add_option("--countermeasure", o.countermeasures,
                    "none, scalar-randomization, point-blinding, "
                    "projective-randomization, or a '+'-joined set "
                    "(repeatable)");
    cmd->add_option("--noise-sigma", o.sigma, "Gaussian noise std-dev");
    cmd->add_option("--alpha", o.alpha, "power per PM gate toggle");
    cmd->add_option("--beta", o.beta, "power per register bit flip");
    cmd->add_option("--gamma", o.gamma, "power per control-word bit flip");
    cmd->add_option("--noise-seed", o.noise_seed,
                    "noise stream seed (default: derived from --seed)");
    cmd->add_option("--curve-file", o.curve_file,
                    "curve parameter file (default: built-in B-233)");
}

// Input-data errors are reported with exit code 2.
template <typename F> auto as_data(const std::string &what, F &&f) {
    try {
        return f();
    } catch (const std::invalid_argument &e) {
        throw DataError(what + ": " + e.what());
    } catch (const std::domain_error &e) {
        throw DataError(what + ": " + e.what());
    }
}

ec::CurveParams load_curve(const CommonOptions &o) {
    if (o.curve_file.empty())
        return ec::b233();
    try {
        return ec::load_curve(o.curve_file);
    } catch (const std::runtime_error &e) {
        throw DataError(e.what());
    }
}

ec::AffinePoint parse_point(const std::string &text,
                            const ec::CurveParams &curve) {
    if (text == "G")
        return curve.g;
    return as_data("--point", [&] {
        const auto comma = text.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("expected 'G' or 'x,y'");
        ec::AffinePoint p{gf::FieldElement::from_hex(text.substr(0, comma)),
                          gf::FieldElement::from_hex(text.substr(comma + 1)),
                          false};
        if (!ec::on_curve(p, curve))
            throw std::invalid_argument("point is not on the curve");
        return p;
    });
}

std::optional<kp::Scalar> parse_key(const std::string &text) {
    if (text == "random")
        return std::nullopt;
    return as_data("--key", [&] { return kp::Scalar::from_hex(text); });
}

std::vector<mult::DesignConfig> parse_designs(const CommonOptions &o,
                                              bool all_by_default) {
    std::vector<mult::DesignConfig> out;
    if (o.designs.empty()) {
        if (all_by_default) {
            const auto all = mult::DesignConfig::all();
            return {all.begin(), all.end()};
        }
        return {mult::DesignConfig{}};
    }
    for (const auto &d : o.designs)
        out.push_back(
            as_data("--design", [&] { return mult::DesignConfig::from_name(d); }));
    return out;
}

std::vector<CountermeasureSet> parse_variants(const CommonOptions &o,
                                              bool include_none) {
    std::vector<CountermeasureSet> out;
    if (include_none || o.countermeasures.empty())
        out.emplace_back();
    for (const auto &c : o.countermeasures) {
        const auto s = as_data("--countermeasure",
                               [&] { return CountermeasureSet::parse(c); });
        bool dup = false;
        for (const auto &x : out)
            dup = dup || x == s;
        if (!dup)
            out.push_back(s);
    }
    return out;
}

trace::PowerModelParams power_params(const CommonOptions &o) {
    trace::PowerModelParams p;
    p.alpha = o.alpha;
    p.beta = o.beta;
    p.gamma = o.gamma;
    p.sigma = o.sigma;
    as_data("power model", [&] {
        trace::validate(p);
        return 0;
    });
    return p;
}

std::vector<uint64_t> seeds_or_default(const CommonOptions &o) {
    return o.seeds.empty() ? std::vector<uint64_t>{1} : o.seeds;
}

void write_key_file(const fs::path &path, const ec::BigInt &k) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + path.string());
    f << "# scalar processed by the ladder, hex\n" << ec::to_hex(k) << '\n';
}

std::optional<ec::BigInt> read_key_file(const fs::path &path) {
    std::ifstream f(path);
    if (!f)
        return std::nullopt;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        return as_data("key file " + path.string(),
                       [&] { return ec::parse_bigint(line, false); });
    }
    throw DataError("key file " + path.string() + " holds no key");
}

// --- commands --------------------------------------------------------------

int cmd_simulate(const CommonOptions &o) {
    const auto curve = load_curve(o);
    const auto point = parse_point(o.point, curve);
    const auto key = parse_key(o.key);
    const auto designs = parse_designs(o, false);
    const auto variants = parse_variants(o, false);
    const auto seeds = seeds_or_default(o);
    const auto power = power_params(o);

    const std::size_t jobs = designs.size() * variants.size() * seeds.size();
    const fs::path out = o.out;
    if (jobs > 1)
        fs::create_directories(out);

    for (uint64_t seed : seeds) {
        const kp::Scalar k = key ? *key : experiment::random_key(seed);
        for (const auto &design : designs)
            for (const auto &cms : variants) {
                experiment::RunSpec spec{design, k,     point, cms,
                                         seed,   power, o.noise_seed};
                const auto r = experiment::simulate(spec, curve);
                fs::path path = out;
                if (jobs > 1)
                    path /= design.name() + "_" + cms.name() + "_seed" +
                            std::to_string(seed) + ".trace";
                trace::write_trace(path, r.trace);
                write_key_file(path.string() + ".key", r.processed_scalar);
                std::cout << "wrote " << path.string() << " ("
                          << r.trace.meta.cycles() << " cycles)\n";
            }
    }
    return 0;
}

int cmd_attack(const std::string &trace_path, std::string key_path,
               const std::string &out) {
    trace::PowerTrace t;
    try {
        t = trace::read_trace(fs::path(trace_path));
    } catch (const std::runtime_error &e) {
        throw DataError(trace_path + ": " + e.what());
    }
    if (key_path.empty())
        key_path = trace_path + ".key";
    std::optional<attack::KeyBits> truth;
    if (const auto k = read_key_file(key_path))
        truth = attack::attacked_bits(*k);
    else
        std::cerr << "warning: key file " << key_path
                  << " not found; ranking by agreement with the majority-vote "
                     "candidate (proxy, not a correctness score)\n";

    const auto report = as_data(trace_path, [&] {
        return attack::run_attack(t, truth);
    });

    std::ofstream file;
    if (!out.empty()) {
        file.open(out, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot write " + out);
    }
    std::ostream &os = out.empty() ? std::cout : file;
    experiment::write_spec_lines(
        os, {{"trace", trace_path},
             {"design", t.meta.design},
             {"countermeasures", t.meta.countermeasures},
             {"key_bits", std::to_string(t.meta.key_bits)},
             {"seed", std::to_string(t.meta.seed)},
             {"mode", report.scored ? "scored" : "unscored-proxy"}});
    attack::write_report_csv(os, report);
    return 0;
}

int cmd_experiment(const CommonOptions &o, unsigned seed_count) {
    const auto curve = load_curve(o);
    experiment::ExperimentSpec spec;
    spec.designs = parse_designs(o, true);
    spec.key = parse_key(o.key);
    spec.point = parse_point(o.point, curve);
    spec.point_label = o.point;
    spec.variants = parse_variants(o, true);
    spec.power = power_params(o);
    spec.seeds = o.seeds;
    if (spec.seeds.empty())
        for (unsigned s = 1; s <= seed_count; s++)
            spec.seeds.push_back(s);

    const auto res = experiment::run_experiment(spec, curve);

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot write " + o.out);
    }
    experiment::write_experiment_csv(o.out.empty() ? std::cout : file, spec,
                                     res);
    for (const auto &s : res.summary)
        std::cerr << s.design.name() << " [" << s.countermeasures.name()
                  << "] mean best delta " << s.mean_best_delta << " over "
                  << s.runs << " seeds\n";
    return 0;
}

int cmd_gates() {
    struct Row {
        const char *name;
        gf::FormulaTree tree;
        const netlist::GateNetlist &nl;
    };
    const Row rows[] = {
        {"combined", gf::combined_pm_formula(), netlist::shared_combined_pm()},
        {"classical", gf::classical_pm_formula(), netlist::shared_classical_pm()},
    };
    std::cout << "variant,formula,calculator_and,calculator_xor,netlist_and,"
                 "netlist_xor\n";
    for (const auto &r : rows) {
        const auto c = gf::gate_cost(r.tree);
        std::cout << r.name << ",\"" << r.tree.describe() << "\"," << c.and_count
                  << ',' << c.xor_count << ',' << r.nl.and_count() << ','
                  << r.nl.xor_count() << '\n';
        if (c.and_count != r.nl.and_count())
            throw experiment::InvariantError(
                "netlist AND count differs from the calculator");
    }
    return 0;
}

int cmd_recover(const std::string &s, const std::string &k,
                const std::string &e, const std::string &r,
                const std::string &order) {
    ecdsa::EcdsaSample x;
    as_data("recover-key", [&] {
        x.s = ec::parse_bigint(s, true);
        x.k = ec::parse_bigint(k, true);
        x.e = ec::parse_bigint(e, true);
        x.r = ec::parse_bigint(r, true);
        x.epsilon = order.empty() ? ec::b233().order
                                  : ec::parse_bigint(order, true);
        return 0;
    });
    const auto key = as_data("recover-key",
                             [&] { return ecdsa::recover_private_key(x); });
    std::cout << key << '\n';
    return 0;
}

int cmd_netlist_dump(const std::string &variant, const std::string &out) {
    const netlist::GateNetlist *nl = nullptr;
    if (variant == "combined")
        nl = &netlist::shared_combined_pm();
    else if (variant == "classical")
        nl = &netlist::shared_classical_pm();
    else
        throw DataError("unknown PM variant '" + variant + "'");
    if (out.empty()) {
        nl->dump(std::cout);
        return 0;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + out);
    nl->dump(f);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Cycle-level power simulation and horizontal DPA of "
                 "B-233 kP designs"};
    app.require_subcommand(1);

    CommonOptions sim_opts;
    auto *sim = app.add_subcommand("simulate", "write power trace files");
    add_common(sim, sim_opts);
    sim->add_option("--out", sim_opts.out,
                    "trace file, or a directory when several jobs run")
        ->required();

    std::string trace_path, key_path, attack_out;
    auto *att = app.add_subcommand("attack", "attack one trace file");
    att->add_option("--trace", trace_path, "trace file")->required();
    att->add_option("--key-file", key_path,
                    "true key (default: <trace>.key); without it the report "
                    "is proxy-ranked");
    att->add_option("--out", attack_out, "report CSV (default: stdout)");

    CommonOptions exp_opts;
    unsigned seed_count = 10;
    auto *exp = app.add_subcommand("experiment",
                                   "simulate and attack designs and "
                                   "countermeasure variants on shared inputs");
    add_common(exp, exp_opts);
    exp->add_option("--seeds", seed_count,
                    "use seeds 1..N when no --seed is given")
        ->check(CLI::PositiveNumber);
    exp->add_option("--out", exp_opts.out, "CSV file (default: stdout)");

    auto *gates = app.add_subcommand("gates", "gate counts of both PM variants");

    std::string rs, rk, re, rr, rorder;
    auto *rec = app.add_subcommand("recover-key",
                                   "ECDSA key from a known ephemeral scalar");
    rec->add_option("--s", rs, "signature s")->required();
    rec->add_option("--k", rk, "ephemeral scalar k")->required();
    rec->add_option("--e", re, "message hash e")->required();
    rec->add_option("--r", rr, "signature r")->required();
    rec->add_option("--order", rorder, "group order (default: B-233)");

    std::string variant = "combined", dump_out;
    auto *dump = app.add_subcommand("netlist-dump", "print a PM gate netlist");
    dump->add_option("--variant", variant, "combined or classical");
    dump->add_option("--out", dump_out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*sim)
            return cmd_simulate(sim_opts);
        if (*att)
            return cmd_attack(trace_path, key_path, attack_out);
        if (*exp)
            return cmd_experiment(exp_opts, seed_count);
        if (*gates)
            return cmd_gates();
        if (*rec)
            return cmd_recover(rs, rk, re, rr, rorder);
        if (*dump)
            return cmd_netlist_dump(variant, dump_out);
    } catch (const experiment::InvariantError &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
