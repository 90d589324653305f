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

// Simulation and attack jobs shared by the command-line tool and the tests.

#pragma once

#include "hdpa/attack.h"
#include "hdpa/ladder.h"
#include "hdpa/trace.h"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hdpa::experiment {

/// Malformed input data (exit code 2 in the CLI).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// A simulated result disagreed with its reference (exit code 3).
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Countermeasure : uint8_t {
    ScalarRandomization = 1,
    PointBlinding = 2,
    ProjectiveRandomization = 4,
};

class CountermeasureSet {
  public:
    CountermeasureSet() = default;
    /// "none" or names joined by '+': scalar-randomization, point-blinding,
    /// projective-randomization. Throws std::invalid_argument.
    static CountermeasureSet parse(std::string_view text);

    bool has(Countermeasure c) const { return mask_ & uint8_t(c); }
    CountermeasureSet &add(Countermeasure c) {
        mask_ |= uint8_t(c);
        return *this;
    }
    bool empty() const { return mask_ == 0; }
    /// Canonical name, "none" when empty.
    std::string name() const;
    friend bool operator==(const CountermeasureSet &,
                           const CountermeasureSet &) = default;

  private:
    uint8_t mask_ = 0;
};

struct RunSpec {
    mult::DesignConfig design;
    kp::Scalar key;
    ec::AffinePoint point;
    CountermeasureSet countermeasures;
    uint64_t seed = 0;
    trace::PowerModelParams power;
    /// Defaults to a value derived from seed.
    std::optional<uint64_t> noise_seed;
};

struct RunResult {
    trace::PowerTrace trace;
    /// The scalar the ladder actually processed (k, or k + r * order).
    ec::BigInt processed_scalar;
    ec::AffinePoint result; // x only unless point blinding recovered y
};

/// Key for a seed, drawn from the seed's key stream.
kp::Scalar random_key(uint64_t seed);
/// [r]G for r drawn from the seed's point stream.
ec::AffinePoint random_point(uint64_t seed, const ec::CurveParams &curve);

/// Simulates one kP run and turns it into a power trace. With \p verify
/// the affine x is compared to the double-and-add reference and a mismatch
/// throws InvariantError.
RunResult simulate(const RunSpec &spec, const ec::CurveParams &curve,
                   bool verify = true);

struct ExperimentSpec {
    std::vector<mult::DesignConfig> designs;
    /// Empty: a fresh random key per seed, shared by all designs.
    std::optional<kp::Scalar> key;
    ec::AffinePoint point;
    std::string point_label = "G";
    std::vector<CountermeasureSet> variants{CountermeasureSet{}};
    std::vector<uint64_t> seeds;
    trace::PowerModelParams power;
};

struct BlockResult {
    mult::DesignConfig design;
    CountermeasureSet countermeasures;
    uint64_t seed = 0;
    attack::AttackReport report;
};

struct SummaryRow {
    mult::DesignConfig design;
    CountermeasureSet countermeasures;
    double mean_best_delta = 0;
    std::size_t runs = 0;
};

struct ExperimentResult {
    std::vector<BlockResult> blocks; // seed-major, then design, then variant
    std::vector<SummaryRow> summary; // design, then variant
};

ExperimentResult run_experiment(const ExperimentSpec &spec,
                                const ec::CurveParams &curve);

/// '#key=value' provenance lines.
using SpecLines = std::vector<std::pair<std::string, std::string>>;
SpecLines describe(const ExperimentSpec &spec);
void write_spec_lines(std::ostream &os, const SpecLines &lines);

/// Columns: kind,design,countermeasures,seed,rank,clock_index,delta1,delta.
void write_experiment_csv(std::ostream &os, const ExperimentSpec &spec,
                          const ExperimentResult &result);

} // namespace hdpa::experiment
