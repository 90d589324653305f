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

// Power traces: the per-cycle proxy power model, the text trace format,
// compression to one value per clock cycle and slicing into key-bit slots.

#pragma once

#include "hdpa/ladder.h"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hdpa::trace {

/// Default weight of one toggling controller bit, in units of gate toggles.
inline constexpr double kDefaultGamma = 50.0;
/// Slots analysed per trace (key bits 0..229).
inline constexpr unsigned kAttackSlots = 230;

struct PowerModelParams {
    double alpha = 1.0; // per PM gate toggle
    double beta = 1.0;  // per register Hamming-distance unit
    double gamma = kDefaultGamma; // per control-word bit toggle
    double sigma = 0.0; // Gaussian noise standard deviation
    uint64_t noise_seed = 0;
};

/// Throws std::invalid_argument for negative weights or sigma.
void validate(const PowerModelParams &params);

/// alpha*pm + beta*reg + gamma*ctrl, plus N(0, sigma) from \p noise when
/// sigma > 0.
double power_of_cycle(const kp::CycleActivity &activity,
                      const PowerModelParams &params, Rng &noise);

struct TraceMetadata {
    std::string design;
    std::string pm_variant;
    std::string sequence_mode;
    unsigned key_bits = kp::kScalarBits;
    unsigned cycles_per_slot = kp::kCyclesPerSlot;
    unsigned samples_per_cycle = 1;
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = kDefaultGamma;
    double sigma = 0.0;
    uint64_t seed = 0;
    uint64_t noise_seed = 0;
    std::string countermeasures = "none";
    /// Unrecognised keys, preserved in order.
    std::vector<std::pair<std::string, std::string>> extra;

    /// Clock cycles of the main loop: cycles_per_slot * (key_bits - 1).
    std::size_t cycles() const;
    friend bool operator==(const TraceMetadata &,
                           const TraceMetadata &) = default;
};

struct PowerTrace {
    TraceMetadata meta;
    std::vector<double> samples;
    friend bool operator==(const PowerTrace &, const PowerTrace &) = default;
};

/// Applies the power model to a ladder activity record.
PowerTrace make_trace(const std::vector<kp::CycleActivity> &activity,
                      const PowerModelParams &params, TraceMetadata meta);

/// Averages every samples_per_cycle consecutive samples. Throws
/// std::invalid_argument if the sample count is not divisible.
PowerTrace compress(const PowerTrace &trace);

class SlotMatrix {
  public:
    SlotMatrix() = default;
    SlotMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
    /// Throws std::invalid_argument for ragged input.
    static SlotMatrix from_rows(const std::vector<std::vector<double>> &rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double &at(std::size_t row, std::size_t col) {
        return data_[row * cols_ + col];
    }
    double at(std::size_t row, std::size_t col) const {
        return data_[row * cols_ + col];
    }
    friend bool operator==(const SlotMatrix &, const SlotMatrix &) = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

/// Row j holds the cycles of key bit j, j = 0..229, i.e. time position
/// key_bits - 2 - j of the main loop. Requires one sample per cycle and
/// exactly 54 * (key_bits - 1) cycles; throws std::invalid_argument naming
/// the expected count otherwise.
SlotMatrix slice_into_slots(const std::vector<double> &per_cycle,
                            unsigned key_bits,
                            unsigned cycles_per_slot = kp::kCyclesPerSlot);
SlotMatrix slice_into_slots(const PowerTrace &compressed);

/// Trace file: '#key=value' metadata lines, then one sample per line.
void write_trace(std::ostream &os, const PowerTrace &trace);
void write_trace(const std::filesystem::path &path, const PowerTrace &trace);
/// Throws std::runtime_error with the offending line number.
PowerTrace read_trace(std::istream &is);
PowerTrace read_trace(const std::filesystem::path &path);

/// One CSV row per slot, comma-separated values.
void write_slot_csv(std::ostream &os, const SlotMatrix &slots);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

} // namespace hdpa::trace
