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

// NIST B-233: y^2 + xy = x^3 + a x^2 + b over GF(2^233), affine group law
// and a double-and-add reference scalar multiplication.

#pragma once

#include "hdpa/field.h"

#include <boost/multiprecision/cpp_int.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace hdpa::ec {

using BigInt = boost::multiprecision::cpp_int;
using gf::FieldElement;

struct AffinePoint {
    FieldElement x;
    FieldElement y;
    bool infinity = false;

    static AffinePoint at_infinity() { return {{}, {}, true}; }
    friend bool operator==(const AffinePoint &, const AffinePoint &) = default;
};

struct CurveParams {
    std::string name;
    FieldElement a;
    FieldElement b;
    AffinePoint g;
    BigInt order;
    unsigned cofactor = 0;
};

/// Built-in B-233 constants, validated on first use.
const CurveParams &b233();

/// Parses a key=value parameter file ('#' comments, blank lines allowed).
/// Keys: field (must be b233), a (optional, default 1), b, gx, gy, order,
/// cofactor. Field values are 59-digit hex; order is hex with a 0x prefix,
/// plain decimal, or bare hex. Throws std::runtime_error naming the line.
CurveParams parse_curve(std::string_view text);
CurveParams load_curve(const std::filesystem::path &path);

/// Throws std::runtime_error unless G is on the curve, G has the declared
/// order and the cofactor is positive.
void validate(const CurveParams &curve);

bool on_curve(const AffinePoint &p, const CurveParams &curve);
AffinePoint negate(const AffinePoint &p);
AffinePoint ec_add(const AffinePoint &p, const AffinePoint &q,
                   const CurveParams &curve);
AffinePoint ec_double(const AffinePoint &p, const CurveParams &curve);
/// [k]P by left-to-right double-and-add; k must be non-negative.
AffinePoint scalar_mul_ref(const BigInt &k, const AffinePoint &p,
                           const CurveParams &curve);

/// Parses hex ("0x" optional) or, when \p allow_decimal is set and the
/// string has no prefix and only decimal digits, decimal.
BigInt parse_bigint(std::string_view text, bool allow_decimal);
std::string to_hex(const BigInt &v);
unsigned bit_length(const BigInt &v);

} // namespace hdpa::ec
