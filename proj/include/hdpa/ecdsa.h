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

// ECDSA private-key recovery from a known ephemeral scalar.

#pragma once

#include "hdpa/curve.h"

namespace hdpa::ecdsa {

using ec::BigInt;

struct EcdsaSample {
    BigInt e;       // message hash
    BigInt r;       // signature component
    BigInt s;       // signature component
    BigInt k;       // ephemeral scalar
    BigInt epsilon; // group order
};

/// Key = (s*k - e) * r^-1 mod epsilon. Throws std::domain_error if r is not
/// invertible and std::invalid_argument if epsilon < 2.
BigInt recover_private_key(const EcdsaSample &sample);

} // namespace hdpa::ecdsa
