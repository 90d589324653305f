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

#include "hdpa/ecdsa.h"

#include <boost/integer/mod_inverse.hpp>

#include <stdexcept>

namespace hdpa::ecdsa {

namespace {

BigInt mod(const BigInt &a, const BigInt &m) {
    BigInt r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

BigInt recover_private_key(const EcdsaSample &x) {
    if (x.epsilon < 2)
        throw std::invalid_argument("group order must be at least 2");
    const BigInt r = mod(x.r, x.epsilon);
    const BigInt r_inv =
        r == 0 ? BigInt(0) : boost::integer::mod_inverse(r, x.epsilon);
    if (r_inv == 0)
        throw std::domain_error("r is not invertible modulo the group order");
    return mod(mod(x.s * x.k - x.e, x.epsilon) * r_inv, x.epsilon);
}

} // namespace hdpa::ecdsa
