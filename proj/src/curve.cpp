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

#include "hdpa/curve.h"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hdpa::ec {

namespace {

using gf::gf_inv;
using gf::gf_mul_ref;
using gf::gf_square;

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        b++;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        e--;
    return std::string(s.substr(b, e - b));
}

} // namespace

BigInt parse_bigint(std::string_view text, bool allow_decimal) {
    std::string s = trim(text);
    bool hex = true;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X'))
        s = s.substr(2);
    else if (allow_decimal && !s.empty() &&
             s.find_first_not_of("0123456789") == std::string::npos)
        hex = false;
    if (s.empty())
        throw std::invalid_argument("empty integer");
    BigInt v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (hex && c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F')
            d = c - 'A' + 10;
        else
            throw std::invalid_argument("invalid digit '" + std::string(1, c) +
                                        "' in integer");
        v = v * (hex ? 16 : 10) + d;
    }
    return v;
}

std::string to_hex(const BigInt &v) {
    std::ostringstream os;
    os << std::hex << std::uppercase << v;
    return os.str();
}

unsigned bit_length(const BigInt &v) {
    return v == 0 ? 0 : unsigned(boost::multiprecision::msb(v)) + 1;
}

bool on_curve(const AffinePoint &p, const CurveParams &curve) {
    if (p.infinity)
        return true;
    const FieldElement x2 = gf_square(p.x);
    const FieldElement lhs = gf_square(p.y) ^ gf_mul_ref(p.x, p.y);
    const FieldElement rhs =
        gf_mul_ref(x2, p.x) ^ gf_mul_ref(curve.a, x2) ^ curve.b;
    return lhs == rhs;
}

AffinePoint negate(const AffinePoint &p) {
    if (p.infinity)
        return p;
    return {p.x, p.x ^ p.y, false};
}

AffinePoint ec_double(const AffinePoint &p, const CurveParams &curve) {
    if (p.infinity || p.x.is_zero())
        return AffinePoint::at_infinity();
    const FieldElement lambda = p.x ^ gf_mul_ref(p.y, gf_inv(p.x));
    const FieldElement x3 = gf_square(lambda) ^ lambda ^ curve.a;
    const FieldElement y3 =
        gf_square(p.x) ^ gf_mul_ref(lambda ^ FieldElement::one(), x3);
    return {x3, y3, false};
}

AffinePoint ec_add(const AffinePoint &p, const AffinePoint &q,
                   const CurveParams &curve) {
    if (p.infinity)
        return q;
    if (q.infinity)
        return p;
    if (p.x == q.x) {
        if (p.y == q.y)
            return ec_double(p, curve);
        return AffinePoint::at_infinity();
    }
    const FieldElement dx = p.x ^ q.x;
    const FieldElement lambda = gf_mul_ref(p.y ^ q.y, gf_inv(dx));
    const FieldElement x3 = gf_square(lambda) ^ lambda ^ dx ^ curve.a;
    const FieldElement y3 = gf_mul_ref(lambda, p.x ^ x3) ^ x3 ^ p.y;
    return {x3, y3, false};
}

AffinePoint scalar_mul_ref(const BigInt &k, const AffinePoint &p,
                           const CurveParams &curve) {
    if (k < 0)
        throw std::invalid_argument("negative scalar");
    AffinePoint r = AffinePoint::at_infinity();
    for (int i = int(bit_length(k)) - 1; i >= 0; i--) {
        r = ec_double(r, curve);
        if (boost::multiprecision::bit_test(k, unsigned(i)))
            r = ec_add(r, p, curve);
    }
    return r;
}

void validate(const CurveParams &curve) {
    if (curve.cofactor == 0)
        throw std::runtime_error("curve cofactor must be positive");
    if (curve.order <= 1)
        throw std::runtime_error("curve order must exceed 1");
    if (curve.g.infinity || !on_curve(curve.g, curve))
        throw std::runtime_error("base point is not on the curve");
    if (!scalar_mul_ref(curve.order, curve.g, curve).infinity)
        throw std::runtime_error("order * G is not the point at infinity");
}

CurveParams parse_curve(std::string_view text) {
    std::map<std::string, std::pair<std::string, int>> kv;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("curve file line " +
                                     std::to_string(lineno) +
                                     ": expected key=value");
        const std::string key = trim(t.substr(0, eq));
        if (!kv.emplace(key, std::pair{trim(t.substr(eq + 1)), lineno}).second)
            throw std::runtime_error("curve file line " +
                                     std::to_string(lineno) +
                                     ": duplicate key '" + key + "'");
    }

    auto get = [&](const char *key) -> const std::pair<std::string, int> & {
        const auto it = kv.find(key);
        if (it == kv.end())
            throw std::runtime_error(std::string("curve file: missing key '") +
                                     key + "'");
        return it->second;
    };
    auto field = [&](const char *key) {
        const auto &[v, ln] = get(key);
        try {
            return FieldElement::from_hex(v);
        } catch (const std::exception &e) {
            throw std::runtime_error("curve file line " + std::to_string(ln) +
                                     ": " + key + ": " + e.what());
        }
    };

    CurveParams c;
    c.name = get("field").first;
    if (c.name != "b233")
        throw std::runtime_error("curve file line " +
                                 std::to_string(get("field").second) +
                                 ": unsupported field '" + c.name + "'");
    c.a = kv.count("a") ? field("a") : FieldElement::one();
    c.b = field("b");
    c.g = {field("gx"), field("gy"), false};
    try {
        c.order = parse_bigint(get("order").first, true);
        const BigInt h = parse_bigint(get("cofactor").first, true);
        if (h <= 0 || h > 1024)
            throw std::invalid_argument("cofactor out of range");
        c.cofactor = h.convert_to<unsigned>();
    } catch (const std::invalid_argument &e) {
        throw std::runtime_error(std::string("curve file: ") + e.what());
    }
    for (const auto &[key, val] : kv) {
        static const char *known[] = {"field", "a", "b", "gx", "gy", "order",
                                      "cofactor"};
        bool ok = false;
        for (const char *k : known)
            ok = ok || key == k;
        if (!ok)
            throw std::runtime_error("curve file line " +
                                     std::to_string(val.second) +
                                     ": unknown key '" + key + "'");
    }
    validate(c);
    return c;
}

CurveParams load_curve(const std::filesystem::path &path) {
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open curve file " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_curve(ss.str());
}

const CurveParams &b233() {
    static const CurveParams curve = parse_curve(
        "field=b233\n"
        "b=066647EDE6C332C7F8C0923BB58213B333B20E9CE4281FE115F7D8F90AD\n"
        "gx=0FAC9DFCBAC8313BB2139F1BB755FEF65BC391F8B36F8F8EB7371FD558B\n"
        "gy=1006A08A41903350678E58528BEBF8A0BEFF867A7CA36716F7E01F81052\n"
        "order=0x1000000000000000000000000000013E974E72F8A6922031D2603CFE0D7\n"
        "cofactor=2\n");
    return curve;
}

} // namespace hdpa::ec
