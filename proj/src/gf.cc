// Copyright 2026 The eaqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eaqec/gf.h"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "eaqec/error.h"
#include "number_theory.h"

namespace eaqec {

namespace detail {

struct FieldData {
    std::uint32_t p = 0;
    unsigned e = 0;
    std::uint64_t q = 0;
    std::vector<std::uint32_t> modulus;
    // frobenius_images[s][i * e + j]: coefficient j of (beta^i)^{p^s}.
    std::vector<std::vector<std::uint32_t>> frobenius_images;
    Element primitive;
    std::shared_ptr<const FieldData> prime;
};

}  // namespace detail

namespace {

// Dense polynomials over Z_p, lowest degree first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

Poly poly_rem(Poly a, const Poly &f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = detail::pow_mod(f.back(), p - 2, p);
    while (a.size() >= f.size()) {
        const std::uint64_t t = detail::mul_mod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = (a[shift + i] + p - detail::mul_mod(t, f[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly &a, const Poly &b, const Poly &f, std::uint64_t p) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + detail::mul_mod(a[i], b[j], p)) % p;
        }
    }
    return poly_rem(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t exponent, const Poly &f, std::uint64_t p) {
    Poly result{1};
    base = poly_rem(std::move(base), f, p);
    while (exponent) {
        if (exponent & 1) {
            result = poly_mulmod(result, base, f, p);
        }
        base = poly_mulmod(base, base, f, p);
        exponent >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: a monic f of degree e is irreducible iff gcd(f, x^{p^i} - x) = 1
// for every 1 <= i <= e/2. For e <= 3 this is the absence of roots in F_p.
bool is_irreducible(const Poly &f, std::uint64_t p) {
    const std::size_t e = f.size() - 1;
    if (e <= 1) {
        return e == 1;
    }
    Poly h{0, 1};
    for (std::size_t i = 1; i <= e / 2; ++i) {
        h = poly_powmod(h, p, f, p);
        Poly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) {
            return false;
        }
        if (poly_gcd(f, diff, p).size() != 1) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, unsigned e) {
    std::vector<std::uint32_t> digits(e, 0);
    while (true) {
        Poly f(digits.begin(), digits.end());
        f.push_back(1);
        if (is_irreducible(f, p)) {
            return digits;
        }
        // Next candidate in increasing sum c_i p^i order.
        unsigned i = 0;
        while (i < e && digits[i] == p - 1) {
            digits[i++] = 0;
        }
        if (i == e) {
            throw Error(ErrorKind::UnsupportedSize, "no irreducible polynomial found");
        }
        ++digits[i];
    }
}

}  // namespace

Field Field::create(std::uint64_t p, unsigned e) {
    if (!detail::is_prime(p)) {
        throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    }
    if (e == 0 || e > kMaxExtensionDegree) {
        throw Error(ErrorKind::UnsupportedSize, "extension degree must lie in [1, 16], got " + std::to_string(e));
    }
    if (p > UINT32_MAX) {
        throw Error(ErrorKind::UnsupportedSize, "characteristic must be below 2^32");
    }
    const std::uint64_t q = detail::checked_power(p, e);
    if (q == 0) {
        throw Error(ErrorKind::UnsupportedSize, "field order " + std::to_string(p) + "^" + std::to_string(e) +
                                                     " does not fit in 64 bits");
    }

    auto data = std::make_shared<detail::FieldData>();
    data->p = static_cast<std::uint32_t>(p);
    data->e = e;
    data->q = q;
    data->modulus = canonical_modulus(data->p, e);
    if (e > 1) {
        data->prime = Field::create(p, 1).data_;
    }

    Field field(data);
    const Element beta = field.beta();
    data->frobenius_images.resize(e);
    Element gamma = beta;  // beta^{p^s}
    for (unsigned s = 0; s < e; ++s) {
        auto &table = data->frobenius_images[s];
        table.assign(static_cast<std::size_t>(e) * e, 0);
        Element power = field.one();
        for (unsigned i = 0; i < e; ++i) {
            for (unsigned j = 0; j < e; ++j) {
                table[i * e + j] = power.coeffs_[j];
            }
            power = field.mul(power, gamma);
        }
        gamma = field.pow(gamma, p);
    }

    const std::vector<std::uint64_t> factors = detail::prime_factors(q - 1);
    for (std::uint64_t candidate = 1; candidate < q; ++candidate) {
        const Element a = field.from_enc(candidate);
        bool generates = true;
        for (std::uint64_t r : factors) {
            if (field.pow(a, (q - 1) / r) == field.one()) {
                generates = false;
                break;
            }
        }
        if (generates) {
            data->primitive = a;
            break;
        }
    }
    return field;
}

std::uint32_t Field::characteristic() const {
    return data_->p;
}

unsigned Field::degree() const {
    return data_->e;
}

std::uint64_t Field::order() const {
    return data_->q;
}

std::span<const std::uint32_t> Field::modulus() const {
    return data_->modulus;
}

std::string Field::order_string() const {
    return std::to_string(data_->p) + "^" + std::to_string(data_->e);
}

std::string Field::to_string() const {
    std::string out = order_string() + ";mod=";
    for (unsigned i = 0; i < data_->e; ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(data_->modulus[i]);
    }
    return out;
}

Element Field::make() const {
    Element a;
    a.p_ = data_->p;
    a.e_ = data_->e;
    return a;
}

Element Field::zero() const {
    return make();
}

Element Field::one() const {
    Element a = make();
    a.coeffs_[0] = 1;
    return a;
}

Element Field::beta() const {
    Element a = make();
    if (data_->e == 1) {
        return a;
    }
    a.coeffs_[1] = 1;
    return a;
}

Element Field::from_int(std::int64_t value) const {
    const std::int64_t p = data_->p;
    Element a = make();
    a.coeffs_[0] = static_cast<std::uint32_t>(((value % p) + p) % p);
    return a;
}

Element Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > data_->e) {
        throw Error(ErrorKind::InvalidArgument, "too many coefficients for " + order_string());
    }
    Element a = make();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        a.coeffs_[i] = coeffs[i] % data_->p;
    }
    return a;
}

Element Field::from_enc(std::uint64_t value) const {
    if (value >= data_->q) {
        throw Error(ErrorKind::InvalidArgument,
                    "encoding " + std::to_string(value) + " out of range for field " + order_string());
    }
    Element a = make();
    for (unsigned i = 0; i < data_->e; ++i) {
        a.coeffs_[i] = static_cast<std::uint32_t>(value % data_->p);
        value /= data_->p;
    }
    return a;
}

std::uint64_t Field::enc(const Element &a) const {
    require(a);
    std::uint64_t value = 0;
    for (unsigned i = data_->e; i-- > 0;) {
        value = value * data_->p + a.coeffs_[i];
    }
    return value;
}

bool Field::contains(const Element &a) const {
    return a.p_ == data_->p && a.e_ == data_->e;
}

void Field::require(const Element &a) const {
    if (!contains(a)) {
        throw Error(ErrorKind::FieldMismatch, "element of " + std::to_string(a.p_) + "^" + std::to_string(a.e_) +
                                                  " used in field " + order_string());
    }
}

bool Field::is_zero(const Element &a) const {
    require(a);
    for (unsigned i = 0; i < data_->e; ++i) {
        if (a.coeffs_[i]) {
            return false;
        }
    }
    return true;
}

Element Field::add(const Element &a, const Element &b) const {
    require(a);
    require(b);
    const std::uint32_t p = data_->p;
    Element r = make();
    for (unsigned i = 0; i < data_->e; ++i) {
        const std::uint64_t s = static_cast<std::uint64_t>(a.coeffs_[i]) + b.coeffs_[i];
        r.coeffs_[i] = static_cast<std::uint32_t>(s >= p ? s - p : s);
    }
    return r;
}

Element Field::neg(const Element &a) const {
    require(a);
    Element r = make();
    for (unsigned i = 0; i < data_->e; ++i) {
        r.coeffs_[i] = a.coeffs_[i] ? data_->p - a.coeffs_[i] : 0;
    }
    return r;
}

Element Field::sub(const Element &a, const Element &b) const {
    return add(a, neg(b));
}

Element Field::mul(const Element &a, const Element &b) const {
    require(a);
    require(b);
    const std::uint64_t p = data_->p;
    const unsigned e = data_->e;
    Element r = make();
    if (e == 1) {
        r.coeffs_[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.coeffs_[0]) * b.coeffs_[0] % p);
        return r;
    }
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
    for (unsigned i = 0; i < e; ++i) {
        if (!a.coeffs_[i]) {
            continue;
        }
        for (unsigned j = 0; j < e; ++j) {
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a.coeffs_[i]) * b.coeffs_[j]) % p;
        }
    }
    // x^e = -(c_0 + c_1 x + ... + c_{e-1} x^{e-1}).
    const auto &mod = data_->modulus;
    for (unsigned k = 2 * e - 2; k >= e; --k) {
        const std::uint64_t t = prod[k];
        if (!t) {
            continue;
        }
        for (unsigned i = 0; i < e; ++i) {
            prod[k - e + i] = (prod[k - e + i] + (p - t) * mod[i]) % p;
        }
    }
    for (unsigned i = 0; i < e; ++i) {
        r.coeffs_[i] = static_cast<std::uint32_t>(prod[i]);
    }
    return r;
}

Element Field::pow(const Element &a, std::uint64_t exponent) const {
    Element result = one();
    Element base = a;
    require(base);
    while (exponent) {
        if (exponent & 1) {
            result = mul(result, base);
        }
        exponent >>= 1;
        if (exponent) {
            base = mul(base, base);
        }
    }
    return result;
}

Element Field::inv(const Element &a) const {
    if (is_zero(a)) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + order_string());
    }
    return pow(a, data_->q - 2);
}

Element Field::div(const Element &a, const Element &b) const {
    require(a);
    return mul(a, inv(b));
}

Element Field::frobenius(const Element &a, std::int64_t s) const {
    require(a);
    const std::int64_t e = data_->e;
    const std::size_t shift = static_cast<std::size_t>(((s % e) + e) % e);
    if (shift == 0) {
        return a;
    }
    const std::uint64_t p = data_->p;
    const auto &table = data_->frobenius_images[shift];
    std::array<std::uint64_t, kMaxExtensionDegree> acc{};
    for (std::size_t i = 0; i < data_->e; ++i) {
        const std::uint64_t c = a.coeffs_[i];
        if (!c) {
            continue;
        }
        for (std::size_t j = 0; j < data_->e; ++j) {
            acc[j] = (acc[j] + c * table[i * data_->e + j]) % p;
        }
    }
    Element r = make();
    for (std::size_t j = 0; j < data_->e; ++j) {
        r.coeffs_[j] = static_cast<std::uint32_t>(acc[j]);
    }
    return r;
}

Element Field::primitive_element() const {
    return data_->primitive;
}

std::vector<Element> Field::elements() const {
    constexpr std::uint64_t limit = std::uint64_t{1} << 24;
    if (data_->q > limit) {
        throw Error(ErrorKind::UnsupportedSize, "refusing to list the " + std::to_string(data_->q) +
                                                     " elements of " + order_string());
    }
    std::vector<Element> out;
    out.reserve(data_->q);
    for (std::uint64_t v = 0; v < data_->q; ++v) {
        out.push_back(from_enc(v));
    }
    return out;
}

Element Field::galois_form(std::span<const Element> x, std::span<const Element> y, std::int64_t s) const {
    if (x.size() != y.size()) {
        throw Error(ErrorKind::LengthMismatch, "galois form of vectors of lengths " + std::to_string(x.size()) +
                                                   " and " + std::to_string(y.size()));
    }
    Element acc = zero();
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc = add(acc, mul(x[i], frobenius(y[i], s)));
    }
    return acc;
}

Field Field::prime_subfield() const {
    if (data_->e == 1) {
        return *this;
    }
    return Field(data_->prime);
}

bool Field::operator==(const Field &other) const {
    return data_->p == other.data_->p && data_->e == other.data_->e;
}

Field parse_field_order(const std::string &text) {
    auto parse_int = [&](std::string_view part) {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
            throw Error(ErrorKind::Parse, "cannot parse field order '" + text + "'");
        }
        return value;
    };
    const auto caret = text.find('^');
    if (caret != std::string::npos) {
        const std::uint64_t p = parse_int(std::string_view(text).substr(0, caret));
        const std::uint64_t e = parse_int(std::string_view(text).substr(caret + 1));
        if (e > kMaxExtensionDegree) {
            throw Error(ErrorKind::UnsupportedSize, "extension degree too large in '" + text + "'");
        }
        return Field::create(p, static_cast<unsigned>(e));
    }
    const std::uint64_t q = parse_int(text);
    if (q < 2) {
        throw Error(ErrorKind::NonPrime, "field order " + text + " is not a prime power");
    }
    const auto factors = detail::prime_factors(q);
    if (factors.size() != 1) {
        throw Error(ErrorKind::NonPrime, "field order " + text + " is not a prime power");
    }
    unsigned e = 0;
    for (std::uint64_t r = q; r > 1; r /= factors[0]) {
        ++e;
    }
    return Field::create(factors[0], e);
}

}  // namespace eaqec
