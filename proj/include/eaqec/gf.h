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

#ifndef EAQEC_GF_H
#define EAQEC_GF_H

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace eaqec {

/// Largest supported extension degree e of F_{p^e}.
inline constexpr unsigned kMaxExtensionDegree = 16;

/// An element of F_{p^e}, stored as its coefficient vector over Z_p in the
/// polynomial basis 1, beta, ..., beta^{e-1} where beta is a root of the
/// field's defining polynomial.
///
/// Elements are plain values and carry a (p, e) tag. Since every Field is the
/// canonical one for its (p, e), the tag identifies the owning field exactly.
/// A default-constructed Element belongs to no field and is rejected by every
/// Field operation.
class Element {
   public:
    Element() = default;

    std::uint32_t coeff(unsigned i) const {
        return coeffs_[i];
    }
    std::uint32_t characteristic() const {
        return p_;
    }
    unsigned degree() const {
        return e_;
    }

    bool operator==(const Element &other) const = default;

   private:
    friend class Field;
    std::array<std::uint32_t, kMaxExtensionDegree> coeffs_{};
    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
};

namespace detail {
struct FieldData;
}

/// The finite field F_q, q = p^e, with its canonical defining polynomial: the
/// monic irreducible polynomial of degree e whose non-leading coefficients
/// c_0..c_{e-1} minimize sum c_i p^i.
///
/// Field is a cheap handle to immutable shared data, so it can be copied and
/// used from any number of threads. Two fields compare equal iff they have the
/// same p and e.
///
/// Supported sizes: p < 2^32, e <= kMaxExtensionDegree and p^e < 2^64.
class Field {
   public:
    /// Builds F_{p^e}. Throws NonPrime or UnsupportedSize.
    static Field create(std::uint64_t p, unsigned e);

    std::uint32_t characteristic() const;
    unsigned degree() const;
    std::uint64_t order() const;
    /// Non-leading coefficients c_0..c_{e-1} of the defining polynomial.
    std::span<const std::uint32_t> modulus() const;

    /// "p^e", e.g. "3^3".
    std::string order_string() const;
    /// "p^e;mod=c_0,...,c_{e-1}", e.g. "3^3;mod=1,2,0".
    std::string to_string() const;

    Element zero() const;
    Element one() const;
    /// The root beta of the defining polynomial (0 when e = 1).
    Element beta() const;
    /// Image of an integer in the prime subfield.
    Element from_int(std::int64_t value) const;
    Element from_coeffs(std::span<const std::uint32_t> coeffs) const;
    /// Inverse of enc. Throws InvalidArgument when value >= q.
    Element from_enc(std::uint64_t value) const;
    /// enc(a) = sum a_i p^i, a bijection onto [0, q).
    std::uint64_t enc(const Element &a) const;

    bool contains(const Element &a) const;
    bool is_zero(const Element &a) const;

    Element add(const Element &a, const Element &b) const;
    Element sub(const Element &a, const Element &b) const;
    Element mul(const Element &a, const Element &b) const;
    Element div(const Element &a, const Element &b) const;
    Element neg(const Element &a) const;
    Element inv(const Element &a) const;
    Element pow(const Element &a, std::uint64_t exponent) const;

    /// a^{p^s}. s is reduced modulo e, so negative and large values are
    /// accepted and s = e acts as the identity.
    Element frobenius(const Element &a, std::int64_t s) const;

    /// The generator of F_q^* with the smallest encoding.
    Element primitive_element() const;

    /// All q elements in increasing enc order. Throws UnsupportedSize for
    /// fields too large to list.
    std::vector<Element> elements() const;

    /// [x, y]_s = sum x_i y_i^{p^s}; s = 0 is the Euclidean product and
    /// s = e/2 the Hermitian one. s is reduced modulo e.
    Element galois_form(std::span<const Element> x, std::span<const Element> y, std::int64_t s) const;

    /// F_p viewed as a field of its own; *this when e = 1.
    Field prime_subfield() const;

    /// Throws FieldMismatch unless a belongs to this field.
    void require(const Element &a) const;

    bool operator==(const Field &other) const;

   private:
    explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {
    }
    Element make() const;

    std::shared_ptr<const detail::FieldData> data_;
};

/// Parses an order given as "p^e" or as a plain prime power "q".
/// Throws Parse or NonPrime.
Field parse_field_order(const std::string &text);

}  // namespace eaqec

#endif
