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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "eaqec/error.h"
#include "eaqec/gf.h"
#include "oracles.h"
#include "test_util.h"

using namespace eaqec;

namespace {

std::vector<std::uint64_t> modulus_of(const Field &f) {
    const auto m = f.modulus();
    return {m.begin(), m.end()};
}

const std::vector<std::pair<std::uint64_t, unsigned>> kSmallFields = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {13, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}};

}  // namespace

TEST_CASE("prime field has modulus x") {
    const Field f = Field::create(2, 1);
    CHECK(f.order() == 2);
    CHECK(modulus_of(f) == std::vector<std::uint64_t>{0});
    CHECK(f.elements().size() == 2);
}

TEST_CASE("defining polynomials match the enumeration oracle") {
    CHECK(modulus_of(Field::create(3, 3)) == std::vector<std::uint64_t>{1, 2, 0});
    CHECK(modulus_of(Field::create(3, 2)) == std::vector<std::uint64_t>{1, 0});
    CHECK(Field::create(3, 3).to_string() == "3^3;mod=1,2,0");
    for (auto [p, e] : kSmallFields) {
        if (e == 1) {
            continue;
        }
        CAPTURE(p);
        CAPTURE(e);
        CHECK(modulus_of(Field::create(p, e)) == oracle::first_irreducible(p, e));
    }
    CHECK(modulus_of(Field::create(2, 8)) == oracle::first_irreducible(2, 8));
    CHECK(modulus_of(Field::create(11, 3)) == oracle::first_irreducible(11, 3));
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Field::create(4, 1), Error);
    try {
        Field::create(9, 2);
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NonPrime);
    }
    try {
        Field::create(2, 64);
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::UnsupportedSize);
    }
    CHECK(parse_field_order("27") == Field::create(3, 3));
    CHECK(parse_field_order("17^8") == Field::create(17, 8));
    CHECK_THROWS_AS(parse_field_order("12"), Error);
    CHECK_THROWS_AS(parse_field_order("x"), Error);
}

TEST_CASE("small products") {
    const Field f9 = Field::create(3, 2);
    const Element b = f9.beta();
    CHECK(f9.enc(f9.mul(b, b)) == 2);
    CHECK(f9.enc(f9.frobenius(b, 1)) == 6);
    CHECK(f9.enc(f9.from_enc(5)) == 5);
    CHECK(f9.from_enc(5).coeff(0) == 2);
    CHECK(f9.from_enc(5).coeff(1) == 1);

    const Field f27 = Field::create(3, 3);
    CHECK(f27.enc(f27.mul(f27.beta(), f27.mul(f27.beta(), f27.beta()))) == 5);

    const Field f2 = Field::create(2, 1);
    CHECK(f2.inv(f2.one()) == f2.one());
    CHECK_THROWS_AS(f9.inv(f9.zero()), Error);
}

TEST_CASE("arithmetic agrees with table oracle") {
    for (auto [p, e] : kSmallFields) {
        const Field f = Field::create(p, e);
        const oracle::TableField t = table_field(f);
        CAPTURE(f.to_string());
        bool ok = true;
        for (std::uint64_t a = 0; a < f.order(); ++a) {
            const Element x = f.from_enc(a);
            for (std::uint64_t b = 0; b < f.order(); ++b) {
                const Element y = f.from_enc(b);
                ok = ok && f.enc(f.add(x, y)) == t.add(a, b);
                ok = ok && f.enc(f.mul(x, y)) == t.mul(a, b);
                ok = ok && f.add(f.sub(x, y), y) == x;
                if (b != 0) {
                    ok = ok && f.mul(f.div(x, y), y) == x;
                }
            }
            if (a != 0) {
                ok = ok && f.enc(f.inv(x)) == t.inv(a);
            }
            ok = ok && f.enc(f.neg(x)) == t.neg(a);
        }
        CHECK(ok);
    }
}

TEST_CASE("frobenius is the p-power map") {
    for (auto [p, e] : kSmallFields) {
        const Field f = Field::create(p, e);
        const oracle::TableField t = table_field(f);
        CAPTURE(f.to_string());
        bool ok = true;
        for (std::uint64_t a = 0; a < f.order(); ++a) {
            const Element x = f.from_enc(a);
            ok = ok && f.frobenius(x, 0) == x;
            ok = ok && f.frobenius(x, static_cast<std::int64_t>(e)) == x;
            std::uint64_t y = a;
            for (unsigned s = 1; s <= e; ++s) {
                y = t.pow(y, p);
                ok = ok && f.enc(f.frobenius(x, s)) == y;
                ok = ok && f.frobenius(x, static_cast<std::int64_t>(s) - static_cast<std::int64_t>(e)) ==
                               f.frobenius(x, s);
            }
            for (std::uint64_t b = 0; b < f.order(); b += 3) {
                const Element z = f.from_enc(b);
                ok = ok && f.frobenius(f.mul(x, z), 1) == f.mul(f.frobenius(x, 1), f.frobenius(z, 1));
                ok = ok && f.frobenius(f.add(x, z), 1) == f.add(f.frobenius(x, 1), f.frobenius(z, 1));
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("primitive element is the least generator") {
    CHECK(Field::create(2, 1).enc(Field::create(2, 1).primitive_element()) == 1);
    CHECK(Field::create(3, 2).enc(Field::create(3, 2).primitive_element()) == 4);
    CHECK(Field::create(13, 1).enc(Field::create(13, 1).primitive_element()) == 2);
    for (auto [p, e] : kSmallFields) {
        const Field f = Field::create(p, e);
        const oracle::TableField t = table_field(f);
        std::uint64_t expected = 1;
        while (t.order(expected) != f.order() - 1) {
            ++expected;
        }
        CAPTURE(f.to_string());
        CHECK(f.enc(f.primitive_element()) == expected);
    }
    // Large orders exercise the factorization of q - 1.
    for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{17, 8}, {11, 5}, {13, 6}, {2, 16}}) {
        const Field f = Field::create(p, e);
        const Element g = f.primitive_element();
        CHECK(f.pow(g, f.order() - 1) == f.one());
        CHECK(f.pow(g, (f.order() - 1) / 2) != f.one());
    }
}

TEST_CASE("element listing") {
    CHECK(Field::create(2, 2).elements().size() == 4);
    const Field f9 = Field::create(3, 2);
    const auto all = f9.elements();
    REQUIRE(all.size() == 9);
    for (std::uint64_t i = 0; i < 9; ++i) {
        CHECK(f9.enc(all[i]) == i);
    }
}

TEST_CASE("galois form") {
    const Field f9 = Field::create(3, 2);
    const std::vector<Element> x{f9.beta()};
    CHECK(f9.galois_form(x, x, 1) == f9.one());
    const std::vector<Element> zero{f9.zero(), f9.zero()};
    const std::vector<Element> y{f9.from_enc(7), f9.from_enc(3)};
    CHECK(f9.is_zero(f9.galois_form(zero, y, 1)));

    const Field f5 = Field::create(5, 1);
    const std::vector<Element> a{f5.from_int(1), f5.from_int(2)};
    const std::vector<Element> b{f5.from_int(3), f5.from_int(1)};
    CHECK(f5.is_zero(f5.galois_form(a, b, 0)));

    const std::vector<Element> shorter{f9.one()};
    CHECK_THROWS_AS(f9.galois_form(shorter, y, 0), Error);
    const std::vector<Element> foreign{f5.one()};
    CHECK_THROWS_AS(f9.galois_form(foreign, x, 0), Error);
}

TEST_CASE("field mismatch is reported") {
    const Field f9 = Field::create(3, 2);
    const Field f27 = Field::create(3, 3);
    try {
        f9.add(f9.one(), f27.one());
        FAIL("expected an exception");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
    CHECK_THROWS_AS(f9.from_enc(9), Error);
}
