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
#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "eaqec/error.h"
#include "eaqec/lincode.h"
#include "oracles.h"
#include "test_util.h"

using namespace eaqec;

namespace {

FMatrix vandermonde_rows(const Field &f, std::size_t first, std::size_t count, std::size_t n) {
    FMatrix m(f, count, n);
    const Element g = f.primitive_element();
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.set(i, j, f.pow(g, (first + i - 1) * j));
        }
    }
    return m;
}

LinearCode random_code(const Field &f, std::size_t n, std::size_t k, std::mt19937_64 &rng) {
    if (k == 0) {
        return LinearCode::from_parity_check(FMatrix::identity(f, n));
    }
    return LinearCode::from_generator(FMatrix::random(f, k, n, rng), true);
}

/// Every vector x in F^n with [c, x]_s = 0 for all codewords c, by listing F^n.
std::size_t galois_dual_size_oracle(const Field &f, const LinearCode &code, std::int64_t s) {
    const oracle::TableField t = table_field(f);
    const std::size_t n = code.length();
    std::size_t count = 0;
    oracle::Rows basis;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint64_t> row(n, 0);
        row[i] = 1;
        basis.push_back(row);
    }
    oracle::for_each_codeword(t, basis, n, [&](const std::vector<std::uint64_t> &x) {
        std::vector<Element> y;
        for (auto v : x) {
            y.push_back(f.from_enc(v));
        }
        bool orthogonal = true;
        for (std::size_t r = 0; r < code.dimension() && orthogonal; ++r) {
            orthogonal = f.is_zero(f.galois_form(code.generator().row(r), y, s));
        }
        count += orthogonal;
    });
    return count;
}

}  // namespace

TEST_CASE("construction from generator and parity check") {
    const Field f2 = Field::create(2, 1);
    const LinearCode full = LinearCode::from_generator(FMatrix::identity(f2, 4));
    CHECK(full.is_full_space());
    CHECK(full.parity_check().rows() == 0);

    const std::vector<std::uint64_t> ones{1, 1, 1};
    const LinearCode rep = LinearCode::from_generator(FMatrix::from_enc(f2, 1, 3, ones));
    CHECK(rep.dimension() == 1);
    CHECK(rep.parity_check().rows() == 2);
    CHECK(matmul(rep.generator(), transpose(rep.parity_check())).is_zero());

    CHECK(LinearCode::from_parity_check(FMatrix(f2, 0, 5)).is_full_space());
    CHECK(LinearCode::from_parity_check(FMatrix::identity(f2, 5)).is_zero_code());
    try {
        LinearCode::from_generator(FMatrix(f2, 2, 3));
        FAIL("expected an exception");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::ZeroCode);
    }
    CHECK(LinearCode::from_generator(FMatrix(f2, 2, 3), true).is_zero_code());
}

TEST_CASE("vandermonde codes over F_13") {
    const Field f13 = Field::create(13, 1);
    const LinearCode c1 = LinearCode::from_generator(vandermonde_rows(f13, 1, 4, 12));
    CHECK(c1.dimension() == 4);
    CHECK(is_mds(c1).mds);
    const DistanceReport d1 = min_distance_exhaustive(c1);
    CHECK(d1.d == 9);
    CHECK(report_consistent(c1, d1));

    const LinearCode c2 = LinearCode::from_parity_check(vandermonde_rows(f13, 5, 8, 12));
    CHECK(c2.dimension() == 4);
    CHECK(min_distance(c2).d == 9);
    CHECK(is_mds(euclidean_dual(c2)).mds);

    // Independent listing oracle on the same generator.
    CHECK(oracle::min_distance(table_field(f13), to_rows(c1.generator()), 12) == 9);
}

TEST_CASE("duals and frobenius images") {
    std::mt19937_64 rng(17);
    const Field f2 = Field::create(2, 1);
    const LinearCode full = LinearCode::from_generator(FMatrix::identity(f2, 3));
    CHECK(euclidean_dual(full).is_zero_code());
    for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{3, 1}, {2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
        const Field f = Field::create(p, e);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = 1 + rng() % 7;
            const LinearCode c = random_code(f, n, rng() % (n + 1), rng);
            CHECK(galois_dual(c, 0) == euclidean_dual(c));
            CHECK(euclidean_dual(euclidean_dual(c)) == c);
            CHECK(code_frobenius(c, 0) == c);
            CHECK(code_frobenius(c, e) == c);
            for (std::int64_t s = 0; s < static_cast<std::int64_t>(e); ++s) {
                const LinearCode d = galois_dual(c, s);
                CHECK(c.dimension() + d.dimension() == n);
                CHECK(euclidean_dual(code_frobenius(c, e - s)) == code_frobenius(euclidean_dual(c), e - s));
            }
        }
    }
    const Field f7 = Field::create(7, 1);
    const LinearCode c = random_code(f7, 5, 2, rng);
    CHECK(code_frobenius(c, 3) == c);
}

TEST_CASE("galois dual is the orthogonal complement under the form") {
    std::mt19937_64 rng(19);
    for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{2, 2}, {3, 2}, {2, 3}}) {
        const Field f = Field::create(p, e);
        for (int trial = 0; trial < 6; ++trial) {
            const std::size_t n = 2 + rng() % (f.order() == 9 ? 3 : 4);
            const LinearCode c = random_code(f, n, 1 + rng() % n, rng);
            for (std::int64_t s = 0; s < static_cast<std::int64_t>(e); ++s) {
                const LinearCode d = galois_dual(c, s);
                // every pair of generators is orthogonal
                for (std::size_t i = 0; i < c.dimension(); ++i) {
                    for (std::size_t j = 0; j < d.dimension(); ++j) {
                        CHECK(f.is_zero(f.galois_form(c.generator().row(i), d.generator().row(j), s)));
                    }
                }
                std::uint64_t size = 1;
                for (std::size_t i = 0; i < d.dimension(); ++i) {
                    size *= f.order();
                }
                CHECK(galois_dual_size_oracle(f, c, s) == size);
            }
        }
    }
}

TEST_CASE("intersection dimension") {
    std::mt19937_64 rng(23);
    const Field f4 = Field::create(2, 2);
    const LinearCode full = random_code(f4, 6, 6, rng);
    const LinearCode any = random_code(f4, 6, 3, rng);
    CHECK(intersection_dim(any, full, 1) == 0);
    CHECK(intersection_dim(galois_dual(any, 1), any, 1) == 3);

    for (int trial = 0; trial < 30; ++trial) {
        const LinearCode c1 = random_code(f4, 6, 3, rng);
        const LinearCode c2 = random_code(f4, 6, 2, rng);
        const LinearCode target = galois_dual(c2, 1);
        // Count codewords of C1 inside the target by listing, then take log_4.
        const oracle::TableField t = table_field(f4);
        std::size_t inside = 0;
        oracle::for_each_codeword(t, to_rows(c1.generator()), 6, [&](const std::vector<std::uint64_t> &w) {
            std::vector<Element> x;
            for (auto v : w) {
                x.push_back(f4.from_enc(v));
            }
            inside += target.contains(x);
        });
        std::size_t dim = 0;
        while (inside > 1) {
            inside /= 4;
            ++dim;
        }
        CHECK(intersection_dim(c1, c2, 1) == dim);
        CHECK(intersection_basis_bruteforce(c1, target).rows() == dim);
    }

    const Field f2 = Field::create(2, 1);
    const std::vector<std::uint64_t> a{1, 1, 0, 0}, b{0, 0, 1, 1};
    const LinearCode left = LinearCode::from_generator(FMatrix::from_enc(f2, 1, 4, a));
    const LinearCode right = LinearCode::from_generator(FMatrix::from_enc(f2, 1, 4, b));
    CHECK(intersection_basis_bruteforce(left, right).rows() == 0);
    CHECK(intersection_basis_bruteforce(left, left).rows() == 1);
    CHECK_THROWS_AS(intersection_basis_bruteforce(random_code(f4, 12, 12, rng), full, 1000), Error);
}

TEST_CASE("minimum distance") {
    const Field f2 = Field::create(2, 1);
    const std::vector<std::uint64_t> ones{1, 1, 1};
    const LinearCode rep = LinearCode::from_generator(FMatrix::from_enc(f2, 1, 3, ones));
    CHECK(min_distance(rep).d == 3);
    CHECK(min_distance(LinearCode::from_generator(FMatrix::identity(f2, 5))).d == 1);

    const std::vector<std::uint64_t> g{1, 0, 0, 0, 0, 1, 0, 0};
    const LinearCode weak = LinearCode::from_generator(FMatrix::from_enc(f2, 2, 4, g));
    const MdsCertificate cert = is_mds(weak);
    CHECK_FALSE(cert.mds);
    CHECK(cert.dependent_columns.size() == 2);
    CHECK(rank(select_columns(weak.generator(), cert.dependent_columns)) < 2);
    // The zero columns are the most visible witness.
    const std::vector<std::size_t> zero_cols{2, 3};
    CHECK(rank(select_columns(weak.generator(), zero_cols)) == 0);
    CHECK(is_mds(LinearCode::from_generator(FMatrix::identity(f2, 4))).mds);

    // Hamming [15,11,3]: the columns of H are the numbers 1..15 in binary.
    FMatrix h(f2, 4, 15);
    for (std::size_t j = 0; j < 15; ++j) {
        for (std::size_t i = 0; i < 4; ++i) {
            h.set(i, j, f2.from_int(((j + 1) >> i) & 1));
        }
    }
    const LinearCode ham = LinearCode::from_parity_check(h);
    CHECK(ham.dimension() == 11);
    const DistanceReport parity = min_distance(ham, 1000);
    CHECK(parity.method == DistanceMethod::parity_columns);
    CHECK(parity.d == 3);
    CHECK(report_consistent(ham, parity));
    CHECK(parity.witness_columns.size() == 3);
    CHECK(min_distance_exhaustive(ham).d == 3);
    CHECK(std::string(distance_method_name(parity.method)) == "parity-columns");
}

TEST_CASE("is_mds agrees with exhaustive distance") {
    std::mt19937_64 rng(29);
    for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {7, 1}}) {
        const Field f = Field::create(p, e);
        const oracle::TableField t = table_field(f);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 2 + rng() % 6;
            const std::size_t k = 1 + rng() % (n - 1);
            if (std::pow(double(f.order()), double(k)) > 4096) {
                continue;
            }
            const LinearCode c = random_code(f, n, k, rng);
            if (c.dimension() == 0) {
                continue;
            }
            const std::size_t d = oracle::min_distance(t, to_rows(c.generator()), n);
            CHECK(min_distance_exhaustive(c).d == d);
            CHECK(is_mds(c).mds == (d == n - c.dimension() + 1));
            if (is_mds(c).mds && c.dimension() < n) {
                CHECK(is_mds(euclidean_dual(c)).mds);
            }
        }
    }
}

TEST_CASE("infeasible distance") {
    std::mt19937_64 rng(31);
    const Field f = Field::create(2, 1);
    const LinearCode c = random_code(f, 40, 20, rng);
    try {
        min_distance(c, 64, 2);
        FAIL("expected an exception");
    } catch (const Error &e) {
        CHECK((e.kind() == ErrorKind::Infeasible));
    }
}

TEST_CASE("code file round trip") {
    std::mt19937_64 rng(37);
    const Field f = Field::create(3, 3);
    const LinearCode c = random_code(f, 6, 3, rng);
    std::stringstream io;
    write_code(io, c);
    CHECK(read_code(io) == c);
    std::stringstream bare(to_text(c.generator()));
    CHECK(read_code(bare) == c);
}
