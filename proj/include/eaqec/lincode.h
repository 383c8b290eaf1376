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

#ifndef EAQEC_LINCODE_H
#define EAQEC_LINCODE_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "eaqec/fmatrix.h"

namespace eaqec {

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 22;
inline constexpr std::size_t kDefaultMaxParityWeight = 6;

/// A linear [n, k]_q code kept in canonical form: G is the reduced row echelon
/// basis and H the canonical kernel basis of G. Two codes are equal iff their
/// canonical generator matrices are equal.
class LinearCode {
   public:
    /// k = rank(G). Throws ZeroCode when rank(G) = 0 unless allow_zero.
    static LinearCode from_generator(const FMatrix &generator, bool allow_zero = false);
    /// The right kernel of H; k = n - rank(H). The zero code is allowed here.
    static LinearCode from_parity_check(const FMatrix &parity_check);

    const Field &field() const {
        return generator_.field();
    }
    std::size_t length() const {
        return generator_.cols();
    }
    std::size_t dimension() const {
        return generator_.rows();
    }
    const FMatrix &generator() const {
        return generator_;
    }
    const FMatrix &parity_check() const {
        return parity_check_;
    }
    bool is_zero_code() const {
        return dimension() == 0;
    }
    bool is_full_space() const {
        return dimension() == length();
    }
    bool contains(std::span<const Element> word) const;
    /// message (length k) times G.
    std::vector<Element> encode(std::span<const Element> message) const;

    bool operator==(const LinearCode &other) const {
        return generator_ == other.generator_;
    }

   private:
    explicit LinearCode(FMatrix generator);

    FMatrix generator_;
    FMatrix parity_check_;
};

/// The code {a^{p^t} : a in C}, generated by G^{(p^t)}.
LinearCode code_frobenius(const LinearCode &code, std::int64_t t);
/// C^perp, generated by H.
LinearCode euclidean_dual(const LinearCode &code);
/// C^{perp_s} = (C^perp)^{(p^{e-s})}, generated by H^{(p^{e-s})}.
LinearCode galois_dual(const LinearCode &code, std::int64_t s);

/// dim(C1 ∩ C2^{perp_s}) = k1 + (n - k2) - rank [G1 ; H2^{(p^{e-s})}].
std::size_t intersection_dim(const LinearCode &c1, const LinearCode &c2, std::int64_t s);

/// Basis of C1 ∩ other found by listing every codeword of C1 and keeping
/// members of other. Meant as a test oracle. Throws BudgetExceeded when
/// q^{k1} > budget.
FMatrix intersection_basis_bruteforce(const LinearCode &c1, const LinearCode &other,
                                      std::uint64_t budget = kDefaultSearchBudget);

std::size_t hamming_weight(const Field &field, std::span<const Element> word);

enum class DistanceMethod { exhaustive, mds_columns, parity_columns };
const char *distance_method_name(DistanceMethod method);

/// A proven minimum distance. witness is a codeword of weight d; for the
/// parity-columns method witness_columns is the dependent set of d columns of H
/// that supports it.
struct DistanceReport {
    std::size_t d = 0;
    DistanceMethod method = DistanceMethod::exhaustive;
    std::vector<Element> witness;
    std::vector<std::size_t> witness_columns;
};

struct MdsCertificate {
    bool mds = false;
    /// A k-subset of columns of G with rank < k when mds is false.
    std::vector<std::size_t> dependent_columns;
};

/// True iff every k columns of G are independent. Requires 1 <= k.
MdsCertificate is_mds(const LinearCode &code, std::stop_token stop = {});

/// Exact minimum distance by the first applicable rung:
///   1. exhaustive listing when q^k <= budget,
///   2. the MDS column criterion, proving d = n - k + 1,
///   3. the smallest w <= max_parity_weight with w dependent columns of H.
/// Throws Infeasible when no rung decides, ZeroCode when k = 0.
DistanceReport min_distance(const LinearCode &code, std::uint64_t budget = kDefaultSearchBudget,
                            std::size_t max_parity_weight = kDefaultMaxParityWeight, std::stop_token stop = {});

/// Minimum distance by listing all codewords; BudgetExceeded past budget.
DistanceReport min_distance_exhaustive(const LinearCode &code, std::uint64_t budget = kDefaultSearchBudget,
                                       std::stop_token stop = {});

/// d = n - k + 1 from is_mds, with a codeword of that weight as witness.
/// Empty when the code is not MDS.
std::optional<DistanceReport> mds_distance(const LinearCode &code, std::stop_token stop = {});

/// Checks that a report is self-consistent for code: the witness is a
/// codeword of weight d and d respects the Singleton bound.
bool report_consistent(const LinearCode &code, const DistanceReport &report);

/// "code n k" followed by the matrix text of G.
void write_code(std::ostream &out, const LinearCode &code);
/// Reads a code file, or a bare matrix file taken as a generator matrix.
LinearCode read_code(std::istream &in);

/// Visits every k-subset of {0..n-1} in lexicographic order until visit
/// returns false. Returns false iff stopped early.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit &&visit) {
    if (k > n) {
        return true;
    }
    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) {
        subset[i] = i;
    }
    while (true) {
        if (!visit(static_cast<const std::vector<std::size_t> &>(subset))) {
            return false;
        }
        std::size_t i = k;
        while (i > 0 && subset[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return true;
        }
        ++subset[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

}  // namespace eaqec

#endif
