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

#ifndef EAQEC_RANKMETRIC_H
#define EAQEC_RANKMETRIC_H

#include <cstdint>
#include <span>
#include <stop_token>
#include <vector>

#include "eaqec/fmatrix.h"
#include "eaqec/lincode.h"

namespace eaqec {

// Rank metric over the prime subfield F_l, l = p, of F_q = F_{l^m} (m = e).
// Coordinates over F_l are exactly the coefficient vectors of the elements.

/// The n x m matrix over F_p whose rows are the coefficient vectors of v.
FMatrix coefficient_matrix(const Field &field, std::span<const Element> v);

/// Dimension over F_p of the span of the coordinates of v.
std::size_t rank_weight(const Field &field, std::span<const Element> v);

bool linearly_independent_over_base(const Field &field, std::span<const Element> g);

/// M_k(g) with rows shifted by a Frobenius offset: entry (i, j) is
/// g_j^{p^{(t + i) mod m}} for i = 0..k-1.
struct MooreSpec {
    Field field;
    std::vector<Element> g;
    std::size_t k = 1;
    std::size_t t = 0;
};

/// Throws LengthExceedsDegree when n > m, DependentGenerators when g is
/// dependent over F_p, InvalidArgument when k = 0.
FMatrix moore_matrix(const MooreSpec &spec);

/// (1, beta, ..., beta^{n-1}), independent over F_p whenever n <= m.
std::vector<Element> polynomial_basis_prefix(const Field &field, std::size_t n);

/// Minimum rank weight of a nonzero codeword by listing the code.
/// Throws BudgetExceeded when q^k > budget and ZeroCode when k = 0.
std::size_t min_rank_distance_exhaustive(const LinearCode &code, std::uint64_t budget = kDefaultSearchBudget,
                                         std::stop_token stop = {});

enum class MrdVerdict {
    /// Exhaustive search found d_r = n - k + 1.
    proven,
    /// A codeword of rank weight below n - k + 1 was found.
    refuted,
    /// Every sampled codeword met the bound; not a proof.
    sampled,
};
const char *mrd_verdict_name(MrdVerdict verdict);

struct MrdReport {
    MrdVerdict verdict = MrdVerdict::sampled;
    bool mrd = false;
    /// Exact d_r when proven, otherwise the least rank weight observed.
    std::size_t min_rank_observed = 0;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
};

inline constexpr std::uint64_t kDefaultMrdSeed = 20260101;
inline constexpr std::size_t kDefaultMrdSamples = 10000;

/// MRD test: exhaustive when q^k <= budget, otherwise random nonzero messages
/// from a seeded generator. Requires n <= m.
MrdReport is_mrd(const LinearCode &code, std::uint64_t budget = kDefaultSearchBudget,
                 std::uint64_t seed = kDefaultMrdSeed, std::size_t samples = kDefaultMrdSamples);

}  // namespace eaqec

#endif
