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

#ifndef EAQEC_FAMILIES_H
#define EAQEC_FAMILIES_H

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eaqec/ebits.h"
#include "eaqec/fmatrix.h"
#include "eaqec/lincode.h"

namespace eaqec {

enum class Family { vandermonde, grs_extended, gabidulin };
const char *family_name(Family family);

/// G1 = Vandermonde rows 1..k, H2 = rows t..t+j, on nodes gamma^{i-1}.
struct VandermondeInputs {
    Field field;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t t = 0;
    std::size_t j = 0;
};

/// Extended GRS code of length q + 1 and its dual of dimension q - k + 1.
struct GrsInputs {
    Field field;
    std::size_t k = 0;
};

/// G1 = M_{k1}(g), H2 = M_{k2}(g^{p^t}), g the polynomial basis prefix.
struct GabidulinInputs {
    Field field;
    std::size_t n = 0;
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    std::size_t t = 0;
};

using FamilyInputs = std::variant<VandermondeInputs, GrsInputs, GabidulinInputs>;

/// Evaluation points, column weights and dimension of GRS_k(a, v, infinity).
struct GrsSpec {
    std::vector<Element> points;
    std::vector<Element> weights;
    std::size_t k = 0;

    /// All q field elements in enc order, unit weights.
    static GrsSpec whole_field(const Field &field, std::size_t k);
};

/// k x (|a| + 1) matrix; row i is (v_1 a_1^i, ..., v_n a_n^i, [i == k - 1]).
FMatrix grs_extended_generator(const Field &field, const GrsSpec &spec);

struct FamilyCertificate {
    Family family;
    FamilyInputs inputs;
    FMatrix g1;
    FMatrix h2;
    PairReport pair;
    /// The closed-form parameters the construction promises.
    EaqecParams predicted;
    /// Whether the construction's MDS condition holds for these inputs.
    bool mds_condition = false;
    bool c1_mds = false;
    bool c2_mds = false;
    std::size_t stacked_rank = 0;
    std::size_t expected_stacked_rank = 0;
    /// Published tuple this instance is expected to reproduce, if any.
    std::optional<std::string> reference;
    bool verified = false;
    std::vector<std::string> failures;

    nlohmann::ordered_json to_json(bool emit_matrices = false) const;
};

/// Throws ConstraintViolation naming the violated inequality.
FamilyCertificate vandermonde_family(const Field &field, std::size_t n, std::size_t k, std::size_t t, std::size_t j);
/// Throws ConstraintViolation, or DualityFailure when G1 H2^T != 0.
FamilyCertificate grs_extended_family(const Field &field, std::size_t k);
/// Throws ConstraintViolation or DependentGenerators.
FamilyCertificate gabidulin_family(const Field &field, std::size_t n, std::size_t k1, std::size_t k2,
                                   std::size_t t);

/// Recovers (k1, k2, t) for a Gabidulin-family MDS tuple [[n, k, d; c]] with
/// k1 = n - d + 1, k2 = n - k1 and t = c - k2 + k1.
GabidulinInputs gabidulin_inputs_for(const Field &field, std::size_t n, std::size_t d, std::size_t c);

/// The fourteen Vandermonde-family rows over F_13 and F_27.
std::vector<FamilyCertificate> table1();
/// The three Gabidulin-family rows over 11^5, 13^6 and 17^8.
std::vector<FamilyCertificate> table2();

}  // namespace eaqec

#endif
