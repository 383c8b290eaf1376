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

#ifndef EAQEC_EBITS_H
#define EAQEC_EBITS_H

#include <cstdint>
#include <string>

#include "eaqec/lincode.h"
#include "json.hpp"

namespace eaqec {

/// Parameters [[n, k, d; c]]_q of an entanglement-assisted code together with
/// its entanglement-assisted Singleton slack (n - k + c) - 2(d - 1).
struct EaqecParams {
    Field field;
    std::size_t n = 0;
    std::int64_t k = 0;
    std::size_t d = 0;
    std::size_t c = 0;
    std::int64_t slack = 0;
    bool is_mds = false;

    /// Fills slack and is_mds from n, k, d, c.
    static EaqecParams make(Field field, std::size_t n, std::int64_t k, std::size_t d, std::size_t c);

    /// "[[12,4,9;8]]_13", "[[15,2,14;13]]_27" or, for q >= 10^5, "[[5,2,3;1]]_11^5".
    std::string label() const;
    /// {"q","n","k","d","c","slack","mds","rate","net_rate"}.
    nlohmann::ordered_json to_json() const;
    /// The Singleton-type bound is only claimed for 0 <= c <= n - 1.
    bool bound_applies() const {
        return c + 1 <= n;
    }

    bool same_tuple(const EaqecParams &other) const {
        return field == other.field && n == other.n && k == other.k && d == other.d && c == other.c;
    }
};

std::int64_t singleton_slack(const EaqecParams &params);

/// c = rank(H1 (H2^{(p^{e-s})})^T).
std::size_t ebits_product(const LinearCode &c1, const LinearCode &c2, std::int64_t s);
/// c = rank [G1 ; H2^{(p^{e-s})}] - k1.
std::size_t ebits_stack(const LinearCode &c1, const LinearCode &c2, std::int64_t s);

struct PairReport {
    LinearCode c1;
    LinearCode c2;
    std::int64_t s = 0;
    std::size_t c_product = 0;
    std::size_t c_stack = 0;
    DistanceReport d1;
    DistanceReport d2;
    EaqecParams params;
};

/// Builds [[n, k1 + k2 - n + c, min(d1, d2); c]]_q from two codes, their
/// certified distances and the Galois parameter s. Both ebit formulas are
/// evaluated; disagreement raises FormulaMismatch.
PairReport assemble(const LinearCode &c1, const LinearCode &c2, std::int64_t s, const DistanceReport &d1,
                    const DistanceReport &d2);

}  // namespace eaqec

#endif
