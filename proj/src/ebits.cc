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

#include "eaqec/ebits.h"

#include "eaqec/error.h"

namespace eaqec {

namespace {

void require_pair(const LinearCode &c1, const LinearCode &c2, std::int64_t s) {
    if (!(c1.field() == c2.field())) {
        throw Error(ErrorKind::FieldMismatch,
                    "codes over " + c1.field().order_string() + " and " + c2.field().order_string());
    }
    if (c1.length() != c2.length()) {
        throw Error(ErrorKind::LengthMismatch,
                    "codes of lengths " + std::to_string(c1.length()) + " and " + std::to_string(c2.length()));
    }
    if (s < 0 || s >= static_cast<std::int64_t>(c1.field().degree())) {
        throw Error(ErrorKind::InvalidArgument, "Galois parameter s = " + std::to_string(s) + " outside [0, " +
                                                    std::to_string(c1.field().degree()) + ")");
    }
}

FMatrix twisted_parity_check(const LinearCode &code, std::int64_t s) {
    return frobenius_entrywise(code.parity_check(), static_cast<std::int64_t>(code.field().degree()) - s);
}

}  // namespace

EaqecParams EaqecParams::make(Field field, std::size_t n, std::int64_t k, std::size_t d, std::size_t c) {
    EaqecParams params{std::move(field), n, k, d, c, 0, false};
    params.slack = singleton_slack(params);
    params.is_mds = params.slack == 0;
    return params;
}

std::string EaqecParams::label() const {
    // Small orders print in decimal, large ones as p^e.
    std::string q = field.order() < 100000 ? std::to_string(field.order()) : field.order_string();
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + ";" + std::to_string(c) +
           "]]_" + q;
}

nlohmann::ordered_json EaqecParams::to_json() const {
    nlohmann::ordered_json j;
    j["q"] = field.order_string();
    j["n"] = n;
    j["k"] = k;
    j["d"] = d;
    j["c"] = c;
    j["slack"] = slack;
    j["mds"] = is_mds;
    j["rate"] = n ? static_cast<double>(k) / static_cast<double>(n) : 0.0;
    j["net_rate"] = n ? static_cast<double>(k - static_cast<std::int64_t>(c)) / static_cast<double>(n) : 0.0;
    return j;
}

std::int64_t singleton_slack(const EaqecParams &params) {
    const auto n = static_cast<std::int64_t>(params.n);
    const auto d = static_cast<std::int64_t>(params.d);
    const auto c = static_cast<std::int64_t>(params.c);
    return (n - params.k + c) - 2 * (d - 1);
}

std::size_t ebits_product(const LinearCode &c1, const LinearCode &c2, std::int64_t s) {
    require_pair(c1, c2, s);
    return rank(matmul(c1.parity_check(), transpose(twisted_parity_check(c2, s))));
}

std::size_t ebits_stack(const LinearCode &c1, const LinearCode &c2, std::int64_t s) {
    require_pair(c1, c2, s);
    return rank(vstack(c1.generator(), twisted_parity_check(c2, s))) - c1.dimension();
}

PairReport assemble(const LinearCode &c1, const LinearCode &c2, std::int64_t s, const DistanceReport &d1,
                    const DistanceReport &d2) {
    require_pair(c1, c2, s);
    if (!report_consistent(c1, d1) || !report_consistent(c2, d2)) {
        throw Error(ErrorKind::InvalidArgument, "distance report does not certify its code");
    }
    const std::size_t c_product = ebits_product(c1, c2, s);
    const std::size_t c_stack = ebits_stack(c1, c2, s);
    if (c_product != c_stack) {
        throw Error(ErrorKind::FormulaMismatch, "product rank gives c = " + std::to_string(c_product) +
                                                    " but stacked rank gives c = " + std::to_string(c_stack));
    }
    const std::int64_t n = static_cast<std::int64_t>(c1.length());
    const std::int64_t k = static_cast<std::int64_t>(c1.dimension() + c2.dimension()) - n +
                           static_cast<std::int64_t>(c_product);
    if (k < 0) {
        throw Error(ErrorKind::NegativeLogicalDim, "k1 + k2 - n + c = " + std::to_string(k));
    }
    return PairReport{c1,
                      c2,
                      s,
                      c_product,
                      c_stack,
                      d1,
                      d2,
                      EaqecParams::make(c1.field(), c1.length(), k, std::min(d1.d, d2.d), c_product)};
}

}  // namespace eaqec
