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

#include "eaqec/rankmetric.h"

#include <random>

#include "eaqec/error.h"

namespace eaqec {

FMatrix coefficient_matrix(const Field &field, std::span<const Element> v) {
    const Field base = field.prime_subfield();
    FMatrix out(base, v.size(), field.degree());
    for (std::size_t i = 0; i < v.size(); ++i) {
        field.require(v[i]);
        for (unsigned j = 0; j < field.degree(); ++j) {
            out.set(i, j, base.from_int(v[i].coeff(j)));
        }
    }
    return out;
}

std::size_t rank_weight(const Field &field, std::span<const Element> v) {
    return rank(coefficient_matrix(field, v));
}

bool linearly_independent_over_base(const Field &field, std::span<const Element> g) {
    return rank_weight(field, g) == g.size();
}

FMatrix moore_matrix(const MooreSpec &spec) {
    const Field &f = spec.field;
    const std::size_t n = spec.g.size();
    if (spec.k == 0) {
        throw Error(ErrorKind::InvalidArgument, "Moore matrix needs at least one row");
    }
    if (n > f.degree()) {
        throw Error(ErrorKind::LengthExceedsDegree,
                    "length " + std::to_string(n) + " exceeds extension degree " + std::to_string(f.degree()));
    }
    if (!linearly_independent_over_base(f, spec.g)) {
        throw Error(ErrorKind::DependentGenerators, "generators are linearly dependent over F_" +
                                                         std::to_string(f.characteristic()));
    }
    FMatrix out(f, spec.k, n);
    for (std::size_t i = 0; i < spec.k; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.set(i, j, f.frobenius(spec.g[j], static_cast<std::int64_t>((spec.t + i) % f.degree())));
        }
    }
    return out;
}

std::vector<Element> polynomial_basis_prefix(const Field &field, std::size_t n) {
    std::vector<Element> g;
    Element power = field.one();
    for (std::size_t j = 0; j < n; ++j) {
        g.push_back(power);
        power = field.mul(power, field.beta());
    }
    return g;
}

namespace {

std::vector<Element> random_message(const Field &f, std::size_t k, std::mt19937_64 &rng) {
    std::vector<Element> m;
    m.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        m.push_back(f.from_enc(rng() % f.order()));
    }
    return m;
}

}  // namespace

std::size_t min_rank_distance_exhaustive(const LinearCode &code, std::uint64_t budget, std::stop_token stop) {
    if (code.is_zero_code()) {
        throw Error(ErrorKind::ZeroCode, "minimum rank distance of the zero code is undefined");
    }
    const Field &f = code.field();
    const std::size_t k = code.dimension();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > budget / f.order()) {
            throw Error(ErrorKind::BudgetExceeded, "code too large for exhaustive rank distance");
        }
        total *= f.order();
    }
    // Rank weight is invariant under scaling by F_q^*, so a message with a
    // leading 1 represents each line.
    std::size_t best = code.length() + 1;
    std::vector<std::uint64_t> digits(k, 0);
    std::uint64_t steps = 0;
    for (std::uint64_t index = 1; index < total; ++index) {
        std::size_t pos = 0;
        while (++digits[pos] == f.order()) {
            digits[pos++] = 0;
        }
        std::size_t top = k;
        while (top > 0 && digits[top - 1] == 0) {
            --top;
        }
        if (digits[top - 1] != 1) {
            continue;
        }
        if ((++steps & 0xFFF) == 0 && stop.stop_requested()) {
            throw Error(ErrorKind::Cancelled, "search cancelled");
        }
        std::vector<Element> message;
        message.reserve(k);
        for (std::uint64_t d : digits) {
            message.push_back(f.from_enc(d));
        }
        best = std::min(best, rank_weight(f, code.encode(message)));
        if (best == 1) {
            break;
        }
    }
    return best;
}

const char *mrd_verdict_name(MrdVerdict verdict) {
    switch (verdict) {
        case MrdVerdict::proven:
            return "proven";
        case MrdVerdict::refuted:
            return "refuted";
        case MrdVerdict::sampled:
            return "sampled";
    }
    return "unknown";
}

MrdReport is_mrd(const LinearCode &code, std::uint64_t budget, std::uint64_t seed, std::size_t samples) {
    const Field &f = code.field();
    if (code.length() > f.degree()) {
        throw Error(ErrorKind::LengthExceedsDegree, "MRD test needs n <= m");
    }
    const std::size_t bound = code.length() - code.dimension() + 1;
    MrdReport report;
    report.seed = seed;
    try {
        report.min_rank_observed = min_rank_distance_exhaustive(code, budget);
        report.verdict = report.min_rank_observed == bound ? MrdVerdict::proven : MrdVerdict::refuted;
        report.mrd = report.verdict == MrdVerdict::proven;
        return report;
    } catch (const Error &err) {
        if (err.kind() != ErrorKind::BudgetExceeded) {
            throw;
        }
    }
    std::mt19937_64 rng(seed);
    report.min_rank_observed = code.length() + 1;
    while (report.samples < samples) {
        const std::vector<Element> message = random_message(f, code.dimension(), rng);
        const std::vector<Element> word = code.encode(message);
        if (hamming_weight(f, word) == 0) {
            continue;
        }
        ++report.samples;
        report.min_rank_observed = std::min(report.min_rank_observed, rank_weight(f, word));
        if (report.min_rank_observed < bound) {
            report.verdict = MrdVerdict::refuted;
            report.mrd = false;
            return report;
        }
    }
    report.verdict = MrdVerdict::sampled;
    report.mrd = true;
    return report;
}

}  // namespace eaqec
