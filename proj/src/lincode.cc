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

#include "eaqec/lincode.h"

#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "eaqec/error.h"

namespace eaqec {

namespace {

void require_compatible(const LinearCode &a, const LinearCode &b) {
    if (!(a.field() == b.field())) {
        throw Error(ErrorKind::FieldMismatch,
                    "codes over " + a.field().order_string() + " and " + b.field().order_string());
    }
    if (a.length() != b.length()) {
        throw Error(ErrorKind::LengthMismatch,
                    "codes of lengths " + std::to_string(a.length()) + " and " + std::to_string(b.length()));
    }
}

void check_stop(const std::stop_token &stop) {
    if (stop.stop_requested()) {
        throw Error(ErrorKind::Cancelled, "search cancelled");
    }
}

// q^k saturated at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t q, std::size_t k) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (result > UINT64_MAX / q) {
            return UINT64_MAX;
        }
        result *= q;
    }
    return result;
}

std::uint64_t saturating_binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > UINT64_MAX) {
            return UINT64_MAX;
        }
    }
    return static_cast<std::uint64_t>(result);
}

// Visits one representative of every line through the origin of the code:
// messages whose first nonzero symbol is 1, ordered by the position of that
// symbol and then by the remaining symbols as a little-endian enc counter.
// The codeword is maintained incrementally. Stops when visit returns false.
template <typename Visit>
void for_each_projective_codeword(const LinearCode &code, const std::stop_token &stop, Visit &&visit) {
    const Field &f = code.field();
    const FMatrix &g = code.generator();
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    const std::uint64_t q = f.order();
    std::uint64_t steps = 0;
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::vector<Element> word(g.row(lead).begin(), g.row(lead).end());
        std::vector<std::uint64_t> digits(k - lead - 1, 0);
        while (true) {
            if ((++steps & 0xFFF) == 0) {
                check_stop(stop);
            }
            if (!visit(static_cast<const std::vector<Element> &>(word))) {
                return;
            }
            std::size_t pos = 0;
            while (pos < digits.size()) {
                const std::size_t row = lead + 1 + pos;
                const Element old_value = f.from_enc(digits[pos]);
                digits[pos] = digits[pos] + 1 == q ? 0 : digits[pos] + 1;
                const Element delta = f.sub(f.from_enc(digits[pos]), old_value);
                for (std::size_t j = 0; j < n; ++j) {
                    word[j] = f.add(word[j], f.mul(delta, g.at(row, j)));
                }
                if (digits[pos] != 0) {
                    break;
                }
                ++pos;
            }
            if (pos == digits.size()) {
                break;
            }
        }
    }
}

// Row-echelon accumulator used to grow a basis one vector at a time.
class EchelonBasis {
   public:
    EchelonBasis(Field field, std::size_t n) : field_(std::move(field)), n_(n) {
    }

    // Returns true when v was independent of the current basis and was added.
    bool insert(std::vector<Element> v) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Element factor = v[pivots_[i]];
            if (field_.is_zero(factor)) {
                continue;
            }
            for (std::size_t j = 0; j < n_; ++j) {
                v[j] = field_.sub(v[j], field_.mul(factor, rows_[i][j]));
            }
        }
        std::size_t pivot = 0;
        while (pivot < n_ && field_.is_zero(v[pivot])) {
            ++pivot;
        }
        if (pivot == n_) {
            return false;
        }
        const Element scale = field_.inv(v[pivot]);
        for (auto &x : v) {
            x = field_.mul(x, scale);
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Element factor = rows_[i][pivot];
            if (field_.is_zero(factor)) {
                continue;
            }
            for (std::size_t j = 0; j < n_; ++j) {
                rows_[i][j] = field_.sub(rows_[i][j], field_.mul(factor, v[j]));
            }
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

    FMatrix matrix() const {
        return rref(FMatrix::from_rows(field_, n_, rows_)).reduced;
    }

   private:
    Field field_;
    std::size_t n_;
    std::vector<std::vector<Element>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace

LinearCode::LinearCode(FMatrix generator)
    : generator_(std::move(generator)), parity_check_(kernel_basis(generator_)) {
}

LinearCode LinearCode::from_generator(const FMatrix &generator, bool allow_zero) {
    RrefResult red = rref(generator);
    if (red.rank == 0 && !allow_zero) {
        throw Error(ErrorKind::ZeroCode, "generator matrix has rank 0");
    }
    FMatrix basis(generator.field(), red.rank, generator.cols());
    for (std::size_t i = 0; i < red.rank; ++i) {
        for (std::size_t j = 0; j < generator.cols(); ++j) {
            basis.set(i, j, red.reduced.at(i, j));
        }
    }
    return LinearCode(std::move(basis));
}

LinearCode LinearCode::from_parity_check(const FMatrix &parity_check) {
    return from_generator(kernel_basis(parity_check), true);
}

bool LinearCode::contains(std::span<const Element> word) const {
    if (word.size() != length()) {
        throw Error(ErrorKind::LengthMismatch, "word of length " + std::to_string(word.size()) +
                                                   " tested against a code of length " + std::to_string(length()));
    }
    const Field &f = field();
    for (std::size_t i = 0; i < parity_check_.rows(); ++i) {
        Element acc = f.zero();
        for (std::size_t j = 0; j < word.size(); ++j) {
            acc = f.add(acc, f.mul(parity_check_.at(i, j), word[j]));
        }
        if (!f.is_zero(acc)) {
            return false;
        }
    }
    return true;
}

std::vector<Element> LinearCode::encode(std::span<const Element> message) const {
    return vecmul(message, generator_);
}

LinearCode code_frobenius(const LinearCode &code, std::int64_t t) {
    return LinearCode::from_generator(frobenius_entrywise(code.generator(), t), true);
}

LinearCode euclidean_dual(const LinearCode &code) {
    return LinearCode::from_generator(code.parity_check(), true);
}

LinearCode galois_dual(const LinearCode &code, std::int64_t s) {
    const std::int64_t e = code.field().degree();
    return LinearCode::from_generator(frobenius_entrywise(code.parity_check(), e - s), true);
}

std::size_t intersection_dim(const LinearCode &c1, const LinearCode &c2, std::int64_t s) {
    require_compatible(c1, c2);
    const std::int64_t e = c1.field().degree();
    const FMatrix stacked = vstack(c1.generator(), frobenius_entrywise(c2.parity_check(), e - s));
    return c1.dimension() + (c2.length() - c2.dimension()) - rank(stacked);
}

FMatrix intersection_basis_bruteforce(const LinearCode &c1, const LinearCode &other, std::uint64_t budget) {
    require_compatible(c1, other);
    const std::uint64_t total = saturating_power(c1.field().order(), c1.dimension());
    if (total > budget) {
        throw Error(ErrorKind::BudgetExceeded, std::to_string(c1.field().order()) + "^" +
                                                   std::to_string(c1.dimension()) + " codewords exceed budget " +
                                                   std::to_string(budget));
    }
    EchelonBasis basis(c1.field(), c1.length());
    for_each_projective_codeword(c1, {}, [&](const std::vector<Element> &word) {
        if (other.contains(word)) {
            basis.insert(word);
        }
        return true;
    });
    return basis.matrix();
}

std::size_t hamming_weight(const Field &field, std::span<const Element> word) {
    std::size_t w = 0;
    for (const Element &x : word) {
        w += field.is_zero(x) ? 0 : 1;
    }
    return w;
}

const char *distance_method_name(DistanceMethod method) {
    switch (method) {
        case DistanceMethod::exhaustive:
            return "exhaustive";
        case DistanceMethod::mds_columns:
            return "mds-columns";
        case DistanceMethod::parity_columns:
            return "parity-columns";
    }
    return "unknown";
}

MdsCertificate is_mds(const LinearCode &code, std::stop_token stop) {
    const std::size_t k = code.dimension();
    if (k == 0) {
        throw Error(ErrorKind::ZeroCode, "MDS test needs k >= 1");
    }
    MdsCertificate cert{true, {}};
    std::uint64_t steps = 0;
    for_each_subset(code.length(), k, [&](const std::vector<std::size_t> &cols) {
        if ((++steps & 0xFF) == 0) {
            check_stop(stop);
        }
        if (rank(select_columns(code.generator(), cols)) < k) {
            cert.mds = false;
            cert.dependent_columns = cols;
            return false;
        }
        return true;
    });
    return cert;
}

std::optional<DistanceReport> mds_distance(const LinearCode &code, std::stop_token stop) {
    if (!is_mds(code, stop).mds) {
        return std::nullopt;
    }
    const std::size_t k = code.dimension();
    std::vector<std::size_t> head(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        head[i] = i;
    }
    // A nonzero codeword vanishing on the first k-1 coordinates has weight
    // exactly n-k+1 in an MDS code.
    const FMatrix messages = kernel_basis(transpose(select_columns(code.generator(), head)));
    DistanceReport report;
    report.d = code.length() - k + 1;
    report.method = DistanceMethod::mds_columns;
    report.witness = code.encode(messages.row(0));
    return report;
}

DistanceReport min_distance_exhaustive(const LinearCode &code, std::uint64_t budget, std::stop_token stop) {
    if (code.is_zero_code()) {
        throw Error(ErrorKind::ZeroCode, "minimum distance of the zero code is undefined");
    }
    const std::uint64_t total = saturating_power(code.field().order(), code.dimension());
    if (total > budget) {
        throw Error(ErrorKind::BudgetExceeded, std::to_string(code.field().order()) + "^" +
                                                   std::to_string(code.dimension()) + " codewords exceed budget " +
                                                   std::to_string(budget));
    }
    DistanceReport report;
    report.method = DistanceMethod::exhaustive;
    report.d = code.length() + 1;
    for_each_projective_codeword(code, stop, [&](const std::vector<Element> &word) {
        const std::size_t w = hamming_weight(code.field(), word);
        if (w < report.d) {
            report.d = w;
            report.witness = word;
        }
        return report.d > 1;
    });
    return report;
}

DistanceReport min_distance(const LinearCode &code, std::uint64_t budget, std::size_t max_parity_weight,
                            std::stop_token stop) {
    if (code.is_zero_code()) {
        throw Error(ErrorKind::ZeroCode, "minimum distance of the zero code is undefined");
    }
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    if (saturating_power(code.field().order(), k) <= budget) {
        return min_distance_exhaustive(code, budget, stop);
    }
    if (saturating_binomial(n, k) <= budget) {
        if (auto report = mds_distance(code, stop)) {
            return *report;
        }
    }
    const FMatrix &h = code.parity_check();
    std::uint64_t examined = 0;
    for (std::size_t w = 1; w <= std::min(max_parity_weight, n); ++w) {
        examined += saturating_binomial(n, w);
        if (examined > budget) {
            break;
        }
        std::optional<DistanceReport> found;
        for_each_subset(n, w, [&](const std::vector<std::size_t> &cols) {
            check_stop(stop);
            const FMatrix sub = select_columns(h, cols);
            if (rank(sub) == w) {
                return true;
            }
            const FMatrix relation = kernel_basis(sub);
            DistanceReport report;
            report.d = w;
            report.method = DistanceMethod::parity_columns;
            report.witness.assign(n, code.field().zero());
            for (std::size_t i = 0; i < w; ++i) {
                report.witness[cols[i]] = relation.at(0, i);
            }
            report.witness_columns = cols;
            found = std::move(report);
            return false;
        });
        if (found) {
            return *found;
        }
    }
    throw Error(ErrorKind::Infeasible, "no distance strategy fits the budget for a [" + std::to_string(n) + "," +
                                           std::to_string(k) + "]_" + code.field().order_string() + " code");
}

bool report_consistent(const LinearCode &code, const DistanceReport &report) {
    if (report.d == 0 || report.d > code.length() - code.dimension() + 1) {
        return false;
    }
    if (report.witness.size() != code.length() || !code.contains(report.witness)) {
        return false;
    }
    return hamming_weight(code.field(), report.witness) == report.d;
}

void write_code(std::ostream &out, const LinearCode &code) {
    out << "code " << code.length() << ' ' << code.dimension() << '\n';
    write_matrix(out, code.generator());
}

LinearCode read_code(std::istream &in) {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream stream(text);
    std::string first;
    stream >> first;
    if (first != "code") {
        return LinearCode::from_generator(parse_matrix(text), true);
    }
    std::size_t n = 0, k = 0;
    if (!(stream >> n >> k)) {
        throw Error(ErrorKind::Parse, "code file: malformed 'code n k' header");
    }
    LinearCode code = LinearCode::from_generator(read_matrix(stream), true);
    if (code.length() != n || code.dimension() != k) {
        throw Error(ErrorKind::Parse, "code file: header says [" + std::to_string(n) + "," + std::to_string(k) +
                                          "] but the generator spans a [" + std::to_string(code.length()) + "," +
                                          std::to_string(code.dimension()) + "] code");
    }
    return code;
}

}  // namespace eaqec
