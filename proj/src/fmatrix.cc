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

#include "eaqec/fmatrix.h"

#include <istream>
#include <ostream>
#include <sstream>

#include "eaqec/error.h"

namespace eaqec {

FMatrix::FMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {
}

FMatrix FMatrix::identity(Field field, std::size_t n) {
    FMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.entries_[i * n + i] = m.field_.one();
    }
    return m;
}

FMatrix FMatrix::from_enc(Field field, std::size_t rows, std::size_t cols, std::span<const std::uint64_t> values) {
    if (values.size() != rows * cols) {
        throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(rows * cols) + " entries, got " +
                                                  std::to_string(values.size()));
    }
    FMatrix m(std::move(field), rows, cols);
    for (std::size_t i = 0; i < values.size(); ++i) {
        m.entries_[i] = m.field_.from_enc(values[i]);
    }
    return m;
}

FMatrix FMatrix::from_rows(Field field, std::size_t cols, const std::vector<std::vector<Element>> &rows) {
    FMatrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw Error(ErrorKind::ShapeMismatch, "row " + std::to_string(r) + " has " +
                                                      std::to_string(rows[r].size()) + " entries, expected " +
                                                      std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

FMatrix FMatrix::random(Field field, std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
    FMatrix m(std::move(field), rows, cols);
    const std::uint64_t q = m.field_.order();
    for (auto &entry : m.entries_) {
        entry = m.field_.from_enc(rng() % q);
    }
    return m;
}

void FMatrix::set(std::size_t r, std::size_t c, const Element &value) {
    field_.require(value);
    entries_[r * cols_ + c] = value;
}

std::vector<std::uint64_t> FMatrix::row_enc(std::size_t r) const {
    std::vector<std::uint64_t> out;
    out.reserve(cols_);
    for (const Element &x : row(r)) {
        out.push_back(field_.enc(x));
    }
    return out;
}

bool FMatrix::is_zero() const {
    for (const Element &x : entries_) {
        if (!field_.is_zero(x)) {
            return false;
        }
    }
    return true;
}

bool FMatrix::operator==(const FMatrix &other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

RrefResult rref(const FMatrix &m) {
    const Field &f = m.field();
    FMatrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
        std::size_t pivot = lead;
        while (pivot < r.rows() && f.is_zero(r.at(pivot, c))) {
            ++pivot;
        }
        if (pivot == r.rows()) {
            continue;
        }
        if (pivot != lead) {
            for (std::size_t j = 0; j < r.cols(); ++j) {
                Element tmp = r.at(lead, j);
                r.set(lead, j, r.at(pivot, j));
                r.set(pivot, j, tmp);
            }
        }
        const Element scale = f.inv(r.at(lead, c));
        for (std::size_t j = c; j < r.cols(); ++j) {
            r.set(lead, j, f.mul(r.at(lead, j), scale));
        }
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || f.is_zero(r.at(i, c))) {
                continue;
            }
            const Element factor = r.at(i, c);
            for (std::size_t j = c; j < r.cols(); ++j) {
                r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(lead, j))));
            }
        }
        pivots.push_back(c);
        ++lead;
    }
    return RrefResult{std::move(r), lead, std::move(pivots)};
}

std::size_t rank(const FMatrix &m) {
    return rref(m).rank;
}

FMatrix kernel_basis(const FMatrix &m) {
    const Field &f = m.field();
    const RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : red.pivot_cols) {
        is_pivot[c] = true;
    }
    FMatrix basis(f, m.cols() - red.rank, m.cols());
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        basis.set(out, free, f.one());
        for (std::size_t i = 0; i < red.rank; ++i) {
            basis.set(out, red.pivot_cols[i], f.neg(red.reduced.at(i, free)));
        }
        ++out;
    }
    return basis;
}

FMatrix frobenius_entrywise(const FMatrix &m, std::int64_t t) {
    FMatrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out.set(i, j, m.field().frobenius(m.at(i, j), t));
        }
    }
    return out;
}

namespace {

void require_same_field(const FMatrix &a, const FMatrix &b) {
    if (!(a.field() == b.field())) {
        throw Error(ErrorKind::FieldMismatch,
                    "matrices over " + a.field().order_string() + " and " + b.field().order_string());
    }
}

std::string shape(const FMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

FMatrix matmul(const FMatrix &a, const FMatrix &b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "cannot multiply " + shape(a) + " by " + shape(b));
    }
    const Field &f = a.field();
    FMatrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Element acc = f.zero();
            for (std::size_t k = 0; k < a.cols(); ++k) {
                acc = f.add(acc, f.mul(a.at(i, k), b.at(k, j)));
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

FMatrix transpose(const FMatrix &a) {
    FMatrix out(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out.set(j, i, a.at(i, j));
        }
    }
    return out;
}

FMatrix vstack(const FMatrix &a, const FMatrix &b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) {
        throw Error(ErrorKind::ShapeMismatch, "cannot stack " + shape(a) + " over " + shape(b));
    }
    FMatrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out.set(i, j, a.at(i, j));
        }
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            out.set(a.rows() + i, j, b.at(i, j));
        }
    }
    return out;
}

FMatrix select_columns(const FMatrix &a, std::span<const std::size_t> cols) {
    FMatrix out(a.field(), a.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= a.cols()) {
            throw Error(ErrorKind::ShapeMismatch, "column " + std::to_string(cols[j]) + " out of range");
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            out.set(i, j, a.at(i, cols[j]));
        }
    }
    return out;
}

std::vector<Element> vecmul(std::span<const Element> v, const FMatrix &m) {
    if (v.size() != m.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "vector of length " + std::to_string(v.size()) +
                                                  " times " + shape(m));
    }
    const Field &f = m.field();
    std::vector<Element> out(m.cols(), f.zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (f.is_zero(v[i])) {
            continue;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[j] = f.add(out[j], f.mul(v[i], m.at(i, j)));
        }
    }
    return out;
}

void write_matrix(std::ostream &out, const FMatrix &m) {
    const Field &f = m.field();
    out << f.characteristic() << ' ' << f.degree() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    const auto mod = f.modulus();
    for (std::size_t i = 0; i < mod.size(); ++i) {
        out << (i ? " " : "") << mod[i];
    }
    out << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out << (c ? " " : "") << f.enc(m.at(r, c));
        }
        out << '\n';
    }
}

std::string to_text(const FMatrix &m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

FMatrix read_matrix(std::istream &in) {
    auto next = [&](const char *what) {
        std::uint64_t value;
        if (!(in >> value)) {
            throw Error(ErrorKind::Parse, std::string("matrix file: expected ") + what);
        }
        return value;
    };
    const std::uint64_t p = next("characteristic p");
    const std::uint64_t e = next("extension degree e");
    const std::uint64_t rows = next("row count");
    const std::uint64_t cols = next("column count");
    if (e == 0 || e > kMaxExtensionDegree) {
        throw Error(ErrorKind::Parse, "matrix file: extension degree " + std::to_string(e) + " unsupported");
    }
    const Field field = Field::create(p, static_cast<unsigned>(e));
    const auto mod = field.modulus();
    for (unsigned i = 0; i < e; ++i) {
        if (next("defining polynomial coefficient") != mod[i]) {
            throw Error(ErrorKind::FieldMismatch,
                        "matrix file: defining polynomial differs from the canonical " + field.to_string());
        }
    }
    std::vector<std::uint64_t> values(rows * cols);
    for (auto &v : values) {
        v = next("matrix entry");
        if (v >= field.order()) {
            throw Error(ErrorKind::Parse, "matrix file: entry " + std::to_string(v) + " out of range");
        }
    }
    return FMatrix::from_enc(field, rows, cols, values);
}

FMatrix parse_matrix(const std::string &text) {
    std::istringstream in(text);
    return read_matrix(in);
}

}  // namespace eaqec
