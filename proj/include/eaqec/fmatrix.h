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

#ifndef EAQEC_FMATRIX_H
#define EAQEC_FMATRIX_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "eaqec/gf.h"

namespace eaqec {

/// Dense row-major matrix over a single finite field.
class FMatrix {
   public:
    /// rows x cols zero matrix.
    FMatrix(Field field, std::size_t rows, std::size_t cols);

    static FMatrix identity(Field field, std::size_t n);
    /// Builds a matrix from enc values given row by row.
    static FMatrix from_enc(Field field, std::size_t rows, std::size_t cols, std::span<const std::uint64_t> values);
    static FMatrix from_rows(Field field, std::size_t cols, const std::vector<std::vector<Element>> &rows);
    /// Entries drawn uniformly (by enc) from a 64-bit Mersenne twister.
    static FMatrix random(Field field, std::size_t rows, std::size_t cols, std::mt19937_64 &rng);

    const Field &field() const {
        return field_;
    }
    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool empty() const {
        return rows_ == 0 || cols_ == 0;
    }

    const Element &at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    /// Throws FieldMismatch when value is not an element of field().
    void set(std::size_t r, std::size_t c, const Element &value);
    std::span<const Element> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    std::vector<std::uint64_t> row_enc(std::size_t r) const;
    bool is_zero() const;

    bool operator==(const FMatrix &other) const;

   private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> entries_;
};

struct RrefResult {
    FMatrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Pivots are the first nonzero entry found
/// scanning each column top to bottom, so the output is deterministic.
RrefResult rref(const FMatrix &m);
std::size_t rank(const FMatrix &m);

/// Basis of {x : m x^T = 0}, one row per free column of rref(m), in
/// increasing free-column order, with a 1 in that free column.
FMatrix kernel_basis(const FMatrix &m);

/// Entry (i, j) raised to p^t; t is reduced modulo e.
FMatrix frobenius_entrywise(const FMatrix &m, std::int64_t t);

FMatrix matmul(const FMatrix &a, const FMatrix &b);
FMatrix transpose(const FMatrix &a);
FMatrix vstack(const FMatrix &a, const FMatrix &b);
FMatrix select_columns(const FMatrix &a, std::span<const std::size_t> cols);
/// Row vector times matrix.
std::vector<Element> vecmul(std::span<const Element> v, const FMatrix &m);

/// Text format:
///   p e rows cols
///   c_0 ... c_{e-1}      (defining polynomial, non-leading coefficients)
///   one line per row of enc values separated by single spaces
std::string to_text(const FMatrix &m);
void write_matrix(std::ostream &out, const FMatrix &m);
/// Throws Parse on malformed input and FieldMismatch when the stored
/// polynomial is not the canonical one for (p, e).
FMatrix read_matrix(std::istream &in);
FMatrix parse_matrix(const std::string &text);

}  // namespace eaqec

#endif
