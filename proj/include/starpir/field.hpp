// Copyright 2026 The starpir authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace starpir {

struct NotPrimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};
struct ShapeMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OutOfRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Arithmetic context for the prime field GF(p). Primality is checked by
/// trial division at construction; p up to 2^31 keeps all intermediate
/// products inside uint64_t.
class Field {
  public:
    explicit Field(uint32_t p);

    uint32_t modulus() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p_; }
    uint32_t sub(uint32_t a, uint32_t b) const { return (a + p_ - b) % p_; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inv(uint32_t a) const;  // throws DivisionByZeroError on a == 0

    /// Reduce an arbitrary signed value into [0, p).
    uint32_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    bool operator==(const Field&) const = default;

  private:
    uint32_t p_;
};

/// Dense row-major matrix over GF(p). Value semantics throughout; all
/// operations return fresh matrices and never mutate their inputs.
class FieldMatrix {
  public:
    FieldMatrix(Field f, size_t rows, size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FieldMatrix identity(Field f, size_t n);
    /// Build from signed literals, reducing each entry mod p.
    static FieldMatrix from_rows(Field f, const std::vector<std::vector<int64_t>>& rows);
    static FieldMatrix row_vector(Field f, const std::vector<int64_t>& entries);
    static FieldMatrix column_vector(Field f, const std::vector<int64_t>& entries);

    const Field& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint32_t v) { a_[r * cols_ + c] = v; }

    bool is_zero() const;
    bool operator==(const FieldMatrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix operator-(const FieldMatrix& o) const;
    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix transpose() const;
    FieldMatrix scaled(uint32_t c) const;

    FieldMatrix row(size_t r) const;
    FieldMatrix col(size_t c) const;

    /// Submatrix selection. Index lists are 1-based, matching the thick-index
    /// map convention; this is the only place the conversion happens.
    FieldMatrix submatrix(const std::vector<size_t>& rows1,
                          const std::vector<size_t>& cols1) const;
    FieldMatrix select_cols(const std::vector<size_t>& cols1) const;
    FieldMatrix select_rows(const std::vector<size_t>& rows1) const;

    /// Stack rows of `o` below this matrix (equal column counts).
    FieldMatrix vstack(const FieldMatrix& o) const;

    const std::vector<uint32_t>& data() const { return a_; }

  private:
    Field field_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

FieldMatrix kronecker(const FieldMatrix& a, const FieldMatrix& b);
/// Column-wise Khatri-Rao product: equal column counts, column j of the
/// result is a[:,j] Kronecker b[:,j].
FieldMatrix khatri_rao_col(const FieldMatrix& a, const FieldMatrix& b);
/// Row-wise Khatri-Rao (face-splitting) product: equal row counts.
FieldMatrix khatri_rao_row(const FieldMatrix& a, const FieldMatrix& b);
/// Entry-wise (star/Hadamard) product: equal shapes.
FieldMatrix hadamard(const FieldMatrix& a, const FieldMatrix& b);

size_t rank(const FieldMatrix& m);

/// Indices (1-based, ascending) of columns with at least one nonzero entry.
std::vector<size_t> colsupp(const FieldMatrix& m);

/// Reduced row echelon form; optionally reports pivot column indices (0-based).
FieldMatrix rref(const FieldMatrix& m, std::vector<size_t>* pivots = nullptr);

/// Canonical basis of the row space: rref with zero rows dropped.
FieldMatrix row_basis(const FieldMatrix& m);

/// One solution of A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<uint32_t>> solve(const FieldMatrix& a,
                                           const std::vector<uint32_t>& b);

/// Basis of the null space {x : A x = 0} as matrix columns; the number of
/// columns equals cols(A) - rank(A).
FieldMatrix kernel(const FieldMatrix& a);

std::optional<FieldMatrix> inverse(const FieldMatrix& a);

/// Thick-index map psi: 1-based block indices to 1-based flat indices for
/// uniform block width w.
std::vector<size_t> psi(size_t width, const std::vector<size_t>& idx);
std::vector<size_t> psi_block(size_t width, size_t idx);
/// Same for explicit per-block widths (blocks laid out consecutively).
std::vector<size_t> psi_widths(const std::vector<size_t>& widths,
                               const std::vector<size_t>& idx);

}  // namespace starpir
