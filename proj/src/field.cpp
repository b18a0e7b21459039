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

#include "starpir/field.hpp"

#include <algorithm>

namespace starpir {

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

Field::Field(uint32_t p) : p_(p) {
    if (!is_prime(p)) {
        throw NotPrimeError("field modulus " + std::to_string(p) + " is not prime");
    }
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    uint64_t base = a % p_, acc = 1;
    while (e > 0) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<uint32_t>(acc);
}

uint32_t Field::inv(uint32_t a) const {
    if (a % p_ == 0) throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(p_) + ")");
    return pow(a, p_ - 2);
}

FieldMatrix FieldMatrix::identity(Field f, size_t n) {
    FieldMatrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FieldMatrix FieldMatrix::from_rows(Field f, const std::vector<std::vector<int64_t>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    FieldMatrix m(f, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeMismatchError("ragged row list");
        for (size_t j = 0; j < c; ++j) m.set(i, j, f.reduce(rows[i][j]));
    }
    return m;
}

FieldMatrix FieldMatrix::row_vector(Field f, const std::vector<int64_t>& entries) {
    return from_rows(f, {entries});
}

FieldMatrix FieldMatrix::column_vector(Field f, const std::vector<int64_t>& entries) {
    FieldMatrix m(f, entries.size(), 1);
    for (size_t i = 0; i < entries.size(); ++i) m.set(i, 0, f.reduce(entries[i]));
    return m;
}

bool FieldMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](uint32_t v) { return v == 0; });
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatchError("matrix add shape mismatch");
    FieldMatrix m(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_.add(a_[i], o.a_[i]);
    return m;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatchError("matrix sub shape mismatch");
    FieldMatrix m(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_.sub(a_[i], o.a_[i]);
    return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeMismatchError("matrix mul shape mismatch");
    FieldMatrix m(field_, rows_, o.cols_);
    const uint64_t p = field_.modulus();
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t l = 0; l < cols_; ++l) {
            uint64_t v = at(i, l);
            if (v == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                m.set(i, j, static_cast<uint32_t>((m.at(i, j) + v * o.at(l, j)) % p));
            }
        }
    }
    return m;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix m(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
    return m;
}

FieldMatrix FieldMatrix::scaled(uint32_t c) const {
    FieldMatrix m(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_.mul(a_[i], c);
    return m;
}

FieldMatrix FieldMatrix::row(size_t r) const {
    FieldMatrix m(field_, 1, cols_);
    for (size_t j = 0; j < cols_; ++j) m.set(0, j, at(r, j));
    return m;
}

FieldMatrix FieldMatrix::col(size_t c) const {
    FieldMatrix m(field_, rows_, 1);
    for (size_t i = 0; i < rows_; ++i) m.set(i, 0, at(i, c));
    return m;
}

FieldMatrix FieldMatrix::submatrix(const std::vector<size_t>& rows1,
                                   const std::vector<size_t>& cols1) const {
    FieldMatrix m(field_, rows1.size(), cols1.size());
    for (size_t i = 0; i < rows1.size(); ++i) {
        if (rows1[i] < 1 || rows1[i] > rows_) throw OutOfRangeError("row index out of range");
        for (size_t j = 0; j < cols1.size(); ++j) {
            if (cols1[j] < 1 || cols1[j] > cols_) throw OutOfRangeError("column index out of range");
            m.set(i, j, at(rows1[i] - 1, cols1[j] - 1));
        }
    }
    return m;
}

FieldMatrix FieldMatrix::select_cols(const std::vector<size_t>& cols1) const {
    std::vector<size_t> all(rows_);
    for (size_t i = 0; i < rows_; ++i) all[i] = i + 1;
    return submatrix(all, cols1);
}

FieldMatrix FieldMatrix::select_rows(const std::vector<size_t>& rows1) const {
    std::vector<size_t> all(cols_);
    for (size_t j = 0; j < cols_; ++j) all[j] = j + 1;
    return submatrix(rows1, all);
}

FieldMatrix FieldMatrix::vstack(const FieldMatrix& o) const {
    if (cols_ != o.cols_) throw ShapeMismatchError("vstack column mismatch");
    FieldMatrix m(field_, rows_ + o.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    for (size_t i = 0; i < o.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.set(rows_ + i, j, o.at(i, j));
    return m;
}

FieldMatrix kronecker(const FieldMatrix& a, const FieldMatrix& b) {
    const Field& f = a.field();
    FieldMatrix m(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            uint32_t v = a.at(i, j);
            if (v == 0) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    m.set(i * b.rows() + k, j * b.cols() + l, f.mul(v, b.at(k, l)));
        }
    return m;
}

FieldMatrix khatri_rao_col(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols() != b.cols()) throw ShapeMismatchError("khatri_rao_col column mismatch");
    const Field& f = a.field();
    FieldMatrix m(f, a.rows() * b.rows(), a.cols());
    for (size_t j = 0; j < a.cols(); ++j)
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t k = 0; k < b.rows(); ++k)
                m.set(i * b.rows() + k, j, f.mul(a.at(i, j), b.at(k, j)));
    return m;
}

FieldMatrix khatri_rao_row(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatchError("khatri_rao_row row mismatch");
    const Field& f = a.field();
    FieldMatrix m(f, a.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            for (size_t l = 0; l < b.cols(); ++l)
                m.set(i, j * b.cols() + l, f.mul(a.at(i, j), b.at(i, l)));
    return m;
}

FieldMatrix hadamard(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatchError("hadamard shape mismatch");
    const Field& f = a.field();
    FieldMatrix m(f, a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m.set(i, j, f.mul(a.at(i, j), b.at(i, j)));
    return m;
}

FieldMatrix rref(const FieldMatrix& m, std::vector<size_t>* pivots) {
    FieldMatrix a = m;
    const Field& f = a.field();
    size_t pr = 0;
    std::vector<size_t> piv;
    for (size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
        size_t sel = pr;
        while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pr) {
            for (size_t j = 0; j < a.cols(); ++j) {
                uint32_t tmp = a.at(pr, j);
                a.set(pr, j, a.at(sel, j));
                a.set(sel, j, tmp);
            }
        }
        uint32_t ip = f.inv(a.at(pr, c));
        for (size_t j = c; j < a.cols(); ++j) a.set(pr, j, f.mul(a.at(pr, j), ip));
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == pr) continue;
            uint32_t v = a.at(i, c);
            if (v == 0) continue;
            for (size_t j = c; j < a.cols(); ++j)
                a.set(i, j, f.sub(a.at(i, j), f.mul(v, a.at(pr, j))));
        }
        piv.push_back(c);
        ++pr;
    }
    if (pivots) *pivots = piv;
    return a;
}

size_t rank(const FieldMatrix& m) {
    std::vector<size_t> piv;
    rref(m, &piv);
    return piv.size();
}

std::vector<size_t> colsupp(const FieldMatrix& m) {
    std::vector<size_t> out;
    for (size_t j = 0; j < m.cols(); ++j) {
        for (size_t i = 0; i < m.rows(); ++i) {
            if (m.at(i, j) != 0) {
                out.push_back(j + 1);
                break;
            }
        }
    }
    return out;
}

FieldMatrix row_basis(const FieldMatrix& m) {
    std::vector<size_t> piv;
    FieldMatrix r = rref(m, &piv);
    FieldMatrix out(m.field(), piv.size(), m.cols());
    for (size_t i = 0; i < piv.size(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.set(i, j, r.at(i, j));
    return out;
}

std::optional<std::vector<uint32_t>> solve(const FieldMatrix& a,
                                           const std::vector<uint32_t>& b) {
    if (b.size() != a.rows()) throw ShapeMismatchError("solve rhs size mismatch");
    FieldMatrix aug(a.field(), a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, a.cols(), b[i]);
    }
    std::vector<size_t> piv;
    FieldMatrix r = rref(aug, &piv);
    // inconsistent iff a pivot lands in the augmented column
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    std::vector<uint32_t> x(a.cols(), 0);
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, a.cols());
    return x;
}

FieldMatrix kernel(const FieldMatrix& a) {
    std::vector<size_t> piv;
    FieldMatrix r = rref(a, &piv);
    const Field& f = a.field();
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : piv) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FieldMatrix out(f, a.cols(), free_cols.size());
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        size_t fc = free_cols[fi];
        out.set(fc, fi, 1);
        for (size_t i = 0; i < piv.size(); ++i) out.set(piv[i], fi, f.neg(r.at(i, fc)));
    }
    return out;
}

std::optional<FieldMatrix> inverse(const FieldMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeMismatchError("inverse of non-square matrix");
    size_t n = a.rows();
    FieldMatrix aug(a.field(), n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, n + i, 1);
    }
    std::vector<size_t> piv;
    FieldMatrix r = rref(aug, &piv);
    if (piv.size() != n || piv[n - 1] != n - 1) return std::nullopt;
    FieldMatrix out(a.field(), n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out.set(i, j, r.at(i, n + j));
    return out;
}

std::vector<size_t> psi_block(size_t width, size_t idx) {
    std::vector<size_t> out(width);
    for (size_t s = 0; s < width; ++s) out[s] = (idx - 1) * width + 1 + s;
    return out;
}

std::vector<size_t> psi(size_t width, const std::vector<size_t>& idx) {
    std::vector<size_t> out;
    out.reserve(width * idx.size());
    for (size_t i : idx) {
        auto blk = psi_block(width, i);
        out.insert(out.end(), blk.begin(), blk.end());
    }
    return out;
}

std::vector<size_t> psi_widths(const std::vector<size_t>& widths,
                               const std::vector<size_t>& idx) {
    std::vector<size_t> offset(widths.size() + 1, 0);
    for (size_t j = 0; j < widths.size(); ++j) offset[j + 1] = offset[j] + widths[j];
    std::vector<size_t> out;
    for (size_t i : idx) {
        if (i < 1 || i > widths.size()) throw OutOfRangeError("thick index out of range");
        for (size_t s = 0; s < widths[i - 1]; ++s) out.push_back(offset[i - 1] + 1 + s);
    }
    return out;
}

}  // namespace starpir
