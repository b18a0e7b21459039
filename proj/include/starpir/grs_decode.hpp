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

#include "starpir/codes.hpp"

namespace starpir {

/// Dense polynomial over GF(p), coefficient i belongs to x^i. Trailing zero
/// coefficients are trimmed; the zero polynomial has degree -1.
class Poly {
  public:
    explicit Poly(Field f) : field_(f) {}
    Poly(Field f, std::vector<uint32_t> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

    static Poly monomial(Field f, size_t degree, uint32_t coeff = 1);

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }

    uint32_t eval(uint32_t x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(uint32_t v) const;

    /// Quotient and remainder with deg(r) < deg(divisor).
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  private:
    void trim();
    Field field_;
    std::vector<uint32_t> c_;
};

/// Unique interpolating polynomial of degree < points.size().
Poly lagrange_interpolate(Field f, const std::vector<uint32_t>& points,
                          const std::vector<uint32_t>& values);

struct GaoResult {
    bool ok = false;
    Poly message;  // degree < dim
    size_t errors = 0;
};

/// Gao-style interpolation decoding for an RS code of the given dimension at
/// distinct evaluation points: corrects up to max_errors substitution errors
/// (positions already erased are simply omitted from points/values). Failure
/// is reported, never silently miscorrected within the stated radius.
GaoResult gao_decode(Field f, const std::vector<uint32_t>& points,
                     const std::vector<uint32_t>& values, size_t dim, size_t max_errors);

struct BruteDecodeResult {
    bool ok = false;
    std::vector<uint32_t> codeword;
    size_t errors = 0;
};

/// Exhaustive error-pattern decoder for an arbitrary linear code; erasures
/// are nullopt entries. Intended for cross-validation and for non-GRS codes
/// at small length.
BruteDecodeResult brute_force_decode(const LinearCode& code,
                                     const std::vector<std::optional<uint32_t>>& received,
                                     size_t max_errors);

}  // namespace starpir
