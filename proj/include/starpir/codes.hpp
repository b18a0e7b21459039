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

#include <nlohmann/json_fwd.hpp>

#include "starpir/field.hpp"
#include "starpir/rng.hpp"

namespace starpir {

struct FieldTooSmallError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateSpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A length-n linear code presented by a full-row-rank generator matrix.
/// dim == 0 (the zero code) is legal and represented by a 0 x n generator.
class LinearCode {
  public:
    static LinearCode from_generator(const FieldMatrix& generator);
    /// Zero code of the given length.
    static LinearCode zero(Field f, size_t n);

    const Field& field() const { return gen_.field(); }
    size_t length() const { return gen_.cols(); }
    size_t dim() const { return gen_.rows(); }
    const FieldMatrix& generator() const { return gen_; }

    /// Encode a 1 x dim message row to a 1 x n codeword row.
    FieldMatrix encode(const FieldMatrix& message) const;
    std::vector<uint32_t> encode(const std::vector<uint32_t>& message) const;

    /// Uniform random codeword (1 x n row).
    FieldMatrix random_codeword(CounterRng& rng) const;

    bool contains(const FieldMatrix& word) const;

  private:
    explicit LinearCode(FieldMatrix gen) : gen_(std::move(gen)) {}
    FieldMatrix gen_;
};

/// Generalized Reed-Solomon specification: evaluations of monomials
/// x^{offset}, ..., x^{offset+dim-1} at distinct points, scaled per-column.
/// offset = 0 gives the classical MDS GRS code; a positive offset selects a
/// monomial coset, used for the retrieval code.
struct GrsSpec {
    Field field;
    std::vector<uint32_t> eval_points;
    std::vector<uint32_t> multipliers;
    size_t dim = 0;
    size_t offset = 0;

    /// Points 0..n-1 with unit multipliers.
    static GrsSpec standard(Field f, size_t n, size_t dim, size_t offset = 0);
};

LinearCode grs(const GrsSpec& spec);

LinearCode dual(const LinearCode& c);

/// Minimum Hamming weight by exhaustive message enumeration; throws
/// TooLargeError when p^dim exceeds the cap.
size_t min_distance(const LinearCode& c, uint64_t enumeration_cap = uint64_t(1) << 20);

bool is_mds(const LinearCode& c, uint64_t enumeration_cap = uint64_t(1) << 20);

/// Span of all coordinate-wise products of codewords of c and d.
LinearCode star_product_code(const LinearCode& c, const LinearCode& d);

/// Sum (as subspaces) of two codes of equal length.
LinearCode sum_code(const LinearCode& c, const LinearCode& d);

/// (n-dim) x n matrix H with H * w^T = 0 exactly for codewords w.
FieldMatrix parity_check(const LinearCode& c);

nlohmann::json code_to_json(const LinearCode& c);
LinearCode code_from_json(const nlohmann::json& j);

}  // namespace starpir
