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

#include "starpir/codes.hpp"

#include <nlohmann/json.hpp>

#include <set>

namespace starpir {

LinearCode LinearCode::from_generator(const FieldMatrix& generator) {
    if (generator.rows() > 0 && rank(generator) != generator.rows()) {
        throw DegenerateSpecError("generator matrix does not have full row rank");
    }
    return LinearCode(generator);
}

LinearCode LinearCode::zero(Field f, size_t n) { return LinearCode(FieldMatrix(f, 0, n)); }

FieldMatrix LinearCode::encode(const FieldMatrix& message) const {
    if (message.rows() != 1 || message.cols() != dim())
        throw ShapeMismatchError("message shape must be 1 x dim");
    return message * gen_;
}

std::vector<uint32_t> LinearCode::encode(const std::vector<uint32_t>& message) const {
    FieldMatrix msg(field(), 1, dim());
    if (message.size() != dim()) throw ShapeMismatchError("message length must equal dim");
    for (size_t i = 0; i < dim(); ++i) msg.set(0, i, message[i]);
    FieldMatrix cw = encode(msg);
    std::vector<uint32_t> out(length());
    for (size_t j = 0; j < length(); ++j) out[j] = cw.at(0, j);
    return out;
}

FieldMatrix LinearCode::random_codeword(CounterRng& rng) const {
    FieldMatrix msg(field(), 1, dim());
    for (size_t i = 0; i < dim(); ++i) msg.set(0, i, rng.next_element(field().modulus()));
    return dim() == 0 ? FieldMatrix(field(), 1, length()) : encode(msg);
}

bool LinearCode::contains(const FieldMatrix& word) const {
    if (word.rows() != 1 || word.cols() != length())
        throw ShapeMismatchError("word shape must be 1 x n");
    if (word.is_zero()) return true;
    if (dim() == 0) return false;
    return rank(gen_.vstack(word)) == dim();
}

GrsSpec GrsSpec::standard(Field f, size_t n, size_t dim, size_t offset) {
    GrsSpec s{f, {}, {}, dim, offset};
    if (n > f.modulus()) {
        throw FieldTooSmallError("GRS needs n <= p distinct evaluation points (n = " +
                                 std::to_string(n) + ", p = " + std::to_string(f.modulus()) + ")");
    }
    for (size_t j = 0; j < n; ++j) {
        s.eval_points.push_back(static_cast<uint32_t>(j));
        s.multipliers.push_back(1);
    }
    return s;
}

LinearCode grs(const GrsSpec& spec) {
    const Field& f = spec.field;
    size_t n = spec.eval_points.size();
    if (n > f.modulus()) throw FieldTooSmallError("more evaluation points than field elements");
    if (spec.multipliers.size() != n) throw DegenerateSpecError("multiplier count mismatch");
    std::set<uint32_t> distinct(spec.eval_points.begin(), spec.eval_points.end());
    if (distinct.size() != n) throw DegenerateSpecError("repeated evaluation points");
    for (uint32_t v : spec.multipliers)
        if (v % f.modulus() == 0) throw DegenerateSpecError("zero column multiplier");
    if (spec.dim + spec.offset > n) throw DegenerateSpecError("dim + offset exceeds length");

    FieldMatrix g(f, spec.dim, n);
    for (size_t j = 0; j < n; ++j) {
        uint32_t x = spec.eval_points[j] % f.modulus();
        uint32_t v = f.mul(spec.multipliers[j], f.pow(x, spec.offset));
        for (size_t i = 0; i < spec.dim; ++i) {
            g.set(i, j, v);
            v = f.mul(v, x);
        }
    }
    return LinearCode::from_generator(g);
}

LinearCode dual(const LinearCode& c) {
    if (c.dim() == 0) {
        // dual of the zero code is the whole space
        return LinearCode::from_generator(FieldMatrix::identity(c.field(), c.length()));
    }
    FieldMatrix k = kernel(c.generator());  // n x (n - dim)
    return LinearCode::from_generator(row_basis(k.transpose()));
}

size_t min_distance(const LinearCode& c, uint64_t enumeration_cap) {
    const Field& f = c.field();
    if (c.dim() == 0) throw DegenerateSpecError("minimum distance of the zero code is undefined");
    uint64_t count = 1;
    for (size_t i = 0; i < c.dim(); ++i) {
        count *= f.modulus();
        if (count > enumeration_cap)
            throw TooLargeError("message enumeration exceeds cap of " +
                                std::to_string(enumeration_cap));
    }
    size_t best = c.length() + 1;
    std::vector<uint32_t> msg(c.dim(), 0);
    std::vector<uint32_t> word(c.length(), 0);
    const FieldMatrix& g = c.generator();
    for (uint64_t idx = 1; idx < count; ++idx) {
        // increment message in base p and update the codeword incrementally
        uint64_t carry = idx;
        for (size_t i = 0; i < c.dim(); ++i) {
            uint32_t digit = static_cast<uint32_t>(carry % f.modulus());
            carry /= f.modulus();
            if (digit != msg[i]) {
                uint32_t delta = f.sub(digit, msg[i]);
                for (size_t j = 0; j < c.length(); ++j)
                    word[j] = f.add(word[j], f.mul(delta, g.at(i, j)));
                msg[i] = digit;
            }
        }
        size_t w = 0;
        for (uint32_t v : word) w += (v != 0);
        if (w > 0 && w < best) best = w;
        if (best == 1) break;
    }
    return best;
}

bool is_mds(const LinearCode& c, uint64_t enumeration_cap) {
    if (c.dim() == 0) return false;
    return min_distance(c, enumeration_cap) == c.length() - c.dim() + 1;
}

LinearCode star_product_code(const LinearCode& c, const LinearCode& d) {
    if (c.length() != d.length() || !(c.field() == d.field()))
        throw ShapeMismatchError("star product needs equal length and field");
    if (c.dim() == 0 || d.dim() == 0) return LinearCode::zero(c.field(), c.length());
    FieldMatrix span(c.field(), c.dim() * d.dim(), c.length());
    size_t r = 0;
    for (size_t i = 0; i < c.dim(); ++i)
        for (size_t j = 0; j < d.dim(); ++j, ++r)
            for (size_t l = 0; l < c.length(); ++l)
                span.set(r, l, c.field().mul(c.generator().at(i, l), d.generator().at(j, l)));
    return LinearCode::from_generator(row_basis(span));
}

LinearCode sum_code(const LinearCode& c, const LinearCode& d) {
    if (c.length() != d.length() || !(c.field() == d.field()))
        throw ShapeMismatchError("code sum needs equal length and field");
    return LinearCode::from_generator(row_basis(c.generator().vstack(d.generator())));
}

FieldMatrix parity_check(const LinearCode& c) {
    return dual(c).generator();
}

nlohmann::json code_to_json(const LinearCode& c) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < c.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < c.length(); ++j) row.push_back(c.generator().at(i, j));
        rows.push_back(row);
    }
    return {{"p", c.field().modulus()},
            {"n", c.length()},
            {"k", c.dim()},
            {"generator", rows}};
}

LinearCode code_from_json(const nlohmann::json& j) {
    Field f(j.at("p").get<uint32_t>());
    size_t n = j.at("n").get<size_t>();
    size_t k = j.at("k").get<size_t>();
    FieldMatrix g(f, k, n);
    const auto& rows = j.at("generator");
    if (rows.size() != k) throw DegenerateSpecError("generator row count mismatch");
    for (size_t i = 0; i < k; ++i) {
        if (rows[i].size() != n) throw DegenerateSpecError("generator column count mismatch");
        for (size_t jj = 0; jj < n; ++jj) g.set(i, jj, f.reduce(rows[i][jj].get<int64_t>()));
    }
    return LinearCode::from_generator(g);
}

}  // namespace starpir
