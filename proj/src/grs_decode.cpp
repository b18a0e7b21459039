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

#include "starpir/grs_decode.hpp"

#include <algorithm>

namespace starpir {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(Field f, size_t degree, uint32_t coeff) {
    std::vector<uint32_t> c(degree + 1, 0);
    c[degree] = coeff % f.modulus();
    return Poly(f, std::move(c));
}

uint32_t Poly::eval(uint32_t x) const {
    uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = field_.add(coeff(i), o.coeff(i));
    return Poly(field_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = field_.sub(coeff(i), o.coeff(i));
    return Poly(field_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<uint32_t> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = field_.add(c[i + j], field_.mul(c_[i], o.c_[j]));
    }
    return Poly(field_, std::move(c));
}

Poly Poly::scaled(uint32_t v) const {
    std::vector<uint32_t> c(c_);
    for (auto& x : c) x = field_.mul(x, v);
    return Poly(field_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Poly rem = *this;
    std::vector<uint32_t> q(degree() >= divisor.degree() ? degree() - divisor.degree() + 1 : 0, 0);
    uint32_t lead_inv = field_.inv(divisor.c_.back());
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        size_t shift = rem.degree() - divisor.degree();
        uint32_t factor = field_.mul(rem.c_.back(), lead_inv);
        q[shift] = factor;
        Poly t = divisor * Poly::monomial(field_, shift, factor);
        rem = rem - t;
    }
    return {Poly(field_, std::move(q)), rem};
}

Poly lagrange_interpolate(Field f, const std::vector<uint32_t>& points,
                          const std::vector<uint32_t>& values) {
    if (points.size() != values.size()) throw ShapeMismatchError("interpolation size mismatch");
    Poly acc(f);
    for (size_t i = 0; i < points.size(); ++i) {
        if (values[i] == 0) continue;
        // basis polynomial for point i, scaled to hit values[i]
        Poly num(f, {1});
        uint32_t denom = 1;
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            num = num * Poly(f, {f.neg(points[j]), 1});
            denom = f.mul(denom, f.sub(points[i], points[j]));
        }
        acc = acc + num.scaled(f.mul(values[i], f.inv(denom)));
    }
    return acc;
}

GaoResult gao_decode(Field f, const std::vector<uint32_t>& points,
                     const std::vector<uint32_t>& values, size_t dim, size_t max_errors) {
    GaoResult out{false, Poly(f), 0};
    const size_t n = points.size();
    if (n != values.size() || n < dim) return out;

    Poly g0(f, {1});
    for (uint32_t x : points) g0 = g0 * Poly(f, {f.neg(x), 1});
    Poly g1 = lagrange_interpolate(f, points, values);

    // extended Euclid on (g0, g1), tracking v with r = u*g0 + v*g1
    Poly r_prev = g0, r_cur = g1;
    Poly v_prev(f), v_cur(f, {1});
    // stop once 2*deg(r) < n + dim
    while (!r_cur.is_zero() && 2 * r_cur.degree() >= static_cast<int>(n + dim)) {
        auto [q, rem] = r_prev.divmod(r_cur);
        Poly v_next = v_prev - q * v_cur;
        r_prev = r_cur;
        r_cur = rem;
        v_prev = v_cur;
        v_cur = v_next;
    }
    if (v_cur.is_zero()) return out;
    auto [msg, rem] = r_cur.divmod(v_cur);
    if (!rem.is_zero()) return out;
    if (msg.degree() >= static_cast<int>(dim)) return out;

    size_t mismatches = 0;
    for (size_t j = 0; j < n; ++j)
        if (msg.eval(points[j]) != values[j]) ++mismatches;
    size_t radius = (n - dim) / 2;
    if (mismatches > std::min(max_errors, radius)) return out;

    out.ok = true;
    out.message = msg;
    out.errors = mismatches;
    return out;
}

BruteDecodeResult brute_force_decode(const LinearCode& code,
                                     const std::vector<std::optional<uint32_t>>& received,
                                     size_t max_errors) {
    BruteDecodeResult out;
    const size_t n = code.length();
    if (received.size() != n) throw ShapeMismatchError("received word length mismatch");
    std::vector<size_t> present;  // 0-based positions with a value
    for (size_t j = 0; j < n; ++j)
        if (received[j].has_value()) present.push_back(j);

    auto next_combination = [&](std::vector<size_t>& idx) -> bool {
        size_t e = idx.size();
        size_t i = e;
        while (i-- > 0) {
            if (idx[i] + (e - i) < present.size()) {
                ++idx[i];
                for (size_t l = i + 1; l < e; ++l) idx[l] = idx[l - 1] + 1;
                return true;
            }
        }
        return false;
    };

    // try error counts in increasing order so the closest codeword wins
    for (size_t e = 0; e <= max_errors; ++e) {
        if (present.size() < e || present.size() - e < code.dim()) break;
        // e-subsets of `present` treated as additional erasures
        std::vector<size_t> idx(e);
        for (size_t i = 0; i < e; ++i) idx[i] = i;
        do {
            std::vector<bool> dropped(n, false);
            for (size_t i : idx) dropped[present[i]] = true;
            std::vector<size_t> trusted1;  // 1-based for submatrix selection
            std::vector<uint32_t> vals;
            for (size_t j : present) {
                if (dropped[j]) continue;
                trusted1.push_back(j + 1);
                vals.push_back(*received[j]);
            }
            FieldMatrix gt = code.generator().select_cols(trusted1).transpose();
            auto u = solve(gt, vals);
            if (u.has_value()) {
                FieldMatrix msg(code.field(), 1, code.dim());
                for (size_t i = 0; i < code.dim(); ++i) msg.set(0, i, (*u)[i]);
                FieldMatrix cw = code.encode(msg);
                size_t mismatches = 0;
                for (size_t j : present)
                    if (cw.at(0, j) != *received[j]) ++mismatches;
                if (mismatches <= max_errors) {
                    out.ok = true;
                    out.errors = mismatches;
                    out.codeword.resize(n);
                    for (size_t j = 0; j < n; ++j) out.codeword[j] = cw.at(0, j);
                    return out;
                }
            }
        } while (next_combination(idx));
    }
    return out;
}

}  // namespace starpir
