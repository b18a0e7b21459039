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

#include <doctest.h>

#include <algorithm>
#include <utility>

#include "starpir/field.hpp"
#include "starpir/rng.hpp"

using namespace starpir;

namespace {

FieldMatrix random_matrix(Field f, size_t rows, size_t cols, CounterRng& rng) {
    FieldMatrix m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.set(i, j, rng.next_element(f.modulus()));
    return m;
}

FieldMatrix random_invertible(Field f, size_t n, CounterRng& rng) {
    for (;;) {
        FieldMatrix m = random_matrix(f, n, n, rng);
        if (rank(m) == n) return m;
    }
}

}  // namespace

TEST_CASE("field construction accepts primes and rejects composites") {
    CHECK_NOTHROW(Field(7));
    CHECK_NOTHROW(Field(3));
    CHECK_NOTHROW(Field(2));
    CHECK_THROWS_AS(Field(6), NotPrimeError);
    CHECK_THROWS_AS(Field(1), NotPrimeError);
    CHECK_THROWS_AS(Field(0), NotPrimeError);
}

TEST_CASE("modular inverse") {
    Field f7(7);
    CHECK(f7.inv(3) == 5);  // 3*5 = 15 = 1 mod 7
    CHECK(f7.inv(1) == 1);
    Field f3(3);
    CHECK(f3.inv(2) == 2);  // 2*2 = 4 = 1 mod 3
    CHECK_THROWS_AS(f3.inv(0), DivisionByZeroError);
    // a * inv(a) = 1 across a whole field
    Field f101(101);
    for (uint32_t a = 1; a < 101; ++a) CHECK(f101.mul(a, f101.inv(a)) == 1);
}

TEST_CASE("rank") {
    Field f5(5);
    CHECK(rank(FieldMatrix::identity(f5, 3)) == 3);
    CHECK(rank(FieldMatrix(f5, 2, 4)) == 0);
    Field f3(3);
    FieldMatrix m = FieldMatrix::from_rows(f3, {{0, 1, 0, 2}, {0, 0, 0, 0}});
    CHECK(rank(m) == 1);
}

TEST_CASE("colsupp") {
    Field f3(3);
    CHECK(colsupp(FieldMatrix(f3, 2, 3)).empty());
    CHECK(colsupp(FieldMatrix::identity(f3, 3)) == std::vector<size_t>{1, 2, 3});
    FieldMatrix m = FieldMatrix::from_rows(f3, {{0, 1, 0, 2}, {0, 0, 0, 0}});
    CHECK(colsupp(m) == std::vector<size_t>{2, 4});
}

TEST_CASE("hadamard with the all-ones vector is the identity") {
    Field f5(5);
    FieldMatrix a = FieldMatrix::row_vector(f5, {1, 2, 3});
    FieldMatrix ones = FieldMatrix::row_vector(f5, {1, 1, 1});
    CHECK(hadamard(a, ones) == a);
}

TEST_CASE("column-wise Khatri-Rao matches its definition entry by entry") {
    Field f5(5);
    CounterRng rng(42);
    FieldMatrix a = random_matrix(f5, 2, 3, rng);
    FieldMatrix b = random_matrix(f5, 2, 3, rng);
    FieldMatrix kr = khatri_rao_col(a, b);
    REQUIRE(kr.rows() == 4);
    REQUIRE(kr.cols() == 3);
    for (size_t j = 0; j < 3; ++j)
        for (size_t i = 0; i < 2; ++i)
            for (size_t l = 0; l < 2; ++l)
                CHECK(kr.at(i * 2 + l, j) == f5.mul(a.at(i, j), b.at(l, j)));
}

TEST_CASE("product exchange identities over several primes") {
    // (A*C) . (B kr_col D) = (A.B) star (C.D), and (A.B) kron e = A.(B kron e)
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        Field f(p);
        CounterRng rng(1000 + p);
        for (int trial = 0; trial < 200; ++trial) {
            size_t m = 1 + rng.next_below(3);
            size_t n = 1 + rng.next_below(3);
            size_t n2 = 1 + rng.next_below(3);
            size_t nn = 1 + rng.next_below(3);
            FieldMatrix a = random_matrix(f, m, n, rng);
            FieldMatrix b = random_matrix(f, n, n2, rng);
            FieldMatrix c = random_matrix(f, m, nn, rng);
            FieldMatrix d = random_matrix(f, nn, n2, rng);
            CHECK(hadamard(a * b, c * d) == khatri_rao_row(a, c) * khatri_rao_col(b, d));

            FieldMatrix e = random_matrix(f, 1, 1 + rng.next_below(3), rng);
            CHECK(kronecker(a * b, e) == a * kronecker(b, e));
        }
    }
}

TEST_CASE("row span of the Khatri-Rao equals the span of row star products") {
    for (uint32_t p : {2u, 3u}) {
        Field f(p);
        CounterRng rng(7 + p);
        for (int trial = 0; trial < 20; ++trial) {
            size_t ra = 1 + rng.next_below(3);
            size_t rb = 1 + rng.next_below(3);
            size_t n = 1 + rng.next_below(3);
            FieldMatrix a = random_matrix(f, ra, n, rng);
            FieldMatrix b = random_matrix(f, rb, n, rng);
            FieldMatrix kr = khatri_rao_col(a, b);

            // exhaustive span of {u*A star v*B}
            uint64_t ca = 1, cb = 1;
            for (size_t i = 0; i < ra; ++i) ca *= p;
            for (size_t i = 0; i < rb; ++i) cb *= p;
            FieldMatrix stacked(f, static_cast<size_t>(ca * cb), n);
            size_t row = 0;
            for (uint64_t ia = 0; ia < ca; ++ia) {
                FieldMatrix u(f, 1, ra);
                uint64_t v = ia;
                for (size_t i = 0; i < ra; ++i, v /= p) u.set(0, i, v % p);
                FieldMatrix av = u * a;
                for (uint64_t ib = 0; ib < cb; ++ib) {
                    FieldMatrix w(f, 1, rb);
                    uint64_t v2 = ib;
                    for (size_t i = 0; i < rb; ++i, v2 /= p) w.set(0, i, v2 % p);
                    FieldMatrix prod = hadamard(av, w * b);
                    for (size_t j = 0; j < n; ++j) stacked.set(row, j, prod.at(0, j));
                    ++row;
                }
            }
            CHECK(rank(stacked) == rank(kr));
            CHECK(rank(stacked.vstack(kr)) == rank(kr));
        }
    }
}

TEST_CASE("row-wise Khatri-Rao with the identity vectorizes column by column") {
    Field f5(5);
    CounterRng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        size_t m = 1 + rng.next_below(3);
        size_t k = 1 + rng.next_below(3);
        FieldMatrix x = random_matrix(f5, m, k, rng);
        FieldMatrix ones(f5, 1, m);
        for (size_t i = 0; i < m; ++i) ones.set(0, i, 1);
        FieldMatrix flat = ones * khatri_rao_row(x, FieldMatrix::identity(f5, m));
        REQUIRE(flat.cols() == m * k);
        for (size_t j = 0; j < k; ++j)
            for (size_t i = 0; i < m; ++i) CHECK(flat.at(0, j * m + i) == x.at(i, j));
    }
}

TEST_CASE("rank is invariant under row permutation and invertible left factors") {
    Field f7(7);
    CounterRng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        size_t rows = 1 + rng.next_below(4);
        size_t cols = 1 + rng.next_below(4);
        FieldMatrix a = random_matrix(f7, rows, cols, rng);
        FieldMatrix perm(f7, rows, rows);
        std::vector<size_t> order(rows);
        for (size_t i = 0; i < rows; ++i) order[i] = i;
        for (size_t i = 0; i < rows; ++i) std::swap(order[i], order[i + rng.next_below(rows - i)]);
        for (size_t i = 0; i < rows; ++i) perm.set(i, order[i], 1);
        CHECK(rank(perm * a) == rank(a));
        FieldMatrix inv = random_invertible(f7, rows, rng);
        CHECK(rank(inv * a) == rank(a));
    }
}

TEST_CASE("solve") {
    Field f5(5);
    FieldMatrix id = FieldMatrix::identity(f5, 3);
    auto x = solve(id, {1, 2, 3});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<uint32_t>{1, 2, 3});

    FieldMatrix incons = FieldMatrix::from_rows(f5, {{1}, {1}});
    CHECK_FALSE(solve(incons, {0, 1}).has_value());
}

TEST_CASE("kernel of [1 1 1] over GF(2) against exhaustive enumeration") {
    Field f2(2);
    FieldMatrix a = FieldMatrix::from_rows(f2, {{1, 1, 1}});
    FieldMatrix k = kernel(a);
    CHECK(k.cols() == 2);
    // oracle: enumerate all 8 vectors and collect the null space
    std::vector<std::vector<uint32_t>> null_vectors;
    for (uint32_t v = 0; v < 8; ++v) {
        std::vector<uint32_t> vec{v & 1, (v >> 1) & 1, (v >> 2) & 1};
        if ((vec[0] + vec[1] + vec[2]) % 2 == 0) null_vectors.push_back(vec);
    }
    CHECK(null_vectors.size() == 4);  // 2-dimensional space over GF(2)
    // every kernel column must be in the enumerated set and the columns span it
    for (size_t c = 0; c < k.cols(); ++c) {
        std::vector<uint32_t> col{k.at(0, c), k.at(1, c), k.at(2, c)};
        CHECK(std::find(null_vectors.begin(), null_vectors.end(), col) != null_vectors.end());
    }
    CHECK(rank(k.transpose()) == 2);
}

TEST_CASE("kernel dimension equals cols minus rank") {
    Field f7(7);
    CounterRng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        size_t rows = 1 + rng.next_below(4);
        size_t cols = 1 + rng.next_below(4);
        FieldMatrix a = random_matrix(f7, rows, cols, rng);
        FieldMatrix k = kernel(a);
        CHECK(k.cols() == cols - rank(a));
        if (k.cols() > 0) {
            FieldMatrix prod = a * k;
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("thick index maps") {
    CHECK(psi_block(2, 1) == std::vector<size_t>{1, 2});
    CHECK(psi_block(2, 3) == std::vector<size_t>{5, 6});
    CHECK(psi(2, {1, 3}) == std::vector<size_t>{1, 2, 5, 6});
    CHECK(psi(3, {2}) == std::vector<size_t>{4, 5, 6});
    CHECK(psi_widths({2, 2, 2, 1}, {1, 2}) == std::vector<size_t>{1, 2, 3, 4});
    CHECK(psi_widths({2, 2, 2, 1}, {4}) == std::vector<size_t>{7});
    CHECK(psi_widths({2, 2, 2, 1}, {3, 4}) == std::vector<size_t>{5, 6, 7});
}

TEST_CASE("shape errors throw") {
    Field f5(5);
    FieldMatrix a(f5, 2, 3), b(f5, 3, 3);
    CHECK_THROWS_AS(hadamard(a, b), ShapeMismatchError);
    CHECK_THROWS_AS(khatri_rao_col(a, FieldMatrix(f5, 2, 4)), ShapeMismatchError);
    CHECK_THROWS_AS(khatri_rao_row(a, b), ShapeMismatchError);
    CHECK_THROWS_AS(a + b, ShapeMismatchError);
}
