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
#include <nlohmann/json.hpp>

#include <cmath>

#include "starpir/fixtures.hpp"
#include "starpir/storage.hpp"

using namespace starpir;

TEST_CASE("encoding zero files gives zero storage") {
    Field f3(3);
    FileSet fs(f3, 2, 1, 2);
    StorageState st = encode(fs, lifted_counterexample_code());
    CHECK(st.encoded.is_zero());
}

TEST_CASE("single stripe encoding against a hand product") {
    Field f3(3);
    FileSet fs(f3, 1, 1, 2);
    fs.data.set(0, 0, 1);
    fs.data.set(0, 1, 2);
    StorageState st = encode(fs, lifted_counterexample_code());
    // (1,2) * [[1,0,1,1],[0,1,1,2]] = (1, 2, 1+2, 1+4) = (1, 2, 0, 2) mod 3
    CHECK(st.encoded.at(0, 0) == 1);
    CHECK(st.encoded.at(0, 1) == 2);
    CHECK(st.encoded.at(0, 2) == 0);
    CHECK(st.encoded.at(0, 3) == 2);
}

TEST_CASE("systematic positions reconstruct the data directly") {
    Field f3(3);
    FileSet fs = random_files(7, 2, 1, 2, f3);
    StorageState st = encode(fs, lifted_counterexample_code());
    // generator columns 1,2 form the identity
    CHECK(st.encoded.select_cols({1, 2}) == fs.data);
}

TEST_CASE("shards are columns and jointly reconstruct Y") {
    Field f5(5);
    FileSet fs = random_files(3, 2, 2, 2, f5);
    LinearCode c = grs(GrsSpec::standard(f5, 5, 2, 0));
    StorageState st = encode(fs, c);
    CHECK_THROWS_AS(st.shard(0), OutOfRangeError);
    CHECK_THROWS_AS(st.shard(6), OutOfRangeError);
    for (size_t j = 1; j <= 5; ++j) {
        FieldMatrix col = st.shard(j);
        CHECK(col.rows() == fs.m * fs.alpha);
        CHECK(col.cols() == 1);
        for (size_t i = 0; i < col.rows(); ++i) CHECK(col.at(i, 0) == st.encoded.at(i, j - 1));
    }
}

TEST_CASE("random files are deterministic in the seed") {
    Field f3(3);
    FileSet a = random_files(99, 2, 1, 2, f3);
    FileSet b = random_files(99, 2, 1, 2, f3);
    FileSet c = random_files(100, 2, 1, 2, f3);
    CHECK(a.data == b.data);
    CHECK(a.data.rows() * a.data.cols() == 4);
    CHECK_FALSE(a.data == c.data);
}

TEST_CASE("random file symbols have uniform marginals") {
    Field f3(3);
    // 10^4 draws of a 1-symbol file set; binomial 3-sigma band around N/3
    const size_t draws = 10000;
    size_t counts[3] = {0, 0, 0};
    for (size_t s = 0; s < draws; ++s) {
        FileSet fs = random_files(1000 + s, 1, 1, 1, f3);
        counts[fs.data.at(0, 0)] += 1;
    }
    double expected = draws / 3.0;
    double sigma = std::sqrt(draws * (1.0 / 3.0) * (2.0 / 3.0));
    for (size_t v = 0; v < 3; ++v)
        CHECK(std::fabs(static_cast<double>(counts[v]) - expected) < 3.0 * sigma);
}

TEST_CASE("any k columns of an MDS encoding recover the data exactly") {
    Field f7(7);
    LinearCode c = grs(GrsSpec::standard(f7, 5, 2, 0));
    FileSet fs = random_files(21, 2, 2, 2, f7);
    StorageState st = encode(fs, c);
    for (size_t a = 1; a <= 5; ++a)
        for (size_t b = a + 1; b <= 5; ++b) {
            FieldMatrix gw = c.generator().select_cols({a, b});
            FieldMatrix yw = st.encoded.select_cols({a, b});
            // solve X * G_W = Y_W row by row
            FieldMatrix gt = gw.transpose();
            for (size_t row = 0; row < fs.data.rows(); ++row) {
                std::vector<uint32_t> rhs{yw.at(row, 0), yw.at(row, 1)};
                auto x = solve(gt, rhs);
                REQUIRE(x.has_value());
                CHECK((*x)[0] == fs.data.at(row, 0));
                CHECK((*x)[1] == fs.data.at(row, 1));
            }
        }
}

TEST_CASE("encoding is linear") {
    Field f5(5);
    LinearCode c = grs(GrsSpec::standard(f5, 4, 2, 0));
    FileSet a = random_files(1, 2, 1, 2, f5);
    FileSet b = random_files(2, 2, 1, 2, f5);
    FileSet sum(f5, 2, 1, 2);
    sum.data = a.data + b.data;
    CHECK(encode(sum, c).encoded == encode(a, c).encoded + encode(b, c).encoded);
}

TEST_CASE("fileset JSON round trip") {
    Field f3(3);
    FileSet fs = random_files(5, 2, 2, 2, f3);
    FileSet back = fileset_from_json(fileset_to_json(fs));
    CHECK(back.data == fs.data);
    CHECK(back.m == fs.m);
    CHECK(back.alpha == fs.alpha);
}

TEST_CASE("dimension mismatch is rejected") {
    Field f3(3);
    FileSet fs(f3, 1, 1, 3);
    CHECK_THROWS_AS(encode(fs, lifted_counterexample_code()), ShapeMismatchError);
}
