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

#include "starpir/storage.hpp"

#include <nlohmann/json.hpp>

namespace starpir {

FieldMatrix FileSet::file(size_t l) const {
    if (l < 1 || l > m) throw OutOfRangeError("file index out of range");
    return data.select_rows(psi_block(alpha, l));
}

FileSet random_files(uint64_t seed, size_t m, size_t alpha, size_t k, Field f) {
    FileSet fs(f, m, alpha, k);
    CounterRng rng(seed);
    for (size_t i = 0; i < m * alpha; ++i)
        for (size_t j = 0; j < k; ++j) fs.data.set(i, j, rng.next_element(f.modulus()));
    return fs;
}

StorageState encode(const FileSet& files, const LinearCode& c) {
    if (c.dim() != files.k) throw ShapeMismatchError("storage code dimension must equal k");
    return StorageState{c, files.data * c.generator()};
}

FieldMatrix StorageState::shard(size_t j) const {
    if (j < 1 || j > servers()) throw OutOfRangeError("server index out of range");
    return encoded.col(j - 1);
}

namespace {

nlohmann::json matrix_rows(const FieldMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

nlohmann::json fileset_to_json(const FileSet& fs) {
    return {{"p", fs.field().modulus()},
            {"m", fs.m},
            {"alpha", fs.alpha},
            {"k", fs.k},
            {"data", matrix_rows(fs.data)}};
}

FileSet fileset_from_json(const nlohmann::json& j) {
    Field f(j.at("p").get<uint32_t>());
    FileSet fs(f, j.at("m").get<size_t>(), j.at("alpha").get<size_t>(), j.at("k").get<size_t>());
    const auto& rows = j.at("data");
    if (rows.size() != fs.m * fs.alpha) throw ShapeMismatchError("data row count mismatch");
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t jj = 0; jj < fs.k; ++jj)
            fs.data.set(i, jj, f.reduce(rows[i][jj].get<int64_t>()));
    return fs;
}

nlohmann::json storage_to_json(const StorageState& st) {
    return {{"code", code_to_json(st.code)}, {"encoded", matrix_rows(st.encoded)}};
}

}  // namespace starpir
