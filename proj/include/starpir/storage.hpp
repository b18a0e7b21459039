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

#include "starpir/codes.hpp"
#include "starpir/rng.hpp"

namespace starpir {

/// All m files stacked into one (alpha*m) x k matrix; the alpha-thick row
/// block l holds file l, stripe by stripe.
struct FileSet {
    size_t m = 0;
    size_t alpha = 0;
    size_t k = 0;
    FieldMatrix data;

    FileSet(Field f, size_t m_, size_t alpha_, size_t k_)
        : m(m_), alpha(alpha_), k(k_), data(f, m_ * alpha_, k_) {}

    const Field& field() const { return data.field(); }

    /// The alpha x k block of file l (1-based).
    FieldMatrix file(size_t l) const;
};

/// Files i.i.d. uniform, deterministic in the seed (starpir counter RNG v1).
FileSet random_files(uint64_t seed, size_t m, size_t alpha, size_t k, Field f);

struct StorageState {
    LinearCode code;
    FieldMatrix encoded;  // Y = X * G, alpha*m x n

    size_t servers() const { return encoded.cols(); }
    /// Column stored by server j (1-based), as an alpha*m x 1 matrix.
    FieldMatrix shard(size_t j) const;
};

StorageState encode(const FileSet& files, const LinearCode& c);

nlohmann::json fileset_to_json(const FileSet& fs);
FileSet fileset_from_json(const nlohmann::json& j);
nlohmann::json storage_to_json(const StorageState& st);

}  // namespace starpir
