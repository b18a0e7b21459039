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

#include "starpir/scheme.hpp"

namespace starpir {

struct QueryFixture {
    FieldMatrix q;
    size_t alpha = 0;
    std::vector<size_t> widths;  // per-server thick-column widths
    size_t t = 0;
    size_t m = 0;
};

/// The known 4 x 7 query realization over GF(3) from a lifted scheme whose
/// supported columns are not independent: server widths (2,2,2,1), two files
/// of two stripes each. Violates the support-rank condition at
/// (file 2, servers {1,2}) with rank 1 against column support {2,4}.
QueryFixture lifted_privacy_counterexample();

/// The [4,2] MDS storage/query code over GF(3) used by that realization.
LinearCode lifted_counterexample_code();

/// A 6 x 10 single-file query block over GF(101) whose six supported columns
/// are linear combinations of only five independent vectors, so its rank is
/// at most 5 while the column support has size 6. Seeded: the five vectors
/// and the combination coefficients are drawn from the seed, resampling
/// until all six combination columns are nonzero.
QueryFixture dependent_support_instance(uint64_t seed);

}  // namespace starpir
