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

#include "starpir/fixtures.hpp"

namespace starpir {

QueryFixture lifted_privacy_counterexample() {
    Field f3(3);
    FieldMatrix q = FieldMatrix::from_rows(f3, {
                                                   {1, 0, 2, 0, 0, 0, 0},
                                                   {0, 0, 0, 0, 1, 0, 2},
                                                   {0, 1, 0, 2, 0, 0, 2},
                                                   {0, 0, 0, 0, 0, 0, 0},
                                               });
    return QueryFixture{q, 2, {2, 2, 2, 1}, 2, 2};
}

LinearCode lifted_counterexample_code() {
    Field f3(3);
    return LinearCode::from_generator(
        FieldMatrix::from_rows(f3, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
}

QueryFixture dependent_support_instance(uint64_t seed) {
    Field f(101);
    CounterRng rng(seed);
    for (;;) {
        // five independent random vectors in GF(101)^6
        FieldMatrix v(f, 5, 6);
        for (size_t i = 0; i < 5; ++i)
            for (size_t j = 0; j < 6; ++j) v.set(i, j, rng.next_element(101));
        if (rank(v) != 5) continue;

        // six supported columns: three combinations of {v1,v2,v3} at columns
        // 1,2,5 and three of {v1,v4,v5} at columns 6,7,10 in a 6 x 10 block
        FieldMatrix q(f, 6, 10);
        auto fill_col = [&](size_t col, const std::vector<size_t>& basis) {
            std::vector<uint32_t> coeff(basis.size());
            for (auto& c : coeff) c = rng.next_element(101);
            for (size_t r = 0; r < 6; ++r) {
                uint32_t acc = 0;
                for (size_t bi = 0; bi < basis.size(); ++bi)
                    acc = f.add(acc, f.mul(coeff[bi], v.at(basis[bi], r)));
                q.set(r, col, acc);
            }
        };
        fill_col(0, {0, 1, 2});
        fill_col(1, {0, 1, 2});
        fill_col(4, {0, 1, 2});
        fill_col(5, {0, 3, 4});
        fill_col(6, {0, 3, 4});
        fill_col(9, {0, 3, 4});
        if (colsupp(q).size() != 6) continue;
        return QueryFixture{q, 6, {5, 5}, 2, 1};
    }
}

}  // namespace starpir
