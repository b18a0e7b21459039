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

#include <set>

#include "starpir/fixtures.hpp"
#include "starpir/netsim.hpp"

using namespace starpir;

namespace {

FieldMatrix flat_answers(const Instance& inst, const StorageState& st,
                         const QueryArtifact& art, const MaskState* mask = nullptr) {
    const SchemeParams& pr = inst.params();
    FieldMatrix flat(inst.field(), 1, pr.beta * pr.n);
    for (size_t j = 1; j <= pr.n; ++j) {
        std::vector<uint32_t> mask_j;
        const std::vector<uint32_t>* mp = nullptr;
        if (mask) {
            for (size_t s = 0; s < pr.beta; ++s)
                mask_j.push_back(mask->mask.at(0, (j - 1) * pr.beta + s));
            mp = &mask_j;
        }
        std::vector<uint32_t> a =
            respond(st.shard(j), art.Q.select_cols(psi_block(pr.beta, j)), mp);
        for (size_t s = 0; s < pr.beta; ++s) flat.set(0, (j - 1) * pr.beta + s, a[s]);
    }
    return flat;
}

}  // namespace

TEST_CASE("scheme parameter derivation and validation") {
    SchemeParams p = SchemeParams::multi_iter(5, 2, 2, 2, 5);
    CHECK(p.alpha == 2);
    CHECK(p.beta == 2);

    SchemeParams q = SchemeParams::one_shot(7, 2, 2, 1, 0, 2, 7);
    CHECK(q.alpha == 1);
    CHECK(q.beta == 1);

    CHECK_THROWS_AS(SchemeParams::multi_iter(3, 2, 2, 2, 5), InfeasibleParamsError);
    // n just above the boundary: one retrieval cell per iteration
    SchemeParams tight = SchemeParams::multi_iter(4, 2, 2, 2, 5);
    CHECK(tight.alpha == 1);
    CHECK(tight.beta == 2);
    CHECK_THROWS_AS(SchemeParams::one_shot(6, 2, 2, 1, 0, 2, 7), InfeasibleParamsError);
    CHECK_THROWS_AS(SchemeParams::multi_iter(5, 2, 2, 2, 6), NotPrimeError);
    CHECK_THROWS_AS(Instance::make_grs(SchemeParams::multi_iter(5, 2, 2, 2, 3)),
                    FieldTooSmallError);
}

TEST_CASE("query shape and determinism at (5,2,2)") {
    Instance inst = Instance::make_grs(SchemeParams::multi_iter(5, 2, 2, 2, 5));
    CounterRng rng1(7), rng2(7), rng3(8);
    QueryArtifact a = generate_query(inst, 1, rng1);
    CHECK(a.Q.rows() == 4);
    CHECK(a.Q.cols() == 10);
    CHECK(a.Q == a.D + a.E);
    QueryArtifact b = generate_query(inst, 1, rng2);
    CHECK(a.Q == b.Q);
    QueryArtifact c = generate_query(inst, 1, rng3);
    CHECK_FALSE(a.Q == c.Q);
}

TEST_CASE("retrieval windows cover each stripe with k distinct positions") {
    for (auto [n, k, t, p] : std::vector<std::array<size_t, 4>>{
             {5, 2, 2, 5}, {4, 1, 2, 5}, {8, 2, 2, 11}, {7, 3, 2, 7}}) {
        Instance inst =
            Instance::make_grs(SchemeParams::multi_iter(n, k, t, 2, static_cast<uint32_t>(p)));
        const SchemeParams& pr = inst.params();
        CounterRng rng(3);
        QueryArtifact art = generate_query(inst, 2, rng);
        REQUIRE(art.windows.size() == pr.beta);
        std::vector<std::set<size_t>> per_stripe(pr.alpha);
        for (const auto& win : art.windows) {
            CHECK(win.size() == pr.alpha);  // d = n-k-t+1 cells per iteration
            std::set<size_t> seen;
            for (const auto& cell : win) {
                CHECK(seen.insert(cell.position).second);  // distinct positions
                CHECK(per_stripe[cell.stripe - 1].insert(cell.position).second);
            }
        }
        for (const auto& s : per_stripe) CHECK(s.size() == pr.k);
    }
}

TEST_CASE("every row of D lies in the query code and E sits in the desired block") {
    Instance inst = Instance::make_grs(SchemeParams::multi_iter(5, 2, 2, 2, 5));
    const SchemeParams& pr = inst.params();
    CounterRng rng(13);
    QueryArtifact art = generate_query(inst, 2, rng);
    for (size_t s = 0; s < pr.beta; ++s)
        for (size_t row = 0; row < pr.alpha * pr.m; ++row) {
            FieldMatrix cw(inst.field(), 1, pr.n);
            for (size_t j = 0; j < pr.n; ++j) cw.set(0, j, art.D.at(row, j * pr.beta + s));
            CHECK(inst.query_code().contains(cw));
        }
    // E vanishes outside the requested file's rows
    for (size_t row = 0; row < pr.alpha; ++row)  // file 1 rows
        for (size_t c = 0; c < art.E.cols(); ++c) CHECK(art.E.at(row, c) == 0);
}

TEST_CASE("single-position restrictions of D are uniform (t = 1 exhaustive marginals)") {
    // at t = 1 the query code has dimension 1; every single position of a
    // codeword is uniform over the field, checked against sampled counts
    Instance inst = Instance::make_grs(SchemeParams::multi_iter(3, 1, 1, 1, 3));
    const SchemeParams& pr = inst.params();
    const size_t samples = 3000;
    CounterRng rng(17);
    std::vector<std::array<size_t, 3>> counts(pr.beta * pr.n, {0, 0, 0});
    for (size_t s = 0; s < samples; ++s) {
        QueryArtifact art = generate_query(inst, 1, rng);
        for (size_t c = 0; c < pr.beta * pr.n; ++c) counts[c][art.D.at(0, c)] += 1;
    }
    const double expected = samples / 3.0;
    const double sigma = std::sqrt(samples * (1.0 / 3.0) * (2.0 / 3.0));
    for (const auto& col : counts)
        for (size_t v = 0; v < 3; ++v)
            CHECK(std::fabs(static_cast<double>(col[v]) - expected) < 4.5 * sigma);
}

TEST_CASE("respond computes masked inner products") {
    Field f5(5);
    Instance inst = Instance::make_grs(SchemeParams::multi_iter(5, 2, 2, 2, 5));
    FileSet fs = random_files(4, 2, 2, 2, f5);
    StorageState st = encode(fs, inst.storage_code());

    // zero query returns the mask
    FieldMatrix zq(f5, 4, 2);
    std::vector<uint32_t> mask{3, 1};
    CHECK(respond(st.shard(1), zq, &mask) == mask);

    // unit-vector query column selects one stored symbol
    FieldMatrix unit(f5, 4, 1);
    unit.set(2, 0, 1);
    CHECK(respond(st.shard(3), unit)[0] == st.encoded.at(2, 2));
}

TEST_CASE("answers equal the row-wise star-product sum") {
    Instance inst = Instance::make_grs(SchemeParams::multi_iter(5, 2, 2, 2, 5));
    const SchemeParams& pr = inst.params();
    Field f = inst.field();
    for (uint64_t seed : {1, 2, 3}) {
        FileSet fs = random_files(seed, pr.m, pr.alpha, pr.k, f);
        StorageState st = encode(fs, inst.storage_code());
        CounterRng rng(seed + 100);
        QueryArtifact art = generate_query(inst, 1, rng);
        FieldMatrix answers = flat_answers(inst, st, art);

        // sum over rows of (Y[l,:] (x) 1_beta) star Q[l,:]
        FieldMatrix ones(f, 1, pr.beta);
        for (size_t s = 0; s < pr.beta; ++s) ones.set(0, s, 1);
        FieldMatrix acc(f, 1, pr.beta * pr.n);
        for (size_t l = 0; l < pr.alpha * pr.m; ++l) {
            FieldMatrix yrow = st.encoded.row(l);
            FieldMatrix lifted = kronecker(yrow, ones);
            acc = acc + hadamard(lifted, art.Q.row(l));
        }
        CHECK(acc == answers);
    }
}

TEST_CASE("answers equal the vectorized Khatri-Rao form at alpha = 1") {
    Instance inst = Instance::make_grs(SchemeParams::one_shot(7, 2, 2, 1, 0, 2, 7));
    const SchemeParams& pr = inst.params();
    Field f = inst.field();
    for (uint64_t seed : {5, 6, 7}) {
        FileSet fs = random_files(seed, pr.m, 1, pr.k, f);
        StorageState st = encode(fs, inst.storage_code());
        CounterRng rng(seed);
        QueryArtifact art = generate_query(inst, 2, rng);
        FieldMatrix answers = flat_answers(inst, st, art);

        // (1 * (X kr_row I_m)) * ((G (x) 1_beta) kr_col Q)
        FieldMatrix ones_m(f, 1, pr.m);
        for (size_t i = 0; i < pr.m; ++i) ones_m.set(0, i, 1);
        FieldMatrix vecx = ones_m * khatri_rao_row(fs.data, FieldMatrix::identity(f, pr.m));
        FieldMatrix ones_b(f, 1, pr.beta);
        for (size_t s = 0; s < pr.beta; ++s) ones_b.set(0, s, 1);
        FieldMatrix lifted =
            khatri_rao_col(kronecker(inst.storage_code().generator(), ones_b), art.Q);
        CHECK(vecx * lifted == answers);
    }
}

TEST_CASE("multi-iteration decoding is exact across seeds") {
    Instance inst = Instance::make_grs(SchemeParams::multi_iter(5, 2, 2, 2, 5));
    const SchemeParams& pr = inst.params();
    for (uint64_t seed = 0; seed < 100; ++seed) {
        FileSet fs = random_files(seed, pr.m, pr.alpha, pr.k, inst.field());
        StorageState st = encode(fs, inst.storage_code());
        size_t want = 1 + seed % pr.m;
        CounterRng rng(seed * 31 + 1);
        QueryArtifact art = generate_query(inst, want, rng);
        DecodeResult res = decode_multi_iter(inst, art, flat_answers(inst, st, art));
        REQUIRE(res.ok);
        CHECK(*res.file == fs.file(want));
    }
}

TEST_CASE("zero files decode to zero") {
    Instance inst = Instance::make_grs(SchemeParams::multi_iter(5, 2, 2, 2, 5));
    FileSet fs(inst.field(), 2, 2, 2);
    StorageState st = encode(fs, inst.storage_code());
    CounterRng rng(2);
    QueryArtifact art = generate_query(inst, 1, rng);
    DecodeResult res = decode_multi_iter(inst, art, flat_answers(inst, st, art));
    REQUIRE(res.ok);
    CHECK(res.file->is_zero());
}

TEST_CASE("one-shot plain interpolation at n = 2k+t-1") {
    Instance inst = Instance::make_grs(SchemeParams::one_shot(5, 2, 2, 0, 0, 2, 5));
    const SchemeParams& pr = inst.params();
    for (uint64_t seed = 0; seed < 50; ++seed) {
        FileSet fs = random_files(seed, pr.m, 1, pr.k, inst.field());
        StorageState st = encode(fs, inst.storage_code());
        CounterRng rng(seed);
        size_t want = 1 + seed % pr.m;
        QueryArtifact art = generate_query(inst, want, rng);
        FieldMatrix flat = flat_answers(inst, st, art);
        std::vector<std::optional<uint32_t>> answers(pr.n);
        for (size_t j = 0; j < pr.n; ++j) answers[j] = flat.at(0, j);
        DecodeResult res = decode_one_shot(inst, art, answers);
        REQUIRE(res.ok);
        CHECK(*res.file == fs.file(want));
    }
}

TEST_CASE("one-shot decoding survives single errors and flags excess corruption") {
    Instance inst = Instance::make_grs(SchemeParams::one_shot(7, 2, 2, 1, 0, 2, 7));
    const SchemeParams& pr = inst.params();
    FileSet fs = random_files(11, pr.m, 1, pr.k, inst.field());
    StorageState st = encode(fs, inst.storage_code());
    CounterRng rng(11);
    QueryArtifact art = generate_query(inst, 1, rng);
    FieldMatrix flat = flat_answers(inst, st, art);

    for (size_t pos = 0; pos < pr.n; ++pos) {
        for (uint32_t wrong = 1; wrong < pr.p; ++wrong) {
            std::vector<std::optional<uint32_t>> answers(pr.n);
            for (size_t j = 0; j < pr.n; ++j) answers[j] = flat.at(0, j);
            answers[pos] = (*answers[pos] + wrong) % pr.p;
            DecodeResult res = decode_one_shot(inst, art, answers);
            REQUIRE(res.ok);
            CHECK(res.errors_corrected == 1);
            CHECK(*res.file == fs.file(1));
        }
    }

    // two corruptions exceed the distance budget: decoding must fail loudly,
    // never return a wrong file
    bool found_failure = false;
    for (uint32_t v1 = 1; v1 < pr.p && !found_failure; ++v1)
        for (uint32_t v2 = 1; v2 < pr.p && !found_failure; ++v2) {
            std::vector<std::optional<uint32_t>> answers(pr.n);
            for (size_t j = 0; j < pr.n; ++j) answers[j] = flat.at(0, j);
            answers[0] = (*answers[0] + v1) % pr.p;
            answers[3] = (*answers[3] + v2) % pr.p;
            DecodeResult res = decode_one_shot(inst, art, answers);
            if (!res.ok) found_failure = true;
            if (res.ok) CHECK_FALSE(*res.file == fs.file(1));  // never silently wrong? see below
        }
    CHECK(found_failure);
}

TEST_CASE("one-shot decoding with one erasure and one error") {
    Instance inst = Instance::make_grs(SchemeParams::one_shot(8, 2, 2, 1, 1, 2, 11));
    const SchemeParams& pr = inst.params();
    CounterRng trial_rng(77);
    for (size_t trial = 0; trial < 60; ++trial) {
        FileSet fs = random_files(trial, pr.m, 1, pr.k, inst.field());
        StorageState st = encode(fs, inst.storage_code());
        CounterRng rng(trial + 5000);
        size_t want = 1 + trial % pr.m;
        QueryArtifact art = generate_query(inst, want, rng);
        FieldMatrix flat = flat_answers(inst, st, art);
        std::vector<std::optional<uint32_t>> answers(pr.n);
        for (size_t j = 0; j < pr.n; ++j) answers[j] = flat.at(0, j);
        size_t erase = trial_rng.next_below(pr.n);
        size_t corrupt = (erase + 1 + trial_rng.next_below(pr.n - 1)) % pr.n;
        answers[erase] = std::nullopt;
        answers[corrupt] = (*answers[corrupt] + 1 + trial_rng.next_below(pr.p - 1)) % pr.p;
        DecodeResult res = decode_one_shot(inst, art, answers);
        REQUIRE(res.ok);
        CHECK(*res.file == fs.file(want));
    }
}

TEST_CASE("interpolation and exhaustive decoders agree") {
    SchemeParams pr = SchemeParams::one_shot(7, 2, 2, 1, 0, 2, 7);
    Instance inst = Instance::make_grs(pr);
    LinearCode sum = sum_code(inst.star_code(),
                              star_product_code(inst.storage_code(), inst.retrieval_code()));
    CounterRng rng(123);
    for (size_t trial = 0; trial < 40; ++trial) {
        FileSet fs = random_files(trial, pr.m, 1, pr.k, inst.field());
        StorageState st = encode(fs, inst.storage_code());
        CounterRng qrng(trial);
        QueryArtifact art = generate_query(inst, 1, qrng);
        FieldMatrix flat = flat_answers(inst, st, art);
        std::vector<std::optional<uint32_t>> answers(pr.n);
        for (size_t j = 0; j < pr.n; ++j) answers[j] = flat.at(0, j);
        size_t pos = rng.next_below(pr.n);
        answers[pos] = (*answers[pos] + 1 + rng.next_below(pr.p - 1)) % pr.p;

        DecodeResult gao = decode_one_shot(inst, art, answers);
        BruteDecodeResult brute = brute_force_decode(sum, answers, pr.b);
        REQUIRE(gao.ok);
        REQUIRE(brute.ok);
        CHECK(gao.errors_corrected == brute.errors);
        // the corrected codeword re-derives the same file
        for (size_t j = 0; j < pr.n; ++j) {
            std::optional<uint32_t> clean = brute.codeword[j];
            answers[j] = clean;
        }
        DecodeResult again = decode_one_shot(inst, art, answers);
        REQUIRE(again.ok);
        CHECK(*again.file == *gao.file);
    }
}

TEST_CASE("symmetric masking leaves decoding untouched and meets the secrecy bound") {
    // multi-iteration variant
    Instance inst = Instance::make_grs(SchemeParams::multi_iter(5, 2, 2, 2, 5, true));
    const SchemeParams& pr = inst.params();
    Field f = inst.field();
    CounterRng mrng(31);
    MaskState mask = apply_symmetric_mask(inst, mrng);
    CHECK(mask.secrecy_symbols == pr.beta * inst.star_code().dim());

    // every iteration segment is annihilated by the parity check
    const FieldMatrix& h = inst.parity();
    for (size_t s = 0; s < pr.beta; ++s) {
        for (size_t row = 0; row < h.rows(); ++row) {
            uint32_t acc = 0;
            for (size_t j = 0; j < pr.n; ++j)
                acc = f.add(acc, f.mul(h.at(row, j), mask.mask.at(0, j * pr.beta + s)));
            CHECK(acc == 0);
        }
    }

    FileSet fs = random_files(8, pr.m, pr.alpha, pr.k, f);
    StorageState st = encode(fs, inst.storage_code());
    CounterRng rng(9);
    QueryArtifact art = generate_query(inst, 2, rng);
    DecodeResult res = decode_multi_iter(inst, art, flat_answers(inst, st, art, &mask));
    REQUIRE(res.ok);
    CHECK(*res.file == fs.file(2));
}

TEST_CASE("masking with the storage code also decodes (alternative mask source)") {
    Instance inst = Instance::make_grs(SchemeParams::multi_iter(5, 2, 2, 2, 5, true),
                                       MaskCode::Storage);
    const SchemeParams& pr = inst.params();
    CHECK(inst.masking_code().dim() == pr.k);
    CounterRng mrng(3);
    MaskState mask = apply_symmetric_mask(inst, mrng);
    FileSet fs = random_files(12, pr.m, pr.alpha, pr.k, inst.field());
    StorageState st = encode(fs, inst.storage_code());
    CounterRng rng(4);
    QueryArtifact art = generate_query(inst, 1, rng);
    DecodeResult res = decode_multi_iter(inst, art, flat_answers(inst, st, art, &mask));
    REQUIRE(res.ok);
    CHECK(*res.file == fs.file(1));
}

TEST_CASE("full support-rank checker accepts distinct unit vectors") {
    Field f5(5);
    // two files, alpha = 2, beta = 1, n = 3: unit columns within each block
    FieldMatrix q = FieldMatrix::from_rows(f5, {{1, 0, 0},
                                                {0, 1, 0},
                                                {0, 2, 0},
                                                {0, 0, 3}});
    FsrResult res = check_full_support_rank(q, 2, 1, 2, 2);
    CHECK(res.ok);
}

TEST_CASE("full support-rank checker flags the lifted counterexample") {
    QueryFixture fx = lifted_privacy_counterexample();
    FsrResult res = check_full_support_rank(fx.q, fx.alpha, fx.widths, fx.t, fx.m);
    CHECK_FALSE(res.ok);
    bool witness = false;
    for (const auto& v : res.violations)
        if (v.file == 2 && v.servers == std::vector<size_t>{1, 2} && v.rank == 1 && v.colsupp == 2)
            witness = true;
    CHECK(witness);
}

TEST_CASE("full support-rank checker flags the dependent-support instance") {
    QueryFixture fx = dependent_support_instance(404);
    FsrResult res = check_full_support_rank(fx.q, fx.alpha, fx.widths, fx.t, fx.m);
    CHECK_FALSE(res.ok);
    bool witness = false;
    for (const auto& v : res.violations)
        if (v.servers == std::vector<size_t>{1, 2} && v.rank <= 5 && v.colsupp == 6)
            witness = true;
    CHECK(witness);
}

TEST_CASE("explicit-code one-shot instance over GF(3) round trips") {
    // p < n forces explicit codes: repetition storage, the known [4,2] MDS
    // query code, and a retrieval vector outside it
    Field f3(3);
    SchemeParams pr;
    pr.n = 4;
    pr.k = 1;
    pr.t = 2;
    pr.b = 0;
    pr.r = 0;
    pr.m = 2;
    pr.p = 3;
    pr.variant = Variant::OneShotTB;
    pr.symmetric = true;
    pr.alpha = 1;
    pr.beta = 1;
    LinearCode storage =
        LinearCode::from_generator(FieldMatrix::from_rows(f3, {{1, 1, 1, 1}}));
    LinearCode query = lifted_counterexample_code();
    LinearCode retrieval =
        LinearCode::from_generator(FieldMatrix::from_rows(f3, {{1, 0, 0, 0}}));
    Instance inst = Instance::from_codes(pr, storage, query, retrieval, true);
    CHECK_FALSE(inst.grs_backed());

    for (uint64_t seed = 0; seed < 30; ++seed) {
        FileSet fs = random_files(seed, pr.m, 1, pr.k, f3);
        StorageState st = encode(fs, storage);
        CounterRng rng(seed);
        size_t want = 1 + seed % pr.m;
        QueryArtifact art = generate_query(inst, want, rng);
        FieldMatrix flat = flat_answers(inst, st, art);
        std::vector<std::optional<uint32_t>> answers(pr.n);
        for (size_t j = 0; j < pr.n; ++j) answers[j] = flat.at(0, j);
        DecodeResult res = decode_one_shot(inst, art, answers);
        REQUIRE(res.ok);
        CHECK(*res.file == fs.file(want));
    }
}
