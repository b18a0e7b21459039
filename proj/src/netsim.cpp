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

#include "starpir/netsim.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>

namespace starpir {

namespace {

// stream ids for the per-retrieval RNG forks
constexpr uint64_t STREAM_FILES = 1;
constexpr uint64_t STREAM_QUERY = 2;
constexpr uint64_t STREAM_MASK = 3;
constexpr uint64_t STREAM_BYZANTINE = 16;

}  // namespace

Transcript run_retrieval(const Instance& inst, const std::vector<ServerBehavior>& behaviors,
                         size_t file_index, uint64_t seed, bool enforce_budgets) {
    const SchemeParams& pr = inst.params();
    if (behaviors.size() != pr.n)
        throw ShapeMismatchError("need one behavior per server");

    size_t byzantine = 0, nonresponsive = 0;
    std::map<size_t, size_t> group_sizes;
    for (const auto& b : behaviors) {
        if (b.kind == ServerBehavior::Kind::Byzantine) ++byzantine;
        if (b.kind == ServerBehavior::Kind::Nonresponsive) ++nonresponsive;
        if (b.kind == ServerBehavior::Kind::Colluding) ++group_sizes[b.group];
    }
    if (enforce_budgets) {
        if (byzantine > pr.b) throw BudgetExceededError("more Byzantine servers than budget b");
        if (nonresponsive > pr.r)
            throw BudgetExceededError("more nonresponsive servers than budget r");
        for (const auto& [g, size] : group_sizes)
            if (size > pr.t) throw BudgetExceededError("collusion group exceeds budget t");
    }

    FileSet files = random_files(CounterRng(seed, STREAM_FILES).next_u64(), pr.m, pr.alpha, pr.k,
                                 inst.field());
    StorageState storage = encode(files, inst.storage_code());

    CounterRng query_rng(seed, STREAM_QUERY);
    QueryArtifact artifact = generate_query(inst, file_index, query_rng);

    std::optional<MaskState> mask;
    if (pr.symmetric) {
        CounterRng mask_rng(seed, STREAM_MASK);
        mask = apply_symmetric_mask(inst, mask_rng);
    }

    Transcript tr{pr,     file_index, seed, artifact, mask, {}, {}, {}, 0,
                  files,  storage};
    tr.answers.resize(pr.n);

    for (size_t j = 1; j <= pr.n; ++j) {
        const ServerBehavior& beh = behaviors[j - 1];
        if (beh.kind == ServerBehavior::Kind::Nonresponsive) {
            tr.adversary_log.push_back({j, "nonresponsive", {}, {}});
            continue;
        }
        FieldMatrix block = artifact.Q.select_cols(psi_block(pr.beta, j));
        std::vector<uint32_t> mask_j;
        const std::vector<uint32_t>* mask_ptr = nullptr;
        if (mask) {
            for (size_t s = 0; s < pr.beta; ++s)
                mask_j.push_back(mask->mask.at(0, (j - 1) * pr.beta + s));
            mask_ptr = &mask_j;
        }
        std::vector<uint32_t> honest = respond(storage.shard(j), block, mask_ptr);
        if (beh.kind == ServerBehavior::Kind::Byzantine) {
            std::vector<uint32_t> corrupted;
            if (beh.forced_answer.has_value()) {
                corrupted = *beh.forced_answer;
                if (corrupted.size() != pr.beta)
                    throw ShapeMismatchError("forced answer must have beta symbols");
            } else {
                // uniform over the wrong values, so every corruption is real
                CounterRng brng(seed ^ beh.seed, STREAM_BYZANTINE + j);
                corrupted.resize(pr.beta);
                for (size_t s = 0; s < pr.beta; ++s) {
                    uint32_t shift = 1 + brng.next_element(pr.p - 1);
                    corrupted[s] = (honest[s] + shift) % pr.p;
                }
            }
            tr.adversary_log.push_back({j, "byzantine", honest, corrupted});
            tr.answers[j - 1] = corrupted;
        } else {
            tr.answers[j - 1] = honest;
        }
    }

    size_t responsive = pr.n - nonresponsive;
    tr.download_symbols = pr.beta * (pr.count_nonresponsive_download ? pr.n : responsive);

    if (pr.variant == Variant::MultiIterTPIR) {
        if (nonresponsive > 0) {
            tr.decoded.ok = false;
            tr.decoded.error = "missing answers in the all-responsive variant";
        } else {
            FieldMatrix flat(inst.field(), 1, pr.beta * pr.n);
            for (size_t j = 0; j < pr.n; ++j)
                for (size_t s = 0; s < pr.beta; ++s)
                    flat.set(0, j * pr.beta + s, (*tr.answers[j])[s]);
            tr.decoded = decode_multi_iter(inst, artifact, flat);
        }
    } else {
        std::vector<std::optional<uint32_t>> flat(pr.n);
        for (size_t j = 0; j < pr.n; ++j)
            if (tr.answers[j].has_value()) flat[j] = (*tr.answers[j])[0];
        tr.decoded = decode_one_shot(inst, artifact, flat);
    }
    return tr;
}

ColluderView colluder_view(const Transcript& tr, std::vector<size_t> group) {
    const SchemeParams& pr = tr.params;
    if (group.size() > pr.t) throw GroupTooLargeError("colluding set larger than t");
    std::sort(group.begin(), group.end());
    Field f = tr.query.Q.field();
    ColluderView v{FieldMatrix(f, pr.alpha * pr.m, pr.beta * group.size()),
                   {},
                   FieldMatrix(f, pr.alpha * pr.m, group.size()),
                   {}};
    if (!group.empty()) {
        v.queries = tr.query.Q.select_cols(psi(pr.beta, group));
        v.storage_cols = tr.storage.encoded.select_cols(group);
    }
    for (size_t j : group) {
        if (j < 1 || j > pr.n) throw OutOfRangeError("server index out of range");
        v.answers.push_back(tr.answers[j - 1]);
        if (tr.mask.has_value()) {
            for (size_t s = 0; s < pr.beta; ++s)
                v.mask_shares.push_back(tr.mask->mask.at(0, (j - 1) * pr.beta + s));
        }
    }
    return v;
}

std::string ColluderView::canonical_bytes() const {
    std::string out;
    auto put = [&out](uint64_t v) {
        for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    put(queries.rows());
    put(queries.cols());
    for (size_t i = 0; i < queries.rows(); ++i)
        for (size_t j = 0; j < queries.cols(); ++j) put(queries.at(i, j));
    for (const auto& a : answers) {
        put(a.has_value() ? 1 : 0);
        if (a)
            for (uint32_t x : *a) put(x);
    }
    for (size_t i = 0; i < storage_cols.rows(); ++i)
        for (size_t j = 0; j < storage_cols.cols(); ++j) put(storage_cols.at(i, j));
    for (uint32_t s : mask_shares) put(s);
    return out;
}

nlohmann::ordered_json Transcript::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "starpir.transcript.v1";
    j["params"] = params.to_json();
    j["file_index"] = file_index;
    j["seed"] = seed;
    j["query"] = query_to_json(query);
    j["mask"] = mask.has_value() ? mask_to_json(*mask) : nlohmann::ordered_json(nullptr);
    auto ans = nlohmann::ordered_json::array();
    for (const auto& a : answers) {
        if (!a.has_value()) {
            ans.push_back(nullptr);
        } else {
            auto row = nlohmann::ordered_json::array();
            for (uint32_t v : *a) row.push_back(v);
            ans.push_back(row);
        }
    }
    j["answers"] = ans;
    auto log = nlohmann::ordered_json::array();
    for (const auto& ev : adversary_log) {
        nlohmann::ordered_json e;
        e["server"] = ev.server;
        e["action"] = ev.action;
        e["original"] = ev.original;
        e["replaced"] = ev.replaced;
        log.push_back(e);
    }
    j["adversary_log"] = log;
    nlohmann::ordered_json dec;
    dec["ok"] = decoded.ok;
    if (decoded.ok && decoded.file.has_value()) {
        auto rows = nlohmann::ordered_json::array();
        for (size_t i = 0; i < decoded.file->rows(); ++i) {
            auto row = nlohmann::ordered_json::array();
            for (size_t c = 0; c < decoded.file->cols(); ++c) row.push_back(decoded.file->at(i, c));
            rows.push_back(row);
        }
        dec["file"] = rows;
        dec["error"] = nullptr;
    } else {
        dec["file"] = nullptr;
        dec["error"] = decoded.error;
    }
    dec["errors_corrected"] = decoded.errors_corrected;
    j["decoded"] = dec;
    j["download_symbols"] = download_symbols;
    return j;
}

}  // namespace starpir
