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

struct BudgetExceededError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GroupTooLargeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ServerBehavior {
    enum class Kind { Honest, Colluding, Byzantine, Nonresponsive };
    Kind kind = Kind::Honest;
    size_t group = 0;     // collusion group id
    uint64_t seed = 0;    // Byzantine value stream
    std::optional<std::vector<uint32_t>> forced_answer;  // targeted corruption

    static ServerBehavior honest() { return {}; }
    static ServerBehavior colluding(size_t group) {
        return {Kind::Colluding, group, 0, std::nullopt};
    }
    static ServerBehavior byzantine(uint64_t seed) {
        return {Kind::Byzantine, 0, seed, std::nullopt};
    }
    static ServerBehavior byzantine_fixed(std::vector<uint32_t> answer) {
        return {Kind::Byzantine, 0, 0, std::move(answer)};
    }
    static ServerBehavior nonresponsive() {
        return {Kind::Nonresponsive, 0, 0, std::nullopt};
    }
};

struct AdversaryEvent {
    size_t server = 0;  // 1-based
    std::string action;
    std::vector<uint32_t> original;
    std::vector<uint32_t> replaced;
};

/// Full record of one protocol run. The stored files and encoding are kept
/// in memory for auditing; the JSON form carries exactly the protocol-visible
/// fields with a stable key order.
struct Transcript {
    SchemeParams params;
    size_t file_index = 0;
    uint64_t seed = 0;
    QueryArtifact query;
    std::optional<MaskState> mask;
    std::vector<std::optional<std::vector<uint32_t>>> answers;  // per server
    std::vector<AdversaryEvent> adversary_log;
    DecodeResult decoded;
    size_t download_symbols = 0;

    FileSet files;
    StorageState storage;

    nlohmann::ordered_json to_json() const;
};

/// Execute one retrieval end to end: encode seeded random files, generate the
/// query, collect per-server answers under the given behaviors, decode.
/// Behavior counts are validated against the (t, b, r) budgets unless
/// `enforce_budgets` is cleared (to demonstrate over-budget decode failures);
/// decode failures are recorded in the transcript, never thrown.
Transcript run_retrieval(const Instance& inst, const std::vector<ServerBehavior>& behaviors,
                         size_t file_index, uint64_t seed, bool enforce_budgets = true);

/// Everything a colluding set sees: its query blocks, answers, stored
/// columns, and mask shares.
struct ColluderView {
    FieldMatrix queries;       // alpha*m x beta*|group|
    std::vector<std::optional<std::vector<uint32_t>>> answers;
    FieldMatrix storage_cols;  // alpha*m x |group|
    std::vector<uint32_t> mask_shares;

    /// Canonical serialization (sorted server order is the caller's duty;
    /// group vectors are sorted by the accessor below).
    std::string canonical_bytes() const;
};

ColluderView colluder_view(const Transcript& tr, std::vector<size_t> group);

}  // namespace starpir
