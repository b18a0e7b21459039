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

#include <nlohmann/json.hpp>

#include <functional>

#include "starpir/capacity.hpp"
#include "starpir/netsim.hpp"

namespace starpir {

struct DecodeFailedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

struct AuditReport {
    std::string check;
    Verdict verdict = Verdict::Inconclusive;
    double statistic = 0.0;
    double threshold = 0.0;
    size_t samples = 0;
    uint64_t seed = 0;
    std::string witness;          // populated on Fail
    nlohmann::ordered_json details;

    bool passed() const { return verdict == Verdict::Pass; }
    nlohmann::ordered_json to_json() const;
};

/// Exhaustive-enumeration cap; PIR_ENUM_CAP overrides the 2^22 default.
uint64_t default_enum_cap();

/// Survival function of the chi-square distribution (upper regularized
/// incomplete gamma Q(dof/2, x/2)).
double chi2_survival(double x, double dof);

/// User privacy for one colluding set: structural certificate (dual distance
/// of the query code >= t+1, exact) plus a seeded two-sample chi-square over
/// hashed query restrictions for file 1 vs file 2. Pass needs both.
AuditReport audit_user_privacy(const Instance& inst, const std::vector<size_t>& colluders,
                               size_t samples, uint64_t seed);

/// Same test pooled over every size-t subset: per-subset statistics add into
/// one chi-square with summed degrees of freedom.
AuditReport audit_user_privacy_all_subsets(const Instance& inst, size_t samples, uint64_t seed);

enum class ServerPrivacyMode { Exhaustive, Sampling };

/// Server privacy: with a fixed desired-file realization and fixed query,
/// the multiset of answer vectors over the shared randomness must not depend
/// on the undesired files. Exhaustive mode enumerates both; sampling mode
/// estimates the residual answer entropy against beta*dim(mask)*log2(p).
AuditReport audit_server_privacy(const Instance& inst, uint64_t seed,
                                 ServerPrivacyMode mode = ServerPrivacyMode::Exhaustive,
                                 uint64_t cap = default_enum_cap(), size_t samples = 1 << 16);

/// Rank identity rank((G (x) 1_beta) (.) q) = |colsupp(q)| on rejection-
/// sampled matrices satisfying the thick-restriction hypothesis; exact.
AuditReport oracle_khatri_rank(size_t trials, uint64_t seed);

/// Exhaustive uniformity of the restricted answer sum over all data
/// realizations: uniform on exactly p^{|colsupp|} values. `code` is the
/// [k+t-1, k] restriction of the storage code.
AuditReport oracle_answer_entropy(const LinearCode& code, const FieldMatrix& q, size_t alpha,
                                  size_t beta, size_t m, const std::vector<size_t>& files,
                                  uint64_t cap = default_enum_cap());

using QuerySampler = std::function<FieldMatrix(size_t file_index, CounterRng& rng)>;

/// Column-support expectation equality between two file indices, 3-sigma
/// two-sample test on the empirical means.
AuditReport oracle_support_expectation(const QuerySampler& sampler, size_t alpha,
                                       const std::vector<size_t>& files, size_t samples,
                                       uint64_t seed);
AuditReport oracle_support_expectation(const Instance& inst, const std::vector<size_t>& files,
                                       size_t samples, uint64_t seed);

/// Exact rationals: rate = alpha*k / download, secrecy = shared randomness
/// per file symbol.
Rational measure_rate(const Transcript& tr);
Rational measure_secrecy(const Instance& inst);

/// Hypothesis behind the answer-uniformity oracle: every (file subset,
/// t-subset) restriction has rank equal to its column support.
bool thick_restriction_hypothesis(const FieldMatrix& q, size_t alpha, size_t beta, size_t t,
                                  size_t m);

uint64_t fnv1a64(const std::string& bytes);

}  // namespace starpir
