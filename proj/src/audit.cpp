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

#include "starpir/audit.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

namespace starpir {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "inconclusive";
    }
}

nlohmann::ordered_json AuditReport::to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["verdict"] = to_string(verdict);
    j["statistic"] = statistic;
    j["threshold"] = threshold;
    j["samples"] = samples;
    j["seed"] = seed;
    j["witness"] = witness;
    j["details"] = details;
    return j;
}

uint64_t default_enum_cap() {
    if (const char* env = std::getenv("PIR_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return uint64_t(1) << 22;
}

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 14695981039346656037ULL;
    for (char c : bytes) {
        h ^= static_cast<uint8_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

// regularized incomplete gamma, series branch (x < a+1)
double gammap_series(double a, double x) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// continued-fraction branch (x >= a+1), modified Lentz
double gammaq_cf(double a, double x) {
    const double fpmin = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / fpmin, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

std::string matrix_bytes(const FieldMatrix& m) {
    std::string out;
    out.reserve(m.rows() * m.cols() * 4 + 16);
    auto put = [&out](uint64_t v) {
        for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    put(m.rows());
    put(m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) put(m.at(i, j));
    return out;
}

std::vector<std::vector<size_t>> subsets_of_size(size_t n, size_t size) {
    std::vector<std::vector<size_t>> out;
    if (size == 0 || size > n) return out;
    std::vector<size_t> idx(size);
    for (size_t i = 0; i < size; ++i) idx[i] = i + 1;
    for (;;) {
        out.push_back(idx);
        size_t i = size;
        bool advanced = false;
        while (i-- > 0) {
            if (idx[i] + (size - i) <= n) {
                ++idx[i];
                for (size_t l = i + 1; l < size; ++l) idx[l] = idx[l - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

struct ChiSquare {
    double statistic = 0.0;
    double dof = 0.0;
};

constexpr size_t kViewBins = 64;

/// Two-sample chi-square over hashed colluder views of the query for file 1
/// vs file 2, `samples` independent draws each.
ChiSquare view_chi_square(const Instance& inst, const std::vector<size_t>& colluders,
                          size_t samples, uint64_t seed) {
    const SchemeParams& pr = inst.params();
    std::vector<size_t> cols = psi(pr.beta, colluders);
    std::array<std::array<uint64_t, kViewBins>, 2> hist{};
    uint64_t subset_tag = 0;
    for (size_t j : colluders) subset_tag = subset_tag * 131 + j;
    for (size_t side = 0; side < 2; ++side) {
        CounterRng rng(seed ^ (0x5151000 + subset_tag), side + 1);
        size_t file = side + 1;
        for (size_t s = 0; s < samples; ++s) {
            QueryArtifact art = generate_query(inst, file, rng);
            uint64_t h = fnv1a64(matrix_bytes(art.Q.select_cols(cols)));
            hist[side][h % kViewBins] += 1;
        }
    }
    ChiSquare out;
    double n1 = samples, n2 = samples, total = n1 + n2;
    size_t nonempty = 0;
    for (size_t bin = 0; bin < kViewBins; ++bin) {
        double rowsum = static_cast<double>(hist[0][bin] + hist[1][bin]);
        if (rowsum == 0) continue;
        ++nonempty;
        double e1 = n1 * rowsum / total, e2 = n2 * rowsum / total;
        double d1 = hist[0][bin] - e1, d2 = hist[1][bin] - e2;
        out.statistic += d1 * d1 / e1 + d2 * d2 / e2;
    }
    out.dof = nonempty > 1 ? static_cast<double>(nonempty - 1) : 1.0;
    return out;
}

bool structural_dual_distance(const Instance& inst, size_t* observed) {
    size_t d = min_distance(dual(inst.query_code()), default_enum_cap());
    if (observed) *observed = d;
    return d >= inst.params().t + 1;
}

}  // namespace

double chi2_survival(double x, double dof) {
    if (x <= 0) return 1.0;
    double a = dof / 2.0, xx = x / 2.0;
    if (xx < a + 1.0) return 1.0 - gammap_series(a, xx);
    return gammaq_cf(a, xx);
}

AuditReport audit_user_privacy(const Instance& inst, const std::vector<size_t>& colluders,
                               size_t samples, uint64_t seed) {
    AuditReport rep;
    rep.check = "user-privacy";
    rep.samples = samples;
    rep.seed = seed;
    rep.threshold = 0.01;
    if (colluders.empty()) {
        rep.verdict = Verdict::Pass;
        rep.details = {{"note", "empty colluding set sees nothing"}};
        return rep;
    }
    if (colluders.size() > inst.params().t)
        throw GroupTooLargeError("colluding set larger than t");

    size_t dual_dist = 0;
    bool structural = structural_dual_distance(inst, &dual_dist);
    ChiSquare cs = view_chi_square(inst, colluders, samples, seed);
    double pvalue = chi2_survival(cs.statistic, cs.dof);
    rep.statistic = cs.statistic;
    rep.details = {{"dual_distance", dual_dist},
                   {"required_dual_distance", inst.params().t + 1},
                   {"structural", structural},
                   {"p_value", pvalue},
                   {"dof", cs.dof},
                   {"bins", kViewBins}};
    if (!structural) {
        rep.verdict = Verdict::Fail;
        rep.witness = "dual distance " + std::to_string(dual_dist) + " < t+1";
        return rep;
    }
    rep.verdict = pvalue > rep.threshold ? Verdict::Pass : Verdict::Fail;
    if (rep.verdict == Verdict::Fail) rep.witness = "view distributions differ (chi-square)";
    return rep;
}

AuditReport audit_user_privacy_all_subsets(const Instance& inst, size_t samples, uint64_t seed) {
    const SchemeParams& pr = inst.params();
    AuditReport rep;
    rep.check = "user-privacy-all-subsets";
    rep.samples = samples;
    rep.seed = seed;
    rep.threshold = 0.01;

    size_t dual_dist = 0;
    bool structural = structural_dual_distance(inst, &dual_dist);

    double stat = 0, dof = 0;
    auto per_subset = nlohmann::ordered_json::array();
    for (const auto& T : subsets_of_size(pr.n, pr.t)) {
        ChiSquare cs = view_chi_square(inst, T, samples, seed);
        stat += cs.statistic;
        dof += cs.dof;
        per_subset.push_back({{"subset", T}, {"statistic", cs.statistic}, {"dof", cs.dof}});
    }
    double pvalue = chi2_survival(stat, dof);
    rep.statistic = stat;
    rep.details = {{"dual_distance", dual_dist},
                   {"required_dual_distance", pr.t + 1},
                   {"structural", structural},
                   {"p_value", pvalue},
                   {"dof", dof},
                   {"subsets", per_subset}};
    if (!structural) {
        rep.verdict = Verdict::Fail;
        rep.witness = "dual distance " + std::to_string(dual_dist) + " < t+1";
        return rep;
    }
    rep.verdict = pvalue > rep.threshold ? Verdict::Pass : Verdict::Fail;
    if (rep.verdict == Verdict::Fail) rep.witness = "pooled chi-square too large";
    return rep;
}

namespace {

/// Enumerate assignments of `cells` base-p digits, invoking fn on each.
void enumerate_assignments(uint64_t count, size_t cells, uint32_t p,
                           const std::function<void(const std::vector<uint32_t>&)>& fn) {
    std::vector<uint32_t> digits(cells, 0);
    for (uint64_t idx = 0;; ++idx) {
        fn(digits);
        if (idx + 1 >= count) break;
        size_t pos = 0;
        while (pos < cells) {
            if (++digits[pos] < p) break;
            digits[pos] = 0;
            ++pos;
        }
    }
}

}  // namespace

AuditReport audit_server_privacy(const Instance& inst, uint64_t seed, ServerPrivacyMode mode,
                                 uint64_t cap, size_t samples) {
    const SchemeParams& pr = inst.params();
    Field f = inst.field();
    AuditReport rep;
    rep.check = "server-privacy";
    rep.seed = seed;

    CounterRng rng(seed);
    QueryArtifact art = generate_query(inst, 1, rng);
    FieldMatrix desired(f, pr.alpha, pr.k);
    for (size_t i = 0; i < pr.alpha; ++i)
        for (size_t j = 0; j < pr.k; ++j) desired.set(i, j, rng.next_element(pr.p));

    const size_t undesired_cells = pr.alpha * pr.k * (pr.m - 1);
    const size_t mask_cells = pr.symmetric ? pr.beta * inst.masking_code().dim() : 0;

    auto answers_for = [&](const std::vector<uint32_t>& undesired,
                           const std::vector<uint32_t>& mask_msg) {
        FieldMatrix x(f, pr.alpha * pr.m, pr.k);
        size_t u = 0;
        for (size_t l = 1; l <= pr.m; ++l) {
            for (size_t i = 0; i < pr.alpha; ++i)
                for (size_t j = 0; j < pr.k; ++j) {
                    size_t row = (l - 1) * pr.alpha + i;
                    x.set(row, j, l == 1 ? desired.at(i, j) : undesired[u++]);
                }
        }
        FieldMatrix y = x * inst.storage_code().generator();
        std::vector<uint32_t> a(pr.beta * pr.n, 0);
        for (size_t j = 0; j < pr.n; ++j)
            for (size_t s = 0; s < pr.beta; ++s) {
                uint32_t acc = 0;
                for (size_t row = 0; row < y.rows(); ++row)
                    acc = f.add(acc, f.mul(y.at(row, j), art.Q.at(row, j * pr.beta + s)));
                a[j * pr.beta + s] = acc;
            }
        if (!mask_msg.empty()) {
            const LinearCode& mc = inst.masking_code();
            for (size_t s = 0; s < pr.beta; ++s) {
                std::vector<uint32_t> msg(mask_msg.begin() + s * mc.dim(),
                                          mask_msg.begin() + (s + 1) * mc.dim());
                std::vector<uint32_t> cw = mc.encode(msg);
                for (size_t j = 0; j < pr.n; ++j)
                    a[j * pr.beta + s] = f.add(a[j * pr.beta + s], cw[j]);
            }
        }
        return a;
    };

    auto serialize = [](const std::vector<uint32_t>& a) {
        std::string s;
        for (uint32_t v : a) {
            s += std::to_string(v);
            s += ',';
        }
        return s;
    };

    if (mode == ServerPrivacyMode::Exhaustive) {
        uint64_t undesired_count = 1, mask_count = 1;
        for (size_t i = 0; i < undesired_cells; ++i) {
            undesired_count *= pr.p;
            if (undesired_count > cap) throw TooLargeError("undesired-file enumeration beyond cap");
        }
        for (size_t i = 0; i < mask_cells; ++i) {
            mask_count *= pr.p;
            if (mask_count > cap) throw TooLargeError("mask enumeration beyond cap");
        }
        if (undesired_count * mask_count > cap)
            throw TooLargeError("server-privacy enumeration beyond cap");

        std::vector<std::multiset<std::string>> multisets;
        enumerate_assignments(undesired_count, undesired_cells, pr.p,
                              [&](const std::vector<uint32_t>& u) {
                                  std::multiset<std::string> ms;
                                  enumerate_assignments(
                                      mask_count, mask_cells, pr.p,
                                      [&](const std::vector<uint32_t>& mm) {
                                          ms.insert(serialize(answers_for(u, mm)));
                                      });
                                  multisets.push_back(std::move(ms));
                              });
        rep.samples = multisets.size();
        rep.details = {{"mode", "exhaustive"},
                       {"undesired_realizations", undesired_count},
                       {"mask_realizations", mask_count}};
        bool ok = true;
        for (size_t i = 1; i < multisets.size(); ++i) {
            if (multisets[i] != multisets[0]) {
                ok = false;
                rep.witness = "answer multiset differs between undesired realizations 0 and " +
                              std::to_string(i);
                break;
            }
        }
        rep.verdict = ok ? Verdict::Pass : Verdict::Fail;
        return rep;
    }

    // sampling mode: plug-in entropy of the answers over random undesired
    // files and masks, compared against beta * dim(mask) * log2 p
    std::map<std::string, size_t> hist;
    CounterRng srng(seed, 7);
    for (size_t s = 0; s < samples; ++s) {
        std::vector<uint32_t> u(undesired_cells), mm(mask_cells);
        for (auto& v : u) v = srng.next_element(pr.p);
        for (auto& v : mm) v = srng.next_element(pr.p);
        hist[serialize(answers_for(u, mm))] += 1;
    }
    double entropy = 0;
    for (const auto& [key, cnt] : hist) {
        double q = static_cast<double>(cnt) / samples;
        entropy -= q * std::log2(q);
    }
    double target = static_cast<double>(mask_cells) * std::log2(static_cast<double>(pr.p));
    rep.samples = samples;
    rep.statistic = entropy;
    rep.threshold = 0.01;
    rep.details = {{"mode", "sampling"}, {"target_entropy_bits", target}};
    if (target == 0) {
        rep.verdict = hist.size() == 1 ? Verdict::Pass : Verdict::Fail;
        return rep;
    }
    rep.verdict = std::fabs(entropy - target) <= 0.01 * target ? Verdict::Pass : Verdict::Fail;
    if (rep.verdict == Verdict::Fail)
        rep.witness = "empirical answer entropy off the mask dimension";
    return rep;
}

bool thick_restriction_hypothesis(const FieldMatrix& q, size_t alpha, size_t beta, size_t t,
                                  size_t m) {
    const size_t n = q.cols() / beta;
    size_t tsize = std::min(t, n);
    auto tsubsets = subsets_of_size(n, tsize);
    // all nonempty file subsets
    for (uint64_t fmask = 1; fmask < (uint64_t(1) << m); ++fmask) {
        std::vector<size_t> rows;
        for (size_t l = 0; l < m; ++l) {
            if (!(fmask & (uint64_t(1) << l))) continue;
            for (size_t i = 0; i < alpha; ++i) rows.push_back(l * alpha + i + 1);
        }
        for (const auto& T : tsubsets) {
            FieldMatrix block = q.submatrix(rows, psi(beta, T));
            if (rank(block) != colsupp(block).size()) return false;
        }
    }
    return true;
}

AuditReport oracle_khatri_rank(size_t trials, uint64_t seed) {
    AuditReport rep;
    rep.check = "khatri-rank-identity";
    rep.samples = trials;
    rep.seed = seed;
    CounterRng rng(seed);
    const uint32_t primes[3] = {3, 5, 7};
    size_t rejected = 0;

    for (size_t trial = 0; trial < trials; ++trial) {
        uint32_t p = primes[rng.next_below(3)];
        Field f(p);
        size_t k, t;
        do {
            k = 1 + rng.next_below(3);
            t = 1 + rng.next_below(3);
        } while (k + t - 1 > p);
        size_t beta = 1 + rng.next_below(2);
        size_t alpha = 1 + rng.next_below(3);
        size_t len = k + t - 1;
        LinearCode g = grs(GrsSpec::standard(f, len, k, 0));

        // rejection-sample a q whose thick restrictions satisfy the rank
        // hypothesis; proposals occasionally inject a dependent duplicate
        // column, which the verifier must throw out
        FieldMatrix q(f, alpha, beta * len);
        for (;;) {
            q = FieldMatrix(f, alpha, beta * len);
            size_t maxsupp = std::min(alpha, beta * len);
            size_t s = rng.next_below(maxsupp + 1);
            std::vector<size_t> cols(beta * len);
            for (size_t i = 0; i < cols.size(); ++i) cols[i] = i;
            for (size_t i = 0; i < cols.size(); ++i)
                std::swap(cols[i], cols[i + rng.next_below(cols.size() - i)]);
            for (size_t c = 0; c < s; ++c)
                for (size_t row = 0; row < alpha; ++row)
                    q.set(row, cols[c], rng.next_element(p));
            if (s > 0 && s < beta * len && rng.next_below(100) < 30) {
                // duplicate one supported column elsewhere (likely dependent)
                uint32_t scale = 1 + rng.next_element(p - 1);
                for (size_t row = 0; row < alpha; ++row)
                    q.set(row, cols[s], f.mul(scale, q.at(row, cols[0])));
            }
            if (thick_restriction_hypothesis(q, alpha, beta, t, 1)) break;
            ++rejected;
        }

        FieldMatrix ones_row(f, 1, beta);
        for (size_t i = 0; i < beta; ++i) ones_row.set(0, i, 1);
        FieldMatrix lifted = khatri_rao_col(kronecker(g.generator(), ones_row), q);
        size_t lhs = rank(lifted);
        size_t rhs = colsupp(q).size();
        if (lhs != rhs) {
            rep.verdict = Verdict::Fail;
            rep.witness = "trial " + std::to_string(trial) + ": rank " + std::to_string(lhs) +
                          " != colsupp " + std::to_string(rhs);
            rep.details = {{"trial", trial}, {"p", p}, {"k", k}, {"t", t},
                           {"alpha", alpha}, {"beta", beta}};
            return rep;
        }
    }
    rep.verdict = Verdict::Pass;
    rep.details = {{"rejected_proposals", rejected}};
    return rep;
}

AuditReport oracle_answer_entropy(const LinearCode& code, const FieldMatrix& q, size_t alpha,
                                  size_t beta, size_t m, const std::vector<size_t>& files,
                                  uint64_t cap) {
    AuditReport rep;
    rep.check = "answer-entropy";
    const Field& f = code.field();
    const uint32_t p = f.modulus();
    const size_t len = code.length();
    const size_t k = code.dim();
    if (q.rows() != alpha * m || q.cols() != beta * len)
        throw ShapeMismatchError("query restriction shape mismatch");
    const size_t t = len - k + 1;  // |N| = k+t-1 restriction

    uint64_t states = 1;
    for (size_t i = 0; i < alpha * m * k; ++i) {
        states *= p;
        if (states > cap) throw TooLargeError("data enumeration beyond cap");
    }

    if (!thick_restriction_hypothesis(q, alpha, beta, t, m)) {
        rep.verdict = Verdict::Inconclusive;
        rep.witness = "query restriction violates the rank hypothesis";
        return rep;
    }

    std::vector<size_t> file_rows;
    for (size_t l : files)
        for (size_t i = 0; i < alpha; ++i) file_rows.push_back((l - 1) * alpha + i);

    std::vector<size_t> rows1;
    for (size_t r : file_rows) rows1.push_back(r + 1);
    size_t support = colsupp(q.select_rows(rows1)).size();
    uint64_t expected_values = 1;
    for (size_t i = 0; i < support; ++i) expected_values *= p;

    std::map<std::string, uint64_t> hist;
    enumerate_assignments(states, alpha * m * k, p, [&](const std::vector<uint32_t>& digits) {
        FieldMatrix x(f, alpha * m, k);
        size_t u = 0;
        for (size_t row = 0; row < alpha * m; ++row)
            for (size_t j = 0; j < k; ++j) x.set(row, j, digits[u++]);
        FieldMatrix y = x * code.generator();
        std::vector<uint32_t> v(beta * len, 0);
        for (size_t r : file_rows)
            for (size_t j = 0; j < len; ++j)
                for (size_t s = 0; s < beta; ++s)
                    v[j * beta + s] =
                        f.add(v[j * beta + s], f.mul(y.at(r, j), q.at(r, j * beta + s)));
        std::string key;
        for (uint32_t x2 : v) {
            key += std::to_string(x2);
            key += ',';
        }
        hist[key] += 1;
    });

    rep.samples = states;
    rep.details = {{"colsupp", support},
                   {"distinct_values", hist.size()},
                   {"expected_values", expected_values}};
    if (hist.size() != expected_values) {
        rep.verdict = Verdict::Fail;
        rep.witness = "answer support is not p^|colsupp|";
        return rep;
    }
    uint64_t want = states / expected_values;
    for (const auto& [key, cnt] : hist) {
        if (cnt != want) {
            rep.verdict = Verdict::Fail;
            rep.witness = "answer distribution not uniform at value " + key;
            return rep;
        }
    }
    rep.verdict = Verdict::Pass;
    return rep;
}

AuditReport oracle_support_expectation(const QuerySampler& sampler, size_t alpha,
                                       const std::vector<size_t>& files, size_t samples,
                                       uint64_t seed) {
    AuditReport rep;
    rep.check = "support-expectation";
    rep.samples = samples;
    rep.seed = seed;
    rep.threshold = 3.0;
    if (samples == 0) {
        rep.verdict = Verdict::Inconclusive;
        rep.witness = "no samples requested";
        return rep;
    }
    std::vector<size_t> rows1;
    for (size_t l : files)
        for (size_t i = 0; i < alpha; ++i) rows1.push_back((l - 1) * alpha + i + 1);

    double mean[2] = {0, 0}, m2[2] = {0, 0};
    for (size_t side = 0; side < 2; ++side) {
        CounterRng rng(seed, 101 + side);
        for (size_t s = 0; s < samples; ++s) {
            FieldMatrix q = sampler(side + 1, rng);
            double v = static_cast<double>(colsupp(q.select_rows(rows1)).size());
            double delta = v - mean[side];
            mean[side] += delta / static_cast<double>(s + 1);
            m2[side] += delta * (v - mean[side]);
        }
    }
    double var1 = m2[0] / std::max<double>(1, samples - 1);
    double var2 = m2[1] / std::max<double>(1, samples - 1);
    double se = std::sqrt(var1 / samples + var2 / samples);
    double diff = std::fabs(mean[0] - mean[1]);
    rep.statistic = se > 0 ? diff / se : (diff == 0 ? 0.0 : 1e9);
    rep.details = {{"mean_i1", mean[0]}, {"mean_i2", mean[1]}, {"pooled_se", se}};
    if (se == 0) {
        rep.verdict = diff == 0 ? Verdict::Pass : Verdict::Fail;
    } else {
        rep.verdict = diff < 3.0 * se ? Verdict::Pass : Verdict::Fail;
    }
    if (rep.verdict == Verdict::Fail)
        rep.witness = "support means differ by more than 3 pooled standard errors";
    return rep;
}

AuditReport oracle_support_expectation(const Instance& inst, const std::vector<size_t>& files,
                                       size_t samples, uint64_t seed) {
    QuerySampler sampler = [&inst](size_t file_index, CounterRng& rng) {
        return generate_query(inst, file_index, rng).Q;
    };
    return oracle_support_expectation(sampler, inst.params().alpha, files, samples, seed);
}

Rational measure_rate(const Transcript& tr) {
    if (!tr.decoded.ok) throw DecodeFailedError("rate undefined: decoding failed");
    return Rational(BigInt(tr.params.alpha * tr.params.k), BigInt(tr.download_symbols));
}

Rational measure_secrecy(const Instance& inst) {
    const SchemeParams& pr = inst.params();
    return Rational(BigInt(pr.beta * inst.masking_code().dim()), BigInt(pr.alpha * pr.k));
}

}  // namespace starpir
