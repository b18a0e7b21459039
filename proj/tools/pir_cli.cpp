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

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

#include "starpir/audit.hpp"
#include "starpir/fixtures.hpp"

namespace {

using namespace starpir;

constexpr int EXIT_PASS = 0;
constexpr int EXIT_CHECK_FAILED = 1;
constexpr int EXIT_USAGE = 2;

struct CommonOpts {
    size_t n = 0, k = 0, t = 0, b = 0, r = 0, m = 2;
    uint32_t q = 0;
    std::string variant = "multi-iter";
    bool symmetric = false;
    bool exclude_nonresponsive_download = false;
};

void add_scheme_flags(CLI::App* cmd, CommonOpts& o, bool need_m = true) {
    cmd->add_option("--n", o.n, "number of servers")->required();
    cmd->add_option("--k", o.k, "storage code dimension")->required();
    cmd->add_option("--t", o.t, "collusion budget")->required();
    cmd->add_option("--b", o.b, "Byzantine budget");
    cmd->add_option("--r", o.r, "nonresponsive budget");
    if (need_m) cmd->add_option("--m", o.m, "number of files")->required();
    cmd->add_option("--q", o.q, "field size (prime)")->required();
    cmd->add_option("--variant", o.variant, "multi-iter | one-shot")
        ->check(CLI::IsMember({"multi-iter", "one-shot"}));
    cmd->add_flag("--symmetric", o.symmetric, "add shared-randomness masking");
    cmd->add_flag("--exclude-nonresponsive-download", o.exclude_nonresponsive_download,
                  "count only responsive servers in the download cost");
}

SchemeParams params_from(const CommonOpts& o) {
    SchemeParams p;
    if (o.variant == "one-shot") {
        p = SchemeParams::one_shot(o.n, o.k, o.t, o.b, o.r, o.m, o.q, o.symmetric);
    } else {
        if (o.b != 0 || o.r != 0)
            throw InfeasibleParamsError("--b/--r require --variant one-shot");
        p = SchemeParams::multi_iter(o.n, o.k, o.t, o.m, o.q, o.symmetric);
    }
    p.count_nonresponsive_download = !o.exclude_nonresponsive_download;
    return p;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        f << j.dump(2) << "\n";
    }
}

int report_exit(const AuditReport& rep, bool json, const std::string& out_path) {
    if (json) {
        emit(rep.to_json(), out_path);
    } else {
        std::cout << rep.check << ": " << to_string(rep.verdict);
        if (!rep.witness.empty()) std::cout << " (" << rep.witness << ")";
        std::cout << "\n";
    }
    return rep.passed() ? EXIT_PASS : EXIT_CHECK_FAILED;
}

int run_demo(const CommonOpts& o, size_t file_index, uint64_t seed, bool json,
             const std::string& out_path) {
    Instance inst = Instance::make_grs(params_from(o));
    std::vector<ServerBehavior> behaviors(o.n, ServerBehavior::honest());
    Transcript tr = run_retrieval(inst, behaviors, file_index, seed);
    if (json || !out_path.empty()) emit(tr.to_json(), out_path);
    if (!tr.decoded.ok) {
        std::cout << "decode: FAILED (" << tr.decoded.error << ")\n";
        return EXIT_CHECK_FAILED;
    }
    bool exact = *tr.decoded.file == tr.files.file(file_index);
    std::cout << "decode: " << (exact ? "exact" : "MISMATCH") << "\n";
    std::cout << "rate: " << to_fraction_string(measure_rate(tr)) << "\n";
    std::cout << "download_symbols: " << tr.download_symbols << "\n";
    if (inst.params().symmetric)
        std::cout << "secrecy: " << to_fraction_string(measure_secrecy(inst)) << "\n";
    return exact ? EXIT_PASS : EXIT_CHECK_FAILED;
}

int run_fixtures(uint64_t seed, bool json, const std::string& out_path) {
    nlohmann::ordered_json out;
    bool ok = true;

    QueryFixture lifted = lifted_privacy_counterexample();
    FsrResult res1 = check_full_support_rank(lifted.q, lifted.alpha, lifted.widths, lifted.t,
                                             lifted.m);
    bool found = false;
    for (const auto& v : res1.violations) {
        if (v.file == 2 && v.servers == std::vector<size_t>{1, 2} && v.rank == 1 &&
            v.colsupp == 2)
            found = true;
    }
    bool first_ok = !res1.ok && found;
    ok = ok && first_ok;
    out["lifted_counterexample"] = {{"flagged", !res1.ok},
                                    {"expected_witness_found", found},
                                    {"violations", res1.violations.size()}};
    std::cout << "lifted 4x7 realization over GF(3): "
              << (first_ok ? "violation at (file 2, servers {1,2}), rank 1 < colsupp 2"
                           : "UNEXPECTED verdict")
              << "\n";

    QueryFixture dep = dependent_support_instance(seed);
    FsrResult res2 = check_full_support_rank(dep.q, dep.alpha, dep.widths, dep.t, dep.m);
    bool second_ok = !res2.ok;
    size_t rank_seen = 0, supp_seen = 0;
    for (const auto& v : res2.violations) {
        if (v.servers == std::vector<size_t>{1, 2}) {
            rank_seen = v.rank;
            supp_seen = v.colsupp;
        }
    }
    second_ok = second_ok && rank_seen <= 5 && supp_seen == 6;
    ok = ok && second_ok;
    out["dependent_support_instance"] = {{"flagged", !res2.ok},
                                         {"rank", rank_seen},
                                         {"colsupp", supp_seen}};
    std::cout << "6x10 dependent-support instance over GF(101): "
              << (second_ok ? "violation, rank " + std::to_string(rank_seen) + " < colsupp 6"
                            : "UNEXPECTED verdict")
              << "\n";

    // a generated star-product query, reported as observed
    SchemeParams pr = SchemeParams::multi_iter(5, 2, 2, 2, 5);
    Instance inst = Instance::make_grs(pr);
    CounterRng rng(seed, 17);
    QueryArtifact art = generate_query(inst, 1, rng);
    FsrResult res3 = check_full_support_rank(art.Q, pr.alpha, pr.beta, pr.t, pr.m);
    out["generated_query"] = {{"flagged", !res3.ok}, {"violations", res3.violations.size()}};
    std::cout << "generated star-product query at (5,2,2): "
              << (res3.ok ? "no violation" : std::to_string(res3.violations.size()) +
                                                 " support-rank violations (dense query rows)")
              << "\n";

    if (json || !out_path.empty()) emit(out, out_path);
    return ok ? EXIT_PASS : EXIT_CHECK_FAILED;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"star-product PIR/SPIR toolkit"};
    app.require_subcommand(1);

    bool json = false;
    std::string out_path;
    app.add_flag("--json", json, "emit JSON reports");
    app.add_option("--out", out_path, "write the JSON report to a file");

    // demo
    CommonOpts demo_opts;
    size_t demo_file = 1;
    uint64_t demo_seed = 0;
    auto* demo = app.add_subcommand("demo", "run one retrieval end to end");
    add_scheme_flags(demo, demo_opts);
    demo->add_option("--file", demo_file, "requested file index (1-based)");
    demo->add_option("--seed", demo_seed, "PRNG seed")->required();

    // audit
    auto* audit = app.add_subcommand("audit", "privacy and correctness audits");
    audit->require_subcommand(1);
    CommonOpts priv_opts;
    size_t priv_samples = 10000;
    uint64_t priv_seed = 0;
    auto* priv = audit->add_subcommand("privacy", "user privacy (structural + chi-square)");
    add_scheme_flags(priv, priv_opts);
    priv->add_option("--samples", priv_samples, "samples per file index");
    priv->add_option("--seed", priv_seed, "PRNG seed")->required();

    CommonOpts sp_opts;
    uint64_t sp_seed = 0;
    bool sp_sampling = false;
    size_t sp_samples = 1 << 16;
    auto* sp = audit->add_subcommand("server-privacy", "server privacy (exhaustive/sampling)");
    add_scheme_flags(sp, sp_opts);
    sp->add_option("--seed", sp_seed, "PRNG seed")->required();
    sp->add_flag("--sampling", sp_sampling, "entropy-based sampling mode");
    sp->add_option("--samples", sp_samples, "samples in sampling mode");

    CommonOpts corr_opts;
    size_t corr_trials = 100;
    uint64_t corr_seed = 0;
    auto* corr = audit->add_subcommand("correctness", "seeded end-to-end retrieval trials");
    add_scheme_flags(corr, corr_opts);
    corr->add_option("--trials", corr_trials, "number of seeded retrievals");
    corr->add_option("--seed", corr_seed, "PRNG seed")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive and sampled identities");
    oracle->require_subcommand(1);
    size_t kh_trials = 500;
    uint64_t kh_seed = 0;
    auto* kh = oracle->add_subcommand("khatri", "lifted-query rank identity");
    kh->add_option("--trials", kh_trials, "number of sampled instances");
    kh->add_option("--seed", kh_seed, "PRNG seed")->required();

    auto* ent = oracle->add_subcommand("entropy", "exhaustive answer uniformity");
    uint64_t ent_cap = 0;
    ent->add_option("--cap", ent_cap, "enumeration cap override");

    CommonOpts supp_opts;
    size_t supp_samples = 10000;
    uint64_t supp_seed = 0;
    std::vector<size_t> supp_files{1};
    auto* supp = oracle->add_subcommand("support", "column-support expectation equality");
    add_scheme_flags(supp, supp_opts);
    supp->add_option("--samples", supp_samples, "samples per file index");
    supp->add_option("--files", supp_files, "file subset (1-based)");
    supp->add_option("--seed", supp_seed, "PRNG seed")->required();

    // capacity
    auto* cap = app.add_subcommand("capacity", "closed-form capacity calculators");
    cap->require_subcommand(1);
    struct CapOpts {
        size_t n = 0, k = 0, t = 0, b = 0, r = 0, m = 2, L = 0, beta = 1;
    } co;
    auto add_nkt = [&](CLI::App* c, bool with_m, bool with_br) {
        c->add_option("--n", co.n)->required();
        c->add_option("--k", co.k)->required();
        c->add_option("--t", co.t)->required();
        if (with_br) {
            c->add_option("--b", co.b);
            c->add_option("--r", co.r);
        }
        if (with_m) c->add_option("--m", co.m);
    };
    auto* c1 = cap->add_subcommand("tpir-fsr", "finite-m TPIR capacity");
    add_nkt(c1, true, false);
    auto* c2 = cap->add_subcommand("asymptotic", "asymptotic / strongly linear capacity");
    add_nkt(c2, false, true);
    auto* c3 = cap->add_subcommand("tbspir", "symmetric capacity");
    add_nkt(c3, false, true);
    auto* c4 = cap->add_subcommand("secrecy", "secrecy-rate lower bound");
    add_nkt(c4, false, true);
    auto* c5 = cap->add_subcommand("tb-upper", "Byzantine upper bound (believed loose)");
    add_nkt(c5, true, true);
    auto* c6 = cap->add_subcommand("download", "optimal download cost ceil(L/C)");
    add_nkt(c6, true, false);
    c6->add_option("--L", co.L, "subpacketization (file symbols)")->required();
    auto* c7 = cap->add_subcommand("regime", "asymptotic-regime file threshold");
    add_nkt(c7, false, false);
    c7->add_option("--beta", co.beta, "iterations per file")->required();

    // fixtures
    uint64_t fix_seed = 0;
    auto* fix = app.add_subcommand("fixtures", "replay the known support-rank counterexamples");
    fix->add_option("--seed", fix_seed, "PRNG seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return EXIT_USAGE;
    }

    try {
        if (demo->parsed()) return run_demo(demo_opts, demo_file, demo_seed, json, out_path);

        if (priv->parsed()) {
            Instance inst = Instance::make_grs(params_from(priv_opts));
            return report_exit(audit_user_privacy_all_subsets(inst, priv_samples, priv_seed),
                               json, out_path);
        }
        if (sp->parsed()) {
            CommonOpts o = sp_opts;
            o.symmetric = true;
            Instance inst = Instance::make_grs(params_from(o));
            auto mode = sp_sampling ? ServerPrivacyMode::Sampling : ServerPrivacyMode::Exhaustive;
            return report_exit(
                audit_server_privacy(inst, sp_seed, mode, default_enum_cap(), sp_samples), json,
                out_path);
        }
        if (corr->parsed()) {
            Instance inst = Instance::make_grs(params_from(corr_opts));
            const SchemeParams& pr = inst.params();
            std::vector<ServerBehavior> behaviors(pr.n, ServerBehavior::honest());
            CounterRng rng(corr_seed);
            for (size_t trial = 0; trial < corr_trials; ++trial) {
                size_t file = 1 + trial % pr.m;
                Transcript tr = run_retrieval(inst, behaviors, file, rng.next_u64());
                if (!tr.decoded.ok || !(*tr.decoded.file == tr.files.file(file))) {
                    std::cout << "correctness: FAIL at trial " << trial << "\n";
                    return EXIT_CHECK_FAILED;
                }
            }
            std::cout << "correctness: pass (" << corr_trials << " trials)\n";
            return EXIT_PASS;
        }
        if (kh->parsed())
            return report_exit(oracle_khatri_rank(kh_trials, kh_seed), json, out_path);
        if (ent->parsed()) {
            uint64_t cap_val = ent_cap > 0 ? ent_cap : default_enum_cap();
            // built-in exhaustive instances at p = 2 and p = 3
            Field f2(2), f3(3);
            LinearCode parity3 =
                LinearCode::from_generator(FieldMatrix::from_rows(f2, {{1, 0, 1}, {0, 1, 1}}));
            FieldMatrix q1 = FieldMatrix::from_rows(f2, {{1, 0, 0}, {0, 1, 0}});
            AuditReport r1 = oracle_answer_entropy(parity3, q1, 1, 1, 2, {1, 2}, cap_val);
            LinearCode grs32 = grs(GrsSpec::standard(f3, 3, 2, 0));
            FieldMatrix q2 = FieldMatrix::from_rows(f3, {{1, 0, 0}, {0, 2, 0}});
            AuditReport r2 = oracle_answer_entropy(grs32, q2, 1, 1, 2, {1, 2}, cap_val);
            bool ok = r1.passed() && r2.passed();
            std::cout << "answer-entropy: " << (ok ? "pass" : "fail") << "\n";
            if (json || !out_path.empty())
                emit(nlohmann::json{{"p2", r1.to_json()}, {"p3", r2.to_json()}}, out_path);
            return ok ? EXIT_PASS : EXIT_CHECK_FAILED;
        }
        if (supp->parsed()) {
            Instance inst = Instance::make_grs(params_from(supp_opts));
            return report_exit(
                oracle_support_expectation(inst, supp_files, supp_samples, supp_seed), json,
                out_path);
        }

        auto print_rational = [&](const Rational& v) {
            std::cout << to_fraction_string(v) << "\n";
            return EXIT_PASS;
        };
        if (c1->parsed()) return print_rational(cap_tpir_fsr(co.n, co.k, co.t, co.m));
        if (c2->parsed()) return print_rational(cap_asymptotic(co.n, co.k, co.t, co.b, co.r));
        if (c3->parsed()) return print_rational(cap_tbspir(co.n, co.k, co.t, co.b, co.r));
        if (c4->parsed()) return print_rational(secrecy_bound(co.n, co.k, co.t, co.b, co.r));
        if (c5->parsed())
            return print_rational(cap_tbpir_upper(co.n, co.k, co.t, co.b, co.r, co.m));
        if (c6->parsed()) {
            std::cout << optimal_download(co.L, co.n, co.k, co.t, co.m).str() << "\n";
            return EXIT_PASS;
        }
        if (c7->parsed()) {
            RegimeResult res = asymptotic_regime(co.n, co.k, co.t, co.beta);
            std::cout << "m_min: " << res.m_min << "\n";
            std::cout << "beta_bound: " << to_fraction_string(res.beta_bound) << "\n";
            return EXIT_PASS;
        }
        if (fix->parsed()) return run_fixtures(fix_seed, json, out_path);
    } catch (const InfeasibleParamsError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const CapacityParamsError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const NotPrimeError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const FieldTooSmallError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_CHECK_FAILED;
    }
    return EXIT_USAGE;
}
