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

#include "starpir/scheme.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace starpir {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw InfeasibleParamsError(msg);
}

nlohmann::ordered_json matrix_rows(const FieldMatrix& m) {
    auto rows = nlohmann::ordered_json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

SchemeParams SchemeParams::multi_iter(size_t n, size_t k, size_t t, size_t m, uint32_t p,
                                      bool symmetric) {
    SchemeParams s;
    s.n = n;
    s.k = k;
    s.t = t;
    s.b = 0;
    s.r = 0;
    s.m = m;
    s.p = p;
    s.variant = Variant::MultiIterTPIR;
    s.symmetric = symmetric;
    s.alpha = (n > k + t - 1) ? n - k - t + 1 : 0;
    s.beta = k;
    s.validate();
    return s;
}

SchemeParams SchemeParams::one_shot(size_t n, size_t k, size_t t, size_t b, size_t r, size_t m,
                                    uint32_t p, bool symmetric) {
    SchemeParams s;
    s.n = n;
    s.k = k;
    s.t = t;
    s.b = b;
    s.r = r;
    s.m = m;
    s.p = p;
    s.variant = Variant::OneShotTB;
    s.symmetric = symmetric;
    s.alpha = 1;
    s.beta = 1;
    s.validate();
    return s;
}

void SchemeParams::validate() const {
    require(m >= 1, "need at least one file");
    require(k >= 1 && t >= 1 && n >= 1, "n, k, t must be positive");
    Field f(p);  // throws NotPrime
    if (variant == Variant::MultiIterTPIR) {
        require(b == 0 && r == 0, "the multi-iteration variant has no adversary budget");
        require(n > k + t - 1, "need n > k+t-1");
        require(alpha == n - k - t + 1 && beta == k, "alpha/beta inconsistent with n, k, t");
    } else {
        require(n == 2 * k + t + 2 * b + r - 1, "one-shot variant needs n = 2k+t+2b+r-1");
        require(alpha == 1 && beta == 1, "one-shot variant has alpha = beta = 1");
    }
}

nlohmann::ordered_json SchemeParams::to_json() const {
    nlohmann::ordered_json j;
    j["variant"] = variant == Variant::MultiIterTPIR ? "multi-iter" : "one-shot";
    j["n"] = n;
    j["k"] = k;
    j["t"] = t;
    j["b"] = b;
    j["r"] = r;
    j["m"] = m;
    j["p"] = p;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["symmetric"] = symmetric;
    j["count_nonresponsive_download"] = count_nonresponsive_download;
    return j;
}

const LinearCode& Instance::masking_code() const {
    return mask_code_ == MaskCode::StarProduct ? star_ : storage_;
}

Instance Instance::make_grs(const SchemeParams& params, MaskCode mask) {
    params.validate();
    Field f(params.p);
    if (params.n > f.modulus())
        throw FieldTooSmallError("GRS instantiation needs p >= n");
    LinearCode c = grs(GrsSpec::standard(f, params.n, params.k, 0));
    LinearCode dq = grs(GrsSpec::standard(f, params.n, params.t, 0));
    // retrieval code: monomial coset of degree k+t-1, so C * E occupies the
    // degree band [k+t-1, 2k+t-2], disjoint from C * D_Q (degrees <= k+t-2)
    LinearCode e = params.variant == Variant::OneShotTB
                       ? grs(GrsSpec::standard(f, params.n, 1, params.k + params.t - 1))
                       : LinearCode::zero(f, params.n);
    LinearCode star = star_product_code(c, dq);
    FieldMatrix parity = parity_check(star);
    std::vector<uint32_t> points(params.n);
    for (size_t j = 0; j < params.n; ++j) points[j] = static_cast<uint32_t>(j);
    return Instance(params, std::move(c), std::move(dq), std::move(e), std::move(star),
                    std::move(parity), true, std::move(points), mask);
}

Instance Instance::from_codes(const SchemeParams& params, LinearCode storage_code,
                              LinearCode query_code, LinearCode retrieval_code,
                              bool relax_length, MaskCode mask, bool skip_validation) {
    if (relax_length) {
        SchemeParams loose = params;
        // keep every check except the exact one-shot length equation
        require(loose.variant == Variant::OneShotTB,
                "relaxed length applies to the one-shot variant only");
        require(loose.n >= 2 * loose.k + loose.t + 2 * loose.b + loose.r - 1,
                "need n >= 2k+t+2b+r-1");
    } else {
        params.validate();
    }
    Field f(params.p);
    require(storage_code.length() == params.n && query_code.length() == params.n,
            "code length must equal n");
    require(storage_code.dim() == params.k, "storage code dimension must equal k");
    if (!skip_validation)
        require(min_distance(dual(query_code)) >= params.t + 1,
                "query code dual distance below t+1");

    LinearCode star = star_product_code(storage_code, query_code);
    if (!skip_validation && params.variant == Variant::OneShotTB) {
        require(retrieval_code.length() == params.n && retrieval_code.dim() == 1,
                "retrieval code must be an [n,1] code");
        LinearCode ce = star_product_code(storage_code, retrieval_code);
        require(ce.dim() == params.k, "C * E must have dimension k");
        LinearCode sum = sum_code(star, ce);
        require(sum.dim() == star.dim() + ce.dim(), "C * D_Q and C * E must intersect trivially");
        size_t needed = 2 * params.b + params.r + 1;
        require(min_distance(sum) >= needed,
                "C * D_Q + C * E distance below 2b+r+1");
    }
    FieldMatrix parity = parity_check(star);
    return Instance(params, std::move(storage_code), std::move(query_code),
                    std::move(retrieval_code), std::move(star), std::move(parity), false, {},
                    mask);
}

QueryArtifact generate_query(const Instance& inst, size_t file_index, CounterRng& rng) {
    const SchemeParams& pr = inst.params();
    if (file_index < 1 || file_index > pr.m) throw OutOfRangeError("file index out of range");
    Field f = inst.field();
    const size_t rows = pr.alpha * pr.m;
    const size_t cols = pr.beta * pr.n;

    QueryArtifact art{file_index, FieldMatrix(f, rows, cols), FieldMatrix(f, rows, cols),
                      FieldMatrix(f, rows, cols), {}};

    // D: per iteration, one i.i.d. uniform query-code codeword per row,
    // interleaved so that column (j-1)*beta + s belongs to server j, iteration s
    const LinearCode& dq = inst.query_code();
    for (size_t s = 0; s < pr.beta; ++s) {
        for (size_t row = 0; row < rows; ++row) {
            FieldMatrix cw = dq.random_codeword(rng);
            for (size_t j = 0; j < pr.n; ++j) art.D.set(row, j * pr.beta + s, cw.at(0, j));
        }
    }

    if (pr.variant == Variant::OneShotTB) {
        const FieldMatrix& egen = inst.retrieval_code().generator();
        for (size_t j = 0; j < pr.n; ++j)
            art.E.set(file_index - 1, j, egen.at(0, j));
    } else {
        // round-robin schedule: cell l covers stripe l/k + 1 at position
        // l mod n + 1, chunked into beta iterations of d cells each; every
        // stripe ends up with exactly k distinct positions and no iteration
        // repeats a position
        const size_t d = pr.alpha;  // n - k - t + 1 cells per iteration
        art.windows.assign(pr.beta, {});
        for (size_t l = 0; l < pr.alpha * pr.k; ++l) {
            size_t stripe = l / pr.k + 1;
            size_t position = l % pr.n + 1;
            size_t s = l / d;  // iteration, 0-based
            art.windows[s].push_back({stripe, position});
            size_t row = (file_index - 1) * pr.alpha + (stripe - 1);
            art.E.set(row, (position - 1) * pr.beta + s, 1);
        }
    }
    art.Q = art.D + art.E;
    return art;
}

std::vector<uint32_t> respond(const FieldMatrix& shard, const FieldMatrix& query_block,
                              const std::vector<uint32_t>* mask_j) {
    if (shard.cols() != 1 || shard.rows() != query_block.rows())
        throw ShapeMismatchError("shard and query block shapes do not conform");
    const Field& f = shard.field();
    std::vector<uint32_t> out(query_block.cols(), 0);
    for (size_t s = 0; s < query_block.cols(); ++s) {
        uint32_t acc = 0;
        for (size_t r = 0; r < shard.rows(); ++r)
            acc = f.add(acc, f.mul(shard.at(r, 0), query_block.at(r, s)));
        if (mask_j) acc = f.add(acc, (*mask_j)[s]);
        out[s] = acc;
    }
    return out;
}

MaskState apply_symmetric_mask(const Instance& inst, CounterRng& rng) {
    const SchemeParams& pr = inst.params();
    const LinearCode& mc = inst.masking_code();
    MaskState st{FieldMatrix(inst.field(), 1, pr.beta * pr.n), pr.beta * mc.dim()};
    for (size_t s = 0; s < pr.beta; ++s) {
        FieldMatrix cw = mc.random_codeword(rng);
        for (size_t j = 0; j < pr.n; ++j) st.mask.set(0, j * pr.beta + s, cw.at(0, j));
    }
    return st;
}

DecodeResult decode_multi_iter(const Instance& inst, const QueryArtifact& artifact,
                               const FieldMatrix& answers) {
    const SchemeParams& pr = inst.params();
    Field f = inst.field();
    DecodeResult res;
    FieldMatrix out(f, pr.alpha, pr.k);
    if (pr.variant != Variant::MultiIterTPIR) {
        res.error = "wrong variant";
        return res;
    }
    if (answers.rows() != 1 || answers.cols() != pr.beta * pr.n)
        throw ShapeMismatchError("answers must be 1 x beta*n");

    const FieldMatrix& h = inst.parity();
    // per stripe: recovered coded symbols (position, value)
    std::vector<std::vector<size_t>> stripe_pos(pr.alpha);
    std::vector<std::vector<uint32_t>> stripe_val(pr.alpha);

    for (size_t s = 0; s < pr.beta; ++s) {
        const auto& win = artifact.windows[s];
        // syndrome of this iteration's answer row kills the C * D_Q part
        std::vector<uint32_t> syndrome(h.rows(), 0);
        for (size_t row = 0; row < h.rows(); ++row) {
            uint32_t acc = 0;
            for (size_t j = 0; j < pr.n; ++j)
                acc = f.add(acc, f.mul(h.at(row, j), answers.at(0, j * pr.beta + s)));
            syndrome[row] = acc;
        }
        std::vector<size_t> positions;
        for (const auto& w : win) positions.push_back(w.position);
        FieldMatrix hw = h.select_cols(positions);
        if (hw.cols() != hw.rows() || rank(hw) != hw.rows()) {
            res.error = "window system singular at iteration " + std::to_string(s + 1);
            return res;
        }
        auto vals = solve(hw, syndrome);
        if (!vals.has_value()) {
            res.error = "window system inconsistent at iteration " + std::to_string(s + 1);
            return res;
        }
        for (size_t c = 0; c < win.size(); ++c) {
            stripe_pos[win[c].stripe - 1].push_back(win[c].position);
            stripe_val[win[c].stripe - 1].push_back((*vals)[c]);
        }
    }

    const FieldMatrix& g = inst.storage_code().generator();
    for (size_t a = 0; a < pr.alpha; ++a) {
        if (stripe_pos[a].size() != pr.k) {
            res.error = "stripe " + std::to_string(a + 1) + " did not collect k symbols";
            return res;
        }
        FieldMatrix gsub = g.select_cols(stripe_pos[a]).transpose();  // k x k
        auto x = solve(gsub, stripe_val[a]);
        if (!x.has_value()) {
            res.error = "stripe system inconsistent";
            return res;
        }
        for (size_t j = 0; j < pr.k; ++j) out.set(a, j, (*x)[j]);
    }
    res.file = out;
    res.ok = true;
    return res;
}

namespace {

/// Express a full codeword of C*D_Q + C*E in the stacked basis
/// [gen(C*D_Q); G_C[l] * e] and return the k coefficients on the C*E side,
/// which are exactly the desired stripe symbols.
DecodeResult extract_file_row(const Instance& inst, const std::vector<uint32_t>& codeword,
                              size_t errors) {
    const SchemeParams& pr = inst.params();
    Field f = inst.field();
    DecodeResult res;
    FieldMatrix out(f, 1, pr.k);
    res.errors_corrected = errors;
    const FieldMatrix& sgen = inst.star_code().generator();
    const FieldMatrix& cgen = inst.storage_code().generator();
    const FieldMatrix& egen = inst.retrieval_code().generator();
    FieldMatrix basis(f, sgen.rows() + pr.k, pr.n);
    for (size_t i = 0; i < sgen.rows(); ++i)
        for (size_t j = 0; j < pr.n; ++j) basis.set(i, j, sgen.at(i, j));
    for (size_t l = 0; l < pr.k; ++l)
        for (size_t j = 0; j < pr.n; ++j)
            basis.set(sgen.rows() + l, j, f.mul(cgen.at(l, j), egen.at(0, j)));
    auto coeffs = solve(basis.transpose(), codeword);
    if (!coeffs.has_value()) {
        res.error = "corrected word not in the scheme's sum code";
        return res;
    }
    for (size_t l = 0; l < pr.k; ++l) out.set(0, l, (*coeffs)[sgen.rows() + l]);
    res.file = out;
    res.ok = true;
    return res;
}

}  // namespace

DecodeResult decode_one_shot(const Instance& inst, const QueryArtifact& artifact,
                             const std::vector<std::optional<uint32_t>>& answers) {
    const SchemeParams& pr = inst.params();
    Field f = inst.field();
    DecodeResult res;
    FieldMatrix out(f, 1, pr.k);
    if (pr.variant != Variant::OneShotTB) {
        res.error = "wrong variant";
        return res;
    }
    if (answers.size() != pr.n) throw ShapeMismatchError("answer list must have n entries");
    (void)artifact;

    size_t missing = 0;
    for (const auto& a : answers) missing += !a.has_value();
    if (missing > pr.r) {
        res.error = "more nonresponsive servers than the erasure budget";
        return res;
    }

    if (inst.grs_backed()) {
        std::vector<uint32_t> pts, vals;
        for (size_t j = 0; j < pr.n; ++j) {
            if (!answers[j].has_value()) continue;
            pts.push_back(inst.eval_points()[j]);
            vals.push_back(*answers[j]);
        }
        const size_t dim = 2 * pr.k + pr.t - 1;  // degrees 0 .. 2k+t-2
        GaoResult g = gao_decode(f, pts, vals, dim, pr.b);
        if (!g.ok) {
            res.error = "error correction failed (corruption beyond budget)";
            return res;
        }
        // desired stripe polynomial sits in the degree band [k+t-1, 2k+t-2]
        for (size_t l = 0; l < pr.k; ++l)
            out.set(0, l, g.message.coeff(pr.k + pr.t - 1 + l));
        res.file = out;
        res.ok = true;
        res.errors_corrected = g.errors;
        return res;
    }

    LinearCode sum = sum_code(inst.star_code(),
                              star_product_code(inst.storage_code(), inst.retrieval_code()));
    BruteDecodeResult bd = brute_force_decode(sum, answers, pr.b);
    if (!bd.ok) {
        res.error = "error correction failed (corruption beyond budget)";
        return res;
    }
    return extract_file_row(inst, bd.codeword, bd.errors);
}

FsrResult check_full_support_rank(const FieldMatrix& q, size_t alpha, size_t beta, size_t t,
                                  size_t m) {
    std::vector<size_t> widths(q.cols() / beta, beta);
    return check_full_support_rank(q, alpha, widths, t, m);
}

FsrResult check_full_support_rank(const FieldMatrix& q, size_t alpha,
                                  const std::vector<size_t>& widths, size_t t, size_t m) {
    size_t total = 0;
    for (size_t w : widths) total += w;
    if (q.rows() != alpha * m || q.cols() != total)
        throw ShapeMismatchError("query matrix shape does not match the block layout");
    const size_t n = widths.size();
    FsrResult out;

    std::vector<size_t> subset;
    auto visit = [&](const std::vector<size_t>& T) {
        std::vector<size_t> cols = psi_widths(widths, T);
        for (size_t file = 1; file <= m; ++file) {
            FieldMatrix block = q.submatrix(psi_block(alpha, file), cols);
            size_t rk = rank(block);
            size_t cs = colsupp(block).size();
            if (rk != cs) {
                out.ok = false;
                out.violations.push_back({file, T, rk, cs});
            }
        }
    };
    // subsets by size, lexicographic within each size
    for (size_t size = 1; size <= std::min(t, n); ++size) {
        std::vector<size_t> idx(size);
        for (size_t i = 0; i < size; ++i) idx[i] = i + 1;
        for (;;) {
            visit(idx);
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
    }
    return out;
}

nlohmann::ordered_json query_to_json(const QueryArtifact& a) {
    nlohmann::ordered_json j;
    j["file_index"] = a.file_index;
    j["Q"] = matrix_rows(a.Q);
    j["D"] = matrix_rows(a.D);
    j["E"] = matrix_rows(a.E);
    auto wins = nlohmann::ordered_json::array();
    for (const auto& iter : a.windows) {
        auto w = nlohmann::ordered_json::array();
        for (const auto& cell : iter) w.push_back({cell.stripe, cell.position});
        wins.push_back(w);
    }
    j["windows"] = wins;
    return j;
}

nlohmann::ordered_json mask_to_json(const MaskState& m) {
    nlohmann::ordered_json j;
    auto vals = nlohmann::ordered_json::array();
    for (size_t c = 0; c < m.mask.cols(); ++c) vals.push_back(m.mask.at(0, c));
    j["values"] = vals;
    j["secrecy_symbols"] = m.secrecy_symbols;
    return j;
}

}  // namespace starpir
