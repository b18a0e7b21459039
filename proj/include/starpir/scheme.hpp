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

#include "starpir/grs_decode.hpp"
#include "starpir/storage.hpp"

namespace starpir {

struct InfeasibleParamsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Variant { MultiIterTPIR, OneShotTB };

/// Which code masks the answers in the symmetric variant. StarProduct is the
/// default (the mask is annihilated by the decoder's parity check and covers
/// the full interference space); Storage mirrors the alternative of drawing
/// the mask from the storage code itself.
enum class MaskCode { StarProduct, Storage };

struct SchemeParams {
    size_t n = 0, k = 0, t = 0, b = 0, r = 0, m = 0;
    uint32_t p = 0;
    Variant variant = Variant::MultiIterTPIR;
    bool symmetric = false;
    bool count_nonresponsive_download = true;
    size_t alpha = 0, beta = 0;

    /// b = r = 0 scheme retrieving n-k-t+1 symbols per iteration over
    /// alpha = n-k-t+1 stripes and beta = k iterations.
    static SchemeParams multi_iter(size_t n, size_t k, size_t t, size_t m, uint32_t p,
                                   bool symmetric = false);
    /// One-iteration scheme at n = 2k+t+2b+r-1 with error/erasure decoding.
    static SchemeParams one_shot(size_t n, size_t k, size_t t, size_t b, size_t r, size_t m,
                                 uint32_t p, bool symmetric = false);

    void validate() const;
    nlohmann::ordered_json to_json() const;
};

/// A concrete scheme instantiation: params plus the three codes (storage C,
/// query D_Q, retrieval E) and the cached star-product machinery.
class Instance {
  public:
    /// Default instantiation over GRS codes at points 0..n-1 with unit
    /// multipliers; requires p >= n.
    static Instance make_grs(const SchemeParams& params, MaskCode mask = MaskCode::StarProduct);

    /// Explicit-code instantiation (small fields where GRS does not fit).
    /// Validates the structural scheme conditions; `relax_length` permits
    /// n > 2k+t+2b+r-1 for the one-shot variant. `skip_validation` builds
    /// deliberately broken schemes for the privacy audits to catch.
    static Instance from_codes(const SchemeParams& params, LinearCode storage_code,
                               LinearCode query_code, LinearCode retrieval_code,
                               bool relax_length = false,
                               MaskCode mask = MaskCode::StarProduct,
                               bool skip_validation = false);

    const SchemeParams& params() const { return params_; }
    Field field() const { return storage_.field(); }
    const LinearCode& storage_code() const { return storage_; }
    const LinearCode& query_code() const { return query_; }
    const LinearCode& retrieval_code() const { return retrieval_; }
    const LinearCode& star_code() const { return star_; }
    const LinearCode& masking_code() const;
    const FieldMatrix& parity() const { return parity_; }
    bool grs_backed() const { return grs_backed_; }
    const std::vector<uint32_t>& eval_points() const { return points_; }
    MaskCode mask_code() const { return mask_code_; }

  private:
    Instance(SchemeParams p, LinearCode c, LinearCode q, LinearCode e, LinearCode star,
             FieldMatrix parity, bool grs_backed, std::vector<uint32_t> points, MaskCode mask)
        : params_(p), storage_(std::move(c)), query_(std::move(q)), retrieval_(std::move(e)),
          star_(std::move(star)), parity_(std::move(parity)), grs_backed_(grs_backed),
          points_(std::move(points)), mask_code_(mask) {}

    SchemeParams params_;
    LinearCode storage_, query_, retrieval_, star_;
    FieldMatrix parity_;
    bool grs_backed_;
    std::vector<uint32_t> points_;
    MaskCode mask_code_;
};

/// One scheduled retrieval cell: coded symbol (stripe, position) of the
/// desired file, both 1-based.
struct RetrievalWindow {
    size_t stripe = 0;
    size_t position = 0;
    bool operator==(const RetrievalWindow&) const = default;
};

struct QueryArtifact {
    size_t file_index = 0;  // 1-based
    FieldMatrix Q, D, E;    // alpha*m x beta*n, Q = D + E
    std::vector<std::vector<RetrievalWindow>> windows;  // per iteration (multi-iter)
};

QueryArtifact generate_query(const Instance& inst, size_t file_index, CounterRng& rng);

/// Honest linear response of server j: beta inner products plus the mask.
/// `mask_j` may be null for the nonsymmetric case.
std::vector<uint32_t> respond(const FieldMatrix& shard, const FieldMatrix& query_block,
                              const std::vector<uint32_t>* mask_j = nullptr);

struct MaskState {
    FieldMatrix mask;  // 1 x beta*n; per-iteration segments are codewords
    size_t secrecy_symbols = 0;
};

MaskState apply_symmetric_mask(const Instance& inst, CounterRng& rng);

struct DecodeResult {
    bool ok = false;
    std::optional<FieldMatrix> file;  // alpha x k block, present iff ok
    std::string error;
    size_t errors_corrected = 0;
};

/// Syndrome-and-window decoding across the beta iterations; all answers must
/// be present (b = r = 0 variant). `answers` is 1 x beta*n in query column
/// layout.
DecodeResult decode_multi_iter(const Instance& inst, const QueryArtifact& artifact,
                               const FieldMatrix& answers);

/// Error-and-erasure decode of the one-shot answer vector; absent entries
/// are nonresponsive servers. Uses interpolation decoding on GRS-backed
/// instances and the exhaustive decoder otherwise.
DecodeResult decode_one_shot(const Instance& inst, const QueryArtifact& artifact,
                             const std::vector<std::optional<uint32_t>>& answers);

struct FsrViolation {
    size_t file = 0;                // 1-based
    std::vector<size_t> servers;    // 1-based subset T
    size_t rank = 0;
    size_t colsupp = 0;
};

struct FsrResult {
    bool ok = true;
    std::vector<FsrViolation> violations;  // subsets by size then lex, files ascending
};

/// Full support-rank check: for every T with |T| <= t and every file block,
/// the rank of the restriction must equal its number of nonzero columns.
/// Violations are collected in deterministic order.
FsrResult check_full_support_rank(const FieldMatrix& q, size_t alpha, size_t beta, size_t t,
                                  size_t m);
/// Same with explicit per-server thick-column widths.
FsrResult check_full_support_rank(const FieldMatrix& q, size_t alpha,
                                  const std::vector<size_t>& widths, size_t t, size_t m);

nlohmann::ordered_json query_to_json(const QueryArtifact& a);
nlohmann::ordered_json mask_to_json(const MaskState& m);

}  // namespace starpir
