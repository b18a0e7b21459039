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

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace starpir {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct CapacityParamsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Capacity of linear, full support-rank TPIR from [n,k] MDS storage with
/// t-collusion and m files: (1 - (k+t-1)/n) / (1 - ((k+t-1)/n)^m).
Rational cap_tpir_fsr(size_t n, size_t k, size_t t, size_t m);

/// Asymptotic (m -> infinity) capacity, also the strongly linear capacity
/// for any m: 1 - (k+t+2b+r-1)/n.
Rational cap_asymptotic(size_t n, size_t k, size_t t, size_t b, size_t r);

/// Symmetric TB(S)PIR capacity with additive randomness; same expression as
/// the asymptotic value.
Rational cap_tbspir(size_t n, size_t k, size_t t, size_t b, size_t r);

/// Lower bound on the secrecy rate: (k+t-1)/(n-k-t-2b-r+1).
Rational secrecy_bound(size_t n, size_t k, size_t t, size_t b, size_t r);

/// Upper bound on TBPIR capacity (believed loose):
/// (1-(2b+r)/n) * (1-(k+t-1)/n) / (1-((k+t-1)/n)^m).
Rational cap_tbpir_upper(size_t n, size_t k, size_t t, size_t b, size_t r, size_t m);

/// Optimal download cost ceil(L / C) with C = cap_tpir_fsr(n, k, t, m).
BigInt optimal_download(size_t L, size_t n, size_t k, size_t t, size_t m);

struct RegimeResult {
    Rational beta_bound;  // n^{m_min-1} / (k+t-1)^{m_min}
    size_t m_min = 0;     // smallest m with beta * (k+t-1)^m < n^{m-1}
};

/// Smallest file count reaching the asymptotic regime for subpacketization
/// L = beta*(n-k-t+1); pure integer power comparison, no logarithms.
RegimeResult asymptotic_regime(size_t n, size_t k, size_t t, size_t beta);

// Restated prior-work expressions (coded TSPIR and replicated TBSPIR),
// exposed read-only for reference output.
Rational known_tspir_capacity(size_t n, size_t k, size_t t);
Rational known_tspir_secrecy(size_t n, size_t k, size_t t);
Rational known_tbspir_replicated_capacity(size_t n, size_t t, size_t b);
Rational known_tbspir_replicated_secrecy(size_t n, size_t t, size_t b);

/// "num/den" (or plain "num" for integers), unambiguous and diff-friendly.
std::string to_fraction_string(const Rational& r);

}  // namespace starpir
