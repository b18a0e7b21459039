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

#include "starpir/capacity.hpp"

namespace starpir {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw CapacityParamsError(msg);
}

Rational ratio_pow(const Rational& rho, size_t m) {
    Rational acc = 1;
    for (size_t i = 0; i < m; ++i) acc *= rho;
    return acc;
}

}  // namespace

Rational cap_tpir_fsr(size_t n, size_t k, size_t t, size_t m) {
    require(n > k + t - 1, "need n > k+t-1");
    require(m >= 2, "need m >= 2");
    Rational rho(BigInt(k + t - 1), BigInt(n));
    return (1 - rho) / (1 - ratio_pow(rho, m));
}

Rational cap_asymptotic(size_t n, size_t k, size_t t, size_t b, size_t r) {
    require(n > k + t + 2 * b + r - 1, "need n > k+t+2b+r-1");
    return 1 - Rational(BigInt(k + t + 2 * b + r - 1), BigInt(n));
}

Rational cap_tbspir(size_t n, size_t k, size_t t, size_t b, size_t r) {
    return cap_asymptotic(n, k, t, b, r);
}

Rational secrecy_bound(size_t n, size_t k, size_t t, size_t b, size_t r) {
    require(n > k + t + 2 * b + r - 1, "need n > k+t+2b+r-1");
    return Rational(BigInt(k + t - 1), BigInt(n - k - t - 2 * b - r + 1));
}

Rational cap_tbpir_upper(size_t n, size_t k, size_t t, size_t b, size_t r, size_t m) {
    require(n > k + t + 2 * b + r - 1, "need n > k+t+2b+r-1");
    require(m >= 2, "need m >= 2");
    require(n > 2 * b + r, "need n > 2b+r");
    Rational factor = 1 - Rational(BigInt(2 * b + r), BigInt(n));
    return factor * cap_tpir_fsr(n, k, t, m);
}

BigInt optimal_download(size_t L, size_t n, size_t k, size_t t, size_t m) {
    require(L >= 1, "need L >= 1");
    Rational q = Rational(BigInt(L)) / cap_tpir_fsr(n, k, t, m);
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt d = num / den;
    if (num % den != 0) d += 1;
    return d;
}

RegimeResult asymptotic_regime(size_t n, size_t k, size_t t, size_t beta) {
    require(n > k + t - 1, "need n > k+t-1");
    require(beta >= 1, "need beta >= 1");
    BigInt base(k + t - 1), nn(n);
    // beta * (k+t-1)^m < n^{m-1}; grows toward the inequality since k+t-1 < n
    BigInt lhs = BigInt(beta) * base * base;  // m = 2
    BigInt rhs = nn;                          // n^{m-1}, m = 2
    size_t m = 2;
    while (lhs >= rhs) {
        ++m;
        lhs *= base;
        rhs *= nn;
    }
    RegimeResult out;
    out.m_min = m;
    BigInt npow = 1, bpow = 1;
    for (size_t i = 0; i + 1 < m; ++i) npow *= nn;
    for (size_t i = 0; i < m; ++i) bpow *= base;
    out.beta_bound = Rational(npow, bpow);
    return out;
}

Rational known_tspir_capacity(size_t n, size_t k, size_t t) {
    require(n > k + t - 1, "need n > k+t-1");
    return 1 - Rational(BigInt(k + t - 1), BigInt(n));
}

Rational known_tspir_secrecy(size_t n, size_t k, size_t t) {
    require(n > k + t - 1, "need n > k+t-1");
    return Rational(BigInt(k + t - 1), BigInt(n - k - t + 1));
}

Rational known_tbspir_replicated_capacity(size_t n, size_t t, size_t b) {
    require(n > t + 2 * b, "need n > t+2b");
    return 1 - Rational(BigInt(t + 2 * b), BigInt(n));
}

Rational known_tbspir_replicated_secrecy(size_t n, size_t t, size_t b) {
    require(n > t + 2 * b, "need n > t+2b");
    return Rational(BigInt(t), BigInt(n - t - 2 * b));
}

std::string to_fraction_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace starpir
