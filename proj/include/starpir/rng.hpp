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

#include <cstdint>

namespace starpir {

/// starpir counter RNG, version 1.
///
/// Counter-based 64-bit generator built from the splitmix64 finalizer:
/// output(i) = mix(mix(seed + GAMMA * stream) + i). Fully determined by
/// (seed, stream, counter), so every transcript is reproducible across
/// platforms and independent streams never share state. Field elements are
/// drawn by rejection to keep marginals exactly uniform.
class CounterRng {
  public:
    explicit CounterRng(uint64_t seed, uint64_t stream = 0)
        : base_(mix(seed + GAMMA * stream)), ctr_(0) {}

    uint64_t next_u64() { return mix(base_ + ctr_++); }

    /// Uniform value in [0, bound) via rejection sampling; bound >= 1.
    uint64_t next_below(uint64_t bound) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            uint64_t u = next_u64();
            if (u < limit) return u % bound;
        }
    }

    uint32_t next_element(uint32_t modulus) {
        return static_cast<uint32_t>(next_below(modulus));
    }

    /// Derive an independent stream from this generator's seed material.
    CounterRng fork(uint64_t stream) const { return CounterRng(base_, stream + 1); }

  private:
    static constexpr uint64_t GAMMA = 0x9e3779b97f4a7c15ULL;

    static uint64_t mix(uint64_t z) {
        z += GAMMA;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t base_;
    uint64_t ctr_;
};

}  // namespace starpir
