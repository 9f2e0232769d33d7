// Copyright 2026 The locpur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOCPUR_RNG_H
#define LOCPUR_RNG_H

#include <cstdint>
#include <random>

#include "locpur/linalg.h"

namespace locpur {

/// Mixes (seed, stream) into an independent engine seed via splitmix64 finalization.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream);

/// Seeded generator with platform-independent uniform and normal draws.
///
/// std::normal_distribution is implementation-defined, so normals are produced here
/// by Box-Muller on top of mt19937_64; outputs are bitwise reproducible per seed.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }
    Rng(std::uint64_t seed, std::uint64_t stream) : engine_(derive_stream_seed(seed, stream)) {
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on (0, 1].
    double uniform_open_zero();
    double normal();
    Complex complex_normal();

    ComplexMatrix complex_gaussian(std::size_t rows, std::size_t cols);

   private:
    std::mt19937_64 engine_;
    double spare_ = 0;
    bool has_spare_ = false;
};

}  // namespace locpur

#endif
