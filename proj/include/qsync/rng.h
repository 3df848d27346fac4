// Copyright 2026 The qsync Authors
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

#ifndef QSYNC_RNG_H
#define QSYNC_RNG_H

#include <cstdint>
#include <random>

namespace qsync {

/// Name recorded in simulation summaries. Bump the version if the derivation below changes.
constexpr const char *RNG_ALGORITHM = "mt19937_64/splitmix64-v1";

constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// std::mt19937_64 with hand-written range and real mappings, so streams are identical across
/// standard library implementations (the std distributions are not).
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }
    /// Independent stream for one trial of a seeded experiment.
    static Rng for_trial(uint64_t master_seed, uint64_t trial_id) {
        return Rng(splitmix64(master_seed ^ splitmix64(trial_id + 0x632be59bd9b4e019ULL)));
    }

    uint64_t next() {
        return engine_();
    }
    /// Uniform in [0, bound); bound must be positive.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        while (true) {
            uint64_t r = engine_();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }
    /// Uniform in [lo, hi].
    int64_t between(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo) + 1));
    }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    bool bernoulli(double p) {
        return uniform() < p;
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace qsync

#endif
