/*
   Copyright 2026 The ncomm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NCOMM_RANDOM_HPP
#define NCOMM_RANDOM_HPP

#include "ncomm/weyl.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>

namespace ncomm {

/// Deterministic generator for randomized identity checks.
///
/// std::mt19937_64 has a fully specified output sequence; the integer
/// mapping below is done by hand (rejection sampling) because the standard
/// distributions are implementation-defined. Trial t of a run seeded with s
/// draws from its own stream for_trial(s, t), so results do not depend on
/// how trials are scheduled.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    static SeededRng for_trial(std::uint64_t seed, std::uint64_t trial)
    {
        return SeededRng(splitmix64(seed ^ splitmix64(trial + 0x9e3779b97f4a7c15ULL)));
    }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        if (lo > hi)
            throw std::invalid_argument("uniform: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0)
            return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    static std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 engine_;
};

/// Non-zero polynomial of degree <= max_degree with integer coefficients in
/// [-bound, bound].
inline Polynomial random_polynomial(SeededRng& rng, unsigned max_degree, long bound = 5)
{
    while (true) {
        Polynomial u;
        for (unsigned d = 0; d <= max_degree; ++d)
            u.add_term(d, Rational(rng.uniform(-bound, bound)));
        if (!u.is_zero())
            return u;
    }
}

/// u(x) d^p with u from random_polynomial.
inline DiffOp random_order_p(SeededRng& rng, unsigned p, unsigned max_degree, long bound = 5)
{
    return weyl_term(random_polynomial(rng, max_degree, bound), p);
}

} // namespace ncomm

#endif
