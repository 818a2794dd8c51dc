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

#ifndef NCOMM_STANDARD_POLY_HPP
#define NCOMM_STANDARD_POLY_HPP

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ncomm {

/// Associative ring with T{} as zero. Multiplication need not commute.
template <class T>
concept AssociativeRing = std::regular<T> && requires(T a, const T& b) {
    { b + b } -> std::convertible_to<T>;
    { -b } -> std::convertible_to<T>;
    { b * b } -> std::convertible_to<T>;
};

/// Number of inversions of a sequence (used as permutation parity).
template <class Int>
std::size_t inversions(std::span<const Int> seq)
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[j] < seq[i])
                ++n;
    return n;
}

/// Standard polynomial s_N(X_1..X_N) = sum_sigma sign(sigma) X_sigma(1)...X_sigma(N),
/// enumerating permutations in lexicographic order and multiplying
/// left to right. N! products; reference path for s_eval_dp.
template <AssociativeRing T>
T s_eval_naive(std::span<const T> xs)
{
    const std::size_t n = xs.size();
    if (n == 0)
        throw std::invalid_argument("standard polynomial needs N >= 1");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    T sum{};
    do {
        T prod = xs[perm[0]];
        for (std::size_t i = 1; i < n; ++i)
            prod = prod * xs[perm[i]];
        if (inversions<std::size_t>(perm) % 2)
            sum = sum + -prod;
        else
            sum = sum + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

/// Same value as s_eval_naive via dynamic programming over subsets:
///   T({i}) = X_i,
///   T(S)   = sum_{i in S} (-1)^{#{j in S : j > i}} T(S \ {i}) X_i.
/// Removing the last factor i of an ordering of S moves it past every
/// larger retained index, which fixes the sign. O(2^N N) products.
template <AssociativeRing T>
T s_eval_dp(std::span<const T> xs)
{
    const std::size_t n = xs.size();
    if (n == 0)
        throw std::invalid_argument("standard polynomial needs N >= 1");
    if (n > 24)
        throw std::out_of_range("s_eval_dp supports N <= 24");

    using Mask = std::uint32_t;
    const Mask full = (Mask{1} << n) - 1;
    std::vector<T> table(std::size_t{full} + 1);
    std::vector<std::vector<Mask>> layers(n + 1);
    for (Mask s = 1; s <= full; ++s)
        layers[std::popcount(s)].push_back(s);

    for (std::size_t i = 0; i < n; ++i)
        table[Mask{1} << i] = xs[i];
    for (std::size_t size = 2; size <= n; ++size) {
        for (Mask s : layers[size]) {
            T acc{};
            unsigned larger = 0;
            for (std::size_t i = n; i-- > 0;) {
                if (!(s >> i & 1))
                    continue;
                T term = table[s & ~(Mask{1} << i)] * xs[i];
                if (larger % 2)
                    term = -std::move(term);
                acc = std::move(acc) + term;
                ++larger;
            }
            table[s] = std::move(acc);
        }
        // the previous layer is no longer needed
        for (Mask s : layers[size - 1])
            table[s] = T{};
    }
    return table[full];
}

template <AssociativeRing T>
T s_eval_naive(const std::vector<T>& xs)
{
    return s_eval_naive(std::span<const T>(xs));
}

template <AssociativeRing T>
T s_eval_dp(const std::vector<T>& xs)
{
    return s_eval_dp(std::span<const T>(xs));
}

} // namespace ncomm

#endif
