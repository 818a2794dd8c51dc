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

#ifndef NCOMM_COMBINATORICS_HPP
#define NCOMM_COMBINATORICS_HPP

#include "ncomm/rational.hpp"
#include "ncomm/super_monomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncomm {

/// Finite sequence of non-negative integers: compositions, members of G_k,
/// column-sum words, shuffles.
using IntSeq = std::vector<unsigned>;

inline unsigned weight(std::span<const unsigned> s) { return std::accumulate(s.begin(), s.end(), 0u); }

/// alpha followed by beta.
inline IntSeq concat(IntSeq alpha, std::span<const unsigned> beta)
{
    alpha.insert(alpha.end(), beta.begin(), beta.end());
    return alpha;
}

/// (0, ..., 0), i times.
inline IntSeq zeros(std::size_t i) { return IntSeq(i, 0u); }

inline IntSeq add(std::span<const unsigned> a, std::span<const unsigned> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("sequence lengths differ");
    IntSeq r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

/// All strictly increasing k-sequences of the given weight (first entry 0
/// when zero_first), in lexicographic order.
inline std::vector<SuperMonomial> enumerate_E(std::size_t k, unsigned total, bool zero_first)
{
    std::vector<SuperMonomial> out;
    if (k == 0 && zero_first)
        return out;
    std::vector<unsigned> cur;
    // smallest possible sum of r strictly increasing values starting at v
    auto min_tail = [](unsigned v, std::size_t r) { return r * v + r * (r - 1) / 2; };
    std::function<void(unsigned, unsigned)> rec = [&](unsigned next_min, unsigned remaining) {
        const std::size_t left = k - cur.size();
        if (left == 0) {
            if (remaining == 0)
                out.emplace_back(cur);
            return;
        }
        const unsigned hi = (cur.empty() && zero_first) ? 0u : remaining;
        for (unsigned v = next_min; v <= hi; ++v) {
            if (min_tail(v, left) > remaining)
                break;
            cur.push_back(v);
            rec(v + 1, remaining - v);
            cur.pop_back();
        }
    };
    rec(0, total);
    return out;
}

/// Closed form of delta(k), the lexicographic maximum of E_{k+1,0}(pk):
///   k = 2l   -> (0, p-l, ..., p-1, p+1, ..., p+l)
///   k = 2l+1 -> (0, p-l, ..., p-1, p, p+1, ..., p+l)
inline SuperMonomial delta_closed(unsigned p, unsigned k)
{
    if (p == 0 || k > 2 * p - 1)
        throw std::out_of_range("delta_closed: need p >= 1 and 0 <= k <= 2p-1");
    const unsigned l = k / 2;
    std::vector<unsigned> v{0};
    for (unsigned i = p - l; i < p; ++i)
        v.push_back(i);
    if (k % 2)
        v.push_back(p);
    for (unsigned i = p + 1; i <= p + l; ++i)
        v.push_back(i);
    return SuperMonomial(std::move(v));
}

/// Lexicographic maximum of E_{k+1,0}(pk - deficit), by enumeration.
/// deficit 0 gives delta(k), deficit 1 gives delta_1(k).
inline SuperMonomial delta_max_oracle(unsigned p, unsigned k, unsigned deficit)
{
    if (deficit > 1)
        throw std::invalid_argument("delta_max_oracle: deficit must be 0 or 1");
    if (p * k < deficit)
        throw std::domain_error("delta_max_oracle: negative weight");
    auto all = enumerate_E(k + 1, p * k - deficit, true);
    if (all.empty())
        throw std::domain_error("delta_max_oracle: E_{" + std::to_string(k + 1) + ",0}(" +
                                std::to_string(p * k - deficit) + ") is empty");
    return all.back();
}

struct SortedSign {
    IntSeq sorted;
    int sign = 0; // 0 on repeated entries, else parity of the sorting permutation
};

inline SortedSign sort_and_sign(std::span<const unsigned> s)
{
    SortedSign r{IntSeq(s.begin(), s.end()), 1};
    std::size_t inv = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j])
                r.sign = 0;
            else if (s[j] < s[i])
                ++inv;
        }
    std::sort(r.sorted.begin(), r.sorted.end());
    if (r.sign != 0)
        r.sign = inv % 2 ? -1 : 1;
    return r;
}

/// G_0 = {()}, G_k = { (i) ++ 0_{i-1} ++ alpha : alpha in G_{k-i}, 1 <= i <= k },
/// returned in lexicographic order.
inline std::vector<IntSeq> enumerate_G(unsigned k)
{
    static thread_local std::map<unsigned, std::vector<IntSeq>> memo;
    if (auto it = memo.find(k); it != memo.end())
        return it->second;
    std::vector<IntSeq> out;
    if (k == 0) {
        out.push_back({});
    } else {
        for (unsigned i = 1; i <= k; ++i)
            for (const IntSeq& alpha : enumerate_G(k - i))
                out.push_back(concat(concat(IntSeq{i}, zeros(i - 1)), alpha));
        std::sort(out.begin(), out.end());
    }
    memo[k] = out;
    return out;
}

/// M(alpha, beta) = { gamma in N^k : sort(alpha + gamma) = beta-bar }, where
/// beta-bar drops the leading 0 of beta. gamma ranges over all non-negative
/// vectors (not only increasing ones). Lexicographic order.
inline std::vector<IntSeq> compute_M(const SuperMonomial& alpha, const SuperMonomial& beta)
{
    const auto& a = alpha.indices();
    const auto& b = beta.indices();
    if (b.size() != a.size() + 1 || b.empty() || b.front() != 0)
        throw std::invalid_argument("compute_M: beta must start with 0 and be one longer than alpha");
    std::vector<unsigned> target(b.begin() + 1, b.end());
    std::vector<IntSeq> out;
    if (alpha.weight() > weight(target))
        return out;
    // target entries are distinct, so sort(alpha + gamma) = target means
    // alpha_i + gamma_i is a bijection onto target
    IntSeq gamma(a.size());
    std::vector<bool> used(target.size(), false);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == a.size()) {
            out.push_back(gamma);
            return;
        }
        for (std::size_t t = 0; t < target.size(); ++t) {
            if (used[t] || target[t] < a[i])
                continue;
            used[t] = true;
            gamma[i] = target[t] - a[i];
            rec(i + 1);
            used[t] = false;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

/// |s|! / prod s_i!
inline Integer multinomial(std::span<const unsigned> s)
{
    Integer r = factorial(weight(s));
    for (unsigned x : s)
        r /= factorial(x);
    return r;
}

/// The G-set description of M(delta(k-1), delta(k)), 1 <= k <= 2p-1:
///   k = 2l-1 -> { (p-l+i) ++ 0_{i-1} ++ alpha ++ 0_{l-1} : alpha in G_{l-i}, 1 <= i <= l }
///   k = 2l   -> { (p-l) ++ 0_{l-1} ++ alpha : alpha in G_l }
inline std::vector<IntSeq> delta_step_set(unsigned p, unsigned k)
{
    if (p == 0 || k < 1 || k > 2 * p - 1)
        throw std::out_of_range("delta_step_set: need 1 <= k <= 2p-1");
    std::vector<IntSeq> out;
    if (k % 2) {
        const unsigned l = (k + 1) / 2;
        for (unsigned i = 1; i <= l; ++i)
            for (const IntSeq& alpha : enumerate_G(l - i))
                out.push_back(concat(concat(concat(IntSeq{p - l + i}, zeros(i - 1)), alpha), zeros(l - 1)));
    } else {
        const unsigned l = k / 2;
        for (const IntSeq& alpha : enumerate_G(l))
            out.push_back(concat(concat(IntSeq{p - l}, zeros(l - 1)), alpha));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// sum_{alpha in G_k} sign(alpha + (0, 1, ..., k-1)) * multinomial(alpha) == 1
inline bool staircase_sign_sum_check(unsigned k)
{
    if (k < 1)
        throw std::out_of_range("staircase_sign_sum_check: k >= 1");
    IntSeq stair(k);
    std::iota(stair.begin(), stair.end(), 0u);
    Integer sum = 0;
    for (const IntSeq& alpha : enumerate_G(k))
        sum += sort_and_sign(add(alpha, stair)).sign * multinomial(alpha);
    return sum == 1;
}

/// sum_{i=0}^{l-1} (-1)^i C(p,i) == (-1)^{l-1} C(p-1,l-1)
inline bool alternating_binomial_sum_check(unsigned p, unsigned l)
{
    if (l < 1 || l > p)
        throw std::out_of_range("alternating_binomial_sum_check: need 1 <= l <= p");
    Integer lhs = 0;
    for (unsigned i = 0; i < l; ++i)
        lhs += (i % 2 ? -1 : 1) * binomial(p, i);
    Integer rhs = ((l - 1) % 2 ? -1 : 1) * binomial(p - 1, l - 1);
    return lhs == rhs;
}

/// The signed multinomial sum over the G-set of M(delta(k-1), delta(k)),
/// with Gamma = gamma + delta(k-1) supplying the sign.
inline Integer delta_step_signed_sum(unsigned p, unsigned k)
{
    const IntSeq base = delta_closed(p, k - 1).indices();
    Integer sum = 0;
    for (const IntSeq& g : delta_step_set(p, k))
        sum += sort_and_sign(add(g, base)).sign * multinomial(g);
    return sum;
}

/// mu_k in closed form: C(p, l) for k = 2l+1, C(p-1, l-1) for k = 2l.
inline Integer mu_closed(unsigned p, unsigned k)
{
    if (p == 0 || k < 1 || k > 2 * p)
        throw std::out_of_range("mu_closed: need 1 <= k <= 2p");
    return k % 2 ? binomial(p, k / 2) : binomial(p - 1, k / 2 - 1);
}

/// delta_step_signed_sum(p, k) against C(p-1, l-1) for k = 2l-1 and C(p, l) for k = 2l.
inline bool delta_step_signed_sum_check(unsigned p, unsigned k)
{
    if (p == 0 || k < 1 || k > 2 * p - 1)
        throw std::out_of_range("delta_step_signed_sum_check: need 1 <= k <= 2p-1");
    const Integer expected = k % 2 ? binomial(p - 1, (k + 1) / 2 - 1) : binomial(p, k / 2);
    return delta_step_signed_sum(p, k) == expected;
}

} // namespace ncomm

#endif
