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

#include "catch_amalgamated.hpp"

#include "ncomm/combinatorics.hpp"
#include "ncomm/super.hpp"

#include <algorithm>
#include <functional>
#include <vector>

using namespace ncomm;

namespace {

// Every strictly increasing k-sequence with entries <= bound, filtered by weight.
std::vector<SuperMonomial> brute_E(std::size_t k, unsigned total, bool zero_first)
{
    std::vector<SuperMonomial> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned)> rec = [&](unsigned from) {
        if (cur.size() == k) {
            if (weight(cur) == total && (!zero_first || (k > 0 && cur[0] == 0)))
                out.emplace_back(cur);
            return;
        }
        for (unsigned v = from; v <= total; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

// M(alpha, beta) by scanning every gamma with entries up to the top of beta.
std::vector<IntSeq> brute_M(const SuperMonomial& alpha, const SuperMonomial& beta)
{
    std::vector<unsigned> target(beta.indices().begin() + 1, beta.indices().end());
    const unsigned top = target.empty() ? 0 : target.back();
    std::vector<IntSeq> out;
    IntSeq gamma(alpha.length());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == gamma.size()) {
            if (sort_and_sign(add(alpha.indices(), gamma)).sorted == target)
                out.push_back(gamma);
            return;
        }
        for (unsigned v = 0; v <= top; ++v) {
            gamma[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace

TEST_CASE("strictly increasing sequences of fixed weight")
{
    CHECK(enumerate_E(2, 2, true) == std::vector<SuperMonomial>{{0, 2}});
    CHECK(enumerate_E(3, 9, true).back() == SuperMonomial({0, 4, 5}));
    CHECK(enumerate_E(1, 0, true) == std::vector<SuperMonomial>{{0}});
    CHECK(enumerate_E(1, 0, false) == std::vector<SuperMonomial>{{0}});
    CHECK(enumerate_E(0, 0, false) == std::vector<SuperMonomial>{{}});
    CHECK(enumerate_E(3, 2, false).empty());
    for (std::size_t k = 0; k <= 4; ++k)
        for (unsigned w = 0; w <= 12; ++w)
            for (bool z : {false, true})
                CHECK(enumerate_E(k, w, z) == brute_E(k, w, z));
}

TEST_CASE("delta closed form")
{
    CHECK(delta_closed(5, 2) == SuperMonomial({0, 4, 6}));
    CHECK(delta_closed(5, 4) == SuperMonomial({0, 3, 4, 6, 7}));
    CHECK(delta_closed(5, 9) == SuperMonomial::staircase(10));
    CHECK(delta_closed(4, 0) == SuperMonomial({0}));
    CHECK_THROWS_AS(delta_closed(3, 6), std::out_of_range);
}

TEST_CASE("delta closed form equals the enumerated maximum")
{
    for (unsigned p = 1; p <= 6; ++p)
        for (unsigned k = 0; k <= 2 * p - 1; ++k)
            CHECK(delta_closed(p, k) == delta_max_oracle(p, k, 0));
}

TEST_CASE("maxima with weight deficit one")
{
    CHECK(delta_max_oracle(5, 3, 0) == SuperMonomial({0, 4, 5, 6}));
    CHECK(delta_max_oracle(5, 2, 1) == SuperMonomial({0, 4, 5}));
    CHECK(delta_max_oracle(3, 1, 1) == SuperMonomial({0, 2}));
    CHECK_THROWS_AS(delta_max_oracle(1, 3, 0), std::domain_error);
    CHECK_THROWS_AS(delta_max_oracle(1, 1, 2), std::invalid_argument);
    for (unsigned p = 2; p <= 5; ++p)
        for (unsigned k = 1; k <= 2 * p - 2; ++k) {
            SuperMonomial d1 = delta_max_oracle(p, k, 1);
            CHECK(d1.length() == k + 1);
            CHECK(d1.weight() == p * k - 1);
        }
}

TEST_CASE("sort with permutation sign")
{
    auto r = sort_and_sign(std::vector<unsigned>{2, 0, 2, 3, 1});
    CHECK(r.sorted == IntSeq{0, 1, 2, 2, 3});
    CHECK(r.sign == 0);
    CHECK(sort_and_sign(std::vector<unsigned>{2, 1}).sign == -1);
    CHECK(sort_and_sign(std::vector<unsigned>{1, 2, 3}).sign == 1);
    CHECK(sort_and_sign(std::vector<unsigned>{3, 1, 2}).sign == 1);
    CHECK(sort_and_sign(std::vector<unsigned>{}).sign == 1);
}

TEST_CASE("the G sets")
{
    CHECK(enumerate_G(0) == std::vector<IntSeq>{IntSeq{}});
    CHECK(enumerate_G(1) == std::vector<IntSeq>{{1}});
    CHECK(enumerate_G(2) == std::vector<IntSeq>{{1, 1}, {2, 0}});
    CHECK(enumerate_G(3) == std::vector<IntSeq>{{1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {3, 0, 0}});
    for (unsigned k = 1; k <= 9; ++k) {
        auto g = enumerate_G(k);
        CHECK(std::is_sorted(g.begin(), g.end()));
        CHECK(std::adjacent_find(g.begin(), g.end()) == g.end());
        // |G_k| = 2^{k-1}: the first entry i leaves G_{k-i}
        CHECK(g.size() == (std::size_t{1} << (k - 1)));
        for (const IntSeq& s : g) {
            CHECK(s.size() == k);
            CHECK(weight(s) == k);
            CHECK(s.front() >= 1);
        }
    }
}

TEST_CASE("M sets")
{
    CHECK(compute_M({0, 4, 6}, {0, 4, 5, 6}) == std::vector<IntSeq>{{4, 1, 0}, {5, 0, 0}});
    CHECK(compute_M({0, 4, 5, 6}, {0, 3, 4, 6, 7}) == std::vector<IntSeq>{{3, 0, 1, 1}, {3, 0, 2, 0}});
    CHECK(compute_M({3, 4}, {0, 1, 2}).empty());
    CHECK_THROWS_AS(compute_M({0, 1}, {1, 2, 3}), std::invalid_argument);
    for (unsigned p = 1; p <= 4; ++p)
        for (unsigned k = 1; k <= 2 * p - 1; ++k) {
            const auto a = delta_closed(p, k - 1), b = delta_closed(p, k);
            CHECK(compute_M(a, b) == brute_M(a, b));
        }
}

TEST_CASE("M(delta(k-1), delta(k)) has the G-set description")
{
    for (unsigned p = 1; p <= 5; ++p)
        for (unsigned k = 1; k <= 2 * p - 1; ++k)
            CHECK(compute_M(delta_closed(p, k - 1), delta_closed(p, k)) == delta_step_set(p, k));
    CHECK_THROWS_AS(delta_step_set(3, 6), std::out_of_range);
}

TEST_CASE("multinomials")
{
    CHECK(multinomial(std::vector<unsigned>{1, 1}) == 2);
    CHECK(multinomial(std::vector<unsigned>{2, 0}) == 1);
    CHECK(multinomial(std::vector<unsigned>{0, 0, 0}) == 1);
    CHECK(multinomial(std::vector<unsigned>{2, 3, 1}) == 60);
    CHECK(multinomial(std::vector<unsigned>{}) == 1);
}

TEST_CASE("signed sum over G_k with the staircase shift is 1")
{
    for (unsigned k = 1; k <= 8; ++k)
        CHECK(staircase_sign_sum_check(k));
}

TEST_CASE("alternating partial binomial sums")
{
    CHECK(alternating_binomial_sum_check(5, 1));
    CHECK(alternating_binomial_sum_check(5, 3));
    for (unsigned p = 1; p <= 10; ++p)
        for (unsigned l = 1; l <= p; ++l)
            CHECK(alternating_binomial_sum_check(p, l));
    CHECK_THROWS_AS(alternating_binomial_sum_check(3, 0), std::out_of_range);
}

TEST_CASE("signed step sums equal binomials and the next mu")
{
    CHECK(delta_step_signed_sum(5, 3) == 4);
    CHECK(delta_step_signed_sum(5, 4) == 10);
    CHECK(delta_step_signed_sum(1, 1) == 1);
    for (unsigned p = 1; p <= 7; ++p)
        for (unsigned k = 1; k <= 2 * p - 1; ++k) {
            CHECK(delta_step_signed_sum_check(p, k));
            CHECK(delta_step_signed_sum(p, k) == mu_closed(p, k + 1));
        }
}

TEST_CASE("closed form of mu")
{
    CHECK(mu_closed(5, 6) == 6);
    CHECK(mu_closed(5, 9) == 5);
    for (unsigned p = 1; p <= 6; ++p)
        CHECK(mu_closed(p, 1) == 1);
    const long table[] = {1, 1, 5, 4, 10, 6, 10, 4, 5, 1};
    for (unsigned k = 1; k <= 10; ++k)
        CHECK(mu_closed(5, k) == table[k - 1]);
    for (unsigned p = 1; p <= 5; ++p)
        for (unsigned k = 1; k <= 2 * p; ++k)
            CHECK(mu(p, k) == mu_closed(p, k));
}
