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
#include "ncomm/random.hpp"
#include "ncomm/super.hpp"
#include "ncomm/super_io.hpp"

#include <vector>

using namespace ncomm;

namespace {

SuperElement elem(std::initializer_list<std::pair<SuperMonomial, long>> terms)
{
    SuperElement e;
    for (const auto& [m, c] : terms)
        e.add_term(m, Integer(c));
    return e;
}

std::vector<SuperTerm> terms_of(std::initializer_list<SuperTerm> ts) { return ts; }

SuperTerm T(long c, SuperMonomial m, unsigned order) { return {std::move(m), order, Integer(c)}; }

// Random element homogeneous of the given length and weight, non-negative coefficients.
SuperElement random_homogeneous(SeededRng& rng, std::size_t length, unsigned weight)
{
    auto basis = enumerate_E(length, weight, false);
    SuperElement e;
    for (const auto& m : basis)
        e.add_term(m, Integer(rng.uniform(0, 4)));
    return e;
}

} // namespace

TEST_CASE("monomials are strictly increasing")
{
    CHECK_THROWS_AS(SuperMonomial({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SuperMonomial({3, 2}), std::invalid_argument);
    CHECK(SuperMonomial({0, 2, 4}).weight() == 6);
    CHECK(SuperMonomial({0, 2, 4}).to_string() == "(0,2,4)");
    CHECK(SuperMonomial::staircase(3) == SuperMonomial({0, 1, 2}));
    CHECK(in_E0(SuperMonomial({0, 3}), 2, 3));
    CHECK_FALSE(in_E0(SuperMonomial({1, 3}), 2));
}

TEST_CASE("monomial product signs")
{
    CHECK_FALSE(mono_mul({2, 3, 5}, {1, 3}).has_value());
    auto prod = mono_mul({1, 2, 3, 5}, {0, 4});
    REQUIRE(prod);
    CHECK(prod->first == -1);
    CHECK(prod->second == SuperMonomial({0, 1, 2, 3, 4, 5}));
    auto unit = mono_mul({}, {2, 7});
    REQUIRE(unit);
    CHECK(unit->first == 1);
    CHECK(unit->second == SuperMonomial({2, 7}));
    // odd generators anticommute
    CHECK(mono_mul({1}, {0})->first == -1);
    CHECK(mono_mul({0}, {1})->first == 1);
}

TEST_CASE("Grassmann derivative")
{
    SuperElement u = SuperElement::monomial({0, 1, 3});
    CHECK(derive(u) == elem({{{0, 2, 3}, 1}, {{0, 1, 4}, 1}}));
    CHECK(derive(u, 2) == elem({{{1, 2, 3}, 1}, {{0, 2, 4}, 2}, {{0, 1, 5}, 1}}));
    CHECK(derive(SuperElement::one()).is_zero());
}

TEST_CASE("the derivative is an even derivation")
{
    SeededRng rng(4);
    for (int t = 0; t < 20; ++t) {
        SuperElement u = random_homogeneous(rng, 2, static_cast<unsigned>(rng.uniform(1, 6)));
        SuperElement v = random_homogeneous(rng, 2, static_cast<unsigned>(rng.uniform(1, 6)));
        CHECK(derive(u * v) == derive(u) * v + u * derive(v));
    }
}

TEST_CASE("super-operator composition")
{
    SuperOp x = super_term({2, 4, 5}, 2), y = super_term({0, 1, 3}, 3);
    CHECK(compose(x, y) == super_term({0, 1, 2, 3, 4, 5}, 5));
    CHECK(super_terms(power(3, 2)) == terms_of({T(3, {0, 1}, 5), T(3, {0, 2}, 4), T(1, {0, 3}, 3)}));
    SuperOp a0 = super_term({1}, 0), b0 = super_term({0, 2}, 0);
    CHECK(compose(a0, b0) == super_term({0, 1, 2}, 0, Integer(-1)));
}

TEST_CASE("powers of a d^3 match the worked example")
{
    CHECK(super_terms(power(3, 3)) ==
          terms_of({T(18, {0, 1, 2}, 6), T(27, {0, 1, 3}, 5), T(15, {0, 1, 4}, 4), T(3, {0, 1, 5}, 3),
                    T(9, {0, 2, 3}, 4), T(3, {0, 2, 4}, 3)}));
    CHECK(super_terms(power(3, 4)) ==
          terms_of({T(126, {0, 1, 2, 3}, 6), T(189, {0, 1, 2, 4}, 5), T(99, {0, 1, 2, 5}, 4), T(18, {0, 1, 2, 6}, 3),
                    T(75, {0, 1, 3, 4}, 4), T(24, {0, 1, 3, 5}, 3), T(6, {0, 2, 3, 4}, 3)}));
    CHECK(super_terms(power(3, 5)) == terms_of({T(432, {0, 1, 2, 3, 4}, 5), T(432, {0, 1, 2, 3, 5}, 4),
                                                T(108, {0, 1, 2, 3, 6}, 3), T(90, {0, 1, 2, 4, 5}, 3)}));
    CHECK(super_terms(power(3, 6)) == terms_of({T(90, {0, 1, 2, 3, 4, 5}, 3)}));
    CHECK(power(3, 7).is_zero());
    CHECK(power(2, 0) == super_term({}, 0));
}

TEST_CASE("structure of powers")
{
    for (unsigned p = 1; p <= 4; ++p) {
        for (unsigned k = 1; k <= 2 * p; ++k) {
            for (const SuperTerm& t : super_terms(power(p, k))) {
                CHECK(t.alpha.length() == k);
                CHECK(t.alpha.weight() + t.order == p * k);
                CHECK(t.order >= p);
                CHECK(t.coeff > 0);
            }
        }
        for (unsigned N = 2 * p + 1; N <= 2 * p + 2; ++N)
            CHECK(power(p, N).is_zero());
        auto top = super_terms(power(p, 2 * p));
        REQUIRE(top.size() == 1);
        CHECK(top[0].alpha == SuperMonomial::staircase(2 * p));
        CHECK(top[0].order == p);
    }
}

TEST_CASE("products of homogeneous elements are homogeneous")
{
    SeededRng rng(31);
    for (int t = 0; t < 20; ++t) {
        const auto la = static_cast<std::size_t>(rng.uniform(1, 3)), lb = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto wa = static_cast<unsigned>(rng.uniform(3, 8)), wb = static_cast<unsigned>(rng.uniform(3, 8));
        SuperElement u = random_homogeneous(rng, la, wa), v = random_homogeneous(rng, lb, wb);
        SuperElement uv = u * v;
        if (uv.is_zero())
            continue;
        auto g = uv.grading();
        REQUIRE(g);
        CHECK(g->first == la + lb);
        CHECK(g->second == wa + wb);
    }
}

TEST_CASE("a d^p keeps non-negative coefficients and prepends the generator a")
{
    SeededRng rng(8);
    for (int t = 0; t < 20; ++t) {
        const auto p = static_cast<unsigned>(rng.uniform(1, 4));
        const auto len = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto w = static_cast<unsigned>(rng.uniform(2, 8));
        SuperElement u = random_homogeneous(rng, len, w);
        SuperElement v = super_apply(super_term(SuperMonomial::generator(0), p), u);
        CHECK(v.has_nonnegative_coefficients());
        for (const auto& [m, c] : v.terms()) {
            CHECK(m.length() == len + 1);
            CHECK(m.weight() == w + p);
            CHECK(m.starts_with_zero());
        }
    }
    CHECK(super_apply(super_term({0}, 2), SuperElement::monomial({3})) == SuperElement::monomial({0, 5}));
    CHECK(super_apply(super_term({0}, 2), SuperElement::one()).is_zero());
}

TEST_CASE("leader")
{
    SuperOp x = super_term({0, 1, 5}, 2, Integer(2)) + super_term({1, 2, 3}, 3, Integer(5)) +
                super_term({0, 2, 4}, 2, Integer(-3));
    CHECK(leader(x) == T(-3, {0, 2, 4}, 2));
    CHECK(leader(power(3, 4)) == T(6, {0, 2, 3, 4}, 3));
    CHECK(leader(super_term({1, 4}, 7, Integer(11))) == T(11, {1, 4}, 7));
    CHECK_THROWS_AS(leader(SuperOp{}), std::domain_error);
    CHECK(graded_less({5}, {0, 1}));
    CHECK(graded_less({0, 1}, {0, 2}));
}

TEST_CASE("nu, mu and gamma coefficients")
{
    CHECK(nu(3, 1) == 1);
    CHECK(nu(3, 2) == 1);
    CHECK(nu(3, 3) == 3);
    CHECK(nu(3, 4) == 6);
    CHECK(nu(3, 5) == 90);
    CHECK(nu(3, 6) == 90);
    const long mu3[] = {1, 1, 3, 2, 3, 1};
    for (unsigned k = 1; k <= 6; ++k)
        CHECK(mu(3, k) == mu3[k - 1]);
    CHECK(mu(5, 3) == 5);
    CHECK(mu(5, 4) == 4);
    CHECK(mu(5, 5) == 10);
    CHECK(mu(5, 10) == 1);
    CHECK(gamma(3, 2) == 3);
    CHECK(gamma(3, 3) == 3);
    CHECK(gamma(5, 4) == 20);
    CHECK_THROWS_AS(nu(3, 7), std::out_of_range);
    CHECK_THROWS_AS(mu(3, 0), std::out_of_range);
    CHECK_THROWS_AS(gamma(3, 1), std::out_of_range);
}

TEST_CASE("nu is the leader coefficient of the k-th power")
{
    for (unsigned p = 1; p <= 4; ++p)
        for (unsigned k = 1; k <= 2 * p; ++k) {
            SuperTerm l = leader(power(p, k));
            CHECK(l.alpha == delta_closed(p, k - 1));
            CHECK(l.order == p);
            CHECK(l.coeff == nu(p, k));
        }
}

TEST_CASE("gamma matches its closed form and bounds the order p+1 part")
{
    for (unsigned p = 1; p <= 4; ++p) {
        for (unsigned k = 2; k <= 2 * p - 1; ++k) {
            CHECK(gamma(p, k) == Integer(p) * binomial(p - 1, (k - 2) / 2));
            const SuperOp pk = power(p, k);
            const Integer c = pk.coefficient(p + 1).coefficient(delta_max_oracle(p, k - 1, 1));
            CHECK(c >= gamma(p, k) * nu(p, k - 1));
            CHECK(c > 0);
        }
    }
    CHECK(power(3, 3).coefficient(4).coefficient({0, 2, 3}) == 9);
}

TEST_CASE("nu grows at least like the product of mu")
{
    for (unsigned p = 1; p <= 4; ++p)
        for (unsigned k = 2; k <= 2 * p; ++k)
            CHECK(nu(p, k) >= mu(p, k) * nu(p, k - 1));
}

TEST_CASE("super-operator text and JSON")
{
    CHECK(to_string(power(3, 2)) == "3 a(0,1) d^5 + 3 a(0,2) d^4 + 1 a(0,3) d^3");
    CHECK(to_string(SuperOp{}) == "0");
    CHECK(to_json(power(3, 6)).dump() == R"({"terms":[{"alpha":[0,1,2,3,4,5],"coeff":"90","order":3}]})");
}
