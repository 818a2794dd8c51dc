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

#include "ncomm/lambda.hpp"
#include "ncomm/random.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

using namespace ncomm;

namespace {

// f_s straight from the definition: every ordering of the coordinates.
Rational f_by_permutations(unsigned s, std::vector<Rational> x)
{
    const std::size_t n = x.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational num = 0;
    do {
        std::size_t inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inv += perm[j] < perm[i];
        Rational prefix = 0, prod = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            prefix += x[perm[i]];
            prod *= prefix;
        }
        Rational term = pow(prod, s);
        num += inv % 2 ? Rational(-term) : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            den *= x[i] - x[j];
    return num / den;
}

EvalPoint random_point(SeededRng& rng, std::size_t n)
{
    std::vector<Rational> xs;
    while (xs.size() < n) {
        Rational c(rng.uniform(-20, 20));
        if (std::find(xs.begin(), xs.end(), c) == xs.end())
            xs.push_back(c);
    }
    return EvalPoint(xs);
}

} // namespace

TEST_CASE("reference values")
{
    CHECK(*reference_lambda(3) == 90);
    CHECK(reference_lambda(6)->get_str() == "7886133184567796056800");
    CHECK_FALSE(reference_lambda(7).has_value());
}

TEST_CASE("super route")
{
    CHECK(lambda_super(1) == 1);
    CHECK(lambda_super(3) == 90);
    for (unsigned p = 1; p <= 6; ++p)
        CHECK(lambda_super(p) == *reference_lambda(p));
}

TEST_CASE("Weyl route")
{
    CHECK(lambda_weyl(1) == 1);
    CHECK(s_eval_dp(divided_power_tuple(1)) == weyl_monomial(0, 1));
    for (unsigned p = 1; p <= 5; ++p)
        CHECK(lambda_weyl(p) == Rational(*reference_lambda(p)));
}

TEST_CASE("permutation routes")
{
    CHECK(lambda_perm_naive(1) == 1);
    CHECK(lambda_perm_naive(2) == 2);
    CHECK(lambda_perm_naive(4) == 586656);
    for (unsigned p = 1; p <= 4; ++p)
        CHECK(lambda_perm_dp(p) == lambda_perm_naive(p));
    CHECK(lambda_perm_dp(5) == *reference_lambda(5));
    CHECK(lambda_perm_dp(6) == *reference_lambda(6));
    CHECK_THROWS_AS(lambda_perm_naive(5), std::out_of_range);
    CHECK_THROWS_AS(lambda_perm_dp(7), std::out_of_range);
}

TEST_CASE("Vandermonde sign product")
{
    std::vector<Integer> x{1, 2, 3};
    // (1-2)(1-3)(2-3) = -2
    CHECK(vandermonde_sign_product<Integer>(x) == -2);
    std::vector<Integer> y{1, 2, 3, 4};
    CHECK(vandermonde_sign_product<Integer>(y) == 12);
}

TEST_CASE("matrix set")
{
    auto m1 = enumerate_Mp(1);
    REQUIRE(m1.size() == 1);
    CHECK(m1[0].entries() == std::vector<unsigned>{1});

    auto m2 = enumerate_Mp(2);
    REQUIRE(m2.size() == 4);
    std::vector<std::string> words;
    for (const auto& m : m2) {
        std::string w;
        for (unsigned r : m.column_sums())
            w += std::to_string(r);
        words.push_back(w);
    }
    std::sort(words.begin(), words.end());
    CHECK(words == std::vector<std::string>{"123", "123", "132", "213"});

    for (unsigned p = 1; p <= 3; ++p) {
        auto ms = enumerate_Mp(p);
        CHECK(std::is_sorted(ms.begin(), ms.end(), [](const TriMatrix& a, const TriMatrix& b) {
            return a.entries() < b.entries();
        }));
        for (const auto& m : ms) {
            CHECK(m.satisfies_invariants());
            CHECK(m(0, 0) == m.column_sums()[0]);
            CHECK(m(0, 0) > 0);
            CHECK(m(m.dim() - 1, m.dim() - 1) == p);
        }
    }
    CHECK_THROWS_AS(enumerate_Mp(5), std::out_of_range);
}

TEST_CASE("matrix set against unpruned search at p = 2")
{
    // every upper-triangular 3x3 matrix with row sums 2
    std::vector<std::vector<unsigned>> found;
    for (unsigned a = 0; a <= 2; ++a)
        for (unsigned b = 0; a + b <= 2; ++b)
            for (unsigned d = 0; d <= 2; ++d) {
                std::vector<unsigned> e{a, b, 2 - a - b, 0, d, 2 - d, 0, 0, 2};
                if (TriMatrix(2, e).satisfies_invariants())
                    found.push_back(e);
            }
    std::sort(found.begin(), found.end());
    std::vector<std::vector<unsigned>> got;
    for (const auto& m : enumerate_Mp(2))
        got.push_back(m.entries());
    CHECK(got == found);
}

TEST_CASE("matrix routes")
{
    CHECK(lambda_matrix_rows(1) == 1);
    CHECK(lambda_matrix_rows(2) == 2);
    CHECK(lambda_matrix_rows(3) == 90);
    CHECK(lambda_matrix_cols(1) == 1);
    CHECK(lambda_matrix_cols(2) == 2);
    CHECK(lambda_matrix_cols(3) == 90);
}

TEST_CASE("f_s values")
{
    SeededRng rng(17);
    for (int t = 0; t < 5; ++t) {
        EvalPoint pt = random_point(rng, 2);
        CHECK(f_eval(1, 1, pt) == 1);
        CHECK(f_eval(1, 2, pt) == pt.coords()[0] + pt.coords()[1]);
    }
    for (int t = 0; t < 20; ++t)
        CHECK(f_eval(2, 2, random_point(rng, 4)) == 2);
    CHECK_THROWS_AS(EvalPoint({Rational(1), Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(f_eval(2, 1, random_point(rng, 4)), std::out_of_range);
    CHECK_THROWS_AS(f_eval(2, 2, random_point(rng, 3)), std::invalid_argument);
}

TEST_CASE("f_s agrees with the permutation definition")
{
    SeededRng rng(18);
    for (unsigned p = 1; p <= 3; ++p)
        for (unsigned s = p; s <= p + 2; ++s) {
            EvalPoint pt = random_point(rng, 2 * p);
            std::vector<Rational> xs(pt.coords().begin(), pt.coords().end());
            CHECK(f_eval(p, s, pt) == f_by_permutations(s, xs));
        }
}

TEST_CASE("f_p is the constant lambda_p")
{
    SeededRng rng(19);
    for (unsigned p = 1; p <= 3; ++p)
        for (int t = 0; t < 20; ++t)
            CHECK(f_eval(p, p, random_point(rng, 2 * p)) == Rational(*reference_lambda(p)));
}

TEST_CASE("f_s is symmetric")
{
    SeededRng rng(20);
    for (unsigned p = 1; p <= 2; ++p)
        for (unsigned s = p; s <= p + 2; ++s)
            for (int t = 0; t < 5; ++t) {
                EvalPoint pt = random_point(rng, 2 * p);
                std::vector<Rational> xs(pt.coords().begin(), pt.coords().end());
                for (std::size_t i = xs.size() - 1; i > 0; --i)
                    std::swap(xs[i], xs[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i)))]);
                CHECK(f_eval(p, s, EvalPoint(xs)) == f_eval(p, s, pt));
            }
}

TEST_CASE("f_{p+1} restricted to a line has degree at most 2p-1")
{
    SeededRng rng(21);
    for (unsigned p = 1; p <= 2; ++p) {
        const unsigned n = 2 * p;
        const unsigned bound = 2 * p - 1;
        std::vector<Rational> dir, base;
        for (unsigned i = 0; i < n; ++i) {
            dir.emplace_back(static_cast<long>(i) + 1); // distinct slopes keep coordinates distinct for large t
            base.emplace_back(rng.uniform(-5, 5));
        }
        // values on bound + 3 sample points; a degree <= bound polynomial has
        // vanishing (bound+1)-th and higher finite differences
        std::vector<Rational> values;
        for (long t = 11; values.size() < bound + 3; ++t) {
            std::vector<Rational> pt;
            for (unsigned i = 0; i < n; ++i)
                pt.push_back(base[i] + dir[i] * Rational(t));
            values.push_back(f_eval(p, p + 1, EvalPoint(pt)));
        }
        for (unsigned order = 0; order <= bound; ++order) {
            for (std::size_t i = 0; i + 1 < values.size(); ++i)
                values[i] = values[i + 1] - values[i];
            values.pop_back();
        }
        REQUIRE(values.size() == 2);
        for (const Rational& v : values)
            CHECK(v == 0);
    }
}

TEST_CASE("all routes are positive and agree")
{
    for (unsigned p = 1; p <= 3; ++p) {
        const Integer v = lambda_super(p);
        CHECK(v > 0);
        CHECK(Rational(v) == lambda_weyl(p));
        CHECK(v == lambda_perm_naive(p));
        CHECK(v == lambda_perm_dp(p));
        CHECK(v == lambda_matrix_rows(p));
        CHECK(v == lambda_matrix_cols(p));
    }
}
