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

#ifndef NCOMM_LAMBDA_HPP
#define NCOMM_LAMBDA_HPP

// The constant lambda_p, computed five independent ways:
//   super        leading coefficient of (a d^p)^{2p} in the super-operator algebra
//   weyl         s_{2p}(d^p, x d^p, ..., x^{2p-1}/(2p-1)! d^p) = lambda_p d^p
//   perm, perm-dp  signed permutation sum of prefix-sum products over a
//                Vandermonde denominator
//   matrix-rows, matrix-cols  signed sums over upper-triangular matrices with
//                constant row sums p and distinct column sums

#include "ncomm/combinatorics.hpp"
#include "ncomm/errors.hpp"
#include "ncomm/rational.hpp"
#include "ncomm/standard_poly.hpp"
#include "ncomm/super.hpp"
#include "ncomm/weyl.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncomm {

/// lambda_1 .. lambda_6 as tabulated in the literature.
inline std::optional<Integer> reference_lambda(unsigned p)
{
    switch (p) {
    case 1: return Integer(1);
    case 2: return Integer(2);
    case 3: return Integer(90);
    case 4: return Integer(586656);
    case 5: return Integer("1915103977500");
    case 6: return Integer("7886133184567796056800");
    default: return std::nullopt;
    }
}

/// Coefficient of a^{(0,...,2p-1)} d^p in (a d^p)^{2p}. Throws
/// VerificationFailure if the power is not that single term.
inline Integer lambda_super(unsigned p)
{
    if (p == 0)
        throw std::out_of_range("lambda_super: p >= 1");
    SuperOp pw = power(p, 2 * p);
    auto terms = super_terms(pw);
    if (terms.size() != 1 || terms[0].order != p || terms[0].alpha != SuperMonomial::staircase(2 * p))
        throw VerificationFailure("(a d^" + std::to_string(p) + ")^" + std::to_string(2 * p) +
                                  " is not a single staircase term of order p");
    return terms[0].coeff;
}

/// The tuple d^p, x d^p, x^2/2! d^p, ..., x^{2p-1}/(2p-1)! d^p.
inline std::vector<DiffOp> divided_power_tuple(unsigned p)
{
    std::vector<DiffOp> xs;
    for (unsigned i = 0; i < 2 * p; ++i)
        xs.push_back(weyl_monomial(i, p, Rational(1, 1) / Rational(factorial(i))));
    return xs;
}

/// lambda_p from s_{2p} on the divided-power tuple in the Weyl algebra.
inline Rational lambda_weyl(unsigned p)
{
    if (p == 0)
        throw std::out_of_range("lambda_weyl: p >= 1");
    DiffOp s = s_eval_dp(divided_power_tuple(p));
    const auto& t = s.terms();
    if (t.size() != 1 || t.begin()->first != p || t.begin()->second.degree().value_or(1) != 0)
        throw VerificationFailure("s_" + std::to_string(2 * p) + " on the divided-power tuple is not a scalar times d^p");
    return t.begin()->second.coefficient(0);
}

/// prod_{1<=i<j<=n} (x_i - x_j)
template <class Scalar>
Scalar vandermonde_sign_product(std::span<const Scalar> x)
{
    Scalar r = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            r *= x[i] - x[j];
    return r;
}

/// sum over orderings sigma of x of sign(sigma) * (prod_{m=1}^{n-1} (x_sigma(1) + ... + x_sigma(m)))^s,
/// by dynamic programming over subsets. A prefix sum depends only on the
/// set already placed, so F(S) = (sum S)^s * sum_{i in S} (-1)^{#{j in S: j > i}} F(S \ {i})
/// for |S| < n; the full prefix is not part of the product.
template <class Scalar>
Scalar prefix_product_alternant(std::span<const Scalar> x, unsigned s)
{
    const std::size_t n = x.size();
    if (n == 0 || n > 24)
        throw std::out_of_range("prefix_product_alternant: 1 <= n <= 24");
    using Mask = std::uint32_t;
    const Mask full = (Mask{1} << n) - 1;
    std::vector<Scalar> f(std::size_t{full} + 1);
    f[0] = 1;
    for (Mask set = 1; set <= full; ++set) {
        Scalar acc = 0;
        unsigned larger = 0;
        for (std::size_t i = n; i-- > 0;) {
            if (!(set >> i & 1))
                continue;
            const Scalar& sub = f[set & ~(Mask{1} << i)];
            if (larger % 2)
                acc -= sub;
            else
                acc += sub;
            ++larger;
        }
        if (set != full && acc != 0) {
            Scalar total = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (set >> i & 1)
                    total += x[i];
            acc *= pow(total, s);
        }
        f[set] = std::move(acc);
    }
    return f[full];
}

namespace detail {

inline Integer exact_quotient(const Integer& num, const Integer& den, const char* route)
{
    if (den == 0 || num % den != 0)
        throw VerificationFailure(std::string(route) + ": numerator " + num.get_str() + " not divisible by " + den.get_str());
    return num / den;
}

inline std::vector<Integer> first_naturals(unsigned n)
{
    std::vector<Integer> v;
    for (unsigned i = 1; i <= n; ++i)
        v.emplace_back(i);
    return v;
}

} // namespace detail

/// Signed permutation sum over Sym_{2p}, enumerated directly. p <= 4.
inline Integer lambda_perm_naive(unsigned p)
{
    if (p == 0 || p > 4)
        throw std::out_of_range("lambda_perm_naive: 1 <= p <= 4");
    const unsigned n = 2 * p;
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 1u);
    Integer num = 0;
    do {
        Integer prod = 1;
        unsigned prefix = 0;
        for (unsigned m = 0; m + 1 < n; ++m) {
            prefix += perm[m];
            prod *= prefix;
        }
        Integer term = pow(prod, p);
        if (inversions<unsigned>(perm) % 2)
            num -= term;
        else
            num += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto pts = detail::first_naturals(n);
    return detail::exact_quotient(num, vandermonde_sign_product<Integer>(pts), "lambda_perm_naive");
}

/// Same formula as lambda_perm_naive through prefix_product_alternant. p <= 6.
inline Integer lambda_perm_dp(unsigned p)
{
    if (p == 0 || p > 6)
        throw std::out_of_range("lambda_perm_dp: 1 <= p <= 6");
    auto pts = detail::first_naturals(2 * p);
    Integer num = prefix_product_alternant<Integer>(pts, p);
    return detail::exact_quotient(num, vandermonde_sign_product<Integer>(pts), "lambda_perm_dp");
}

/// Evaluation point with pairwise distinct rational coordinates.
class EvalPoint {
public:
    explicit EvalPoint(std::vector<Rational> coords) : coords_(std::move(coords))
    {
        for (std::size_t i = 0; i < coords_.size(); ++i)
            for (std::size_t j = i + 1; j < coords_.size(); ++j)
                if (coords_[i] == coords_[j])
                    throw std::invalid_argument("evaluation point coordinates must be pairwise distinct");
    }

    std::span<const Rational> coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }

private:
    std::vector<Rational> coords_;
};

/// f_s(x_1..x_{2p}) = (signed prefix-product sum with exponent s) / prod_{i<j}(x_i - x_j).
/// f_p is the constant lambda_p.
inline Rational f_eval(unsigned p, unsigned s, const EvalPoint& point)
{
    if (p == 0 || s < p)
        throw std::out_of_range("f_eval: need p >= 1 and s >= p");
    if (point.size() != 2 * p)
        throw std::invalid_argument("f_eval: point must have 2p coordinates");
    Rational num = prefix_product_alternant<Rational>(point.coords(), s);
    return num / vandermonde_sign_product<Rational>(point.coords());
}

/// Upper-triangular (2p-1) x (2p-1) matrix of non-negative integers with
/// every row summing to p and pairwise distinct positive column sums.
class TriMatrix {
public:
    TriMatrix(unsigned p, std::vector<unsigned> entries) : p_(p), n_(2 * p - 1), m_(std::move(entries))
    {
        if (m_.size() != std::size_t{n_} * n_)
            throw std::invalid_argument("TriMatrix: wrong entry count");
    }

    unsigned p() const noexcept { return p_; }
    unsigned dim() const noexcept { return n_; }
    unsigned operator()(unsigned i, unsigned j) const { return m_[std::size_t{i} * n_ + j]; }
    const std::vector<unsigned>& entries() const noexcept { return m_; }

    IntSeq row(unsigned i) const { return IntSeq(m_.begin() + i * n_, m_.begin() + (i + 1) * n_); }

    /// m_{0..j, j}
    IntSeq column_upper(unsigned j) const
    {
        IntSeq c;
        for (unsigned i = 0; i <= j; ++i)
            c.push_back((*this)(i, j));
        return c;
    }

    /// Column-sum word r(M).
    IntSeq column_sums() const
    {
        IntSeq r(n_, 0);
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j)
                r[j] += (*this)(i, j);
        return r;
    }

    bool satisfies_invariants() const
    {
        for (unsigned i = 0; i < n_; ++i) {
            unsigned sum = 0;
            for (unsigned j = 0; j < n_; ++j) {
                if (i > j && (*this)(i, j) != 0)
                    return false;
                sum += (*this)(i, j);
            }
            if (sum != p_)
                return false;
        }
        IntSeq r = column_sums();
        if (std::find(r.begin(), r.end(), 0u) != r.end())
            return false;
        std::sort(r.begin(), r.end());
        return std::adjacent_find(r.begin(), r.end()) == r.end();
    }

    friend bool operator==(const TriMatrix&, const TriMatrix&) = default;

private:
    unsigned p_;
    unsigned n_;
    std::vector<unsigned> m_;
};

/// Calls visit(entries) for every member of the matrix set for p, in search
/// order; `entries` is row-major and only valid during the call.
///
/// Column-by-column search. The column sums are distinct positive integers
/// adding up to p(2p-1) = 1 + 2 + ... + (2p-1), so they are a permutation
/// of 1..2p-1; each column draws its sum from the values not yet used, and
/// the last column takes whatever the rows still owe.
template <class Visit>
void for_each_Mp(unsigned p, Visit&& visit)
{
    if (p == 0 || p > 4)
        throw std::out_of_range("enumerate_Mp: 1 <= p <= 4");
    const unsigned n = 2 * p - 1;
    std::vector<unsigned> m(std::size_t{n} * n, 0);
    std::vector<unsigned> residual(n, p);
    std::vector<bool> used(n + 1, false);

    std::function<void(unsigned)> column;
    std::function<void(unsigned, unsigned, unsigned)> fill = [&](unsigned j, unsigned i, unsigned sum) {
        if (i > j) {
            if (sum == 0 || sum > n || used[sum])
                return;
            used[sum] = true;
            column(j + 1);
            used[sum] = false;
            return;
        }
        if (j + 1 == n) {
            // last column: rows must be exhausted
            const unsigned v = residual[i];
            m[i * n + j] = v;
            residual[i] = 0;
            fill(j, i + 1, sum + v);
            residual[i] = v;
            m[i * n + j] = 0;
            return;
        }
        const unsigned cap = std::min(residual[i], n - sum);
        for (unsigned v = 0; v <= cap; ++v) {
            m[i * n + j] = v;
            residual[i] -= v;
            fill(j, i + 1, sum + v);
            residual[i] += v;
        }
        m[i * n + j] = 0;
    };
    column = [&](unsigned j) {
        if (j == n) {
            visit(std::as_const(m));
            return;
        }
        fill(j, 0, 0);
    };
    column(0);
}

/// All members of the matrix set for p, in row-major lexicographic order.
inline std::vector<TriMatrix> enumerate_Mp(unsigned p)
{
    std::vector<std::vector<unsigned>> found;
    for_each_Mp(p, [&](const std::vector<unsigned>& m) { found.push_back(m); });
    std::sort(found.begin(), found.end());
    std::vector<TriMatrix> out;
    out.reserve(found.size());
    for (auto& e : found)
        out.emplace_back(p, std::move(e));
    return out;
}

/// sum_M sign r(M) * prod_i multinomial(p; row i).
inline Integer lambda_matrix_rows(unsigned p)
{
    Integer sum = 0;
    for_each_Mp(p, [&](const std::vector<unsigned>& entries) {
        const TriMatrix mat(p, entries);
        const int sign = sort_and_sign(mat.column_sums()).sign;
        Integer prod = 1;
        for (unsigned i = 0; i < mat.dim(); ++i)
            prod *= multinomial(mat.row(i));
        sum += sign * prod;
    });
    return sum;
}

/// p!^{2p-1} / prod_{j=1}^{2p-1} j!  *  sum_M sign r(M) prod_j multinomial(r_j; m_{1..j, j}).
/// Throws VerificationFailure if the result is not an integer.
inline Integer lambda_matrix_cols(unsigned p)
{
    const unsigned n = 2 * p - 1;
    Integer sum = 0;
    for_each_Mp(p, [&](const std::vector<unsigned>& entries) {
        const TriMatrix mat(p, entries);
        const int sign = sort_and_sign(mat.column_sums()).sign;
        Integer prod = 1;
        for (unsigned j = 0; j < n; ++j)
            prod *= multinomial(mat.column_upper(j));
        sum += sign * prod;
    });
    Integer denom = 1;
    for (unsigned j = 1; j <= n; ++j)
        denom *= factorial(j);
    Rational value = make_rational(pow(factorial(p), n) * sum, denom);
    if (!is_integer(value))
        throw VerificationFailure("lambda_matrix_cols: non-integer result " + value.get_str());
    return value.get_num();
}

} // namespace ncomm

#endif
