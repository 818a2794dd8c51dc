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

#ifndef NCOMM_IDENTITIES_HPP
#define NCOMM_IDENTITIES_HPP

// Randomized and exhaustive checks of the identities satisfied by the
// 2p-commutator on order-p operators. Every claim checked here is an exact
// polynomial identity, so a single non-zero evaluation refutes it; the
// reports carry that witness.

#include "ncomm/combinatorics.hpp"
#include "ncomm/errors.hpp"
#include "ncomm/lambda.hpp"
#include "ncomm/parallel.hpp"
#include "ncomm/random.hpp"
#include "ncomm/standard_poly.hpp"
#include "ncomm/weyl.hpp"
#include "ncomm/weyl_io.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ncomm {

/// Outcome of a check. `witness` holds the textual form of the refuting
/// inputs and value when the check fails.
struct CheckReport {
    bool passed = true;
    std::size_t trials = 0;
    std::optional<std::size_t> failing_trial;
    std::vector<std::string> witness;

    explicit operator bool() const noexcept { return passed; }
};

namespace detail {

inline std::vector<std::string> describe(std::span<const DiffOp> args, const DiffOp& value)
{
    std::vector<std::string> w;
    for (const DiffOp& a : args)
        w.push_back(to_string(a));
    w.push_back("value: " + to_string(value));
    return w;
}

inline CheckReport report_from(std::size_t trials, std::optional<std::pair<std::size_t, std::vector<std::string>>> failure)
{
    CheckReport r;
    r.trials = trials;
    if (failure) {
        r.passed = false;
        r.failing_trial = failure->first;
        r.witness = std::move(failure->second);
    }
    return r;
}

} // namespace detail

/// s_N vanishes on `trials` random tuples of order-p operators with
/// polynomial degree <= 2p+2 and coefficients in [-5, 5]. Requires N > 2p.
inline CheckReport check_sN_zero(unsigned p, unsigned N, std::size_t trials, std::uint64_t seed, unsigned threads = 1)
{
    if (p == 0 || N <= 2 * p)
        throw std::out_of_range("check_sN_zero: need N > 2p");
    if (N > 16)
        throw std::out_of_range("check_sN_zero: N <= 16");
    auto failure = first_failure<std::vector<std::string>>(trials, threads, [&](std::size_t t) -> std::optional<std::vector<std::string>> {
        SeededRng rng = SeededRng::for_trial(seed, t);
        std::vector<DiffOp> xs;
        for (unsigned i = 0; i < N; ++i)
            xs.push_back(random_order_p(rng, p, 2 * p + 2));
        DiffOp s = s_eval_dp(xs);
        if (s.is_zero())
            return std::nullopt;
        return detail::describe(xs, s);
    });
    return detail::report_from(trials, std::move(failure));
}

/// s_{2p}(u_1 d^p, ..., u_{2p} d^p) == lambda_p W(u_1..u_{2p}) d^p.
inline bool wronskian_formula_check(unsigned p, std::span<const Polynomial> us)
{
    if (p == 0 || p > 3)
        throw std::out_of_range("wronskian_formula_check: 1 <= p <= 3");
    if (us.size() != 2 * p)
        throw std::invalid_argument("wronskian_formula_check: need 2p polynomials");
    std::vector<DiffOp> xs;
    for (const Polynomial& u : us)
        xs.push_back(weyl_term(u, p));
    DiffOp lhs = s_eval_dp(xs);
    DiffOp rhs = weyl_term(wronskian(us) * Rational(lambda_perm_dp(p)), p);
    return lhs == rhs;
}

/// wronskian_formula_check on random tuples (degree <= max_degree).
inline CheckReport check_wronskian_formula(unsigned p, std::size_t trials, std::uint64_t seed, unsigned threads = 1,
                                           unsigned max_degree = 6)
{
    if (p == 0 || p > 3)
        throw std::out_of_range("check_wronskian_formula: 1 <= p <= 3");
    auto failure = first_failure<std::vector<std::string>>(trials, threads, [&](std::size_t t) -> std::optional<std::vector<std::string>> {
        SeededRng rng = SeededRng::for_trial(seed, t);
        std::vector<Polynomial> us;
        for (unsigned i = 0; i < 2 * p; ++i)
            us.push_back(random_polynomial(rng, max_degree));
        if (wronskian_formula_check(p, us))
            return std::nullopt;
        std::vector<std::string> w;
        for (const Polynomial& u : us)
            w.push_back(to_string(u));
        return w;
    });
    return detail::report_from(trials, std::move(failure));
}

struct ClosureWitness {
    std::vector<unsigned> degrees; // X_j = x^{degrees[j]} d^p
    DiffOp value;                  // s_N(X_1..X_N)
};

/// First tuple (x^{i_1} d^p, ..., x^{i_N} d^p), i_1 < ... < i_N <= 2p in
/// lexicographic order, whose s_N has a component of order > p.
/// Throws VerificationFailure if none exists. Requires 2 <= N < 2p.
inline ClosureWitness closure_witness(unsigned p, unsigned N)
{
    if (N < 2 || N >= 2 * p)
        throw std::out_of_range("closure_witness: need 2 <= N < 2p");
    const unsigned top = 2 * p;
    std::vector<unsigned> idx(N);
    std::iota(idx.begin(), idx.end(), 0u);
    while (true) {
        std::vector<DiffOp> xs;
        for (unsigned i : idx)
            xs.push_back(weyl_monomial(i, p));
        DiffOp s = s_eval_dp(xs);
        if (!s.is_zero() && *s.max_order() > p)
            return {idx, s};
        // next combination
        int pos = static_cast<int>(N) - 1;
        while (pos >= 0 && idx[pos] == top - (N - 1 - pos))
            --pos;
        if (pos < 0)
            break;
        ++idx[pos];
        for (unsigned j = pos + 1; j < N; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    throw VerificationFailure("closure_witness: no monomial tuple leaves order " + std::to_string(p) + " for N=" +
                              std::to_string(N));
}

/// n-ary alternating multiplication on a carrier T.
template <class T>
struct SkewBracket {
    unsigned arity = 0;
    std::function<T(std::span<const T>)> eval;
    std::string carrier;

    T operator()(std::span<const T> args) const
    {
        if (args.size() != arity)
            throw std::invalid_argument("bracket arity mismatch");
        return eval(args);
    }
};

/// psi = s_{2p} on order-p Weyl operators.
inline SkewBracket<DiffOp> standard_bracket(unsigned p)
{
    return {2 * p, [](std::span<const DiffOp> xs) { return s_eval_dp(xs); }, "weyl-s" + std::to_string(2 * p)};
}

struct Shuffle {
    IntSeq sigma; // 1-based images sigma(1..2n-1)
    int sign = 1;
};

/// The (n-1, n)-shuffles of {1..2n-1}, lexicographic.
inline std::vector<Shuffle> shuffles(unsigned n)
{
    if (n < 1)
        throw std::out_of_range("shuffles: n >= 1");
    const unsigned m = 2 * n - 1;
    std::vector<Shuffle> out;
    std::vector<unsigned> head(n - 1);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned from) {
        if (pos == n - 1) {
            IntSeq s(head.begin(), head.end());
            for (unsigned v = 1; v <= m; ++v)
                if (std::find(head.begin(), head.end(), v) == head.end())
                    s.push_back(v);
            int sign = sort_and_sign(s).sign;
            out.push_back({std::move(s), sign});
            return;
        }
        for (unsigned v = from; v <= m; ++v) {
            head[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
    std::sort(out.begin(), out.end(), [](const Shuffle& a, const Shuffle& b) { return a.sigma < b.sigma; });
    return out;
}

enum class ShuffleFilter { all, last_fixed, first_fixed };

/// sum over filtered shuffles of sign * psi(t_s(1..n-1), psi(t_s(n..2n-1))).
template <class T>
T nested_shuffle_sum(const SkewBracket<T>& psi, std::span<const T> t, ShuffleFilter filter)
{
    const unsigned n = psi.arity;
    const unsigned m = 2 * n - 1;
    if (t.size() != m)
        throw std::invalid_argument("nested_shuffle_sum: need 2n-1 arguments");
    T sum{};
    for (const Shuffle& sh : shuffles(n)) {
        if (filter == ShuffleFilter::last_fixed && sh.sigma.back() != m)
            continue;
        if (filter == ShuffleFilter::first_fixed && sh.sigma.front() != 1)
            continue;
        std::vector<T> inner, outer;
        for (unsigned i = n - 1; i < m; ++i)
            inner.push_back(t[sh.sigma[i] - 1]);
        for (unsigned i = 0; i + 1 < n; ++i)
            outer.push_back(t[sh.sigma[i] - 1]);
        outer.push_back(psi(inner));
        T v = psi(outer);
        sum = sh.sign > 0 ? sum + v : sum + -v;
    }
    return sum;
}

/// (2n-2,1)-type sum: shuffles fixing the last argument.
template <class T>
T lcom_eval(const SkewBracket<T>& psi, std::span<const T> t)
{
    return nested_shuffle_sum(psi, t, ShuffleFilter::last_fixed);
}

/// (1,2n-2)-type sum: shuffles fixing the first argument.
template <class T>
T rcom_eval(const SkewBracket<T>& psi, std::span<const T> t)
{
    return nested_shuffle_sum(psi, t, ShuffleFilter::first_fixed);
}

/// Homotopical n-Lie sum over all (n-1,n)-shuffles.
template <class T>
T homotopical_eval(const SkewBracket<T>& psi, std::span<const T> t)
{
    return nested_shuffle_sum(psi, t, ShuffleFilter::all);
}

enum class NamedIdentity { lcom, rcom, homotopical };

/// The chosen identity vanishes for psi = s_{2p} on `trials` random tuples
/// of order-p operators (degree <= 2p+2). p <= 2.
inline CheckReport check_named_identity(unsigned p, NamedIdentity which, std::size_t trials, std::uint64_t seed,
                                        unsigned threads = 1)
{
    if (p == 0 || p > 2)
        throw std::out_of_range("check_named_identity: 1 <= p <= 2");
    const auto psi = standard_bracket(p);
    const unsigned m = 2 * psi.arity - 1;
    auto failure = first_failure<std::vector<std::string>>(trials, threads, [&](std::size_t t) -> std::optional<std::vector<std::string>> {
        SeededRng rng = SeededRng::for_trial(seed, t);
        std::vector<DiffOp> xs;
        for (unsigned i = 0; i < m; ++i)
            xs.push_back(random_order_p(rng, p, 2 * p + 2));
        DiffOp v;
        switch (which) {
        case NamedIdentity::lcom: v = lcom_eval<DiffOp>(psi, xs); break;
        case NamedIdentity::rcom: v = rcom_eval<DiffOp>(psi, xs); break;
        case NamedIdentity::homotopical: v = homotopical_eval<DiffOp>(psi, xs); break;
        }
        if (v.is_zero())
            return std::nullopt;
        return detail::describe(xs, v);
    });
    return detail::report_from(trials, std::move(failure));
}

/// Vector over the rationals; the empty vector is zero of every dimension.
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::vector<Rational> v) : v_(std::move(v)) {}

    const std::vector<Rational>& values() const noexcept { return v_; }
    std::size_t dim() const noexcept { return v_.size(); }

    bool is_zero() const
    {
        return std::all_of(v_.begin(), v_.end(), [](const Rational& q) { return q == 0; });
    }

    friend RationalVector operator+(const RationalVector& a, const RationalVector& b)
    {
        std::vector<Rational> r(std::max(a.dim(), b.dim()));
        for (std::size_t i = 0; i < a.dim(); ++i)
            r[i] += a.v_[i];
        for (std::size_t i = 0; i < b.dim(); ++i)
            r[i] += b.v_[i];
        return RationalVector(std::move(r));
    }

    friend RationalVector operator-(const RationalVector& a)
    {
        std::vector<Rational> r(a.v_);
        for (Rational& q : r)
            q = -q;
        return RationalVector(std::move(r));
    }

    friend RationalVector operator-(const RationalVector& a, const RationalVector& b) { return a + -b; }

    friend RationalVector operator*(const Rational& s, const RationalVector& a)
    {
        std::vector<Rational> r(a.v_);
        for (Rational& q : r)
            q *= s;
        return RationalVector(std::move(r));
    }

    friend bool operator==(const RationalVector& a, const RationalVector& b) { return (a - b).is_zero(); }

private:
    std::vector<Rational> v_;
};

/// Random alternating n-linear map V^n -> V, dim V = dim: structure
/// constants c_{I,k} on increasing index sets I, integers in [-5, 5],
/// extended by alternation:
///   psi(v_1..v_n)_k = sum_I c_{I,k} det[v_a(I_b)].
inline SkewBracket<RationalVector> random_skew_bracket(SeededRng& rng, unsigned n, unsigned dim)
{
    if (n < 1 || dim < n)
        throw std::out_of_range("random_skew_bracket: need 1 <= n <= dim");
    std::vector<std::vector<unsigned>> subsets;
    std::vector<unsigned> cur;
    std::function<void(unsigned)> rec = [&](unsigned from) {
        if (cur.size() == n) {
            subsets.push_back(cur);
            return;
        }
        for (unsigned v = from; v < dim; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::vector<std::vector<Rational>> coeffs;
    for (std::size_t s = 0; s < subsets.size(); ++s) {
        std::vector<Rational> row;
        for (unsigned k = 0; k < dim; ++k)
            row.emplace_back(rng.uniform(-5, 5));
        coeffs.push_back(std::move(row));
    }
    auto eval = [n, dim, subsets, coeffs](std::span<const RationalVector> args) {
        std::vector<Rational> out(dim);
        std::vector<unsigned> perm(n);
        for (std::size_t s = 0; s < subsets.size(); ++s) {
            // det of the n x n minor [args[a][subsets[s][b]]] by the Leibniz formula
            std::iota(perm.begin(), perm.end(), 0u);
            Rational det = 0;
            do {
                Rational prod = 1;
                for (unsigned a = 0; a < n && prod != 0; ++a) {
                    const auto& v = args[a].values();
                    const unsigned at = subsets[s][perm[a]];
                    prod *= at < v.size() ? v[at] : Rational(0);
                }
                if (inversions<unsigned>(perm) % 2)
                    det -= prod;
                else
                    det += prod;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (det == 0)
                continue;
            for (unsigned k = 0; k < dim; ++k)
                out[k] += det * coeffs[s][k];
        }
        return RationalVector(std::move(out));
    };
    return {n, eval, "random-skew-dim" + std::to_string(dim)};
}

namespace detail {

template <class T>
T scaled(const T& v, long n)
{
    T r{};
    const T step = n < 0 ? -v : v;
    for (long i = 0; i < (n < 0 ? -n : n); ++i)
        r = r + step;
    return r;
}

template <class T>
std::vector<T> pick(std::span<const T> t, std::initializer_list<std::vector<std::size_t>> parts)
{
    std::vector<T> out;
    for (const auto& part : parts)
        for (std::size_t i : part)
            out.push_back(t[i]);
    return out;
}

} // namespace detail

/// rcom_1(t) = sum_{i=2}^{2n-1} (-1)^{i+1} lcom(t_1..^t_i..t_{2n-1}, t_i) - (n-1) lcom(t_2..t_{2n-1}, t_1)
template <class T>
T rcom_1_eval(const SkewBracket<T>& psi, std::span<const T> t)
{
    const std::size_t m = t.size();
    const long n = psi.arity;
    T sum{};
    for (std::size_t i = 2; i <= m; ++i) {
        std::vector<T> args;
        for (std::size_t j = 1; j <= m; ++j)
            if (j != i)
                args.push_back(t[j - 1]);
        args.push_back(t[i - 1]);
        T v = lcom_eval<T>(psi, args);
        sum = (i + 1) % 2 ? sum + -v : sum + v;
    }
    std::vector<T> rot(t.begin() + 1, t.end());
    rot.push_back(t[0]);
    return sum + -detail::scaled(lcom_eval<T>(psi, rot), n - 1);
}

/// lcom_1(t) = sum_{i=1}^{2n-2} (-1)^{i+1} rcom(t_i, t_1..^t_i..t_{2n-1}) - (n-2) rcom(t_{2n-1}, t_1..t_{2n-2})
template <class T>
T lcom_1_eval(const SkewBracket<T>& psi, std::span<const T> t)
{
    const std::size_t m = t.size();
    const long n = psi.arity;
    T sum{};
    for (std::size_t i = 1; i <= m - 1; ++i) {
        std::vector<T> args{t[i - 1]};
        for (std::size_t j = 1; j <= m; ++j)
            if (j != i)
                args.push_back(t[j - 1]);
        T v = rcom_eval<T>(psi, args);
        sum = (i + 1) % 2 ? sum + -v : sum + v;
    }
    std::vector<T> rot{t[m - 1]};
    rot.insert(rot.end(), t.begin(), t.end() - 1);
    return sum + -detail::scaled(rcom_eval<T>(psi, rot), n - 2);
}

/// n rcom = rcom_1 and (n-1) lcom = lcom_1 on `trials` random alternating
/// brackets of arity n over spaces of dimension 4..6. n in {2, 3}.
inline CheckReport lcom_rcom_relation_check(unsigned n, std::size_t trials, std::uint64_t seed, unsigned threads = 1)
{
    if (n < 2 || n > 3)
        throw std::out_of_range("lcom_rcom_relation_check: n in {2, 3}");
    const unsigned m = 2 * n - 1;
    auto failure = first_failure<std::vector<std::string>>(trials, threads, [&](std::size_t t) -> std::optional<std::vector<std::string>> {
        SeededRng rng = SeededRng::for_trial(seed, t);
        const unsigned dim = static_cast<unsigned>(rng.uniform(4, 6));
        auto psi = random_skew_bracket(rng, n, dim);
        std::vector<RationalVector> args;
        for (unsigned i = 0; i < m; ++i) {
            std::vector<Rational> v;
            for (unsigned k = 0; k < dim; ++k)
                v.emplace_back(rng.uniform(-5, 5));
            args.emplace_back(std::move(v));
        }
        RationalVector r = detail::scaled(rcom_eval<RationalVector>(psi, args), n);
        RationalVector r1 = rcom_1_eval<RationalVector>(psi, args);
        RationalVector l = detail::scaled(lcom_eval<RationalVector>(psi, args), n - 1);
        RationalVector l1 = lcom_1_eval<RationalVector>(psi, args);
        std::vector<std::string> bad;
        if (!(r == r1))
            bad.push_back("n rcom = rcom_1 fails (dim " + std::to_string(dim) + ")");
        if (!(l == l1))
            bad.push_back("(n-1) lcom = lcom_1 fails (dim " + std::to_string(dim) + ")");
        if (bad.empty())
            return std::nullopt;
        return bad;
    });
    return detail::report_from(trials, std::move(failure));
}

namespace detail {

/// Incremental row echelon basis over Q.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

    std::size_t rank() const noexcept { return rows_.size(); }

    /// Reduces `row` against the basis; keeps it if independent.
    bool insert(std::vector<Rational> row)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational& c = row[pivots_[r]];
            if (c == 0)
                continue;
            const Rational factor = c;
            for (std::size_t j = 0; j < cols_; ++j)
                row[j] -= factor * rows_[r][j];
        }
        auto it = std::find_if(row.begin(), row.end(), [](const Rational& q) { return q != 0; });
        if (it == row.end())
            return false;
        const std::size_t piv = static_cast<std::size_t>(it - row.begin());
        const Rational lead = row[piv];
        for (Rational& q : row)
            q /= lead;
        // keep earlier rows reduced at the new pivot
        for (auto& other : rows_) {
            const Rational f = other[piv];
            if (f != 0)
                for (std::size_t j = 0; j < cols_; ++j)
                    other[j] -= f * row[j];
        }
        rows_.push_back(std::move(row));
        pivots_.push_back(piv);
        return true;
    }

private:
    std::size_t cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace detail

/// Rank over Q of the evaluation matrix of the d! multilinear monomials
/// t_sigma(1)...t_sigma(d) on random tuples from A_1^{(p)}. Each tuple
/// contributes one row per (order, degree) coordinate; tuples are added
/// until the rank reaches d! or three consecutive tuples add nothing.
/// Rank d! means no multilinear identity of degree d holds.
inline std::size_t multilinear_identity_rank(unsigned p, unsigned d, std::uint64_t seed)
{
    if (p == 0 || p > 2 || d < 1 || d > 4)
        throw std::out_of_range("multilinear_identity_rank: 1 <= p <= 2, 1 <= d <= 4");
    std::vector<std::vector<unsigned>> perms;
    std::vector<unsigned> perm(d);
    std::iota(perm.begin(), perm.end(), 0u);
    do
        perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    const std::size_t cols = perms.size();

    detail::EchelonBasis basis(cols);
    unsigned stale = 0;
    for (std::size_t tuple = 0; tuple < 64 && basis.rank() < cols && stale < 3; ++tuple) {
        SeededRng rng = SeededRng::for_trial(seed, tuple);
        std::vector<DiffOp> xs;
        for (unsigned i = 0; i < d; ++i)
            xs.push_back(random_order_p(rng, p, 2 * p + 2));
        std::map<std::pair<unsigned, unsigned>, std::vector<Rational>> rows;
        for (std::size_t c = 0; c < cols; ++c) {
            DiffOp prod = xs[perms[c][0]];
            for (unsigned i = 1; i < d; ++i)
                prod = prod * xs[perms[c][i]];
            for (const auto& [order, u] : prod.terms())
                for (const auto& [deg, coeff] : u.terms()) {
                    auto& row = rows[{order, deg}];
                    row.resize(cols);
                    row[c] = coeff;
                }
        }
        const std::size_t before = basis.rank();
        for (auto& [key, row] : rows)
            basis.insert(std::move(row));
        stale = basis.rank() == before ? stale + 1 : 0;
    }
    return basis.rank();
}

/// The generation identities behind simplicity of (A_1^{(p)}, s_{2p}).
/// With W = lambda_p prod_{i=0}^{2p-1} i!:
///   s >= 2p-1:  s_{2p}(d^p, x d^p, ..., x^{2p-2} d^p, x^s d^p) = W C(s, 2p-1) x^{s-2p+1} d^p
///               and, for l = s-2p+1 and a scalar eta,
///               s_{2p}(eta d^p, x d^p, ..., x^{2p-2} d^p, x^{l+2p-1} d^p) = eta W C(l+2p-1, 2p-1) x^l d^p
///   s < 2p-1:   s_{2p}(d^p, ..., x^{s-1} d^p, X, x^{s+1} d^p, ..., x^{2p-1} d^p) = c W d^p
///               for X = u d^p, u = c x^s + (lower terms).
inline bool simplicity_generation_check(unsigned p, unsigned s)
{
    if (p == 0 || p > 3 || s > 2 * p + 4)
        throw std::out_of_range("simplicity_generation_check: 1 <= p <= 3, s <= 2p+4");
    const unsigned n = 2 * p;
    Integer w = lambda_perm_dp(p);
    for (unsigned i = 0; i < n; ++i)
        w *= factorial(i);

    if (s >= n - 1) {
        std::vector<DiffOp> xs;
        for (unsigned i = 0; i + 1 < n; ++i)
            xs.push_back(weyl_monomial(i, p));
        xs.push_back(weyl_monomial(s, p));
        if (s_eval_dp(xs) != weyl_monomial(s - (n - 1), p, Rational(w * binomial(s, n - 1))))
            return false;

        const Rational eta(-7, 3);
        const unsigned l = s - (n - 1);
        xs.front() = weyl_monomial(0, p, eta);
        xs.back() = weyl_monomial(l + n - 1, p);
        return s_eval_dp(xs) == weyl_monomial(l, p, eta * Rational(w * binomial(l + n - 1, n - 1)));
    }

    const Rational c(5, 2);
    Polynomial u = Polynomial::monomial(s, c);
    for (unsigned i = 0; i < s; ++i)
        u.add_term(i, Rational(static_cast<long>(i) + 3, 4));
    std::vector<DiffOp> xs;
    for (unsigned i = 0; i < n; ++i)
        xs.push_back(i == s ? weyl_term(u, p) : weyl_monomial(i, p));
    return s_eval_dp(xs) == weyl_monomial(0, p, c * Rational(w));
}

} // namespace ncomm

#endif
