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

#ifndef NCOMM_SUPER_HPP
#define NCOMM_SUPER_HPP

#include "ncomm/combinatorics.hpp"
#include "ncomm/operator.hpp"
#include "ncomm/rational.hpp"
#include "ncomm/super_monomial.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ncomm {

/// Element of the Grassmann algebra U: integer combination of basis
/// monomials a^alpha. No stored zeros.
class SuperElement {
public:
    using Terms = std::map<SuperMonomial, Integer>;

    SuperElement() = default;

    static SuperElement monomial(const SuperMonomial& m, const Integer& c = 1)
    {
        SuperElement e;
        e.add_term(m, c);
        return e;
    }

    /// The unit a^()
    static SuperElement one() { return monomial(SuperMonomial{}); }

    /// a = d^0(a)
    static SuperElement a() { return monomial(SuperMonomial::generator(0)); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer coefficient(const SuperMonomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(const SuperMonomial& m, const Integer& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    SuperElement& operator+=(const SuperElement& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    SuperElement& operator*=(const Integer& n)
    {
        if (n == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= n;
        return *this;
    }

    friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
    friend SuperElement operator-(SuperElement a)
    {
        a *= Integer(-1);
        return a;
    }
    friend SuperElement operator-(SuperElement a, const SuperElement& b) { return a += -b; }

    friend SuperElement operator*(const SuperElement& a, const SuperElement& b)
    {
        SuperElement r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                if (auto prod = mono_mul(ma, mb))
                    r.add_term(prod->second, prod->first > 0 ? Integer(ca * cb) : Integer(-ca * cb));
        return r;
    }

    /// (length, weight) if every monomial shares them; std::nullopt for
    /// zero or mixed elements.
    std::optional<std::pair<std::size_t, unsigned>> grading() const
    {
        if (terms_.empty())
            return std::nullopt;
        auto g = std::pair{terms_.begin()->first.length(), terms_.begin()->first.weight()};
        for (const auto& [m, c] : terms_)
            if (m.length() != g.first || m.weight() != g.second)
                return std::nullopt;
        return g;
    }

    bool has_nonnegative_coefficients() const
    {
        for (const auto& [m, c] : terms_)
            if (c < 0)
                return false;
        return true;
    }

    friend bool operator==(const SuperElement&, const SuperElement&) = default;

private:
    Terms terms_;
};

/// One application of the even derivation d(d^i(a)) = d^{i+1}(a) to a^alpha:
/// each index is raised in turn, and a raise that collides with the next
/// index vanishes.
inline SuperElement derive(const SuperMonomial& m)
{
    SuperElement out;
    const auto& idx = m.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i + 1 < idx.size() && idx[i] + 1 == idx[i + 1])
            continue;
        std::vector<unsigned> raised = idx;
        ++raised[i];
        out.add_term(SuperMonomial(std::move(raised)), 1);
    }
    return out;
}

/// r-fold derivative of a Grassmann element.
inline SuperElement derive(const SuperElement& u, unsigned r = 1)
{
    SuperElement cur = u;
    for (unsigned step = 0; step < r && !cur.is_zero(); ++step) {
        SuperElement next;
        for (const auto& [m, c] : cur.terms()) {
            const SuperElement dm = derive(m);
            for (const auto& [raised, dc] : dm.terms())
                next.add_term(raised, c * dc);
        }
        cur = std::move(next);
    }
    return cur;
}

/// Super-differential operator sum a^alpha d^i with integer coefficients.
using SuperOp = DifferentialOperator<SuperElement>;

inline SuperOp super_term(const SuperMonomial& alpha, unsigned order, const Integer& c = 1)
{
    return SuperOp::term(SuperElement::monomial(alpha, c), order);
}

inline SuperElement super_apply(const SuperOp& x, const SuperElement& u) { return apply(x, u); }

/// A flattened (alpha, order, coefficient) view of an operator.
struct SuperTerm {
    SuperMonomial alpha;
    unsigned order = 0;
    Integer coeff;

    friend bool operator==(const SuperTerm&, const SuperTerm&) = default;
};

/// Terms sorted by (alpha lexicographic, order).
inline std::vector<SuperTerm> super_terms(const SuperOp& x)
{
    std::vector<SuperTerm> out;
    for (const auto& [order, elem] : x.terms())
        for (const auto& [m, c] : elem.terms())
            out.push_back({m, order, c});
    std::sort(out.begin(), out.end(), [](const SuperTerm& a, const SuperTerm& b) {
        return a.alpha != b.alpha ? a.alpha < b.alpha : a.order < b.order;
    });
    return out;
}

/// (a d^p)^k by repeated composition X^k = X^{k-1} . X; k = 0 is the
/// identity operator.
inline SuperOp power(unsigned p, unsigned k)
{
    SuperOp result = super_term(SuperMonomial{}, 0);
    const SuperOp step = super_term(SuperMonomial::generator(0), p);
    for (unsigned i = 0; i < k; ++i)
        result = compose(result, step);
    return result;
}

/// Among the terms of minimal d-order, the one whose monomial is greatest
/// under graded_less. Throws std::domain_error for X = 0.
inline SuperTerm leader(const SuperOp& x)
{
    if (x.is_zero())
        throw std::domain_error("leader of the zero operator is undefined");
    const auto& [order, elem] = *x.terms().begin();
    auto best = elem.terms().begin();
    for (auto it = elem.terms().begin(); it != elem.terms().end(); ++it)
        if (graded_less(best->first, it->first))
            best = it;
    return {best->first, order, best->second};
}

namespace detail {

inline void check_k_range(unsigned p, unsigned k, unsigned lo, unsigned hi, const char* what)
{
    if (p == 0 || k < lo || k > hi)
        throw std::out_of_range(std::string(what) + ": k=" + std::to_string(k) + " outside [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "] for p=" + std::to_string(p));
}

} // namespace detail

/// nu_k: coefficient of a^{delta(k-1)} in (a d^p)^{k-1}(a), 1 <= k <= 2p.
inline Integer nu(unsigned p, unsigned k)
{
    detail::check_k_range(p, k, 1, 2 * p, "nu");
    SuperElement v = super_apply(power(p, k - 1), SuperElement::a());
    return v.coefficient(delta_closed(p, k - 1));
}

/// mu_k: coefficient of a^{delta(k-1)} in a d^p (a^{delta(k-2)}); mu_1 = 1.
inline Integer mu(unsigned p, unsigned k)
{
    detail::check_k_range(p, k, 1, 2 * p, "mu");
    if (k == 1)
        return 1;
    SuperOp ad = super_term(SuperMonomial::generator(0), p);
    SuperElement v = super_apply(ad, SuperElement::monomial(delta_closed(p, k - 2)));
    return v.coefficient(delta_closed(p, k - 1));
}

/// gamma_k = p * (coefficient of a^{delta_1(k-1)} in a d^{p-1}(a^{delta(k-2)})),
/// 2 <= k <= 2p-1. The factor p = C(p, p-1) is the binomial that the
/// composition rule attaches to the d^{p-1} part.
inline Integer gamma(unsigned p, unsigned k)
{
    detail::check_k_range(p, k, 2, 2 * p - 1, "gamma");
    SuperOp ad = super_term(SuperMonomial::generator(0), p - 1);
    SuperElement v = super_apply(ad, SuperElement::monomial(delta_closed(p, k - 2)));
    return Integer(p) * v.coefficient(delta_max_oracle(p, k - 1, 1));
}

} // namespace ncomm

#endif
