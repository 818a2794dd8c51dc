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

#ifndef NCOMM_OPERATOR_HPP
#define NCOMM_OPERATOR_HPP

#include "ncomm/rational.hpp"

#include <concepts>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ncomm {

/// Coefficient algebra for differential operators: a commutative (or
/// super-commutative) algebra with an even derivation `derive`.
template <class C>
concept DerivationAlgebra = requires(C a, const C& b, const Integer& n) {
    { C{} };
    { a.is_zero() } -> std::convertible_to<bool>;
    { a += b };
    { a *= n };
    { b * b } -> std::convertible_to<C>;
    { derive(b, 1u) } -> std::convertible_to<C>;
};

/// Finite sum  sum_i c_i d^i  with coefficients in a derivation algebra.
/// Composition follows the Leibniz rule
///     u d^k . v d^l = sum_{s=0}^{k} C(k,s) u d^s(v) d^{k+l-s}.
/// No order maps to a zero coefficient.
template <DerivationAlgebra Coeff>
class DifferentialOperator {
public:
    using coefficient_type = Coeff;
    using Terms = std::map<unsigned, Coeff>;

    DifferentialOperator() = default;

    static DifferentialOperator term(const Coeff& c, unsigned order)
    {
        DifferentialOperator x;
        x.add_term(order, c);
        return x;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    std::optional<unsigned> min_order() const
    {
        if (terms_.empty())
            return std::nullopt;
        return terms_.begin()->first;
    }

    std::optional<unsigned> max_order() const
    {
        if (terms_.empty())
            return std::nullopt;
        return terms_.rbegin()->first;
    }

    /// Coefficient of d^order (zero if absent).
    Coeff coefficient(unsigned order) const
    {
        auto it = terms_.find(order);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    void add_term(unsigned order, const Coeff& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(order, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    DifferentialOperator& operator+=(const DifferentialOperator& o)
    {
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }

    DifferentialOperator& operator*=(const Integer& n)
    {
        if (n == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= n;
        return *this;
    }

    friend DifferentialOperator operator+(DifferentialOperator a, const DifferentialOperator& b) { return a += b; }
    friend DifferentialOperator operator-(DifferentialOperator a)
    {
        a *= Integer(-1);
        return a;
    }
    friend DifferentialOperator operator-(DifferentialOperator a, const DifferentialOperator& b) { return a += -b; }
    friend DifferentialOperator operator*(DifferentialOperator a, const Integer& n) { return a *= n; }

    friend DifferentialOperator operator*(const DifferentialOperator& x, const DifferentialOperator& y)
    {
        return compose(x, y);
    }

    friend bool operator==(const DifferentialOperator&, const DifferentialOperator&) = default;

private:
    Terms terms_;
};

/// Composition X . Y (apply Y first).
template <class Coeff>
DifferentialOperator<Coeff> compose(const DifferentialOperator<Coeff>& x, const DifferentialOperator<Coeff>& y)
{
    DifferentialOperator<Coeff> out;
    if (x.is_zero() || y.is_zero())
        return out;
    const unsigned top = *x.max_order();
    for (const auto& [l, v] : y.terms()) {
        // d^s(v) for s = 0..top; stops early once a derivative vanishes
        std::vector<Coeff> derivs{v};
        while (derivs.size() <= top) {
            Coeff next = derive(derivs.back(), 1u);
            if (next.is_zero())
                break;
            derivs.push_back(std::move(next));
        }
        for (const auto& [k, u] : x.terms()) {
            for (unsigned s = 0; s <= k && s < derivs.size(); ++s) {
                Coeff t = u * derivs[s];
                if (t.is_zero())
                    continue;
                if (s != 0 && s != k)
                    t *= binomial(k, s);
                out.add_term(k + l - s, t);
            }
        }
    }
    return out;
}

/// Result of letting X act on a coefficient: sum_i c_i d^i(u).
template <class Coeff>
Coeff apply(const DifferentialOperator<Coeff>& x, const Coeff& u)
{
    Coeff out{};
    Coeff d = u;
    unsigned at = 0;
    for (const auto& [k, c] : x.terms()) {
        while (at < k) {
            d = derive(d, 1u);
            ++at;
        }
        out += c * d;
    }
    return out;
}

/// The single-order component  c_k d^k  of X (possibly zero).
template <class Coeff>
DifferentialOperator<Coeff> homogeneous_part(const DifferentialOperator<Coeff>& x, unsigned k)
{
    return DifferentialOperator<Coeff>::term(x.coefficient(k), k);
}

} // namespace ncomm

#endif
