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

#ifndef NCOMM_POLYNOMIAL_HPP
#define NCOMM_POLYNOMIAL_HPP

#include "ncomm/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ncomm {

/// Sparse univariate polynomial over the rationals. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
class Polynomial {
public:
    using Terms = std::map<unsigned, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& c) { add_term(0, c); }
    Polynomial(long c) { add_term(0, Rational(c)); }

    static Polynomial monomial(unsigned degree, const Rational& c = 1)
    {
        Polynomial p;
        p.add_term(degree, c);
        return p;
    }

    /// x
    static Polynomial x() { return monomial(1); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Degree, or std::nullopt for the zero polynomial.
    std::optional<unsigned> degree() const
    {
        if (terms_.empty())
            return std::nullopt;
        return terms_.rbegin()->first;
    }

    Rational coefficient(unsigned degree) const
    {
        auto it = terms_.find(degree);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(unsigned degree, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(degree, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        for (const auto& [d, c] : o.terms_)
            add_term(d, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        for (const auto& [d, c] : o.terms_)
            add_term(d, -c);
        return *this;
    }

    Polynomial& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [d, c] : terms_)
            c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& [d, c] : a.terms_)
            c = -c;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial r;
        if (a.is_zero() || b.is_zero())
            return r;
        const std::size_t size = std::size_t{*a.degree()} + *b.degree() + 1;
        if (a.has_integer_coefficients() && b.has_integer_coefficients()) {
            std::vector<Integer> acc(size);
            for (const auto& [da, ca] : a.terms_)
                for (const auto& [db, cb] : b.terms_)
                    mpz_addmul(acc[da + db].get_mpz_t(), mpq_numref(ca.get_mpq_t()), mpq_numref(cb.get_mpq_t()));
            for (std::size_t d = 0; d < size; ++d)
                if (acc[d] != 0)
                    r.terms_.emplace_hint(r.terms_.end(), static_cast<unsigned>(d), Rational(acc[d]));
            return r;
        }
        // dense accumulator; products of sparse terms land in order
        std::vector<Rational> acc(size);
        Rational t;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) {
                mpq_mul(t.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
                acc[da + db] += t;
            }
        for (std::size_t d = 0; d < acc.size(); ++d)
            if (acc[d] != 0)
                r.terms_.emplace_hint(r.terms_.end(), static_cast<unsigned>(d), std::move(acc[d]));
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool has_integer_coefficients() const
    {
        for (const auto& [d, c] : terms_)
            if (c.get_den() != 1)
                return false;
        return true;
    }

    Rational evaluate(const Rational& at) const
    {
        Rational acc = 0;
        unsigned prev = degree().value_or(0);
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            acc *= pow(at, prev - it->first);
            acc += it->second;
            prev = it->first;
        }
        return acc * pow(at, prev);
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Terms terms_;
};

/// r-th derivative under d/dx(x^n) = n x^(n-1).
inline Polynomial derive(const Polynomial& u, unsigned r = 1)
{
    if (r == 0)
        return u;
    Polynomial out;
    for (const auto& [d, c] : u.terms()) {
        if (d < r)
            continue;
        Integer falling = 1;
        for (unsigned i = 0; i < r; ++i)
            falling *= d - i;
        out.add_term(d - r, c * falling);
    }
    return out;
}

} // namespace ncomm

#endif
