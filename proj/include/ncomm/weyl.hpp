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

#ifndef NCOMM_WEYL_HPP
#define NCOMM_WEYL_HPP

#include "ncomm/operator.hpp"
#include "ncomm/polynomial.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace ncomm {

/// Element of the first Weyl algebra: sum_k u_k(x) d^k with u_k in Q[x].
using DiffOp = DifferentialOperator<Polynomial>;

/// u d^order
inline DiffOp weyl_term(const Polynomial& u, unsigned order) { return DiffOp::term(u, order); }

/// c x^degree d^order
inline DiffOp weyl_monomial(unsigned degree, unsigned order, const Rational& c = 1)
{
    return DiffOp::term(Polynomial::monomial(degree, c), order);
}

/// Determinant of the m x m matrix with entry (j, i) = d^j(u_i).
///
/// Laplace expansion along the last row, memoised over column subsets:
/// D(S) = sum_{i in S} (-1)^{#{j in S : j > i}} d^{|S|-1}(u_i) D(S \ {i}).
/// O(2^m m) polynomial products, no division.
inline Polynomial wronskian(std::span<const Polynomial> us)
{
    const std::size_t m = us.size();
    if (m == 0)
        throw std::invalid_argument("wronskian needs at least one polynomial");
    if (m > 16)
        throw std::out_of_range("wronskian supports at most 16 polynomials");

    std::vector<std::vector<Polynomial>> rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        rows[0].push_back(us[i]);
    }
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i)
            rows[j].push_back(derive(rows[j - 1][i], 1));

    const std::size_t full = (std::size_t{1} << m) - 1;
    std::vector<Polynomial> det(full + 1);
    det[0] = Polynomial(1);
    // subsets in increasing numeric order see their sub-subsets first
    for (std::size_t s = 1; s <= full; ++s) {
        const unsigned row = static_cast<unsigned>(__builtin_popcountll(s)) - 1;
        Polynomial acc;
        unsigned larger = 0;
        for (std::size_t i = m; i-- > 0;) {
            if (!(s >> i & 1))
                continue;
            const Polynomial& minor = det[s & ~(std::size_t{1} << i)];
            if (!minor.is_zero() && !rows[row][i].is_zero()) {
                Polynomial t = rows[row][i] * minor;
                if (larger % 2)
                    acc -= t;
                else
                    acc += t;
            }
            ++larger;
        }
        det[s] = std::move(acc);
    }
    return det[full];
}

inline Polynomial wronskian(std::initializer_list<Polynomial> us)
{
    return wronskian(std::span<const Polynomial>(us.begin(), us.size()));
}

} // namespace ncomm

#endif
