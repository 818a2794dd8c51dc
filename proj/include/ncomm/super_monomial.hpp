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

#ifndef NCOMM_SUPER_MONOMIAL_HPP
#define NCOMM_SUPER_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncomm {

/// Basis monomial a^alpha = d^{alpha_1}(a) ... d^{alpha_k}(a) of the Grassmann
/// algebra on the odd generators d^i(a). alpha is strictly increasing; the
/// empty sequence is the unit.
///
/// The default ordering (operator<=>) is plain lexicographic on the index
/// sequence, used for storage and printing. graded_less() is the ordering
/// used to pick leaders.
class SuperMonomial {
public:
    SuperMonomial() = default;

    SuperMonomial(std::initializer_list<unsigned> alpha) : SuperMonomial(std::vector<unsigned>(alpha)) {}

    explicit SuperMonomial(std::vector<unsigned> alpha) : alpha_(std::move(alpha))
    {
        for (std::size_t i = 1; i < alpha_.size(); ++i)
            if (alpha_[i - 1] >= alpha_[i])
                throw std::invalid_argument("super monomial indices must be strictly increasing");
    }

    static SuperMonomial generator(unsigned i) { return SuperMonomial({i}); }

    /// (0, 1, ..., n-1)
    static SuperMonomial staircase(unsigned n)
    {
        std::vector<unsigned> v(n);
        std::iota(v.begin(), v.end(), 0u);
        return SuperMonomial(std::move(v));
    }

    const std::vector<unsigned>& indices() const noexcept { return alpha_; }
    std::size_t length() const noexcept { return alpha_.size(); }
    bool is_unit() const noexcept { return alpha_.empty(); }

    unsigned weight() const { return std::accumulate(alpha_.begin(), alpha_.end(), 0u); }

    bool starts_with_zero() const { return !alpha_.empty() && alpha_.front() == 0; }

    auto operator<=>(const SuperMonomial&) const = default;

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < alpha_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(alpha_[i]);
        }
        return s + ")";
    }

private:
    std::vector<unsigned> alpha_;
};

/// Order on E: shorter sequences first, then lexicographic.
inline bool graded_less(const SuperMonomial& a, const SuperMonomial& b)
{
    if (a.length() != b.length())
        return a.length() < b.length();
    return a < b;
}

/// Product of two basis monomials in the Grassmann algebra: std::nullopt
/// when they share an index, otherwise the sign of the merge and the merged
/// monomial.
inline std::optional<std::pair<int, SuperMonomial>> mono_mul(const SuperMonomial& a, const SuperMonomial& b)
{
    const auto& x = a.indices();
    const auto& y = b.indices();
    std::vector<unsigned> merged;
    merged.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0, swaps = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i] < y[j])) {
            merged.push_back(x[i++]);
        } else if (i == x.size() || y[j] < x[i]) {
            // y[j] moves left past the x[i..] still waiting
            swaps += x.size() - i;
            merged.push_back(y[j++]);
        } else {
            return std::nullopt;
        }
    }
    return std::pair{swaps % 2 ? -1 : 1, SuperMonomial(std::move(merged))};
}

/// Sequence membership predicates for E_k, E_{k,0}, E_k(l), E_{k,0}(l).
inline bool in_E(const SuperMonomial& m, std::size_t k) { return m.length() == k; }
inline bool in_E(const SuperMonomial& m, std::size_t k, unsigned weight)
{
    return m.length() == k && m.weight() == weight;
}
inline bool in_E0(const SuperMonomial& m, std::size_t k) { return in_E(m, k) && m.starts_with_zero(); }
inline bool in_E0(const SuperMonomial& m, std::size_t k, unsigned weight)
{
    return in_E(m, k, weight) && m.starts_with_zero();
}

} // namespace ncomm

#endif
