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

#ifndef NCOMM_RATIONAL_HPP
#define NCOMM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncomm {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational. GMP keeps results of arithmetic in lowest
/// terms with a positive denominator; values built from raw parts must go
/// through make_rational().
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "n" or "n/d" (optional leading minus on n). Throws
/// std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text)
{
    auto is_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '-')
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return make_rational(Integer(std::string(num)), Integer(std::string(den)));
}

/// "n" when the denominator is one, "n/d" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer pow(const Integer& base, unsigned e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow(const Rational& base, unsigned e)
{
    Integer n = pow(Integer(base.get_num()), e);
    Integer d = pow(Integer(base.get_den()), e);
    return Rational(n, d); // already coprime
}

/// Converts to a fixed-width integer, throwing if it does not fit.
inline std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer " + z.get_str() + " exceeds 64 bits");
    return z.get_si();
}

} // namespace ncomm

#endif
