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

#ifndef NCOMM_WEYL_IO_HPP
#define NCOMM_WEYL_IO_HPP

// Text and JSON forms for polynomials and Weyl operators.
//
//   operator  := "0" | term (" + " term)*
//   term      := poly " d^" k
//   poly      := mono | "(" mono (" + " mono)+ ")"
//   mono      := coeff ["*x^" n]
//   coeff     := int | "(" int "/" int ")"
//
// e.g. "(3/2)*x^2 d^3 + 1 d^0". Printers emit terms by decreasing order and
// monomials by decreasing degree; parsers accept any order and merge.

#include "ncomm/text.hpp"
#include "ncomm/weyl.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ncomm {

namespace detail {

inline std::string format_coeff(const Rational& c)
{
    if (is_integer(c))
        return c.get_num().get_str();
    return "(" + c.get_str() + ")";
}

inline std::string format_mono(unsigned degree, const Rational& c)
{
    std::string s = format_coeff(c);
    if (degree > 0)
        s += "*x^" + std::to_string(degree);
    return s;
}

inline Rational parse_coeff(Cursor& in)
{
    std::size_t start = in.position();
    if (in.accept("(")) {
        std::string num = in.integer();
        if (!in.accept("/")) {
            in.reset(start);
            in.fail("expected rational coefficient");
        }
        std::string den = in.integer();
        in.expect(")");
        return parse_rational(num + "/" + den);
    }
    return parse_rational(in.integer());
}

inline void parse_mono(Cursor& in, Polynomial& into)
{
    Rational c = parse_coeff(in);
    unsigned degree = 0;
    if (in.accept("*x^"))
        degree = in.natural();
    into.add_term(degree, c);
}

/// A parenthesised sum is told apart from a "(n/d)" coefficient by trying
/// the coefficient first.
inline Polynomial parse_poly(Cursor& in)
{
    Polynomial p;
    std::size_t start = in.position();
    if (in.peek() == '(') {
        try {
            parse_mono(in, p);
            return p;
        } catch (const std::invalid_argument&) {
            in.reset(start);
            p = Polynomial();
        }
        in.expect("(");
        parse_mono(in, p);
        while (true) {
            in.skip_spaces();
            if (in.accept(")"))
                break;
            in.expect("+");
            in.skip_spaces();
            parse_mono(in, p);
        }
        return p;
    }
    parse_mono(in, p);
    return p;
}

} // namespace detail

inline std::string to_string(const Polynomial& u)
{
    if (u.is_zero())
        return "0";
    std::string out;
    const auto& t = u.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        if (!out.empty())
            out += " + ";
        out += detail::format_mono(it->first, it->second);
    }
    return t.size() > 1 ? "(" + out + ")" : out;
}

inline std::string to_string(const DiffOp& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    const auto& t = x.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        if (!out.empty())
            out += " + ";
        out += to_string(it->second) + " d^" + std::to_string(it->first);
    }
    return out;
}

inline Polynomial parse_polynomial(std::string_view text)
{
    detail::Cursor in(text);
    Polynomial p = detail::parse_poly(in);
    if (!in.done())
        in.fail("trailing input");
    return p;
}

inline DiffOp parse_diffop(std::string_view text)
{
    detail::Cursor in(text);
    DiffOp x;
    if (text == "0")
        return x;
    while (true) {
        Polynomial u = detail::parse_poly(in);
        in.expect(" d^");
        x.add_term(in.natural(), u);
        if (in.done())
            break;
        in.skip_spaces();
        in.expect("+");
        in.skip_spaces();
    }
    return x;
}

inline nlohmann::json to_json(const Polynomial& u)
{
    auto arr = nlohmann::json::array();
    for (const auto& [d, c] : u.terms())
        arr.push_back({d, c.get_str()});
    return arr;
}

inline Polynomial polynomial_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("polynomial JSON must be an array of [degree, \"num/den\"] pairs");
    Polynomial p;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_string())
            throw std::invalid_argument("malformed polynomial term " + pair.dump());
        p.add_term(pair[0].get<unsigned>(), parse_rational(pair[1].get<std::string>()));
    }
    return p;
}

/// {"terms":[{"order":k,"poly":[[degree,"num/den"],...]},...]}
inline nlohmann::json to_json(const DiffOp& x)
{
    auto terms = nlohmann::json::array();
    for (const auto& [k, u] : x.terms())
        terms.push_back({{"order", k}, {"poly", to_json(u)}});
    return {{"terms", terms}};
}

inline DiffOp diffop_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("operator JSON must be an object with a \"terms\" array");
    DiffOp x;
    for (const auto& t : j["terms"]) {
        if (!t.contains("order") || !t["order"].is_number_unsigned() || !t.contains("poly"))
            throw std::invalid_argument("malformed operator term " + t.dump());
        x.add_term(t["order"].get<unsigned>(), polynomial_from_json(t["poly"]));
    }
    return x;
}

} // namespace ncomm

#endif
