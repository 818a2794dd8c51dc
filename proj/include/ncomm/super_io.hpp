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

#ifndef NCOMM_SUPER_IO_HPP
#define NCOMM_SUPER_IO_HPP

// Text and JSON forms for super-operators.
//
//   text: "3 a(0,1) d^5 + 3 a(0,2) d^4 + 1 a(0,3) d^3", terms sorted by
//         (alpha, order); the zero operator prints as "0".
//   JSON: {"terms":[{"alpha":[0,1],"order":5,"coeff":"3"},...]}

#include "ncomm/super.hpp"

#include <json.hpp>

#include <string>

namespace ncomm {

inline std::string to_string(const SuperTerm& t)
{
    return t.coeff.get_str() + " a" + t.alpha.to_string() + " d^" + std::to_string(t.order);
}

inline std::string to_string(const SuperOp& x)
{
    std::string out;
    for (const SuperTerm& t : super_terms(x)) {
        if (!out.empty())
            out += " + ";
        out += to_string(t);
    }
    return out.empty() ? "0" : out;
}

inline nlohmann::json to_json(const SuperTerm& t)
{
    return {{"alpha", t.alpha.indices()}, {"order", t.order}, {"coeff", t.coeff.get_str()}};
}

inline nlohmann::json to_json(const SuperOp& x)
{
    auto terms = nlohmann::json::array();
    for (const SuperTerm& t : super_terms(x))
        terms.push_back(to_json(t));
    return {{"terms", terms}};
}

} // namespace ncomm

#endif
