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

#ifndef NCOMM_TEXT_HPP
#define NCOMM_TEXT_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncomm::detail {

/// Minimal recursive-descent cursor shared by the textual parsers.
class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    bool done() const { return pos_ >= s_.size(); }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }
    std::size_t position() const { return pos_; }
    void reset(std::size_t p) { pos_ = p; }

    void skip_spaces()
    {
        while (!done() && s_[pos_] == ' ')
            ++pos_;
    }

    bool accept(std::string_view tok)
    {
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok)
    {
        if (!accept(tok))
            fail("expected '" + std::string(tok) + "'");
    }

    /// Optional '-' followed by digits.
    std::string integer()
    {
        std::size_t start = pos_;
        if (peek() == '-')
            ++pos_;
        std::size_t digits = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected integer");
        }
        return std::string(s_.substr(start, pos_ - start));
    }

    unsigned natural()
    {
        std::size_t start = pos_;
        std::string digits = integer();
        if (digits.front() == '-') {
            pos_ = start;
            fail("expected non-negative integer");
        }
        if (digits.size() > 9)
            fail("exponent too large");
        return static_cast<unsigned>(std::stoul(digits));
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace ncomm::detail

#endif
