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

#ifndef NCOMM_ERRORS_HPP
#define NCOMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncomm {

/// A computed quantity failed a structural property it is proven to have
/// (single-term power, exact division, integrality, ...).
class VerificationFailure : public std::runtime_error {
public:
    explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ncomm

#endif
