/*
   Copyright 2026 The petit authors

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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace petit {

/**
 * Domain error with a stable machine-readable code ("NotPrime", "TooLarge",
 * "LeadingCoeffNotUnit", ...) next to the human-readable message. The CLI
 * maps these to exit code 3.
 */
class error : public std::runtime_error {
   public:
    error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

   private:
    std::string code_;
};

/// Input-text errors (ring specs, polynomials, elements). CLI exit code 2.
class parse_error : public error {
   public:
    parse_error(const std::string& message, std::size_t position)
        : error("ParseError", message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

namespace detail {
[[noreturn]] inline void fail(const char* code, const std::string& message) {
    throw error(code, message);
}

inline void require(bool ok, const char* code, const std::string& message) {
    if (!ok) fail(code, message);
}
}  // namespace detail

}  // namespace petit
