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

#include <string>

#include "petit/error.hpp"
#include "petit/fixtures.hpp"
#include "petit/selftest.hpp"

namespace testutil {

/// Error code of the petit::error thrown by fn, or "" if nothing threw.
template <class Fn>
std::string thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const petit::error& e) {
        return e.code();
    }
    return "";
}

}  // namespace testutil
