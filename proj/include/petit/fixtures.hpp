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

/// @file fixtures.hpp
/// @brief Built-in named rings so CLI invocations and the self-test are
/// reproducible without external files.

#pragma once

#include <string>

#include "petit/chain_ring.hpp"
#include "petit/error.hpp"
#include "petit/morphism.hpp"
#include "petit/skew_poly.hpp"

namespace petit::fixtures {

/// F4 = F_2[x]/(x^2+x+1), generator w = x.
inline RingPtr F4() { return ChainRing::make(2, 1, {1, 1, 1}); }

/// GR(4,2) = Z_4[x]/(x^2+x+1), 16 elements.
inline RingPtr GR42() { return ChainRing::make(2, 2, {1, 1, 1}); }

/// F8 = F_2[x]/(x^3+x+1).
inline RingPtr F8() { return ChainRing::make(2, 1, {1, 1, 0, 1}); }

/// Z4 = Z_{2^2}.
inline RingPtr Z4() { return ChainRing::make(2, 2); }

inline RingPtr named_ring(const std::string& name) {
    if (name == "F4") return F4();
    if (name == "GR42") return GR42();
    if (name == "F8") return F8();
    if (name == "Z4") return Z4();
    detail::fail("UnknownFixture", "no built-in ring named '" + name + "'");
}

inline bool is_named_ring(const std::string& name) {
    return name == "F4" || name == "GR42" || name == "F8" || name == "Z4";
}

/// S[t; frobenius^k] over a named or given ring.
inline CtxPtr twisted_ctx(const RingPtr& ring, unsigned k = 1) {
    return SkewPolyContext::twisted(ring, RingMorphism::frobenius_lift(ring, k));
}

}  // namespace petit::fixtures
