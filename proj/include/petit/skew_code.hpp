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

/**
 * @file skew_code.hpp
 * @brief Cyclic (f, sigma, delta)-codes from monic right divisors of f.
 *
 * A monic right divisor g of f spans the code C = {u ∘ g} ⊂ S^m, the free
 * left S-module with basis rows vec(t^k ∘ g), k < m - deg g — equivalently
 * the first m-r rows of gamma(g). When f = g h also holds (h the left
 * quotient), gamma(h) is a control matrix: c ∈ C iff c ∘ h = 0. For
 * f = t^m - d with delta = 0 divisor codes are sigma-constacyclic and their
 * polynomial sets are left ideals of S_f.
 *
 * Codewords are enumerated eagerly (message space |S|^{m-r}), so membership,
 * distance and closure checks are exact set computations.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "petit/chain_ring.hpp"
#include "petit/error.hpp"
#include "petit/matrix.hpp"
#include "petit/petit_algebra.hpp"
#include "petit/pseudolinear.hpp"
#include "petit/skew_poly.hpp"

namespace petit {

struct SkewCode {
    AlgPtr algebra;
    SkewPoly g;                        // monic right divisor of f, degree r
    SkewPoly h_prime;                  // f = h' g, always present
    std::optional<SkewPoly> h;         // f = g h, when the left quotient divides
    MatrixOverS gen_matrix;            // (m-r) x m, rows vec(t^k ∘ g)
    std::optional<MatrixOverS> ctrl_matrix;  // gamma(h)
    std::vector<std::uint32_t> codewords;    // sorted algebra indices of {u ∘ g}

    unsigned length() const { return algebra->m(); }
    unsigned dimension() const { return algebra->m() - static_cast<unsigned>(g.degree()); }
    std::uint64_t size() const { return codewords.size(); }

    bool contains_index(std::uint32_t idx) const {
        return std::binary_search(codewords.begin(), codewords.end(), idx);
    }
};

/// All monic g of degree r with right_divmod(f, g).r = 0.
inline std::vector<SkewPoly> right_divisors(const SkewPoly& f, unsigned r,
                                            std::uint64_t cap = ChainRing::kDefaultEnumCap) {
    detail::require(r >= 1 && static_cast<int>(r) <= f.degree() - 1, "InvalidDegree",
                    "proper divisors need 1 <= r <= m-1");
    std::vector<SkewPoly> out;
    for_each_monic(
        f.ctx(), r,
        [&](const SkewPoly& cand) {
            if (right_divmod(f, cand).r.is_zero()) out.push_back(cand);
        },
        cap);
    return out;
}

/**
 * Assembles the code of a monic right divisor: generator matrix, both
 * cofactors (re-verified by multiplication), the control matrix when
 * f = g h exists, and the enumerated codeword set.
 */
inline SkewCode build_code(const AlgPtr& algebra, const SkewPoly& g,
                           std::uint64_t cap = ChainRing::kDefaultEnumCap) {
    const SkewPoly& f = algebra->f();
    detail::require(same_context(g.ctx(), f.ctx()), "AlgebraMismatch",
                    "divisor from a different skew ring");
    detail::require(g.is_monic(), "NotARightDivisor", "the divisor must be monic");
    detail::require(g.degree() >= 0 && g.degree() <= f.degree(), "InvalidDegree",
                    "divisor degree out of range");

    const auto rd = right_divmod(f, g);
    detail::require(rd.r.is_zero(), "NotARightDivisor",
                    g.to_string() + " does not right-divide " + f.to_string());
    const SkewPoly h_prime = rd.q;
    detail::require(h_prime * g == f, "InternalError", "cofactor verification failed");

    std::optional<SkewPoly> h;
    const auto ld = left_divmod(f, g);
    if (ld.r.is_zero()) {
        detail::require(g * ld.q == f, "InternalError", "cofactor verification failed");
        h = ld.q;
    }

    const unsigned m = algebra->m();
    const unsigned r = static_cast<unsigned>(g.degree());
    const AlgElem gv = algebra->from_poly(g);

    MatrixOverS gen(algebra->ring(), m - r, m);
    for (unsigned k = 0; k < m - r; ++k)
        gen.set_row(k, algebra->mul(algebra->basis(k), gv).coords);

    std::optional<MatrixOverS> ctrl;
    if (h) ctrl = right_mul_matrix(*algebra, algebra->from_poly(*h));

    // enumerate {u ∘ g} over the message space
    const std::uint64_t card = algebra->ring()->cardinality();
    const std::uint64_t count = detail::pow_saturating(card, m - r, ~0ull);
    detail::require(count <= cap, "TooLarge",
                    "code with " + std::to_string(count) + " words exceeds the cap");
    std::vector<std::uint32_t> words;
    words.reserve(count);
    for (std::uint64_t u = 0; u < count; ++u) {
        AlgElem msg = algebra->zero();
        std::uint64_t rest = u;
        for (unsigned i = m - r; i-- > 0;) {
            msg.coords[i] = algebra->ring()->element_at(rest % card);
            rest /= card;
        }
        words.push_back(static_cast<std::uint32_t>(algebra->index_of(algebra->mul(msg, gv))));
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    detail::require(words.size() == count, "InternalError",
                    "divisor code is not free of rank m - deg g");

    return SkewCode{algebra, g, h_prime, std::move(h), std::move(gen), std::move(ctrl),
                    std::move(words)};
}

enum class MembershipMode { automatic, annihilator, rowspace };

/**
 * Membership: annihilator mode decides c ∘ h = 0 in S_f (needs the full
 * factorization f = g h = h' g), row-space mode looks the word up in the
 * enumerated span. `automatic` prefers the annihilator when h exists.
 */
inline bool is_codeword(const SkewCode& code, const std::vector<RingElement>& word,
                        MembershipMode mode = MembershipMode::automatic) {
    const PetitAlgebra& a = *code.algebra;
    detail::require(word.size() == a.m(), "ShapeMismatch", "word length must be m");
    const AlgElem c{word};
    if (mode == MembershipMode::annihilator && !code.h)
        detail::fail("MissingCofactor", "annihilator mode needs f = g h");
    const bool use_annihilator =
        mode == MembershipMode::annihilator ||
        (mode == MembershipMode::automatic && code.h.has_value());
    if (use_annihilator) {
        return a.mul(c, a.from_poly(*code.h)).is_zero();
    }
    return code.contains_index(static_cast<std::uint32_t>(a.index_of(c)));
}

/// (a_0,...,a_{m-1}) -> (sigma(a_{m-1}) d, sigma(a_0), ..., sigma(a_{m-2})).
inline std::vector<RingElement> sigma_constacyclic_shift(const CtxPtr& ctx,
                                                         const std::vector<RingElement>& word,
                                                         const RingElement& d) {
    std::vector<RingElement> out(word.size(), ctx->ring->zero());
    out[0] = ctx->sigma(word.back()) * d;
    for (std::size_t i = 1; i < word.size(); ++i) out[i] = ctx->sigma(word[i - 1]);
    return out;
}

/// f = t^m - d exactly.
inline bool is_constacyclic_shape(const SkewPoly& f, const RingElement& d) {
    if (!f.is_monic() || f.degree() < 1) return false;
    if (!(f.coeff(0) == -d)) return false;
    for (int i = 1; i < f.degree(); ++i)
        if (!f.coeff(static_cast<std::size_t>(i)).is_zero()) return false;
    return true;
}

/// Every codeword's sigma-constacyclic shift stays in the code (delta = 0).
inline bool constacyclic_check(const SkewCode& code, const RingElement& d) {
    const PetitAlgebra& a = *code.algebra;
    detail::require(a.ctx()->delta_is_zero(), "DeltaNotZero",
                    "constacyclic shifts are defined for delta = 0");
    a.ring()->check_mine(d);
    for (auto idx : code.codewords) {
        const auto shifted = sigma_constacyclic_shift(a.ctx(), a.element_at(idx).coords, d);
        if (!code.contains_index(static_cast<std::uint32_t>(a.index_of(AlgElem{shifted}))))
            return false;
    }
    return true;
}

/// C(t) closed under left multiplication by every algebra element.
inline bool left_ideal_check(const SkewCode& code,
                             std::uint64_t cap = ChainRing::kDefaultEnumCap) {
    const PetitAlgebra& a = *code.algebra;
    detail::require(a.size() <= cap && code.size() * a.size() <= (1ull << 26), "TooLarge",
                    "left-ideal scan too large");
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        const AlgElem x = a.element_at(i);
        for (auto idx : code.codewords)
            if (!code.contains_index(
                    static_cast<std::uint32_t>(a.index_of(a.mul(x, a.element_at(idx))))))
                return false;
    }
    return true;
}

/// C closed under L_t alone (implied by the full left-ideal closure).
inline bool lt_closure_check(const SkewCode& code) {
    const PetitAlgebra& a = *code.algebra;
    const AlgElem t = a.t_elem();
    for (auto idx : code.codewords)
        if (!code.contains_index(
                static_cast<std::uint32_t>(a.index_of(a.mul(t, a.element_at(idx))))))
            return false;
    return true;
}

inline unsigned hamming_weight(const AlgElem& x) {
    unsigned w = 0;
    for (const auto& c : x.coords) w += !c.is_zero();
    return w;
}

/// Exact minimum Hamming weight over the nonzero codewords.
inline unsigned min_distance(const SkewCode& code) {
    const PetitAlgebra& a = *code.algebra;
    unsigned best = 0;
    bool seen = false;
    for (auto idx : code.codewords) {
        if (idx == 0) continue;
        const unsigned w = hamming_weight(a.element_at(idx));
        if (!seen || w < best) {
            best = w;
            seen = true;
        }
    }
    detail::require(seen, "EmptyCode", "minimum distance of the zero code is undefined");
    return best;
}

/// A_w counts for w = 0..m; the counts sum to |C|.
inline std::vector<std::uint64_t> weight_enumerator(const SkewCode& code) {
    const PetitAlgebra& a = *code.algebra;
    std::vector<std::uint64_t> counts(a.m() + 1, 0);
    for (auto idx : code.codewords) ++counts[hamming_weight(a.element_at(idx))];
    return counts;
}

/// message u (length m - deg g) -> vec(u ∘ g).
inline std::vector<RingElement> encode(const SkewCode& code,
                                       const std::vector<RingElement>& msg) {
    const PetitAlgebra& a = *code.algebra;
    detail::require(msg.size() == code.dimension(), "ShapeMismatch",
                    "message length must be m - deg g");
    AlgElem u = a.zero();
    for (std::size_t i = 0; i < msg.size(); ++i) u.coords[i] = msg[i];
    return a.mul(u, a.from_poly(code.g)).coords;
}

}  // namespace petit
