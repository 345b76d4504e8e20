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
 * @file skew_poly.hpp
 * @brief The Ore extension S[t; sigma, delta] over a finite chain ring.
 *
 * Skew polynomials multiply through the commutation rule
 *
 *     t a = sigma(a) t + delta(a),
 *
 * equivalently  a t^n · b t^m = sum_j a (Delta_{n,j} b) t^{m+j}  with
 * Delta_{n,j} = delta(Delta_{n-1,j}) + sigma(Delta_{n-1,j-1}). Both product
 * routes are implemented (mul and mul_via_delta) and must agree.
 *
 * Right and left division with remainder exist for any divisor with unit
 * leading coefficient; the quotient/remainder loop follows the leading-term
 * elimination argument directly, no clever scheme. Degrees: deg(0) = -1 is
 * the distinguished sentinel below every true degree.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "petit/chain_ring.hpp"
#include "petit/error.hpp"
#include "petit/morphism.hpp"

namespace petit {

struct SkewPolyContext;
using CtxPtr = std::shared_ptr<const SkewPolyContext>;

/// Immutable bundle (S, sigma, delta); delta is re-validated as a
/// sigma-derivation for exactly this sigma on assembly.
struct SkewPolyContext : std::enable_shared_from_this<SkewPolyContext> {
    RingPtr ring;
    RingMorphism sigma;
    RingMorphism delta;

    static CtxPtr make(const RingPtr& ring, RingMorphism sigma, RingMorphism delta) {
        detail::require(sigma.ring()->same_as(*ring) && delta.ring()->same_as(*ring),
                        "RingMismatch", "sigma and delta must act on the coefficient ring");
        detail::require(sigma.kind() == MorphismKind::automorphism, "ValidationFailed",
                        "sigma must be an automorphism");
        detail::require(delta.kind() == MorphismKind::derivation, "ValidationFailed",
                        "delta must be a derivation");
        delta.validate_leibniz_for(sigma);
        return CtxPtr(new SkewPolyContext(ring, std::move(sigma), std::move(delta)));
    }

    /// Twisted ring S[t; sigma] (delta = 0).
    static CtxPtr twisted(const RingPtr& ring, RingMorphism sigma) {
        return make(ring, std::move(sigma), RingMorphism::zero_derivation(ring));
    }

    bool delta_is_zero() const { return delta.is_zero_map(); }

    bool same_as(const SkewPolyContext& o) const {
        return ring->same_as(*o.ring) && sigma.same_as(o.sigma) && delta.same_as(o.delta);
    }

    /// The context (K, sigmabar, deltabar) over the residue field.
    CtxPtr projected() const {
        return make(ring->residue_field(), sigma.induced_residue(), delta.induced_residue());
    }

    /// Target of the anti-automorphism psi: (S, sigma^{-1}, 0). delta = 0 only.
    CtxPtr psi_target() const {
        detail::require(delta_is_zero(), "DeltaNotZero",
                        "psi is implemented for twisted rings only");
        return make(ring, sigma.inverse(), RingMorphism::zero_derivation(ring));
    }

   private:
    SkewPolyContext(RingPtr r, RingMorphism s, RingMorphism d)
        : ring(std::move(r)), sigma(std::move(s)), delta(std::move(d)) {}
};

inline bool same_context(const CtxPtr& a, const CtxPtr& b) {
    return a.get() == b.get() || a->same_as(*b);
}

/**
 * Element of S[t; sigma, delta]: canonical little-endian coefficient
 * sequence (no trailing zeros; zero is the empty sequence).
 */
class SkewPoly {
   public:
    SkewPoly() = default;

    static SkewPoly zero(CtxPtr ctx) { return SkewPoly(std::move(ctx), {}); }

    static SkewPoly constant(CtxPtr ctx, const RingElement& a) {
        ctx->ring->check_mine(a);
        return SkewPoly(std::move(ctx), {a});
    }

    static SkewPoly one(CtxPtr ctx) {
        RingElement e = ctx->ring->one();
        return SkewPoly(std::move(ctx), {e});
    }

    static SkewPoly t(CtxPtr ctx) { return monomial(std::move(ctx), 1, 1); }

    /// a t^k
    static SkewPoly monomial(CtxPtr ctx, const RingElement& a, std::size_t k) {
        ctx->ring->check_mine(a);
        std::vector<RingElement> c(k + 1, ctx->ring->zero());
        c[k] = a;
        return SkewPoly(std::move(ctx), std::move(c));
    }

    static SkewPoly monomial(CtxPtr ctx, long long a, std::size_t k) {
        RingElement e = ctx->ring->from_int(a);
        return monomial(std::move(ctx), e, k);
    }

    static SkewPoly from_coeffs(CtxPtr ctx, std::vector<RingElement> coeffs) {
        for (const auto& c : coeffs) ctx->ring->check_mine(c);
        return SkewPoly(std::move(ctx), std::move(coeffs));
    }

    const CtxPtr& ctx() const { return ctx_; }
    const std::vector<RingElement>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    /// deg(0) = -1, the sentinel below all true degrees.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    RingElement coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : ctx_->ring->zero();
    }

    RingElement leading() const {
        detail::require(!is_zero(), "InternalError", "leading coefficient of 0");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && c_.back().is_one(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    SkewPoly operator-() const {
        std::vector<RingElement> c(c_);
        for (auto& v : c) v = -v;
        return SkewPoly(ctx_, std::move(c));
    }

    SkewPoly operator+(const SkewPoly& o) const {
        check_same(o);
        std::vector<RingElement> c(std::max(c_.size(), o.c_.size()), ctx_->ring->zero());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
        return SkewPoly(ctx_, std::move(c));
    }

    SkewPoly operator-(const SkewPoly& o) const { return *this + (-o); }

    /// Ore product via the iterated commutation rule t a = sigma(a) t + delta(a).
    SkewPoly operator*(const SkewPoly& o) const {
        check_same(o);
        if (is_zero() || o.is_zero()) return zero(ctx_);
        std::vector<RingElement> acc(c_.size() + o.c_.size() - 1, ctx_->ring->zero());
        std::vector<RingElement> cur = o.c_;  // t^i · o, little-endian
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i].is_zero())
                for (std::size_t j = 0; j < cur.size(); ++j) acc[j] += c_[i] * cur[j];
            if (i + 1 < c_.size()) cur = t_times(ctx_, cur);
        }
        SkewPoly r(ctx_, std::move(acc));
        if (o.leading().is_unit())
            detail::require(r.degree() == degree() + o.degree(), "InternalError",
                            "degree must be additive when LC of the right factor is a unit");
        return r;
    }

    /// Coefficient-wise left scalar multiple a(g) = sum (a g_i) t^i.
    SkewPoly scaled_left(const RingElement& a) const {
        std::vector<RingElement> c(c_);
        for (auto& v : c) v = a * v;
        return SkewPoly(ctx_, std::move(c));
    }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        if (!same_context(a.ctx_, b.ctx_) || a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            const bool needs_parens = c_[i].coords().size() > 1 && !c_[i].is_one();
            std::string cs = c_[i].to_string();
            if (i == 0) {
                s += cs;
                continue;
            }
            if (!c_[i].is_one()) s += needs_parens ? "(" + cs + ")" : cs;
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
        return s;
    }

    void check_same(const SkewPoly& o) const {
        detail::require(same_context(ctx_, o.ctx_), "ContextMismatch",
                        "operands come from different skew polynomial rings");
    }

    /// One application of the commutation rule: t · (sum v_j t^j).
    static std::vector<RingElement> t_times(const CtxPtr& ctx,
                                            const std::vector<RingElement>& v) {
        std::vector<RingElement> r(v.size() + 1, ctx->ring->zero());
        for (std::size_t j = 0; j < v.size(); ++j) {
            r[j + 1] += ctx->sigma(v[j]);
            r[j] += ctx->delta(v[j]);
        }
        return r;
    }

   private:
    SkewPoly(CtxPtr ctx, std::vector<RingElement> c) : ctx_(std::move(ctx)), c_(std::move(c)) {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    CtxPtr ctx_;
    std::vector<RingElement> c_;
};

// ---- Delta operators --------------------------------------------------------

/**
 * The full row Delta_{n,0..n}(a) computed by the recursion
 * Delta_{n,j} = delta(Delta_{n-1,j}) + sigma(Delta_{n-1,j-1}),
 * Delta_{0,0} = id.
 */
inline std::vector<RingElement> delta_row(const CtxPtr& ctx, unsigned n, const RingElement& a) {
    std::vector<RingElement> row{a};
    for (unsigned k = 1; k <= n; ++k) {
        std::vector<RingElement> next(k + 1, ctx->ring->zero());
        for (unsigned j = 0; j <= k; ++j) {
            if (j < k) next[j] += ctx->delta(row[j]);
            if (j > 0) next[j] += ctx->sigma(row[j - 1]);
        }
        row = std::move(next);
    }
    return row;
}

inline RingElement delta_map(const CtxPtr& ctx, unsigned n, unsigned j, const RingElement& a) {
    detail::require(j <= n, "IndexOutOfRange",
                    "Delta_{n,j} needs 0 <= j <= n, got n=" + std::to_string(n) +
                        " j=" + std::to_string(j));
    return delta_row(ctx, n, a)[j];
}

/// Second product route: a t^n · b t^m = sum_j a (Delta_{n,j} b) t^{m+j}.
inline SkewPoly mul_via_delta(const SkewPoly& g, const SkewPoly& h) {
    g.check_same(h);
    const CtxPtr& ctx = g.ctx();
    if (g.is_zero() || h.is_zero()) return SkewPoly::zero(ctx);
    std::vector<RingElement> acc(static_cast<std::size_t>(g.degree() + h.degree()) + 1,
                                 ctx->ring->zero());
    for (std::size_t n = 0; n < g.coeffs().size(); ++n) {
        const RingElement& a = g.coeffs()[n];
        if (a.is_zero()) continue;
        for (std::size_t m = 0; m < h.coeffs().size(); ++m) {
            const RingElement& b = h.coeffs()[m];
            if (b.is_zero()) continue;
            const auto row = delta_row(ctx, static_cast<unsigned>(n), b);
            for (std::size_t j = 0; j <= n; ++j) acc[m + j] += a * row[j];
        }
    }
    return SkewPoly::from_coeffs(ctx, std::move(acc));
}

// ---- division ---------------------------------------------------------------

struct DivModResult {
    SkewPoly q;
    SkewPoly r;
};

/// g = q f + r with deg r < deg f; f needs a unit leading coefficient.
inline DivModResult right_divmod(const SkewPoly& g, const SkewPoly& f) {
    g.check_same(f);
    const CtxPtr& ctx = g.ctx();
    detail::require(!f.is_zero() && f.leading().is_unit(), "LeadingCoeffNotUnit",
                    "right division needs a unit leading coefficient");
    const int m = f.degree();
    const RingElement dminv = f.leading().inverse();
    SkewPoly q = SkewPoly::zero(ctx);
    SkewPoly r = g;
    while (r.degree() >= m) {
        const int l = r.degree();
        // eliminate the top term with  s_l sigma^{l-m}(d_m^{-1}) t^{l-m} · f
        const RingElement c = r.leading() * ctx->sigma.apply_power(dminv, l - m);
        const SkewPoly qt = SkewPoly::monomial(ctx, c, static_cast<std::size_t>(l - m));
        q = q + qt;
        r = r - qt * f;
        detail::require(r.degree() < l, "InternalError", "right division failed to reduce");
    }
    return {q, r};
}

/// g = f q + r with deg r < deg f; needs sigma invertible (always here).
inline DivModResult left_divmod(const SkewPoly& g, const SkewPoly& f) {
    g.check_same(f);
    const CtxPtr& ctx = g.ctx();
    detail::require(!f.is_zero() && f.leading().is_unit(), "LeadingCoeffNotUnit",
                    "left division needs a unit leading coefficient");
    detail::require(ctx->sigma.kind() == MorphismKind::automorphism, "SigmaNotInvertible",
                    "left division needs sigma to be an automorphism");
    const int m = f.degree();
    const RingElement dminv = f.leading().inverse();
    SkewPoly q = SkewPoly::zero(ctx);
    SkewPoly r = g;
    while (r.degree() >= m) {
        const int l = r.degree();
        // eliminate with  f · sigma^{-m}(s_l) sigma^{-m}(d_m^{-1}) t^{l-m}
        const RingElement c =
            ctx->sigma.apply_power(r.leading(), -m) * ctx->sigma.apply_power(dminv, -m);
        const SkewPoly qt = SkewPoly::monomial(ctx, c, static_cast<std::size_t>(l - m));
        q = q + qt;
        r = r - f * qt;
        detail::require(r.degree() < l, "InternalError", "left division failed to reduce");
    }
    return {q, r};
}

// ---- structural predicates ----------------------------------------------------

/// S_f = S_{af}: scale by LC^{-1} from the left to reach the monic generator.
inline SkewPoly monic_normalized(const SkewPoly& f) {
    detail::require(!f.is_zero(), "LeadingCoeffNotUnit", "cannot normalize the zero polynomial");
    if (f.is_monic()) return f;
    detail::require(f.leading().is_unit(), "LeadingCoeffNotUnit",
                    "normalization needs a unit leading coefficient");
    return f.scaled_left(f.leading().inverse());
}

/**
 * f is two-sided (invariant) iff f t and f b lie in Rf for b running over an
 * additive generating set of S; the membership f a ∈ Rf is additive in a, so
 * the generators p^i x^j suffice.
 */
inline bool is_two_sided(const SkewPoly& f) {
    const CtxPtr& ctx = f.ctx();
    const SkewPoly fm = monic_normalized(f);
    if (!right_divmod(fm * SkewPoly::t(ctx), fm).r.is_zero()) return false;
    for (const auto& b : RingMorphism::additive_generators(ctx->ring))
        if (!right_divmod(fm * SkewPoly::constant(ctx, b), fm).r.is_zero()) return false;
    return true;
}

/// Calls fn for every monic degree-r polynomial, lexicographic on the low
/// coefficient tuple (c_0 most significant).
inline void for_each_monic(const CtxPtr& ctx, unsigned r,
                           const std::function<void(const SkewPoly&)>& fn,
                           std::uint64_t cap = ChainRing::kDefaultEnumCap) {
    const std::uint64_t card = ctx->ring->cardinality();
    const std::uint64_t total = detail::pow_saturating(card, r, ~0ull);
    detail::require(total <= cap, "TooLarge",
                    "enumeration of " + std::to_string(total) + " candidates exceeds the cap");
    std::vector<RingElement> c(r + 1, ctx->ring->zero());
    c[r] = ctx->ring->one();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (unsigned j = r; j-- > 0;) {
            c[j] = ctx->ring->element_at(rest % card);
            rest /= card;
        }
        fn(SkewPoly::from_coeffs(ctx, c));
    }
}

/**
 * Exhaustive irreducibility over a finite field: f of degree m is reducible
 * iff some monic h with 1 <= deg h <= m-1 right-divides it (any factorization
 * over a division ring normalizes to a monic right factor).
 */
inline bool is_irreducible_over_field(const SkewPoly& f,
                                      std::uint64_t cap = ChainRing::kDefaultEnumCap) {
    const CtxPtr& ctx = f.ctx();
    detail::require(ctx->ring->is_field(), "NotAField",
                    "irreducibility test is for coefficient fields (e = 1)");
    if (f.degree() < 1) return false;  // units and 0 are not irreducible
    if (f.degree() == 1) return true;
    const SkewPoly fm = monic_normalized(f);
    bool divisor_found = false;
    for (unsigned r = 1; r < static_cast<unsigned>(fm.degree()) && !divisor_found; ++r) {
        for_each_monic(
            ctx, r,
            [&](const SkewPoly& h) {
                if (!divisor_found && right_divmod(fm, h).r.is_zero()) divisor_found = true;
            },
            cap);
    }
    return !divisor_found;
}

/// Coefficient-wise residue projection into K[t; sigmabar, deltabar].
inline SkewPoly project_poly(const SkewPoly& f, const CtxPtr& target = nullptr) {
    const CtxPtr& ctx = f.ctx();
    CtxPtr k = target ? target : ctx->projected();
    std::vector<RingElement> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) c.push_back(ctx->ring->project(v));
    return SkewPoly::from_coeffs(std::move(k), std::move(c));
}

/// fbar irreducible in K[t; sigmabar, deltabar]; f must stay regular (same
/// degree, monic) under projection.
inline bool base_irreducible(const SkewPoly& f, std::uint64_t cap = ChainRing::kDefaultEnumCap) {
    const SkewPoly fbar = project_poly(f);
    detail::require(!fbar.is_zero() && fbar.degree() == f.degree() && fbar.is_monic(),
                    "NotRegular", "projection must stay monic of the same degree");
    return is_irreducible_over_field(fbar, cap);
}

/// Greatest common right divisor over a field: Rf + Ru = Rv, v monic.
inline SkewPoly gcrd(const SkewPoly& f, const SkewPoly& u) {
    f.check_same(u);
    detail::require(f.ctx()->ring->is_field(), "NotAField", "gcrd needs a coefficient field");
    detail::require(!f.is_zero() || !u.is_zero(), "BothZero", "gcrd(0, 0) is undefined");
    SkewPoly a = f, b = u;
    while (!b.is_zero()) {
        SkewPoly r = right_divmod(a, b).r;
        a = b;
        b = std::move(r);
    }
    return monic_normalized(a);
}

/**
 * The anti-automorphism psi into S[t; sigma^{-1}] for delta = 0:
 * psi(sum a_k t^k) = sum sigma^{-k}(a_k) t^k, with psi(gh) = psi(h) psi(g)
 * computed in the target ring.
 */
inline SkewPoly psi(const SkewPoly& g, const CtxPtr& target = nullptr) {
    const CtxPtr& ctx = g.ctx();
    detail::require(ctx->delta_is_zero(), "DeltaNotZero", "psi needs delta = 0");
    CtxPtr tgt = target ? target : ctx->psi_target();
    std::vector<RingElement> c;
    c.reserve(g.coeffs().size());
    for (std::size_t k = 0; k < g.coeffs().size(); ++k)
        c.push_back(ctx->sigma.apply_power(g.coeffs()[k], -static_cast<long long>(k)));
    return SkewPoly::from_coeffs(std::move(tgt), std::move(c));
}

}  // namespace petit
