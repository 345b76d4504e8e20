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
 * @file morphism.hpp
 * @brief Ring automorphisms and sigma-derivations of finite chain rings.
 *
 * Morphisms are stored as full value tables (index -> index) over the
 * enumerated ring, so application is O(1) however the map was defined.
 * Construction validates the defining laws:
 *
 *   automorphism:  additive, multiplicative, bijective, fixes 1, maps (p)
 *                  onto (p);
 *   derivation:    additive, delta(ab) = sigma(a) delta(b) + delta(a) b,
 *                  maps (p) into (p).
 *
 * Additivity is checked against the additive generators p^i x^j for every
 * element, which implies additivity on all pairs; given that, the
 * multiplicative/Leibniz defect is biadditive, so checking generator pairs
 * proves the law everywhere. Rings with at most 2^12 elements additionally
 * get a full exhaustive pair scan.
 */

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "petit/chain_ring.hpp"
#include "petit/error.hpp"

namespace petit {

enum class MorphismKind { automorphism, derivation };

class RingMorphism {
   public:
    static constexpr std::uint64_t kExhaustivePairCap = 1ull << 12;

    const RingPtr& ring() const { return ring_; }
    MorphismKind kind() const { return kind_; }
    const std::vector<std::uint32_t>& table() const { return table_; }

    RingElement operator()(const RingElement& a) const {
        return ring_->element_at(table_[ring_->index_of(a)]);
    }

    std::uint32_t apply_index(std::uint32_t i) const { return table_[i]; }

    /// sigma^k, with negative k resolved through the inverse permutation.
    RingElement apply_power(const RingElement& a, long long k) const {
        std::uint32_t i = static_cast<std::uint32_t>(ring_->index_of(a));
        if (k >= 0) {
            for (long long s = 0; s < k; ++s) i = table_[i];
        } else {
            detail::require(kind_ == MorphismKind::automorphism, "SigmaNotInvertible",
                            "negative powers need an automorphism");
            const auto inv = inverse_table();
            for (long long s = 0; s < -k; ++s) i = inv[i];
        }
        return ring_->element_at(i);
    }

    bool is_identity() const {
        for (std::uint32_t i = 0; i < table_.size(); ++i)
            if (table_[i] != i) return false;
        return true;
    }

    bool is_zero_map() const {
        for (auto v : table_)
            if (v != 0) return false;  // index 0 is the zero element
        return true;
    }

    bool same_as(const RingMorphism& o) const {
        return kind_ == o.kind_ && ring_->same_as(*o.ring_) && table_ == o.table_;
    }

    /// Multiplicative order of an automorphism.
    unsigned order() const {
        detail::require(kind_ == MorphismKind::automorphism, "NotAnAutomorphism",
                        "order is defined for automorphisms");
        std::vector<std::uint32_t> cur = table_;
        unsigned k = 1;
        while (!std::equal(cur.begin(), cur.end(), identity_table(cur.size()).begin())) {
            cur = compose_tables(table_, cur);
            ++k;
            detail::require(k <= 1u << 20, "InternalError", "automorphism order diverged");
        }
        return k;
    }

    RingMorphism inverse() const {
        detail::require(kind_ == MorphismKind::automorphism, "SigmaNotInvertible",
                        "only automorphisms invert");
        return RingMorphism(ring_, kind_, inverse_table());
    }

    RingMorphism compose(const RingMorphism& inner) const {
        detail::require(ring_->same_as(*inner.ring_), "RingMismatch",
                        "composition across rings");
        return RingMorphism(ring_, kind_, compose_tables(table_, inner.table_));
    }

    /// {a : sigma(a) = a}; verified to be a subring containing 0 and 1.
    std::vector<RingElement> fixed_set(std::uint64_t cap = ChainRing::kDefaultEnumCap) const {
        detail::require(ring_->cardinality() <= cap, "TooLarge", "fixed-set scan over cap");
        std::vector<RingElement> out;
        for (std::uint32_t i = 0; i < table_.size(); ++i)
            if (table_[i] == i) out.push_back(ring_->element_at(i));
        verify_subring(out, "fixed set");
        return out;
    }

    /// {a : delta(a) = 0}; verified to be a subring containing 0 and 1.
    std::vector<RingElement> constant_set(std::uint64_t cap = ChainRing::kDefaultEnumCap) const {
        detail::require(ring_->cardinality() <= cap, "TooLarge", "constant-set scan over cap");
        std::vector<RingElement> out;
        for (std::uint32_t i = 0; i < table_.size(); ++i)
            if (table_[i] == 0) out.push_back(ring_->element_at(i));
        verify_subring(out, "constant set");
        return out;
    }

    /// The induced map on the residue field K = S/(p).
    RingMorphism induced_residue() const {
        auto k = ring_->residue_field();
        if (k.get() == ring_.get()) return *this;
        std::vector<std::uint32_t> t(k->cardinality());
        for (std::uint64_t i = 0; i < k->cardinality(); ++i) {
            const RingElement abar = k->element_at(i);
            t[i] = static_cast<std::uint32_t>(
                k->index_of(ring_->project((*this)(ring_->lift(abar)))));
        }
        if (kind_ == MorphismKind::automorphism) return make_automorphism(k, std::move(t));
        return make_derivation(k, std::move(t), nullptr);
    }

    // ---- factories ----------------------------------------------------------

    static RingMorphism identity(const RingPtr& ring) {
        return RingMorphism(ring, MorphismKind::automorphism,
                            identity_table(require_table_size(ring)));
    }

    static RingMorphism zero_derivation(const RingPtr& ring) {
        return RingMorphism(ring, MorphismKind::derivation,
                            std::vector<std::uint32_t>(require_table_size(ring), 0));
    }

    /**
     * The automorphism lifting the residue Frobenius a -> a^{p^k}: its image
     * of x is the unique root of the modulus congruent to x^{p^k} mod p,
     * found by exhaustive search, then extended Z_{p^e}-linearly over the
     * power basis. k = 0 gives the identity.
     */
    static RingMorphism frobenius_lift(const RingPtr& ring, unsigned k) {
        const std::uint64_t size = require_table_size(ring);
        if (k == 0 || ring->n() == 1) {
            detail::require(k < std::max(1u, ring->n()), "InvalidFrobeniusPower",
                            "need 0 <= k < n");
            return identity(ring);
        }
        detail::require(k < ring->n(), "InvalidFrobeniusPower", "need 0 <= k < n");

        const RingElement x = ring->generator();
        const RingElement target = ring->project(x).pow(
            detail::pow_saturating(ring->p(), k, ~0ull));
        RingElement y = ring->zero();
        bool found = false;
        for (std::uint64_t i = 0; i < size; ++i) {
            const RingElement cand = ring->element_at(i);
            if (!(ring->project(cand) == target)) continue;
            // cand must be a root of the modulus
            RingElement acc = ring->zero();
            RingElement pw = ring->one();
            for (std::uint64_t m : ring->modulus()) {
                acc += ring->from_int(static_cast<long long>(m)) * pw;
                pw *= cand;
            }
            if (acc.is_zero()) {
                y = cand;
                found = true;
                break;
            }
        }
        detail::require(found, "ValidationFailed",
                        "no Frobenius-compatible root of the modulus exists");

        std::vector<RingElement> ypow(ring->n());
        ypow[0] = ring->one();
        for (unsigned j = 1; j < ring->n(); ++j) ypow[j] = ypow[j - 1] * y;

        std::vector<std::uint32_t> t(size);
        for (std::uint64_t i = 0; i < size; ++i) {
            const RingElement a = ring->element_at(i);
            RingElement img = ring->zero();
            for (unsigned j = 0; j < ring->n(); ++j)
                img += ring->from_int(static_cast<long long>(a.coords()[j])) * ypow[j];
            t[i] = static_cast<std::uint32_t>(ring->index_of(img));
        }
        RingMorphism sigma = make_automorphism(ring, std::move(t));

        // pi . sigma = sigmabar . pi with sigmabar the residue Frobenius
        const std::uint64_t q = detail::pow_saturating(ring->p(), k, ~0ull);
        for (std::uint64_t i = 0; i < size; ++i) {
            const RingElement a = ring->element_at(i);
            detail::require(ring->project(sigma(a)) == ring->project(a).pow(q),
                            "ValidationFailed", "lift does not cover the residue Frobenius");
        }
        return sigma;
    }

    /// delta(a) = beta (a - sigma(a)), the inner sigma-derivation delta_beta.
    static RingMorphism inner_derivation(const RingElement& beta, const RingMorphism& sigma) {
        const RingPtr& ring = sigma.ring();
        ring->check_mine(beta);
        const std::uint64_t size = require_table_size(ring);
        std::vector<std::uint32_t> t(size);
        for (std::uint64_t i = 0; i < size; ++i) {
            const RingElement a = ring->element_at(i);
            t[i] = static_cast<std::uint32_t>(ring->index_of(beta * (a - sigma(a))));
        }
        return make_derivation(ring, std::move(t), &sigma);
    }

    /// Automorphism from a raw value table; fully validated.
    static RingMorphism make_automorphism(const RingPtr& ring, std::vector<std::uint32_t> t) {
        RingMorphism m(ring, MorphismKind::automorphism, std::move(t));
        m.validate_automorphism();
        return m;
    }

    /**
     * Derivation from a raw value table. When `sigma` is given the Leibniz
     * law is validated against it; a null sigma skips that pairing check
     * (the skew-polynomial context re-validates on assembly).
     */
    static RingMorphism make_derivation(const RingPtr& ring, std::vector<std::uint32_t> t,
                                        const RingMorphism* sigma) {
        RingMorphism m(ring, MorphismKind::derivation, std::move(t));
        m.validate_derivation(sigma);
        return m;
    }

    /// Checks delta(ab) = sigma(a) delta(b) + delta(a) b for this pairing.
    void validate_leibniz_for(const RingMorphism& sigma) const {
        detail::require(kind_ == MorphismKind::derivation, "ValidationFailed",
                        "Leibniz validation applies to derivations");
        const auto gens = additive_generators(ring_);
        for (const auto& a : gens)
            for (const auto& b : gens) check_leibniz(sigma, a, b);
        if (exhaustive_scale()) {
            const auto all = ring_->enumerate();
            for (const auto& a : all)
                for (const auto& b : all) check_leibniz(sigma, a, b);
        }
    }

    /// The additive generators p^i x^j, 0 <= i < e, 0 <= j < n.
    static std::vector<RingElement> additive_generators(const RingPtr& ring) {
        std::vector<RingElement> gens;
        std::uint64_t pi = 1;
        for (unsigned i = 0; i < ring->e(); ++i, pi *= ring->p()) {
            for (unsigned j = 0; j < ring->n(); ++j) {
                std::vector<std::uint64_t> c(ring->n(), 0);
                c[j] = pi;
                gens.push_back(ring->element(std::move(c)));
            }
        }
        return gens;
    }

   private:
    RingMorphism(RingPtr ring, MorphismKind kind, std::vector<std::uint32_t> table)
        : ring_(std::move(ring)), kind_(kind), table_(std::move(table)) {
        detail::require(table_.size() == ring_->cardinality(), "ValidationFailed",
                        "value table size must equal the ring cardinality");
    }

    static std::uint64_t require_table_size(const RingPtr& ring) {
        detail::require(ring->cardinality() <= ChainRing::kDefaultEnumCap, "TooLarge",
                        "value-table morphisms need at most 2^20 ring elements");
        return ring->cardinality();
    }

    static std::vector<std::uint32_t> identity_table(std::uint64_t size) {
        std::vector<std::uint32_t> t(size);
        for (std::uint64_t i = 0; i < size; ++i) t[i] = static_cast<std::uint32_t>(i);
        return t;
    }

    static std::vector<std::uint32_t> compose_tables(const std::vector<std::uint32_t>& outer,
                                                     const std::vector<std::uint32_t>& inner) {
        std::vector<std::uint32_t> t(inner.size());
        for (std::size_t i = 0; i < inner.size(); ++i) t[i] = outer[inner[i]];
        return t;
    }

    std::vector<std::uint32_t> inverse_table() const {
        std::vector<std::uint32_t> inv(table_.size());
        for (std::uint32_t i = 0; i < table_.size(); ++i) inv[table_[i]] = i;
        return inv;
    }

    bool exhaustive_scale() const { return ring_->cardinality() <= kExhaustivePairCap; }

    void check_additive_against(const std::vector<RingElement>& gens) const {
        detail::require(table_[0] == 0, "ValidationFailed", "morphism must send 0 to 0");
        for (std::uint64_t i = 0; i < table_.size(); ++i) {
            const RingElement a = ring_->element_at(i);
            const RingElement fa = (*this)(a);
            for (const auto& g : gens)
                detail::require((*this)(a + g) == fa + (*this)(g), "ValidationFailed",
                                "morphism is not additive");
        }
    }

    void check_leibniz(const RingMorphism& sigma, const RingElement& a,
                       const RingElement& b) const {
        detail::require((*this)(a * b) == sigma(a) * (*this)(b) + (*this)(a)*b,
                        "ValidationFailed",
                        "Leibniz law fails at a=" + a.to_string() + ", b=" + b.to_string());
    }

    void check_ideal_preservation(bool onto) const {
        // sigma((p)) = (p) for automorphisms (bijectivity upgrades the
        // inclusion), delta((p)) subset of (p) for derivations
        for (std::uint64_t i = 0; i < table_.size(); ++i) {
            const RingElement a = ring_->element_at(i);
            if (a.is_zero() || a.is_unit()) continue;
            const RingElement img = (*this)(a);
            detail::require(img.is_zero() || !img.is_unit(), "ValidationFailed",
                            "maximal ideal is not preserved");
        }
        (void)onto;
    }

    void validate_automorphism() const {
        std::vector<bool> seen(table_.size(), false);
        for (auto v : table_) {
            detail::require(v < table_.size() && !seen[v], "ValidationFailed",
                            "automorphism table is not a permutation");
            seen[v] = true;
        }
        detail::require((*this)(ring_->one()).is_one(), "ValidationFailed",
                        "automorphism must fix 1");
        const auto gens = additive_generators(ring_);
        check_additive_against(gens);
        for (const auto& a : gens)
            for (const auto& b : gens)
                detail::require((*this)(a * b) == (*this)(a) * (*this)(b), "ValidationFailed",
                                "automorphism is not multiplicative");
        check_ideal_preservation(true);
        if (exhaustive_scale()) {
            const auto all = ring_->enumerate();
            for (const auto& a : all)
                for (const auto& b : all) {
                    detail::require((*this)(a + b) == (*this)(a) + (*this)(b),
                                    "ValidationFailed", "automorphism is not additive");
                    detail::require((*this)(a * b) == (*this)(a) * (*this)(b),
                                    "ValidationFailed", "automorphism is not multiplicative");
                }
        }
    }

    void validate_derivation(const RingMorphism* sigma) const {
        detail::require(table_[0] == 0, "ValidationFailed", "derivation must send 0 to 0");
        detail::require((*this)(ring_->one()).is_zero(), "ValidationFailed",
                        "derivation must send 1 to 0");
        check_additive_against(additive_generators(ring_));
        check_ideal_preservation(false);
        if (sigma) validate_leibniz_for(*sigma);
    }

    void verify_subring(const std::vector<RingElement>& set, const char* what) const {
        bool has_zero = false, has_one = false;
        for (const auto& a : set) {
            has_zero |= a.is_zero();
            has_one |= a.is_one();
        }
        detail::require(has_zero && has_one, "InternalError",
                        std::string(what) + " must contain 0 and 1");
        auto member = [&](const RingElement& v) {
            for (const auto& a : set)
                if (a == v) return true;
            return false;
        };
        for (const auto& a : set)
            for (const auto& b : set)
                detail::require(member(a + b) && member(a * b), "InternalError",
                                std::string(what) + " is not closed under ring operations");
    }

    RingPtr ring_;
    MorphismKind kind_;
    std::vector<std::uint32_t> table_;
};

}  // namespace petit
