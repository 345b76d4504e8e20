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
 * @file chain_ring.hpp
 * @brief Exact arithmetic for finite chain rings Z_{p^e}[x]/(h(x)).
 *
 * A ring is described by a prime p, a nilpotency index e and a monic modulus
 * h(x) whose reduction mod p is irreducible over F_p (basic irreducible).
 * This covers Z_{p^e} (n = 1), Galois rings GR(p^e, n) and finite fields
 * F_{p^n} (e = 1). Elements are length-n coordinate vectors over Z_{p^e} in
 * the power basis 1, x, ..., x^{n-1}, with every coordinate kept in
 * [0, p^e). The ideal chain is S ⊇ (p) ⊇ ... ⊇ (p^e) = (0); an element is a
 * unit exactly when its image in the residue field S/(p) is nonzero.
 *
 * Everything is immutable after construction and safe to share across
 * threads. Enumeration order is lexicographic on coordinate vectors
 * (coords[0] compared first).
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "petit/error.hpp"

namespace petit {

class ChainRing;
class RingElement;
using RingPtr = std::shared_ptr<const ChainRing>;

namespace detail {

inline bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

/// x^k with overflow saturation to `limit`; used only for cardinality guards.
inline std::uint64_t pow_saturating(std::uint64_t base, unsigned exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (r > limit / base) return limit;
        r *= base;
    }
    return r;
}

// -- dense polynomial helpers over F_p, used for the basic-irreducibility
//    check. Little-endian coefficient vectors, not necessarily canonical.

inline void fp_trim(std::vector<std::uint64_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a by monic b over F_p (b.back() == 1).
inline std::vector<std::uint64_t> fp_rem(std::vector<std::uint64_t> a,
                                         const std::vector<std::uint64_t>& b, std::uint64_t p) {
    fp_trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t& c = a[shift + i];
            c = (c + (p - lead % p) * b[i]) % p;
        }
        fp_trim(a);
    }
    return a;
}

/// Brute-force irreducibility over F_p: no monic factor of degree 1..deg/2.
inline bool fp_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::vector<std::uint64_t> cand(d + 1, 0);
        cand[d] = 1;
        const std::uint64_t count = pow_saturating(p, static_cast<unsigned>(d), ~0ull);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t j = 0; j < d; ++j) {
                cand[j] = rest % p;
                rest /= p;
            }
            if (fp_rem(f, cand, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/**
 * An element of a finite chain ring: coordinates in the power basis of the
 * modulus. Arithmetic is exact modular arithmetic; mixing elements of
 * structurally different rings throws RingMismatch.
 */
class RingElement {
   public:
    RingElement() = default;

    const RingPtr& ring() const { return ring_; }
    const std::vector<std::uint64_t>& coords() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](std::uint64_t v) { return v == 0; });
    }
    bool is_one() const;
    bool is_unit() const;
    bool is_zero_divisor() const { return !is_zero() && !is_unit(); }

    RingElement operator-() const;
    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

    RingElement pow(std::uint64_t k) const;
    /// Multiplicative inverse; throws NotAUnit on zero divisors and zero.
    RingElement inverse() const;

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.c_ == b.c_;  // rings are checked by the producing operations
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    /// Compact text form, e.g. "0", "3", "x", "3x+2", "x^2+1".
    std::string to_string() const;

   private:
    friend class ChainRing;
    RingElement(RingPtr r, std::vector<std::uint64_t> c) : ring_(std::move(r)), c_(std::move(c)) {}

    RingPtr ring_;
    std::vector<std::uint64_t> c_;
};

class ChainRing : public std::enable_shared_from_this<ChainRing> {
   public:
    static constexpr std::uint64_t kDefaultEnumCap = 1ull << 20;

    /**
     * Builds S = Z_{p^e}[x]/(modulus). An absent modulus gives Z_{p^e}
     * (n = 1). The modulus must be monic of degree >= 2 and basic
     * irreducible: its reduction mod p has no proper factor over F_p
     * (checked by brute-force factor search).
     */
    static RingPtr make(std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus = {}) {
        detail::require(detail::is_prime_u64(p), "NotPrime",
                        std::to_string(p) + " is not prime");
        detail::require(e >= 1, "InvalidNilpotency", "nilpotency index must be >= 1");

        unsigned n = 1;
        if (!modulus.empty()) {
            detail::require(modulus.size() >= 3, "InvalidModulus",
                            "modulus must have degree >= 2 (omit it for n = 1)");
            n = static_cast<unsigned>(modulus.size() - 1);
        }

        const std::uint64_t pe = detail::pow_saturating(p, e, 1ull << 31);
        detail::require(pe < (1ull << 31), "TooLarge", "p^e must be < 2^31");
        const std::uint64_t card = detail::pow_saturating(pe, n, 1ull << 62);
        detail::require(card < (1ull << 62), "TooLarge", "p^{en} must be < 2^62");

        if (!modulus.empty()) {
            for (auto& c : modulus) c %= pe;
            detail::require(modulus.back() == 1, "NonMonicModulus",
                            "modulus leading coefficient must be 1");
            std::vector<std::uint64_t> fbar(modulus.size());
            for (std::size_t i = 0; i < modulus.size(); ++i) fbar[i] = modulus[i] % p;
            detail::require(detail::fp_irreducible(fbar, p), "NotBasicIrreducible",
                            "modulus reduced mod " + std::to_string(p) +
                                " factors over the prime field");
        }

        auto ring = RingPtr(new ChainRing(p, e, n, std::move(modulus)));
        if (e > 1) {
            std::vector<std::uint64_t> mbar;
            if (n > 1) {
                mbar = ring->modulus_;
                for (auto& c : mbar) c %= p;
            }
            const_cast<ChainRing*>(ring.get())->residue_ = make(p, 1, std::move(mbar));
        }
        return ring;
    }

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned n() const { return n_; }
    /// p^e, the coordinate modulus.
    std::uint64_t coeff_modulus() const { return pe_; }
    /// p^{en}, the number of elements.
    std::uint64_t cardinality() const { return card_; }
    /// p^{en} - p^{(e-1)n}: units and zero/zero-divisors partition the ring.
    std::uint64_t unit_count() const { return card_ - card_ / detail::pow_saturating(p_, n_, ~0ull); }
    bool is_field() const { return e_ == 1; }
    /// Monic modulus (size n+1); empty when n == 1.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    /// The residue field K = S/(p); the ring itself when e == 1.
    RingPtr residue_field() const { return e_ == 1 ? shared_from_this() : residue_; }

    bool same_as(const ChainRing& o) const {
        return this == &o || (p_ == o.p_ && e_ == o.e_ && n_ == o.n_ && modulus_ == o.modulus_);
    }

    // ---- element factories -------------------------------------------------

    RingElement zero() const { return RingElement(shared_from_this(), std::vector<std::uint64_t>(n_, 0)); }

    RingElement one() const { return from_int(1); }

    RingElement from_int(long long v) const {
        const long long m = static_cast<long long>(pe_);
        std::vector<std::uint64_t> c(n_, 0);
        c[0] = static_cast<std::uint64_t>(((v % m) + m) % m);
        return RingElement(shared_from_this(), std::move(c));
    }

    /// The power-basis generator x; only defined for n >= 2.
    RingElement generator() const {
        detail::require(n_ >= 2, "NoGenerator", "Z_{p^e} has no power-basis generator");
        std::vector<std::uint64_t> c(n_, 0);
        c[1] = 1;
        return RingElement(shared_from_this(), std::move(c));
    }

    /// Element from little-endian coordinates (reduced mod p^e, padded to n).
    RingElement element(std::vector<std::uint64_t> coords) const {
        detail::require(coords.size() <= n_, "RingMismatch",
                        "coordinate vector longer than the extension degree");
        coords.resize(n_, 0);
        for (auto& c : coords) c %= pe_;
        return RingElement(shared_from_this(), std::move(coords));
    }

    /// Inverse of index_of; index runs over [0, cardinality()).
    RingElement element_at(std::uint64_t index) const {
        std::vector<std::uint64_t> c(n_);
        for (unsigned j = n_; j-- > 0;) {  // coords[0] is the most significant digit
            c[j] = index % pe_;
            index /= pe_;
        }
        return RingElement(shared_from_this(), std::move(c));
    }

    /// Rank of the element in lexicographic-on-coordinates order.
    std::uint64_t index_of(const RingElement& a) const {
        check_mine(a);
        std::uint64_t idx = 0;
        for (unsigned j = 0; j < n_; ++j) idx = idx * pe_ + a.c_[j];
        return idx;
    }

    /// All elements in lexicographic order; throws TooLarge above `cap`.
    std::vector<RingElement> enumerate(std::uint64_t cap = kDefaultEnumCap) const {
        detail::require(card_ <= cap, "TooLarge",
                        "ring has " + std::to_string(card_) + " elements, cap is " +
                            std::to_string(cap));
        std::vector<RingElement> all;
        all.reserve(card_);
        for (std::uint64_t i = 0; i < card_; ++i) all.push_back(element_at(i));
        return all;
    }

    // ---- residue projection and its section --------------------------------

    /// pi: S -> S/(p), coordinate-wise reduction mod p.
    RingElement project(const RingElement& a) const {
        check_mine(a);
        auto k = residue_field();
        std::vector<std::uint64_t> c(a.c_);
        for (auto& v : c) v %= p_;
        return RingElement(std::move(k), std::move(c));
    }

    /// Section of pi choosing representatives with coordinates in [0, p).
    RingElement lift(const RingElement& abar) const {
        detail::require(abar.ring() && abar.ring()->same_as(*residue_field()), "RingMismatch",
                        "lift expects an element of the residue field");
        return RingElement(shared_from_this(), abar.coords());
    }

    // ---- raw coordinate arithmetic (used by RingElement operators) ---------

    std::vector<std::uint64_t> add_raw(const std::vector<std::uint64_t>& a,
                                       const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> r(n_);
        for (unsigned i = 0; i < n_; ++i) r[i] = (a[i] + b[i]) % pe_;
        return r;
    }

    std::vector<std::uint64_t> neg_raw(const std::vector<std::uint64_t>& a) const {
        std::vector<std::uint64_t> r(n_);
        for (unsigned i = 0; i < n_; ++i) r[i] = (pe_ - a[i]) % pe_;
        return r;
    }

    std::vector<std::uint64_t> mul_raw(const std::vector<std::uint64_t>& a,
                                       const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> conv(2 * n_ - 1, 0);
        for (unsigned i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            for (unsigned j = 0; j < n_; ++j) conv[i + j] = (conv[i + j] + a[i] * b[j]) % pe_;
        }
        // reduce by the monic modulus: x^n = -(m_0 + ... + m_{n-1} x^{n-1})
        for (std::size_t i = conv.size(); i-- > n_;) {
            const std::uint64_t c = conv[i];
            if (c == 0) continue;
            conv[i] = 0;
            for (unsigned j = 0; j < n_; ++j) {
                std::uint64_t& t = conv[i - n_ + j];
                t = (t + c * ((pe_ - modulus_[j]) % pe_)) % pe_;
            }
        }
        conv.resize(n_);
        return conv;
    }

    void check_mine(const RingElement& a) const {
        detail::require(a.ring() && a.ring()->same_as(*this), "RingMismatch",
                        "element belongs to a different ring");
    }

    RingElement wrap(std::vector<std::uint64_t> coords) const {
        return RingElement(shared_from_this(), std::move(coords));
    }

   private:
    ChainRing(std::uint64_t p, unsigned e, unsigned n, std::vector<std::uint64_t> modulus)
        : p_(p),
          e_(e),
          n_(n),
          pe_(detail::pow_saturating(p, e, ~0ull)),
          card_(detail::pow_saturating(pe_, n, ~0ull)),
          modulus_(std::move(modulus)) {}

    std::uint64_t p_;
    unsigned e_;
    unsigned n_;
    std::uint64_t pe_;
    std::uint64_t card_;
    std::vector<std::uint64_t> modulus_;
    RingPtr residue_;  // null when e == 1
};

// ---- RingElement inline bodies (need the full ChainRing type) --------------

inline bool RingElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](std::uint64_t v) { return v == 0; });
}

inline bool RingElement::is_unit() const {
    // a is a unit iff pi(a) != 0 in the residue field
    const std::uint64_t p = ring_->p();
    return std::any_of(c_.begin(), c_.end(), [p](std::uint64_t v) { return v % p != 0; });
}

inline RingElement RingElement::operator-() const { return RingElement(ring_, ring_->neg_raw(c_)); }

inline RingElement RingElement::operator+(const RingElement& o) const {
    ring_->check_mine(o);
    return RingElement(ring_, ring_->add_raw(c_, o.c_));
}

inline RingElement RingElement::operator-(const RingElement& o) const {
    ring_->check_mine(o);
    return RingElement(ring_, ring_->add_raw(c_, ring_->neg_raw(o.c_)));
}

inline RingElement RingElement::operator*(const RingElement& o) const {
    ring_->check_mine(o);
    return RingElement(ring_, ring_->mul_raw(c_, o.c_));
}

inline RingElement RingElement::pow(std::uint64_t k) const {
    RingElement acc = ring_->one();
    RingElement base = *this;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

inline RingElement RingElement::inverse() const {
    detail::require(is_unit(), "NotAUnit", "inverse of " + to_string() + " does not exist");
    // the unit group has order unit_count(), so a^{-1} = a^{unit_count()-1}
    RingElement inv = pow(ring_->unit_count() - 1);
    if (!((*this * inv).is_one()))
        detail::fail("InternalError", "unit inverse verification failed");
    return inv;
}

inline std::string RingElement::to_string() const {
    std::string s;
    for (std::size_t j = c_.size(); j-- > 0;) {
        if (c_[j] == 0) continue;
        if (!s.empty()) s += "+";
        if (j == 0) {
            s += std::to_string(c_[j]);
        } else {
            if (c_[j] != 1) s += std::to_string(c_[j]);
            s += "x";
            if (j > 1) s += "^" + std::to_string(j);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace petit
