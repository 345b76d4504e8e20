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
 * @file petit_algebra.hpp
 * @brief The nonassociative quotient S_f = S[t;sigma,delta] / S[t;sigma,delta]f.
 *
 * Elements are the skew polynomials of degree < m = deg f, i.e. length-m
 * coordinate vectors over S in the basis 1, t, ..., t^{m-1}; the product is
 * g ∘ h = gh mod_r f (remainder of right division). With side = left the
 * dual algebra _fS uses the left remainder instead. S_f is associative
 * exactly when f is two-sided, and all the structure analyses here (nuclei,
 * eigenring, commuter, center, zero divisors) are exhaustive scans over the
 * enumerated algebra, backed by a lazily built multiplication table.
 *
 * Algebras are immutable handles; every analysis is a pure function.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "petit/chain_ring.hpp"
#include "petit/error.hpp"
#include "petit/morphism.hpp"
#include "petit/skew_poly.hpp"

namespace petit {

class PetitAlgebra;
using AlgPtr = std::shared_ptr<const PetitAlgebra>;

enum class QuotientSide { right, left };
enum class NucleusSlot { left, middle, right };

/// A length-m coordinate vector (a_0, ..., a_{m-1}) over S.
struct AlgElem {
    std::vector<RingElement> coords;

    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(),
                           [](const RingElement& c) { return c.is_zero(); });
    }
    friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.coords == b.coords; }
    friend bool operator!=(const AlgElem& a, const AlgElem& b) { return !(a == b); }
};

class PetitAlgebra : public std::enable_shared_from_this<PetitAlgebra> {
   public:
    /// |A| bound for the multiplication table / exhaustive triple scans.
    static constexpr std::uint64_t kTableCap = 1ull << 12;
    static constexpr std::uint64_t kDefaultSampleTriples = 100000;

    /**
     * Wraps f (degree m >= 2; a non-monic unit leading coefficient is
     * normalized away, S_f = S_{af}) into the algebra handle.
     */
    static AlgPtr make(const SkewPoly& f, QuotientSide side = QuotientSide::right) {
        detail::require(f.degree() >= 2, "DegreeTooSmall",
                        "the construction needs deg f = m > 1");
        const bool normalized = !f.is_monic();
        SkewPoly fm = monic_normalized(f);
        return AlgPtr(new PetitAlgebra(std::move(fm), side, normalized));
    }

    const CtxPtr& ctx() const { return f_.ctx(); }
    const RingPtr& ring() const { return f_.ctx()->ring; }
    const SkewPoly& f() const { return f_; }
    QuotientSide side() const { return side_; }
    unsigned m() const { return m_; }
    /// Whether a non-monic input was silently rescaled; callers may log it.
    bool was_normalized() const { return normalized_; }
    /// |A| = |S|^m.
    std::uint64_t size() const { return size_; }

    // ---- elements -----------------------------------------------------------

    AlgElem zero() const { return AlgElem{std::vector<RingElement>(m_, ring()->zero())}; }

    AlgElem one() const {
        AlgElem e = zero();
        e.coords[0] = ring()->one();
        return e;
    }

    /// The basis element t^k, 0 <= k < m.
    AlgElem basis(unsigned k) const {
        detail::require(k < m_, "IndexOutOfRange", "basis index must be < m");
        AlgElem e = zero();
        e.coords[k] = ring()->one();
        return e;
    }

    AlgElem t_elem() const { return basis(1); }

    /// Degree-0 embedding of a ring element.
    AlgElem embed(const RingElement& a) const {
        ring()->check_mine(a);
        AlgElem e = zero();
        e.coords[0] = a;
        return e;
    }

    /// Canonical representative of any polynomial (reduced modulo f).
    AlgElem from_poly(const SkewPoly& g) const {
        detail::require(same_context(g.ctx(), f_.ctx()), "AlgebraMismatch",
                        "polynomial from a different skew ring");
        SkewPoly r = g.degree() < static_cast<int>(m_) ? g : reduce(g);
        AlgElem e = zero();
        for (std::size_t i = 0; i < r.coeffs().size(); ++i) e.coords[i] = r.coeffs()[i];
        return e;
    }

    SkewPoly to_poly(const AlgElem& x) const {
        check_elem(x);
        return SkewPoly::from_coeffs(f_.ctx(), x.coords);
    }

    AlgElem element_at(std::uint64_t index) const {
        const std::uint64_t card = ring()->cardinality();
        AlgElem e = zero();
        for (unsigned i = m_; i-- > 0;) {  // coords[0] is the most significant digit
            e.coords[i] = ring()->element_at(index % card);
            index /= card;
        }
        return e;
    }

    std::uint64_t index_of(const AlgElem& x) const {
        check_elem(x);
        const std::uint64_t card = ring()->cardinality();
        std::uint64_t idx = 0;
        for (unsigned i = 0; i < m_; ++i) idx = idx * card + ring()->index_of(x.coords[i]);
        return idx;
    }

    std::vector<AlgElem> materialize(const std::vector<std::uint32_t>& indices) const {
        std::vector<AlgElem> out;
        out.reserve(indices.size());
        for (auto i : indices) out.push_back(element_at(i));
        return out;
    }

    // ---- arithmetic -----------------------------------------------------------

    AlgElem add(const AlgElem& x, const AlgElem& y) const {
        check_elem(x);
        check_elem(y);
        AlgElem r = x;
        for (unsigned i = 0; i < m_; ++i) r.coords[i] += y.coords[i];
        return r;
    }

    AlgElem sub(const AlgElem& x, const AlgElem& y) const {
        check_elem(x);
        check_elem(y);
        AlgElem r = x;
        for (unsigned i = 0; i < m_; ++i) r.coords[i] -= y.coords[i];
        return r;
    }

    AlgElem neg(const AlgElem& x) const {
        check_elem(x);
        AlgElem r = x;
        for (auto& c : r.coords) c = -c;
        return r;
    }

    /// Left S-module scaling a·x (coordinate-wise).
    AlgElem scale(const RingElement& a, const AlgElem& x) const {
        ring()->check_mine(a);
        check_elem(x);
        AlgElem r = x;
        for (auto& c : r.coords) c = a * c;
        return r;
    }

    /// g ∘ h (right remainder) resp. g ⋄ h (left remainder) by f.
    AlgElem mul(const AlgElem& x, const AlgElem& y) const {
        check_elem(x);
        check_elem(y);
        return from_poly_unchecked(reduce(to_poly(x) * to_poly(y)));
    }

    /// [x, y, z] = (xy)z - x(yz).
    AlgElem associator(const AlgElem& x, const AlgElem& y, const AlgElem& z) const {
        return sub(mul(mul(x, y), z), mul(x, mul(y, z)));
    }

    // ---- multiplication table -------------------------------------------------

    /// idx(x ∘ y) for all pairs, built once; throws TooLarge above kTableCap.
    const std::vector<std::uint32_t>& mult_table(unsigned jobs = 1) const {
        detail::require(size_ <= kTableCap, "TooLarge",
                        "multiplication table capped at 2^12 elements");
        std::call_once(table_once_, [this, jobs] { build_table(jobs); });
        return table_;
    }

    std::uint32_t table_mul(std::uint32_t i, std::uint32_t j) const {
        return table_[static_cast<std::size_t>(i) * size_ + j];
    }

    // ---- structure analyses -----------------------------------------------------

    /**
     * Associativity: the exact answer is the two-sidedness of f; the
     * associator scan (exhaustive up to kTableCap elements, seeded sampling
     * beyond) cross-checks it. A disagreement between the exhaustive scan
     * and the two-sided test would falsify the implementation and throws
     * InconsistentWithTwoSidedTest.
     */
    bool is_associative(std::uint64_t sample_triples = kDefaultSampleTriples,
                        std::uint64_t seed = 0) const {
        const bool two_sided = is_two_sided(f_);
        if (size_ <= kTableCap) {
            const auto& mt = mult_table();
            bool witness = false;
            const std::size_t sz = static_cast<std::size_t>(size_);
            for (std::size_t i = 0; i < sz && !witness; ++i)
                for (std::size_t j = 0; j < sz && !witness; ++j) {
                    const std::uint32_t ij = mt[i * sz + j];
                    for (std::size_t k = 0; k < sz; ++k)
                        if (mt[ij * sz + k] != mt[i * sz + mt[j * sz + k]]) {
                            witness = true;
                            break;
                        }
                }
            detail::require(!witness == two_sided, "InconsistentWithTwoSidedTest",
                            "exhaustive associator disagrees with the two-sided test");
        } else {
            std::mt19937_64 rng(seed);
            for (std::uint64_t s = 0; s < sample_triples; ++s) {
                const AlgElem x = element_at(rng() % size_);
                const AlgElem y = element_at(rng() % size_);
                const AlgElem z = element_at(rng() % size_);
                if (!associator(x, y, z).is_zero()) {
                    detail::require(!two_sided, "InconsistentWithTwoSidedTest",
                                    "associator witness found although f is two-sided");
                    return false;
                }
            }
        }
        return two_sided;
    }

    /// Exhaustive nucleus in the given slot, as sorted element indices.
    std::vector<std::uint32_t> nucleus(NucleusSlot slot) const {
        const auto& mt = mult_table();
        const std::size_t sz = static_cast<std::size_t>(size_);
        std::vector<std::uint32_t> out;
        for (std::uint32_t c = 0; c < sz; ++c) {
            bool ok = true;
            for (std::size_t a = 0; a < sz && ok; ++a)
                for (std::size_t b = 0; b < sz; ++b) {
                    bool assoc;
                    switch (slot) {
                        case NucleusSlot::left:
                            assoc = mt[mt[c * sz + a] * sz + b] == mt[c * sz + mt[a * sz + b]];
                            break;
                        case NucleusSlot::middle:
                            assoc = mt[mt[a * sz + c] * sz + b] == mt[a * sz + mt[c * sz + b]];
                            break;
                        default:
                            assoc = mt[mt[a * sz + b] * sz + c] == mt[a * sz + mt[b * sz + c]];
                    }
                    if (!assoc) {
                        ok = false;
                        break;
                    }
                }
            if (ok) out.push_back(c);
        }
        return out;
    }

    /**
     * E(f) = {g : deg g < m, fg ∈ Rf} computed by the membership test; the
     * right nucleus computed independently by associator quantification must
     * coincide (asserted in the test suite, not here).
     */
    std::vector<std::uint32_t> eigenring() const {
        require_right_side("eigenring");
        detail::require(size_ <= kTableCap, "TooLarge", "eigenring scan capped at 2^12");
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 0; i < size_; ++i) {
            const SkewPoly g = to_poly(element_at(i));
            if (right_divmod(f_ * g, f_).r.is_zero()) out.push_back(i);
        }
        return out;
    }

    /// {x : xy = yx for all y}, sorted indices.
    std::vector<std::uint32_t> commuter() const {
        const auto& mt = mult_table();
        const std::size_t sz = static_cast<std::size_t>(size_);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 0; i < sz; ++i) {
            bool ok = true;
            for (std::size_t j = 0; j < sz; ++j)
                if (mt[i * sz + j] != mt[j * sz + i]) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(i);
        }
        return out;
    }

    /// Center = Comm(A) ∩ Nuc(A).
    std::vector<std::uint32_t> center() const {
        std::vector<std::uint32_t> acc = commuter();
        for (NucleusSlot s : {NucleusSlot::left, NucleusSlot::middle, NucleusSlot::right}) {
            const auto nu = nucleus(s);
            std::vector<std::uint32_t> merged;
            std::set_intersection(acc.begin(), acc.end(), nu.begin(), nu.end(),
                                  std::back_inserter(merged));
            acc = std::move(merged);
        }
        return acc;
    }

    /// S_0 = {a ∈ S : a h = h a for all h}, the scalar subring.
    std::vector<RingElement> scalar_ring() const {
        const auto& mt = mult_table();
        const std::size_t sz = static_cast<std::size_t>(size_);
        std::vector<RingElement> out;
        for (std::uint64_t ai = 0; ai < ring()->cardinality(); ++ai) {
            const RingElement a = ring()->element_at(ai);
            const std::uint32_t i = static_cast<std::uint32_t>(index_of(embed(a)));
            bool ok = true;
            for (std::size_t j = 0; j < sz; ++j)
                if (mt[i * sz + j] != mt[j * sz + i]) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(a);
        }
        return out;
    }

    /**
     * The explicit commuter subset for delta = 0:
     * { sum a_i t^i : a_i ∈ Fix(sigma), c a_i = a_i sigma^i(c) for all c }.
     * Always contained in commuter(); equality needs division-ring
     * hypotheses and is reported, never asserted.
     */
    std::vector<std::uint32_t> commuter_lower_bound() const {
        detail::require(ctx()->delta_is_zero(), "DeltaNotZero",
                        "the coefficient description needs delta = 0");
        const auto all = ring()->enumerate();
        std::vector<std::vector<RingElement>> per_slot(m_);
        for (unsigned i = 0; i < m_; ++i) {
            for (const auto& a : all) {
                if (!(ctx()->sigma(a) == a)) continue;
                bool ok = true;
                for (const auto& c : all)
                    if (!(c * a == a * ctx()->sigma.apply_power(c, i))) {
                        ok = false;
                        break;
                    }
                if (ok) per_slot[i].push_back(a);
            }
        }
        std::vector<std::uint32_t> out;
        std::vector<std::size_t> pick(m_, 0);
        while (true) {
            AlgElem e = zero();
            for (unsigned i = 0; i < m_; ++i) e.coords[i] = per_slot[i][pick[i]];
            out.push_back(static_cast<std::uint32_t>(index_of(e)));
            unsigned i = m_;
            while (i-- > 0) {
                if (++pick[i] < per_slot[i].size()) break;
                pick[i] = 0;
                if (i == 0) {
                    std::sort(out.begin(), out.end());
                    return out;
                }
            }
        }
    }

    /// All ordered pairs (g, h), g,h != 0, with g ∘ h = 0.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> zero_divisor_pairs() const {
        const auto& mt = mult_table();
        const std::size_t sz = static_cast<std::size_t>(size_);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
        for (std::uint32_t i = 1; i < sz; ++i)
            for (std::uint32_t j = 1; j < sz; ++j)
                if (mt[static_cast<std::size_t>(i) * sz + j] == 0) out.emplace_back(i, j);
        return out;
    }

    /// Finite, unital, no zero divisors.
    bool is_semifield() const {
        const auto& mt = mult_table();
        const std::size_t sz = static_cast<std::size_t>(size_);
        for (std::size_t i = 1; i < sz; ++i)
            for (std::size_t j = 1; j < sz; ++j)
                if (mt[i * sz + j] == 0) return false;
        return sz >= 2;
    }

    struct TLeftInverse {
        bool invertible;
        std::optional<AlgElem> witness;  // g with g ∘ t = 1 when invertible
    };

    /**
     * t is left-invertible iff d_0 is; the witness is
     * g = sum_i (-d_0^{-1} d_{i+1}) t^i, re-verified against g ∘ t = 1.
     */
    TLeftInverse t_left_invertible() const {
        require_right_side("t_left_invertible");
        const RingElement d0 = f_.coeff(0);
        if (!d0.is_unit()) return {false, std::nullopt};
        const RingElement h = -(d0.inverse());
        AlgElem g = zero();
        for (unsigned i = 0; i < m_; ++i) g.coords[i] = h * f_.coeff(i + 1);
        detail::require(mul(g, t_elem()) == one(), "InternalError",
                        "left inverse witness failed verification");
        return {true, g};
    }

    /// t^m ∘ t = t ∘ t^m, with t^m evaluated by the left-multiplication chain.
    bool powers_of_t_associative() const {
        AlgElem tm = one();
        for (unsigned i = 0; i < m_; ++i) tm = mul(t_elem(), tm);
        return mul(tm, t_elem()) == mul(t_elem(), tm);
    }

    void check_elem(const AlgElem& x) const {
        detail::require(x.coords.size() == m_, "AlgebraMismatch",
                        "coordinate vector of the wrong rank");
        for (const auto& c : x.coords) ring()->check_mine(c);
    }

   private:
    PetitAlgebra(SkewPoly f, QuotientSide side, bool normalized)
        : f_(std::move(f)),
          side_(side),
          normalized_(normalized),
          m_(static_cast<unsigned>(f_.degree())),
          size_(detail::pow_saturating(f_.ctx()->ring->cardinality(), m_, 1ull << 62)) {
        detail::require(size_ < (1ull << 62), "TooLarge", "|S|^m must stay below 2^62");
    }

    SkewPoly reduce(const SkewPoly& g) const {
        return side_ == QuotientSide::right ? right_divmod(g, f_).r : left_divmod(g, f_).r;
    }

    AlgElem from_poly_unchecked(const SkewPoly& r) const {
        AlgElem e = zero();
        for (std::size_t i = 0; i < r.coeffs().size(); ++i) e.coords[i] = r.coeffs()[i];
        return e;
    }

    void require_right_side(const char* what) const {
        detail::require(side_ == QuotientSide::right, "SideUnsupported",
                        std::string(what) + " is defined on the right-remainder algebra S_f");
    }

    void build_table(unsigned jobs) const {
        const std::size_t sz = static_cast<std::size_t>(size_);
        table_.assign(sz * sz, 0);
        if (side_ == QuotientSide::right) {
            // x ∘ h is left S-linear in x and t^{k+1} ∘ h = T_f(t^k ∘ h), so a
            // column needs m pseudolinear steps instead of sz divisions
            const std::vector<RingElement> drop = t_to_m_coords();
            run_partitioned(sz, jobs, [this, sz, &drop](std::size_t j_begin,
                                                        std::size_t j_end) {
                for (std::size_t j = j_begin; j < j_end; ++j) {
                    const AlgElem h = element_at(j);
                    std::vector<std::vector<RingElement>> rows(m_);
                    rows[0] = h.coords;
                    for (unsigned k = 1; k < m_; ++k) rows[k] = tf_step(rows[k - 1], drop);
                    AlgElem acc = zero();
                    for (std::size_t i = 0; i < sz; ++i) {
                        const AlgElem x = element_at(i);
                        for (unsigned c = 0; c < m_; ++c) acc.coords[c] = ring()->zero();
                        for (unsigned k = 0; k < m_; ++k) {
                            if (x.coords[k].is_zero()) continue;
                            for (unsigned c = 0; c < m_; ++c)
                                acc.coords[c] += x.coords[k] * rows[k][c];
                        }
                        table_[i * sz + j] = static_cast<std::uint32_t>(index_of(acc));
                    }
                }
            });
        } else {
            run_partitioned(sz, jobs, [this, sz](std::size_t i_begin, std::size_t i_end) {
                for (std::size_t i = i_begin; i < i_end; ++i) {
                    const AlgElem x = element_at(i);
                    for (std::size_t j = 0; j < sz; ++j)
                        table_[i * sz + j] =
                            static_cast<std::uint32_t>(index_of(mul(x, element_at(j))));
                }
            });
        }
        // seeded spot-check of the table against the direct product route
        std::mt19937_64 rng(0x7ab1e);
        for (int s = 0; s < 512; ++s) {
            const std::size_t i = rng() % sz, j = rng() % sz;
            detail::require(table_[i * sz + j] ==
                                index_of(mul(element_at(i), element_at(j))),
                            "InternalError", "multiplication table verification failed");
        }
    }

    /// Coordinates of t^m in the basis (the reduction of the leading power).
    std::vector<RingElement> t_to_m_coords() const {
        std::vector<RingElement> d(m_, ring()->zero());
        for (unsigned c = 0; c < m_; ++c) d[c] = -f_.coeff(c);
        return d;
    }

    /// One application of T_f on raw coordinates: v -> sigma(v) C_f + delta(v).
    std::vector<RingElement> tf_step(const std::vector<RingElement>& v,
                                     const std::vector<RingElement>& drop) const {
        std::vector<RingElement> r(m_, ring()->zero());
        const RingElement top = f_.ctx()->sigma(v[m_ - 1]);
        for (unsigned c = 0; c < m_; ++c) {
            r[c] = f_.ctx()->delta(v[c]) + top * drop[c];
            if (c > 0) r[c] += f_.ctx()->sigma(v[c - 1]);
        }
        return r;
    }

    template <class Fn>
    static void run_partitioned(std::size_t total, unsigned jobs, Fn&& fn);

    SkewPoly f_;
    QuotientSide side_;
    bool normalized_;
    unsigned m_;
    std::uint64_t size_;

    mutable std::once_flag table_once_;
    mutable std::vector<std::uint32_t> table_;
};

}  // namespace petit

#include <thread>

namespace petit {

/// Splits [0, total) into contiguous slices; workers write disjoint state,
/// so results are bit-identical for any job count.
template <class Fn>
void PetitAlgebra::run_partitioned(std::size_t total, unsigned jobs, Fn&& fn) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || total < 2 * jobs) {
        fn(std::size_t{0}, total);
        return;
    }
    std::vector<std::thread> workers;
    const std::size_t chunk = (total + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        const std::size_t b = std::min(total, w * chunk);
        const std::size_t e = std::min(total, b + chunk);
        if (b < e) workers.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& t : workers) t.join();
}

/**
 * Generalized cyclic algebra (S/S_0, sigma, c) = S_{t^m - c} for sigma of
 * order m; the defining basis products
 *
 *   (a t^i)(b t^j) = a sigma^i(b) t^{i+j}        (i + j < m)
 *                  = a sigma^i(b) t^{i+j-m} c    (i + j >= m)
 *
 * are validated against the quotient multiplication on every pair.
 */
inline AlgPtr cyclic_algebra(const RingPtr& ring, const RingMorphism& sigma,
                             const RingElement& c, unsigned m) {
    ring->check_mine(c);
    detail::require(sigma.kind() == MorphismKind::automorphism, "SigmaOrderMismatch",
                    "sigma must be an automorphism of finite order");
    detail::require(sigma.order() == m, "SigmaOrderMismatch",
                    "sigma must have order m = " + std::to_string(m));
    CtxPtr ctx = SkewPolyContext::twisted(ring, sigma);
    const SkewPoly f = SkewPoly::monomial(ctx, 1, m) - SkewPoly::constant(ctx, c);
    AlgPtr A = PetitAlgebra::make(f);

    const auto all = ring->enumerate();
    const SkewPoly cpoly = SkewPoly::constant(ctx, c);
    for (const auto& a : all)
        for (const auto& b : all)
            for (unsigned i = 0; i < m; ++i)
                for (unsigned j = 0; j < m; ++j) {
                    const RingElement coefficient = a * sigma.apply_power(b, i);
                    SkewPoly rule =
                        i + j < m
                            ? SkewPoly::monomial(ctx, coefficient, i + j)
                            : SkewPoly::monomial(ctx, coefficient, i + j - m) * cpoly;
                    const AlgElem lhs = A->mul(A->from_poly(SkewPoly::monomial(ctx, a, i)),
                                               A->from_poly(SkewPoly::monomial(ctx, b, j)));
                    detail::require(lhs == A->from_poly(rule), "ValidationFailed",
                                    "cyclic-algebra multiplication rule mismatch");
                }
    return A;
}

}  // namespace petit
