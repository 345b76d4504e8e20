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
 * @file selftest.hpp
 * @brief The end-to-end verification suite behind `petit selftest`.
 *
 * Ten independent property checks at desk scale, all with exact equality:
 * division against a separate product oracle, associativity vs
 * two-sidedness, semifield vs irreducibility, nucleus/eigenring agreement,
 * the pseudolinear identities, generalized-Galois-ring verification, the
 * cyclic-code fixture, norm semi-multiplicativity with the explicit cubic
 * norm identity, anti-multiplicativity of psi, and the two product routes.
 * Sampled checks are driven entirely by the seed.
 */

#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "petit/chain_ring.hpp"
#include "petit/error.hpp"
#include "petit/fixtures.hpp"
#include "petit/ggr.hpp"
#include "petit/matrix.hpp"
#include "petit/morphism.hpp"
#include "petit/petit_algebra.hpp"
#include "petit/pseudolinear.hpp"
#include "petit/skew_code.hpp"
#include "petit/skew_poly.hpp"

namespace petit::selftest {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double millis;
};

inline void check(bool ok, const std::string& what) {
    if (!ok) throw error("CheckFailed", what);
}

/**
 * Product oracle kept independent of SkewPoly::operator*: expands the
 * product monomial by monomial, pushing t through each right-hand monomial
 * one step at a time. Used to re-verify every division identity.
 */
inline SkewPoly naive_mul(const SkewPoly& g, const SkewPoly& h) {
    const CtxPtr& ctx = g.ctx();
    SkewPoly acc = SkewPoly::zero(ctx);
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
        if (g.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < h.coeffs().size(); ++j) {
            if (h.coeffs()[j].is_zero()) continue;
            std::vector<RingElement> v(j + 1, ctx->ring->zero());
            v[j] = h.coeffs()[j];
            for (std::size_t rep = 0; rep < i; ++rep) {
                std::vector<RingElement> next(v.size() + 1, ctx->ring->zero());
                for (std::size_t k = 0; k < v.size(); ++k) {
                    next[k + 1] += ctx->sigma(v[k]);
                    next[k] += ctx->delta(v[k]);
                }
                v = std::move(next);
            }
            SkewPoly term = SkewPoly::from_coeffs(ctx, v).scaled_left(g.coeffs()[i]);
            acc = acc + term;
        }
    }
    return acc;
}

inline SkewPoly random_poly(const CtxPtr& ctx, unsigned max_deg, std::mt19937_64& rng) {
    std::vector<RingElement> c;
    c.reserve(max_deg + 1);
    for (unsigned i = 0; i <= max_deg; ++i)
        c.push_back(ctx->ring->element_at(rng() % ctx->ring->cardinality()));
    return SkewPoly::from_coeffs(ctx, std::move(c));
}

namespace detail_st {

inline std::string criterion_division() {
    const auto ring = fixtures::F4();
    const auto ctx = fixtures::twisted_ctx(ring);
    const RingElement w = ring->generator();
    const std::vector<SkewPoly> fs = {
        SkewPoly::monomial(ctx, 1, 2) - SkewPoly::constant(ctx, w),
        SkewPoly::monomial(ctx, 1, 4) - SkewPoly::one(ctx)};
    const std::uint64_t total = 4 * 4 * 4 * 4 * 4;  // all g with deg <= 4
    std::size_t divisions = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<RingElement> c(5, ring->zero());
        std::uint64_t rest = idx;
        for (unsigned j = 0; j < 5; ++j) {
            c[j] = ring->element_at(rest % 4);
            rest /= 4;
        }
        const SkewPoly g = SkewPoly::from_coeffs(ctx, c);
        for (const auto& f : fs) {
            const auto rd = right_divmod(g, f);
            check(rd.r.degree() < f.degree(), "right remainder degree");
            check(naive_mul(rd.q, f) + rd.r == g, "g = q f + r against the oracle");
            const auto ld = left_divmod(g, f);
            check(ld.r.degree() < f.degree(), "left remainder degree");
            check(naive_mul(f, ld.q) + ld.r == g, "g = f q + r against the oracle");
            divisions += 2;
        }
    }
    return std::to_string(divisions) + " divisions re-verified by the product oracle";
}

inline std::string criterion_associativity(std::uint64_t seed) {
    const auto ring = fixtures::F4();
    const auto ctx = fixtures::twisted_ctx(ring);
    const SkewPoly f = SkewPoly::monomial(ctx, 1, 2) -
                       SkewPoly::constant(ctx, ring->generator());
    const AlgPtr a = PetitAlgebra::make(f);
    const AlgElem t = a->t_elem();
    check(a->associator(t, t, t) == t, "[t,t,t] = t in the quadratic fixture");
    check(!is_two_sided(f), "t^2 - w is not two-sided");
    check(!a->is_associative(), "the quadratic fixture is nonassociative");

    const SkewPoly f41 = SkewPoly::monomial(ctx, 1, 4) - SkewPoly::one(ctx);
    const AlgPtr b = PetitAlgebra::make(f41);
    check(is_two_sided(f41), "t^4 - 1 is two-sided");
    const auto& mt = b->mult_table();
    const std::size_t sz = static_cast<std::size_t>(b->size());
    auto assoc = [&](std::size_t x, std::size_t y, std::size_t z) {
        return mt[mt[x * sz + y] * sz + z] == mt[x * sz + mt[y * sz + z]];
    };
    // 16-element slice spanned by 1 and t^2, exhaustively
    std::vector<std::size_t> slice;
    for (std::uint64_t i = 0; i < 16; ++i) {
        AlgElem e = b->zero();
        e.coords[0] = ring->element_at(i % 4);
        e.coords[2] = ring->element_at(i / 4);
        slice.push_back(static_cast<std::size_t>(b->index_of(e)));
    }
    for (std::size_t x : slice)
        for (std::size_t y : slice)
            for (std::size_t z : slice)
                check(assoc(x, y, z), "slice associator must vanish");
    std::mt19937_64 rng(seed);
    for (int s = 0; s < 100000; ++s)
        check(assoc(rng() % sz, rng() % sz, rng() % sz), "sampled associator must vanish");
    return "witness [t,t,t] = t; 4096 slice triples + 100000 sampled triples associate";
}

inline std::string criterion_semifield() {
    const auto ring = fixtures::F4();
    const auto ctx = fixtures::twisted_ctx(ring);
    unsigned semifields = 0;
    for (std::uint64_t bi = 0; bi < 4; ++bi)
        for (std::uint64_t ci = 0; ci < 4; ++ci) {
            const SkewPoly f =
                SkewPoly::monomial(ctx, 1, 2) +
                SkewPoly::monomial(ctx, ring->element_at(bi), 1) +
                SkewPoly::constant(ctx, ring->element_at(ci));
            const AlgPtr a = PetitAlgebra::make(f);
            const bool sf = a->is_semifield();
            check(sf == is_irreducible_over_field(f),
                  "semifield must coincide with irreducibility for " + f.to_string());
            semifields += sf;
        }
    const SkewPoly f = SkewPoly::monomial(ctx, 1, 2) -
                       SkewPoly::constant(ctx, ring->generator());
    const AlgPtr a = PetitAlgebra::make(f);
    check(a->zero_divisor_pairs().empty(), "t^2 - w fixture has no zero-divisor pairs");
    return "16 monic quadratics (" + std::to_string(semifields) +
           " semifields); 0 zero-divisor pairs among 225 nonzero pairs of S_{t^2-w}";
}

inline std::string criterion_nucleus() {
    const auto ring = fixtures::F4();
    const auto ctx = fixtures::twisted_ctx(ring);
    const SkewPoly f = SkewPoly::monomial(ctx, 1, 2) -
                       SkewPoly::constant(ctx, ring->generator());
    const AlgPtr a = PetitAlgebra::make(f);
    const auto nr = a->nucleus(NucleusSlot::right);
    check(nr == a->eigenring(), "right nucleus must equal the eigenring");
    const auto nl = a->nucleus(NucleusSlot::left);
    const auto nm = a->nucleus(NucleusSlot::middle);
    for (std::uint64_t i = 0; i < ring->cardinality(); ++i) {
        const auto idx =
            static_cast<std::uint32_t>(a->index_of(a->embed(ring->element_at(i))));
        check(std::binary_search(nl.begin(), nl.end(), idx), "S embeds in the left nucleus");
        check(std::binary_search(nm.begin(), nm.end(), idx), "S embeds in the middle nucleus");
    }
    return "eigenring = right nucleus (" + std::to_string(nr.size()) +
           " elements); S inside left and middle nuclei";
}

inline std::string criterion_pseudolinear() {
    const auto f4 = fixtures::F4();
    const auto c4 = fixtures::twisted_ctx(f4);
    const AlgPtr a = PetitAlgebra::make(SkewPoly::monomial(c4, 1, 2) -
                                        SkewPoly::constant(c4, f4->generator()));
    const auto gr = fixtures::GR42();
    const auto cg = fixtures::twisted_ctx(gr);
    const AlgPtr g = PetitAlgebra::make(SkewPoly::monomial(cg, 1, 2) -
                                        SkewPoly::constant(cg, gr->generator()));
    for (const AlgPtr& alg : {a, g}) {
        const PseudoLinearMap tf = PseudoLinearMap::of(alg->f());
        const AlgElem t = alg->t_elem();
        for (std::uint64_t i = 0; i < alg->size(); ++i) {
            const AlgElem v = alg->element_at(i);
            check(alg->mul(t, v) == AlgElem{tf.apply(v.coords)}, "T_f must equal L_t");
        }
    }
    for (std::uint64_t hi = 0; hi < a->size(); ++hi)
        check(check_lh_identity(*a, a->element_at(hi)), "L_h must equal h(T_f)");
    const auto mods = invariant_submodules(*a);
    check(mods.size() == 2 && mods.front().size() == 1 && mods.back().size() == a->size(),
          "only {0} and S^2 are invariant for the semifield fixture");
    return "T_f = L_t on 16 + 256 elements; 256 L_h evaluations; invariant submodules {0, S^2}";
}

inline std::string criterion_ggr(unsigned jobs) {
    const auto gr = fixtures::GR42();
    const auto ctx = fixtures::twisted_ctx(gr);
    const SkewPoly f = SkewPoly::monomial(ctx, 1, 2) -
                       SkewPoly::constant(ctx, gr->generator());
    const AlgPtr a = PetitAlgebra::make(f);
    check(a->size() == 256, "|S_f| must be 2^(2*2*2) = 256");
    const GGRReport rep = ggr_check(a, jobs);
    check(rep.is_ggr, "zero-divisor set must equal 2*S_f as a set");
    // |pA| = p^{(e-1)nm} from the module structure
    check(rep.pa_size == 16 && rep.zero_divisor_set_size == 16,
          "|2*S_f| must be 2^{(e-1)nm} = 16");
    const auto f4 = fixtures::F4();
    const auto c4 = fixtures::twisted_ctx(f4);
    const SkewPoly fbar = SkewPoly::monomial(c4, 1, 2) -
                          SkewPoly::constant(c4, f4->generator());
    check(rep.top_factor->f() == fbar, "top factor must be S_{t^2-w}");
    check(rep.top_is_semifield, "top factor must be a semifield");
    check(rep.is_lifting, "the GGR must lift its top factor");
    return "256 elements; zero divisors = 2*S_f (16 = 2^{(e-1)nm}); top factor S_{t^2-w}; "
           "Psi kernel 2*S_f; lifting holds";
}

inline std::string criterion_codes() {
    const auto ring = fixtures::F4();
    const auto ctx = fixtures::twisted_ctx(ring);
    const SkewPoly f = SkewPoly::monomial(ctx, 1, 4) - SkewPoly::one(ctx);
    const AlgPtr a = PetitAlgebra::make(f);
    const SkewPoly g = SkewPoly::monomial(ctx, 1, 2) + SkewPoly::one(ctx);
    const SkewCode code = build_code(a, g);
    check(code.size() == 16 && code.dimension() == 2, "|C| must be 4^{4-2} = 16");
    for (unsigned j = 0; j < 4; ++j) {
        check(code.gen_matrix.at(0, j) == (j % 2 == 0 ? ring->one() : ring->zero()),
              "generator row 0 must be (1,0,1,0)");
        check(code.gen_matrix.at(1, j) == (j % 2 == 1 ? ring->one() : ring->zero()),
              "generator row 1 must be (0,1,0,1)");
    }
    check(code.h.has_value() && *code.h == g, "cofactor h must be t^2 + 1");
    check((code.gen_matrix * *code.ctrl_matrix).is_zero(), "G gamma(h) must vanish");
    std::size_t annihilated = 0;
    for (std::uint64_t i = 0; i < a->size(); ++i) {
        const auto word = a->element_at(i).coords;
        const bool ann = is_codeword(code, word, MembershipMode::annihilator);
        check(ann == is_codeword(code, word, MembershipMode::rowspace),
              "annihilator and row-space membership must agree");
        annihilated += ann;
    }
    check(annihilated == 16, "exactly 16 of 256 vectors are annihilated by h");
    check(constacyclic_check(code, ring->one()), "the code must be sigma-cyclic");
    check(left_ideal_check(code), "the code must be a left ideal");
    check(lt_closure_check(code), "the code must be L_t-closed");
    check(min_distance(code) == 2, "minimum distance must be 2");
    return "generator [[1,0,1,0],[0,1,0,1]]; 16 codewords; annihilator = row space on 256 "
           "vectors; G gamma(h) = 0; sigma-cyclic; left ideal; distance 2";
}

inline std::string criterion_norm() {
    const auto f4 = fixtures::F4();
    const auto c4 = fixtures::twisted_ctx(f4);
    const AlgPtr a = PetitAlgebra::make(SkewPoly::monomial(c4, 1, 2) -
                                        SkewPoly::constant(c4, f4->generator()));
    for (std::uint64_t ai = 0; ai < 4; ++ai) {
        const AlgElem s = a->embed(f4->element_at(ai));
        const MatrixOverS gs = right_mul_matrix(*a, s);
        for (std::uint64_t gi = 0; gi < a->size(); ++gi) {
            const AlgElem g = a->element_at(gi);
            const AlgElem sg = a->mul(s, g);
            check(gs * right_mul_matrix(*a, g) == right_mul_matrix(*a, sg),
                  "gamma(a) gamma(g) must equal gamma(a g)");
            check(det(gs) * norm_map(*a, g) == norm_map(*a, sg),
                  "M(a g) must equal M(a) M(g)");
        }
    }

    // Cubic norm identity over F8/F2, f = t^3 - d: the determinant of the
    // right-multiplication matrix has the sigma-twisted closed form
    //   M(h) = N(h0) + d N(h1) + d sigma(d) N(h2)
    //          - [sigma(d) u + d sigma(u) + d sigma^2(u)],
    // with u = h0 sigma(h1) sigma^2(h2); for sigma(d) = d this collapses to the
    // classical cyclic-algebra norm N(h0)+dN(h1)+d^2N(h2)-dT(u). The
    // determinant side is computed independently by cofactor expansion.
    const auto f8 = fixtures::F8();
    const auto c8 = fixtures::twisted_ctx(f8);
    const auto& sig = c8->sigma;
    auto norm = [&](const RingElement& v) { return v * sig(v) * sig(sig(v)); };
    unsigned swept = 0;
    for (std::uint64_t di = 0; di < 8; ++di) {
        const RingElement d = f8->element_at(di);
        if (sig(d) == d) continue;  // skip the prime subfield
        const AlgPtr b =
            PetitAlgebra::make(SkewPoly::monomial(c8, 1, 3) - SkewPoly::constant(c8, d));
        for (std::uint64_t hi = 0; hi < b->size(); ++hi) {
            const AlgElem h = b->element_at(hi);
            const RingElement lhs = norm_map(*b, h);
            const RingElement u = h.coords[0] * sig(h.coords[1]) * sig(sig(h.coords[2]));
            const RingElement rhs = norm(h.coords[0]) + d * norm(h.coords[1]) +
                                    d * sig(d) * norm(h.coords[2]) -
                                    (sig(d) * u + d * sig(u) + d * sig(sig(u)));
            check(lhs == rhs, "cubic norm identity at d=" + d.to_string() +
                                  ", h index " + std::to_string(hi));
            check(h.coords[1].is_zero() && h.coords[2].is_zero()
                      ? lhs == norm(h.coords[0])
                      : true,
                  "scalars must evaluate to the field norm");
        }
        ++swept;
    }
    check(swept == 6, "all six d outside the prime subfield must be swept");
    return "semi-multiplicativity on 4x16 pairs; twisted cubic norm identity on 6 x 512 "
           "elements";
}

inline std::string criterion_psi(std::uint64_t seed) {
    const auto ring = fixtures::F4();
    const auto ctx = fixtures::twisted_ctx(ring);
    const CtxPtr target = ctx->psi_target();
    std::mt19937_64 rng(seed);
    for (int s = 0; s < 10000; ++s) {
        const SkewPoly g = random_poly(ctx, 3, rng);
        const SkewPoly h = random_poly(ctx, 3, rng);
        check(psi(g * h, target) == psi(h, target) * psi(g, target),
              "psi(gh) must equal psi(h) psi(g)");
    }
    return "anti-multiplicativity on 10000 seeded pairs of degree <= 3";
}

inline std::string criterion_delta(std::uint64_t seed) {
    const auto gr = fixtures::GR42();
    const auto sigma = RingMorphism::frobenius_lift(gr, 1);
    const auto delta = RingMorphism::inner_derivation(gr->generator(), sigma);
    const CtxPtr ctx = SkewPolyContext::make(gr, sigma, delta);
    std::mt19937_64 rng(seed);
    for (int s = 0; s < 10000; ++s) {
        const SkewPoly g = random_poly(ctx, 3, rng);
        const SkewPoly h = random_poly(ctx, 3, rng);
        check(g * h == mul_via_delta(g, h), "both product routes must agree");
    }
    return "mul_via_delta = mul on 10000 seeded pairs of degree <= 3";
}

template <class Fn>
CriterionResult run_one(int id, const std::string& name, Fn&& body) {
    CriterionResult r{id, name, false, "", 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.detail = body();
        r.passed = true;
    } catch (const std::exception& ex) {
        r.detail = ex.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                   .count();
    return r;
}

}  // namespace detail_st

inline std::vector<CriterionResult> run_all(std::uint64_t seed = 0, unsigned jobs = 1) {
    using namespace detail_st;
    std::vector<CriterionResult> out;
    out.push_back(run_one(1, "division with remainder, oracle-verified",
                          [] { return criterion_division(); }));
    out.push_back(run_one(2, "associativity equals two-sidedness",
                          [seed] { return criterion_associativity(seed); }));
    out.push_back(run_one(3, "semifield iff irreducible over the field fixture",
                          [] { return criterion_semifield(); }));
    out.push_back(run_one(4, "right nucleus equals eigenring; S in left/middle nuclei",
                          [] { return criterion_nucleus(); }));
    out.push_back(run_one(5, "pseudolinear identities and invariant submodules",
                          [] { return criterion_pseudolinear(); }));
    out.push_back(run_one(6, "generalized Galois ring verification over GR(4,2)",
                          [jobs] { return criterion_ggr(jobs); }));
    out.push_back(run_one(7, "cyclic code fixture: matrices, membership, distance",
                          [] { return criterion_codes(); }));
    out.push_back(run_one(8, "norm map semi-multiplicativity and cubic norm identity",
                          [] { return criterion_norm(); }));
    out.push_back(run_one(9, "anti-automorphism psi reverses products",
                          [seed] { return criterion_psi(seed); }));
    out.push_back(run_one(10, "delta-operator product route agrees with direct product",
                          [seed] { return criterion_delta(seed); }));
    return out;
}

}  // namespace petit::selftest
