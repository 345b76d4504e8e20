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

#include <algorithm>
#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "petit/ggr.hpp"

using namespace petit;
using testutil::thrown_code;

namespace {
struct GgrFixture {  // S = GR(4,2), f = t^2 - x
    RingPtr gr = fixtures::GR42();
    CtxPtr ctx = fixtures::twisted_ctx(gr);
    SkewPoly f = SkewPoly::monomial(ctx, 1, 2) - SkewPoly::constant(ctx, gr->generator());
    AlgPtr a = PetitAlgebra::make(f);
};
}  // namespace

TEST_CASE("reduction to the top factor", "[ggr]") {
    GgrFixture fx;
    const ReducedAlgebra red = reduce_algebra(fx.a);  // re-verifies hom + kernel internally

    // top factor is S_{t^2 - w} over F4
    const RingPtr k = fx.gr->residue_field();
    CHECK(red.top->f().coeff(0) == -(k->generator()));
    CHECK(red.top->size() == 16);

    // Psi(p h) = 0 and Psi is surjective
    std::vector<std::uint32_t> image;
    const RingElement two = fx.gr->from_int(2);
    for (std::uint64_t i = 0; i < fx.a->size(); ++i) {
        CHECK(red.psi(fx.a->scale(two, fx.a->element_at(i))).is_zero());
        image.push_back(red.psi_index(static_cast<std::uint32_t>(i)));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    CHECK(image.size() == red.top->size());
}

TEST_CASE("the main GGR fixture", "[ggr]") {
    GgrFixture fx;
    const GGRReport rep = ggr_check(fx.a);
    CHECK(rep.element_count == 256);  // p^{enm}
    CHECK(rep.is_ggr);
    CHECK(rep.zero_divisor_set_size == 16);  // |pA| = p^{(e-1)nm}
    CHECK(rep.pa_size == 16);
    CHECK(rep.top_is_semifield);
    CHECK(rep.is_lifting);
    CHECK(lifting_check(fx.a));

    // S_0 / p S_0 = Fix(sigmabar): project the scalar subring onto the top
    const auto s0 = fx.a->scalar_ring();
    std::vector<std::uint64_t> projected;
    for (const auto& s : s0)
        projected.push_back(fx.gr->residue_field()->index_of(fx.gr->project(s)));
    std::sort(projected.begin(), projected.end());
    projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
    std::vector<std::uint64_t> fixed;
    for (const auto& s : fx.ctx->sigma.induced_residue().fixed_set())
        fixed.push_back(fx.gr->residue_field()->index_of(s));
    std::sort(fixed.begin(), fixed.end());
    CHECK(projected == fixed);
}

TEST_CASE("fields are the degenerate case", "[ggr]") {
    auto f4 = fixtures::F4();
    CtxPtr ctx = fixtures::twisted_ctx(f4);
    const AlgPtr a = PetitAlgebra::make(SkewPoly::monomial(ctx, 1, 2) -
                                        SkewPoly::constant(ctx, f4->generator()));
    const GGRReport rep = ggr_check(a);
    CHECK(rep.is_ggr);
    CHECK(rep.zero_divisor_set_size == 1);  // pA = {0}
    CHECK(rep.pa_size == 1);
    CHECK(rep.top_is_semifield);
    CHECK(rep.is_lifting);  // trivial lifting
}

TEST_CASE("base-reducible f is not a GGR", "[ggr]") {
    GgrFixture fx;
    const SkewPoly f = SkewPoly::monomial(fx.ctx, 1, 2) - SkewPoly::one(fx.ctx);
    const AlgPtr a = PetitAlgebra::make(f);
    const GGRReport rep = ggr_check(a);
    CHECK(!rep.is_ggr);
    CHECK(!rep.top_is_semifield);
    CHECK(rep.zero_divisor_set_size > rep.pa_size);

    // witness from the factorization f = (t-1)(t+1)
    const AlgElem tm1 = a->from_poly(SkewPoly::t(fx.ctx) - SkewPoly::one(fx.ctx));
    const AlgElem tp1 = a->from_poly(SkewPoly::t(fx.ctx) + SkewPoly::one(fx.ctx));
    CHECK(a->mul(tm1, tp1).is_zero());
    const auto pa = p_multiples(*a);
    CHECK(!std::binary_search(pa.begin(), pa.end(),
                              static_cast<std::uint32_t>(a->index_of(tm1))));

    CHECK(thrown_code([&] { lifting_check(a); }) == "NotGGR");
}

TEST_CASE("associative GGR over the identity twist", "[ggr]") {
    auto gr = fixtures::GR42();
    CtxPtr plain = SkewPolyContext::twisted(gr, RingMorphism::identity(gr));
    // t^2 + t + x reduces to t^2 + t + w, irreducible over F4[t]
    const SkewPoly f = SkewPoly::monomial(plain, 1, 2) + SkewPoly::t(plain) +
                       SkewPoly::constant(plain, gr->generator());
    REQUIRE(base_irreducible(f));
    const AlgPtr a = PetitAlgebra::make(f);
    CHECK(a->is_associative());
    const GGRReport rep = ggr_check(a);
    CHECK(rep.is_ggr);
    CHECK(rep.is_lifting);
}

TEST_CASE("GGR sweep over all monic quadratics of GR(4,2)", "[ggr][slow]") {
    GgrFixture fx;
    std::size_t irreducible = 0;
    for (std::uint64_t bi = 0; bi < 16; ++bi)
        for (std::uint64_t ci = 0; ci < 16; ++ci) {
            const SkewPoly f = SkewPoly::monomial(fx.ctx, 1, 2) +
                               SkewPoly::monomial(fx.ctx, fx.gr->element_at(bi), 1) +
                               SkewPoly::constant(fx.ctx, fx.gr->element_at(ci));
            const AlgPtr a = PetitAlgebra::make(f);
            const bool base_irred = base_irreducible(f);
            const ReducedAlgebra red = reduce_algebra(a);
            CHECK(red.top->is_semifield() == base_irred);
            if (base_irred) {
                ++irreducible;
                CHECK(zero_divisor_set(*a) == p_multiples(*a));
            }
        }
    CHECK(irreducible == 80);  // 5 irreducible reductions, 16 lifts each
}

TEST_CASE("the t^m + p h - d family", "[ggr]") {
    GgrFixture fx;
    const RingElement x = fx.gr->generator();

    // h = 0 recovers the main fixture
    const AlgPtr a0 = cor18_family(fx.gr, fx.ctx->sigma, SkewPoly::zero(fx.ctx), x);
    CHECK(a0->f() == fx.f);

    // h = t gives f = t^2 + 2t - x, still a GGR lifting
    const AlgPtr a1 = cor18_family(fx.gr, fx.ctx->sigma, SkewPoly::t(fx.ctx), x);
    CHECK(a1->f() == SkewPoly::monomial(fx.ctx, 1, 2) + SkewPoly::monomial(fx.ctx, 2, 1) -
                         SkewPoly::constant(fx.ctx, x));
    const GGRReport rep = ggr_check(a1);
    CHECK(rep.is_ggr);
    CHECK(rep.is_lifting);

    CHECK(thrown_code([&] {
              cor18_family(fx.gr, fx.ctx->sigma, SkewPoly::zero(fx.ctx), fx.gr->from_int(2));
          }) == "DNotInvertible");
    CHECK(thrown_code([&] {
              cor18_family(fx.gr, fx.ctx->sigma, SkewPoly::zero(fx.ctx), fx.gr->from_int(3));
          }) == "DInS0");
    CHECK(thrown_code([&] {
              cor18_family(fx.gr, fx.ctx->sigma, SkewPoly::monomial(fx.ctx, 1, 2), x);
          }) == "InvalidDegree");
}

TEST_CASE("norm map", "[ggr]") {
    auto f4 = fixtures::F4();
    CtxPtr c4 = fixtures::twisted_ctx(f4);
    const AlgPtr a = PetitAlgebra::make(SkewPoly::monomial(c4, 1, 2) -
                                        SkewPoly::constant(c4, f4->generator()));
    CHECK(norm_map(*a, a->one()).is_one());

    // scalars evaluate to the field norm: M(a) = a sigma(a) ... sigma^{m-1}(a)
    auto f8 = fixtures::F8();
    CtxPtr c8 = fixtures::twisted_ctx(f8);
    const AlgPtr b = PetitAlgebra::make(SkewPoly::monomial(c8, 1, 3) -
                                        SkewPoly::constant(c8, f8->generator()));
    for (const auto& s : f8->enumerate()) {
        const RingElement n = s * c8->sigma(s) * c8->sigma(c8->sigma(s));
        CHECK(norm_map(*b, b->embed(s)) == n);
    }

    // M has degree m over S_0: M(a v) = a^m M(v), over GR(4,2) with S_0 = Z4
    GgrFixture fx;
    const auto s0 = fx.a->scalar_ring();
    CHECK(s0.size() == 4);
    for (const auto& s : s0)
        for (std::uint64_t i = 0; i < fx.a->size(); ++i) {
            const AlgElem v = fx.a->element_at(i);
            CHECK(norm_map(*fx.a, fx.a->scale(s, v)) == s * s * norm_map(*fx.a, v));
        }
}

TEST_CASE("matrix semi-multiplicativity", "[ggr]") {
    auto f4 = fixtures::F4();
    CtxPtr c4 = fixtures::twisted_ctx(f4);
    const AlgPtr a = PetitAlgebra::make(SkewPoly::monomial(c4, 1, 2) -
                                        SkewPoly::constant(c4, f4->generator()));
    const auto rep = semi_mult_check(a);
    CHECK(rep.holds);
    CHECK(rep.shape_covered);  // every quadratic is covered

    // hence M(a g) = M(a) M(g) for scalars a
    for (const auto& s : f4->enumerate())
        for (std::uint64_t gi = 0; gi < a->size(); ++gi) {
            const AlgElem g = a->element_at(gi);
            CHECK(norm_map(*a, a->mul(a->embed(s), g)) ==
                  norm_map(*a, a->embed(s)) * norm_map(*a, g));
        }

    // the t^m - d_0 shape is covered and asserted for m = 3 as well
    auto f8 = fixtures::F8();
    CtxPtr c8 = fixtures::twisted_ctx(f8);
    const AlgPtr cubic = PetitAlgebra::make(SkewPoly::monomial(c8, 1, 3) -
                                            SkewPoly::constant(c8, f8->generator()));
    const auto cubic_rep = semi_mult_check(cubic);
    CHECK(cubic_rep.holds);
    CHECK(cubic_rep.shape_covered);

    // a cubic that is not of the covered shape is reported, not asserted
    const AlgPtr b = PetitAlgebra::make(SkewPoly::monomial(c8, 1, 3) + SkewPoly::t(c8) -
                                        SkewPoly::constant(c8, f8->generator()));
    CHECK(!semi_mult_check(b).shape_covered);
}
