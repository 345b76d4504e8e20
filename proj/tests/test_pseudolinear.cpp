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

#include <catch_amalgamated.hpp>
#include <random>

#include "helpers.hpp"
#include "petit/ggr.hpp"
#include "petit/pseudolinear.hpp"
#include "petit/skew_code.hpp"

using namespace petit;
using testutil::thrown_code;

namespace {
MatrixOverS random_matrix(const RingPtr& ring, std::size_t n, std::mt19937_64& rng) {
    MatrixOverS m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = ring->element_at(rng() % ring->cardinality());
    return m;
}
}  // namespace

TEST_CASE("companion matrices", "[pseudolinear]") {
    auto f4 = fixtures::F4();
    CtxPtr ctx = fixtures::twisted_ctx(f4);
    const RingElement w = f4->generator();

    const SkewPoly f = SkewPoly::monomial(ctx, 1, 2) - SkewPoly::constant(ctx, w);
    const MatrixOverS c = companion(f);
    CHECK(c.at(0, 0).is_zero());
    CHECK(c.at(0, 1).is_one());
    CHECK(c.at(1, 0) == w);  // -(-w) = w in char 2
    CHECK(c.at(1, 1).is_zero());

    const SkewPoly f41 = SkewPoly::monomial(ctx, 1, 4) - SkewPoly::one(ctx);
    const MatrixOverS c4 = companion(f41);
    CHECK(c4.at(3, 0).is_one());
    for (unsigned j = 1; j < 4; ++j) CHECK(c4.at(3, j).is_zero());
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 4; ++j)
            CHECK(c4.at(i, j) == (j == i + 1 ? f4->one() : f4->zero()));

    // over GR(4,2): f = t^2 - x stores d_0 = -x, so the last row starts at x
    auto gr = fixtures::GR42();
    CtxPtr ctx2 = fixtures::twisted_ctx(gr);
    const SkewPoly f2 = SkewPoly::monomial(ctx2, 1, 2) - SkewPoly::constant(ctx2, gr->generator());
    const MatrixOverS c2 = companion(f2);
    CHECK(c2.at(1, 0) == gr->generator());
    CHECK(c2.at(1, 1).is_zero());

    CHECK(thrown_code([&] { companion(f.scaled_left(w)); }) == "NotMonic");
}

TEST_CASE("T_f equals L_t and is pseudolinear", "[pseudolinear]") {
    auto gr = fixtures::GR42();
    auto sigma = RingMorphism::frobenius_lift(gr, 1);
    auto delta = RingMorphism::inner_derivation(gr->generator(), sigma);
    CtxPtr ctx = SkewPolyContext::make(gr, sigma, delta);
    const AlgPtr a = PetitAlgebra::make(SkewPoly::monomial(ctx, 1, 2) -
                                        SkewPoly::constant(ctx, gr->generator()));
    const PseudoLinearMap tf = PseudoLinearMap::of(a->f());

    // T_f(0) = 0 and T_f = L_t on every element, delta != 0 included
    CHECK(AlgElem{tf.apply(a->zero().coords)}.is_zero());
    for (std::uint64_t i = 0; i < a->size(); ++i) {
        const AlgElem v = a->element_at(i);
        CHECK(a->mul(a->t_elem(), v) == AlgElem{tf.apply(v.coords)});
    }

    // T_f(a h) = sigma(a) T_f(h) + delta(a) h, exhaustively
    for (const auto& s : gr->enumerate())
        for (std::uint64_t i = 0; i < a->size(); ++i) {
            const AlgElem h = a->element_at(i);
            const AlgElem lhs{tf.apply(a->scale(s, h).coords)};
            AlgElem rhs = a->scale(sigma(s), AlgElem{tf.apply(h.coords)});
            rhs = a->add(rhs, a->scale(delta(s), h));
            CHECK(lhs == rhs);
        }

    CHECK(thrown_code([&] { tf.apply({gr->one()}); }) == "ShapeMismatch");
}

TEST_CASE("multiplication matrices", "[pseudolinear]") {
    auto f4 = fixtures::F4();
    CtxPtr ctx = fixtures::twisted_ctx(f4);
    const RingElement w = f4->generator();
    const AlgPtr a = PetitAlgebra::make(SkewPoly::monomial(ctx, 1, 2) -
                                        SkewPoly::constant(ctx, w));

    CHECK(right_mul_matrix(*a, a->one()) == MatrixOverS::identity(f4, 2));
    CHECK(right_mul_matrix(*a, a->t_elem()) == companion(a->f()));

    // vec(x o h) = vec(x) gamma(h); additive and injective
    std::mt19937_64 rng(5);
    std::vector<MatrixOverS> images;
    for (std::uint64_t hi = 0; hi < a->size(); ++hi) {
        const AlgElem h = a->element_at(hi);
        const MatrixOverS gh = right_mul_matrix(*a, h);
        for (std::uint64_t xi = 0; xi < a->size(); ++xi) {
            const AlgElem x = a->element_at(xi);
            CHECK(a->mul(x, h).coords == row_times(x.coords, gh));
        }
        for (const auto& prev : images) CHECK(!(prev == gh));
        images.push_back(gh);
    }
    for (int i = 0; i < 100; ++i) {
        const AlgElem g = a->element_at(rng() % a->size());
        const AlgElem h = a->element_at(rng() % a->size());
        CHECK(right_mul_matrix(*a, a->add(g, h)) ==
              right_mul_matrix(*a, g) + right_mul_matrix(*a, h));
    }

    // lambda rows are vec(h o t^i)
    const AlgElem h = a->from_poly(SkewPoly::monomial(ctx, w, 1));
    const MatrixOverS lh = left_mul_matrix(*a, h);
    for (unsigned i = 0; i < 2; ++i)
        CHECK(lh.row(i) == a->mul(h, a->basis(i)).coords);
}

TEST_CASE("gamma is the right regular representation exactly when associative",
          "[pseudolinear]") {
    auto f4 = fixtures::F4();
    CtxPtr ctx = fixtures::twisted_ctx(f4);

    // associative fixture: gamma(g o h) = gamma(g) gamma(h) on every pair
    const AlgPtr assoc = PetitAlgebra::make(SkewPoly::monomial(ctx, 1, 4) -
                                            SkewPoly::one(ctx));
    REQUIRE(assoc->is_associative());
    std::mt19937_64 rng(23);
    for (int s = 0; s < 400; ++s) {
        const AlgElem g = assoc->element_at(rng() % assoc->size());
        const AlgElem h = assoc->element_at(rng() % assoc->size());
        CHECK(right_mul_matrix(*assoc, assoc->mul(g, h)) ==
              right_mul_matrix(*assoc, g) * right_mul_matrix(*assoc, h));
    }

    // nonassociative fixture: a concrete counterexample pair
    const AlgPtr na = PetitAlgebra::make(SkewPoly::monomial(ctx, 1, 2) -
                                         SkewPoly::constant(ctx, f4->generator()));
    const AlgElem t = na->t_elem();
    CHECK(!(right_mul_matrix(*na, na->mul(t, t)) ==
            right_mul_matrix(*na, t) * right_mul_matrix(*na, t)));
}

TEST_CASE("gamma rows follow the twisted circulant shift for f = t^m - d",
          "[pseudolinear]") {
    auto f8 = fixtures::F8();
    CtxPtr ctx = fixtures::twisted_ctx(f8);
    const RingElement d = f8->generator();
    const AlgPtr a = PetitAlgebra::make(SkewPoly::monomial(ctx, 1, 3) -
                                        SkewPoly::constant(ctx, d));
    for (std::uint64_t hi = 0; hi < a->size(); ++hi) {
        const MatrixOverS g = right_mul_matrix(*a, a->element_at(hi));
        for (unsigned i = 0; i + 1 < 3; ++i)
            CHECK(g.row(i + 1) == sigma_constacyclic_shift(ctx, g.row(i), d));
    }
}

TEST_CASE("determinants", "[pseudolinear]") {
    auto gr = fixtures::GR42();
    CHECK(det(MatrixOverS::identity(gr, 3)).is_one());

    auto f4 = fixtures::F4();
    CtxPtr ctx = fixtures::twisted_ctx(f4);
    const RingElement w = f4->generator();
    const AlgPtr a = PetitAlgebra::make(SkewPoly::monomial(ctx, 1, 2) -
                                        SkewPoly::constant(ctx, w));
    CHECK(det(right_mul_matrix(*a, a->t_elem())) == w);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const MatrixOverS x = random_matrix(gr, 3, rng);
        const MatrixOverS y = random_matrix(gr, 3, rng);
        CHECK(det(x * y) == det(x) * det(y));
    }
    CHECK(thrown_code([&] { det(MatrixOverS(gr, 2, 3)); }) == "NotSquare");

    // singular gamma flags right zero divisors
    const AlgPtr b = PetitAlgebra::make(SkewPoly::monomial(ctx, 1, 4) - SkewPoly::one(ctx));
    const auto& mt = b->mult_table();
    const std::size_t sz = static_cast<std::size_t>(b->size());
    for (std::uint64_t hi = 0; hi < b->size(); ++hi) {
        const AlgElem h = b->element_at(hi);
        if (det(right_mul_matrix(*b, h)).is_zero() && hi != 0) {
            bool annihilates = false;  // some nonzero p with p o h = 0
            for (std::size_t p = 1; p < sz && !annihilates; ++p)
                annihilates = mt[p * sz + hi] == 0;
            CHECK(annihilates);
        }
    }
}

TEST_CASE("polynomials in T_f give left multiplication", "[pseudolinear]") {
    auto f4 = fixtures::F4();
    CtxPtr ctx = fixtures::twisted_ctx(f4);
    const RingElement w = f4->generator();
    const AlgPtr a = PetitAlgebra::make(SkewPoly::monomial(ctx, 1, 2) -
                                        SkewPoly::constant(ctx, w));

    for (std::uint64_t i = 0; i < a->size(); ++i)
        CHECK(apply_poly_of_tf(*a, a->one(), a->element_at(i)) == a->element_at(i));
    for (std::uint64_t i = 0; i < a->size(); ++i) {
        const AlgElem x = a->element_at(i);
        CHECK(apply_poly_of_tf(*a, a->t_elem(), x) ==
              AlgElem{PseudoLinearMap::of(a->f()).apply(x.coords)});
    }
    // L_h(x) = w x + T_f(x) for h = w + t, all 16 x
    const AlgElem h = a->add(a->embed(w), a->t_elem());
    CHECK(check_lh_identity(*a, h));
    for (std::uint64_t i = 0; i < a->size(); ++i) {
        const AlgElem x = a->element_at(i);
        const AlgElem expect =
            a->add(a->scale(w, x), AlgElem{PseudoLinearMap::of(a->f()).apply(x.coords)});
        CHECK(a->mul(h, x) == expect);
    }
    // L_t^k = L_{t^k} for the basis powers k < m, on a nonassociative cubic
    auto f8 = fixtures::F8();
    CtxPtr c8 = fixtures::twisted_ctx(f8);
    const AlgPtr b = PetitAlgebra::make(SkewPoly::monomial(c8, 1, 3) -
                                        SkewPoly::constant(c8, f8->generator()));
    for (std::uint64_t i = 0; i < b->size(); ++i) {
        const AlgElem x = b->element_at(i);
        AlgElem chain = x;
        for (unsigned k = 0; k < 3; ++k) {
            CHECK(chain == b->mul(b->basis(k), x));
            chain = b->mul(b->t_elem(), chain);
        }
    }
}

TEST_CASE("invariant submodules", "[pseudolinear]") {
    auto f4 = fixtures::F4();
    CtxPtr ctx = fixtures::twisted_ctx(f4);
    const RingElement w = f4->generator();

    // semifield: only {0} and S^2
    const AlgPtr a = PetitAlgebra::make(SkewPoly::monomial(ctx, 1, 2) -
                                        SkewPoly::constant(ctx, w));
    const auto mods = invariant_submodules(*a);
    REQUIRE(mods.size() == 2);
    CHECK(mods[0] == std::vector<std::uint32_t>{0});
    CHECK(mods[1].size() == a->size());
    CHECK(is_irreducible_plt(*a));

    // the code of a right divisor is an invariant submodule
    const AlgPtr b = PetitAlgebra::make(SkewPoly::monomial(ctx, 1, 4) - SkewPoly::one(ctx));
    const SkewCode code =
        build_code(b, SkewPoly::monomial(ctx, 1, 2) + SkewPoly::one(ctx));
    const auto bmods = invariant_submodules(*b);
    bool found = false;
    for (const auto& m : bmods) found |= m == code.codewords;
    CHECK(found);
    CHECK(!is_irreducible_plt(*b));

    // no zero divisors => irreducible, across all monic quadratics
    for (std::uint64_t bi = 0; bi < 4; ++bi)
        for (std::uint64_t ci = 0; ci < 4; ++ci) {
            const AlgPtr q = PetitAlgebra::make(
                SkewPoly::monomial(ctx, 1, 2) +
                SkewPoly::monomial(ctx, f4->element_at(bi), 1) +
                SkewPoly::constant(ctx, f4->element_at(ci)));
            if (q->is_semifield()) CHECK(is_irreducible_plt(*q));
        }
}

TEST_CASE("surjectivity of L_t", "[pseudolinear]") {
    auto f4 = fixtures::F4();
    CtxPtr ctx = fixtures::twisted_ctx(f4);
    const AlgPtr a = PetitAlgebra::make(SkewPoly::monomial(ctx, 1, 2) -
                                        SkewPoly::constant(ctx, f4->generator()));
    const auto rep = surjectivity_report(*a);
    CHECK(rep.sigma_surjective);
    CHECK(rep.lt_surjective);  // sigma bijective => L_t surjective

    // explicit preimage recipe, per instance
    for (std::uint64_t i = 0; i < a->size(); ++i) {
        const AlgElem g = a->element_at(i);
        const auto u = lt_preimage(*a, g.coords);
        CHECK(a->mul(a->t_elem(), AlgElem{u}) == g);
    }

    // over GR(4,2) with nonzero delta the recipe is out of scope
    auto gr = fixtures::GR42();
    auto sigma = RingMorphism::frobenius_lift(gr, 1);
    auto delta = RingMorphism::inner_derivation(gr->generator(), sigma);
    CtxPtr dctx = SkewPolyContext::make(gr, sigma, delta);
    const AlgPtr b = PetitAlgebra::make(SkewPoly::monomial(dctx, 1, 2) -
                                        SkewPoly::constant(dctx, gr->generator()));
    CHECK(thrown_code([&] { lt_preimage(*b, b->one().coords); }) == "DeltaNotZero");
}
