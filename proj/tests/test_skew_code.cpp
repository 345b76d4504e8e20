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

#include "helpers.hpp"
#include "petit/skew_code.hpp"

using namespace petit;
using testutil::thrown_code;

namespace {
struct CodeFixture {  // f = t^4 - 1, g = h = t^2 + 1 over F4
    RingPtr ring = fixtures::F4();
    CtxPtr ctx = fixtures::twisted_ctx(ring);
    SkewPoly f = SkewPoly::monomial(ctx, 1, 4) - SkewPoly::one(ctx);
    SkewPoly g = SkewPoly::monomial(ctx, 1, 2) + SkewPoly::one(ctx);
    AlgPtr a = PetitAlgebra::make(f);
    SkewCode code = build_code(a, g);
};
}  // namespace

TEST_CASE("right divisor enumeration", "[skew_code]") {
    CodeFixture fx;
    const auto divs = right_divisors(fx.f, 2);
    bool found = false;
    for (const auto& d : divs) found |= d == fx.g;
    CHECK(found);

    // irreducible f has no proper monic right divisors
    const SkewPoly irred = SkewPoly::monomial(fx.ctx, 1, 2) -
                           SkewPoly::constant(fx.ctx, fx.ring->generator());
    CHECK(right_divisors(irred, 1).empty());

    CHECK(thrown_code([&] { right_divisors(fx.f, 4); }) == "InvalidDegree");
    CHECK(thrown_code([&] { right_divisors(fx.f, 0); }) == "InvalidDegree");
}

TEST_CASE("code assembly", "[skew_code]") {
    CodeFixture fx;
    CHECK(fx.code.length() == 4);
    CHECK(fx.code.dimension() == 2);
    CHECK(fx.code.size() == 16);  // |S|^{m - deg g}

    // generator matrix [[1,0,1,0],[0,1,0,1]]
    for (unsigned j = 0; j < 4; ++j) {
        CHECK(fx.code.gen_matrix.at(0, j) == (j % 2 == 0 ? fx.ring->one() : fx.ring->zero()));
        CHECK(fx.code.gen_matrix.at(1, j) == (j % 2 == 1 ? fx.ring->one() : fx.ring->zero()));
    }
    // cofactors f = h' g = g h with h = h' = t^2 + 1 here
    CHECK(fx.code.h_prime == fx.g);
    REQUIRE(fx.code.h.has_value());
    CHECK(*fx.code.h == fx.g);
    CHECK((fx.code.gen_matrix * *fx.code.ctrl_matrix).is_zero());

    // g = 1 spans everything
    const SkewCode whole = build_code(fx.a, SkewPoly::one(fx.ctx));
    CHECK(whole.size() == fx.a->size());
    CHECK(whole.gen_matrix == MatrixOverS::identity(fx.ring, 4));
    CHECK(min_distance(whole) == 1);

    // g = f gives the zero code
    const SkewCode zero = build_code(fx.a, fx.f);
    CHECK(zero.size() == 1);
    CHECK(thrown_code([&] { min_distance(zero); }) == "EmptyCode");

    // t does not right-divide t^4 - 1 (nonzero constant term)
    CHECK(thrown_code([&] { build_code(fx.a, SkewPoly::t(fx.ctx)); }) ==
          "NotARightDivisor");
}

TEST_CASE("membership", "[skew_code]") {
    CodeFixture fx;
    // 0 and every generator row are codewords
    CHECK(is_codeword(fx.code, fx.a->zero().coords));
    for (unsigned i = 0; i < 2; ++i) CHECK(is_codeword(fx.code, fx.code.gen_matrix.row(i)));
    // c = (1,0,0,0): c o h = h != 0
    CHECK(!is_codeword(fx.code, fx.a->one().coords));

    // annihilator mode == row-space mode on all 256 vectors, 16 members
    std::size_t members = 0;
    for (std::uint64_t i = 0; i < fx.a->size(); ++i) {
        const auto word = fx.a->element_at(i).coords;
        const bool ann = is_codeword(fx.code, word, MembershipMode::annihilator);
        CHECK(ann == is_codeword(fx.code, word, MembershipMode::rowspace));
        members += ann;
    }
    CHECK(members == 16);
}

TEST_CASE("one-sided factorizations lack the annihilator test", "[skew_code]") {
    auto ring = fixtures::F4();
    CtxPtr ctx = fixtures::twisted_ctx(ring);
    const RingElement w = ring->generator();
    // f = (t+1)(t+w) has right divisor g = t+w but no h with f = g h
    const SkewPoly g = SkewPoly::t(ctx) + SkewPoly::constant(ctx, w);
    const SkewPoly f = (SkewPoly::t(ctx) + SkewPoly::one(ctx)) * g;
    const AlgPtr a = PetitAlgebra::make(f);
    const SkewCode code = build_code(a, g);
    CHECK(!code.h.has_value());
    CHECK(!code.ctrl_matrix.has_value());
    CHECK(thrown_code([&] {
              is_codeword(code, a->zero().coords, MembershipMode::annihilator);
          }) == "MissingCofactor");
    // automatic mode falls back to the row space
    CHECK(is_codeword(code, a->zero().coords));
    for (auto idx : code.codewords)
        CHECK(is_codeword(code, a->element_at(idx).coords));
    // when only f = h' g holds, u o g o h' need not vanish, but u o g stays a codeword
    for (std::uint64_t u = 0; u < code.size(); ++u)
        CHECK(is_codeword(code, a->element_at(code.codewords[u]).coords,
                          MembershipMode::rowspace));
    // one-sided implication: with f = h' g, every c with c o h' = 0 is a codeword
    const AlgElem hp = a->from_poly(code.h_prime);
    for (std::uint64_t i = 0; i < a->size(); ++i) {
        const AlgElem c = a->element_at(i);
        if (a->mul(c, hp).is_zero())
            CHECK(is_codeword(code, c.coords, MembershipMode::rowspace));
    }
}

TEST_CASE("constacyclic closure", "[skew_code]") {
    CodeFixture fx;
    CHECK(is_constacyclic_shape(fx.f, fx.ring->one()));
    CHECK(constacyclic_check(fx.code, fx.ring->one()));

    // the zero code is constacyclic for any d
    const SkewCode zero = build_code(fx.a, fx.f);
    CHECK(constacyclic_check(zero, fx.ring->generator()));

    // a hand-built non-ideal subspace is not shift-closed: span{(1,0,0,0)}
    std::vector<std::vector<RingElement>> span;
    for (const auto& s : fx.ring->enumerate())
        span.push_back({s, fx.ring->zero(), fx.ring->zero(), fx.ring->zero()});
    const auto shifted = sigma_constacyclic_shift(fx.ctx, span[1], fx.ring->one());
    bool inside = false;
    for (const auto& v : span) inside |= v == shifted;
    CHECK(!inside);

    // delta != 0 rejects the notion
    auto gr = fixtures::GR42();
    auto sigma = RingMorphism::frobenius_lift(gr, 1);
    auto delta = RingMorphism::inner_derivation(gr->generator(), sigma);
    CtxPtr dctx = SkewPolyContext::make(gr, sigma, delta);
    const AlgPtr b = PetitAlgebra::make(SkewPoly::monomial(dctx, 1, 2) -
                                        SkewPoly::constant(dctx, gr->generator()));
    const SkewCode bc = build_code(b, SkewPoly::one(dctx));
    CHECK(thrown_code([&] { constacyclic_check(bc, gr->one()); }) == "DeltaNotZero");
}

TEST_CASE("ideal closures", "[skew_code]") {
    CodeFixture fx;
    CHECK(left_ideal_check(fx.code));
    CHECK(lt_closure_check(fx.code));

    // span{(a,0,0,0)} is not closed under L_t: t o (1,0,0,0) = t
    const AlgElem one = fx.a->one();
    const AlgElem image = fx.a->mul(fx.a->t_elem(), one);
    CHECK(image == fx.a->t_elem());
    CHECK(image.coords[0].is_zero());  // leaves the degree-0 line
}

TEST_CASE("distance and encoding", "[skew_code]") {
    CodeFixture fx;
    CHECK(min_distance(fx.code) == 2);
    const auto we = weight_enumerator(fx.code);
    std::uint64_t total = 0;
    for (auto c : we) total += c;
    CHECK(total == fx.code.size());
    CHECK(we[0] == 1);
    CHECK(we[1] == 0);

    // codewords of (a + bt)(1 + t^2) are (a, b, a, b)
    for (const auto& a0 : fx.ring->enumerate())
        for (const auto& a1 : fx.ring->enumerate()) {
            const auto word = encode(fx.code, {a0, a1});
            CHECK(word == std::vector<RingElement>{a0, a1, a0, a1});
            // encoding equals the row-space combination u G
            CHECK(word == row_times({a0, a1}, fx.code.gen_matrix));
            CHECK(is_codeword(fx.code, word));
        }
    CHECK(thrown_code([&] { encode(fx.code, {fx.ring->one()}); }) == "ShapeMismatch");
}
