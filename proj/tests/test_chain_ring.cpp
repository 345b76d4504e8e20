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
#include "petit/chain_ring.hpp"
#include "petit/fixtures.hpp"
#include "petit/morphism.hpp"

using namespace petit;
using testutil::thrown_code;

TEST_CASE("ring construction and invariants", "[chain_ring]") {
    auto f4 = fixtures::F4();
    CHECK(f4->cardinality() == 4);
    CHECK(f4->is_field());
    CHECK(f4->residue_field().get() == f4.get());

    auto gr = fixtures::GR42();
    CHECK(gr->cardinality() == 16);
    CHECK(!gr->is_field());
    CHECK(gr->residue_field()->cardinality() == 4);
    CHECK(gr->unit_count() == 12);  // p^{en} - p^{(e-1)n}

    CHECK(thrown_code([] { ChainRing::make(4, 1); }) == "NotPrime");
    CHECK(thrown_code([] { ChainRing::make(2, 2, {1, 0, 1}); }) == "NotBasicIrreducible");
    CHECK(thrown_code([] { ChainRing::make(2, 2, {1, 1, 2}); }) == "NonMonicModulus");
}

TEST_CASE("element arithmetic", "[chain_ring]") {
    auto f4 = fixtures::F4();
    const RingElement w = f4->generator();
    CHECK(w * w.pow(2) == f4->one());  // w * w^2 = w^3 = 1
    CHECK(w.pow(2) == w + f4->one());

    auto gr = fixtures::GR42();
    CHECK(!gr->from_int(2).is_unit());
    CHECK(gr->generator().is_unit());
    CHECK(gr->from_int(2).is_zero_divisor());

    // unit xor zero divisor xor zero partitions the ring
    std::size_t units = 0, zdivs = 0, zeros = 0;
    for (const auto& a : gr->enumerate()) {
        units += a.is_unit();
        zdivs += a.is_zero_divisor();
        zeros += a.is_zero();
        CHECK(a.is_unit() + a.is_zero_divisor() + a.is_zero() == 1);
    }
    CHECK(units == gr->unit_count());
    CHECK(zeros == 1);
    CHECK(zdivs == gr->cardinality() - gr->unit_count() - 1);
}

TEST_CASE("inverses", "[chain_ring]") {
    auto gr = fixtures::GR42();
    for (const auto& a : gr->enumerate()) {
        if (a.is_unit())
            CHECK((a * a.inverse()).is_one());
        else
            CHECK(thrown_code([&] { a.inverse(); }) == "NotAUnit");
    }
}

TEST_CASE("projection and lift", "[chain_ring]") {
    auto gr = fixtures::GR42();
    auto k = gr->residue_field();

    // project(3x+3) = w+1 = w^2 in F4
    CHECK(gr->project(gr->element({3, 3})) == k->generator().pow(2));

    // pi is a surjective ring homomorphism with pi . lift = id
    for (const auto& abar : k->enumerate()) {
        const RingElement lifted = gr->lift(abar);
        CHECK(gr->project(lifted) == abar);
        for (auto c : lifted.coords()) CHECK(c < 2);
        for (const auto& bbar : k->enumerate()) {
            CHECK(gr->project(gr->lift(abar) + gr->lift(bbar)) == abar + bbar);
            CHECK(gr->project(gr->lift(abar) * gr->lift(bbar)) == abar * bbar);
        }
    }

    // kernel of pi = (p)
    std::size_t kernel = 0;
    for (const auto& a : gr->enumerate()) kernel += gr->project(a).is_zero();
    CHECK(kernel == 4);

    CHECK(thrown_code([&] { gr->lift(gr->one()); }) == "RingMismatch");
}

TEST_CASE("enumeration is lexicographic on coordinates", "[chain_ring]") {
    auto gr = fixtures::GR42();
    const auto all = gr->enumerate();
    REQUIRE(all.size() == 16);
    CHECK(all.front().is_zero());
    for (std::uint64_t i = 0; i < all.size(); ++i)
        CHECK(gr->index_of(all[i]) == i);
    // coords[0] is the most significant digit
    CHECK(all[1] == gr->generator());          // [0,1]
    CHECK(all[4] == gr->one());                // [1,0]
    CHECK(thrown_code([&] { gr->enumerate(8); }) == "TooLarge");
}

TEST_CASE("frobenius lifts", "[morphism]") {
    auto f4 = fixtures::F4();
    auto sig = RingMorphism::frobenius_lift(f4, 1);
    for (const auto& a : f4->enumerate()) CHECK(sig(a) == a * a);
    CHECK(sig.order() == 2);
    CHECK(RingMorphism::frobenius_lift(f4, 0).is_identity());

    auto gr = fixtures::GR42();
    auto SIG = RingMorphism::frobenius_lift(gr, 1);
    CHECK(SIG(gr->generator()) == gr->element({3, 3}));
    CHECK(SIG.compose(SIG).is_identity());
    CHECK(SIG.inverse().same_as(SIG));

    // pi . sigma = sigmabar . pi
    auto sigbar = SIG.induced_residue();
    for (const auto& a : gr->enumerate())
        CHECK(gr->project(SIG(a)) == sigbar(gr->project(a)));

    // Fix(sigma) = Z4
    const auto fixed = SIG.fixed_set();
    REQUIRE(fixed.size() == 4);
    for (const auto& a : fixed) CHECK(a.coords()[1] == 0);

    CHECK(thrown_code([&] { RingMorphism::frobenius_lift(gr, 2); }) ==
          "InvalidFrobeniusPower");
}

TEST_CASE("inner derivations", "[morphism]") {
    auto f4 = fixtures::F4();
    auto sig = RingMorphism::frobenius_lift(f4, 1);
    const RingElement w = f4->generator();
    auto delta = RingMorphism::inner_derivation(w, sig);

    CHECK(delta(f4->one()).is_zero());  // delta(1) = 0 forced
    CHECK(delta(w) == w);               // w(w - w^2) = w in char 2

    // Leibniz law on all pairs
    for (const auto& a : f4->enumerate())
        for (const auto& b : f4->enumerate())
            CHECK(delta(a * b) == sig(a) * delta(b) + delta(a) * b);

    // beta = 0 gives the zero derivation, constant on everything
    auto zero = RingMorphism::inner_derivation(f4->zero(), sig);
    CHECK(zero.is_zero_map());
    CHECK(zero.constant_set().size() == f4->cardinality());

    // Fix(frobenius) on F4 = {0, 1}
    CHECK(sig.fixed_set().size() == 2);
}

TEST_CASE("nontrivial derivation over GR(4,2) stays in the maximal ideal", "[morphism]") {
    auto gr = fixtures::GR42();
    auto sig = RingMorphism::frobenius_lift(gr, 1);
    auto delta = RingMorphism::inner_derivation(gr->generator(), sig);
    CHECK(!delta.is_zero_map());
    for (const auto& a : gr->enumerate()) {
        if (!a.is_unit()) {  // a in (p)
            const RingElement img = delta(a);
            CHECK((img.is_zero() || !img.is_unit()));
        }
    }
    // pi . delta = deltabar . pi
    auto deltabar = delta.induced_residue();
    for (const auto& a : gr->enumerate())
        CHECK(gr->project(delta(a)) == deltabar(gr->project(a)));
}

TEST_CASE("morphism table validation rejects non-homomorphisms", "[morphism]") {
    auto f8 = fixtures::F8();
    // a permutation that is not additive: swap x and x+1, fix the rest
    std::vector<std::uint32_t> t(f8->cardinality());
    for (std::uint32_t i = 0; i < t.size(); ++i) t[i] = i;
    const auto xi = static_cast<std::uint32_t>(f8->index_of(f8->generator()));
    const auto xi1 = static_cast<std::uint32_t>(f8->index_of(f8->generator() + f8->one()));
    std::swap(t[xi], t[xi1]);
    CHECK(thrown_code([&] { RingMorphism::make_automorphism(f8, t); }) == "ValidationFailed");
}

TEST_CASE("ring mismatch is rejected", "[chain_ring]") {
    auto f4 = fixtures::F4();
    auto f8 = fixtures::F8();
    CHECK(thrown_code([&] { (void)(f4->one() + f8->one()); }) == "RingMismatch");
}
