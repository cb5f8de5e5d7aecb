/*
   Copyright 2026 The scatplane authors

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

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "scatplane/field.hpp"

using namespace scatplane;

TEST_CASE("tower construction and shipped moduli") {
    FieldTower tw(FieldSpec{2, 2, 3, {}});
    CHECK(tw.order() == 64);
    CHECK(tw.q() == 4);
    CHECK(tw.subfield().size() == 4);
    CHECK(tw.spec().modulus == std::vector<std::uint32_t>{1, 1, 0, 1, 1, 0, 1});

    FieldTower t54(FieldSpec{5, 1, 4, {}});
    CHECK(t54.order() == 625);
    CHECK(t54.q() == 5);
}

TEST_CASE("construction rejects bad specs") {
    CHECK_THROWS_AS(FieldTower(FieldSpec{4, 1, 3, {}}), std::invalid_argument);  // p not prime
    CHECK_THROWS_AS(FieldTower(FieldSpec{2, 2, 1, {}}), std::invalid_argument);  // t < 2
    // x^6 + 1 = (x^3 + 1)^2 over F_2
    CHECK_THROWS_AS(FieldTower(FieldSpec{2, 2, 3, {1, 0, 0, 0, 0, 0, 1}}), std::invalid_argument);
    // degree mismatch
    CHECK_THROWS_AS(FieldTower(FieldSpec{2, 2, 3, {1, 1, 1}}), std::invalid_argument);
    // not monic
    CHECK_THROWS_AS(FieldTower(FieldSpec{3, 1, 2, {1, 1, 2}}), std::invalid_argument);
    // table guard
    CHECK_THROWS_AS(FieldTower(FieldSpec{2, 1, 23, {}}), GuardError);
}

TEST_CASE("arithmetic laws") {
    FieldTower tw(FieldSpec{5, 1, 3, {}});
    const Elt g = tw.generator();
    CHECK(tw.mul(tw.inv(g), g) == 1);
    for (Elt x = 0; x < tw.order(); ++x) {
        CHECK(tw.mul(x, 1) == x);
        CHECK(tw.add(x, tw.neg(x)) == 0);
        CHECK(tw.add(x, 0) == x);
    }
    CHECK_THROWS_AS(tw.inv(0), std::domain_error);

    std::mt19937 rng(7);
    std::uniform_int_distribution<Elt> pick(0, tw.order() - 1);
    for (int i = 0; i < 2000; ++i) {
        Elt a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(tw.add(a, b) == tw.add(b, a));
        CHECK(tw.mul(a, b) == tw.mul(b, a));
        CHECK(tw.mul(a, tw.add(b, c)) == tw.add(tw.mul(a, b), tw.mul(a, c)));
        CHECK(tw.mul(tw.mul(a, b), c) == tw.mul(a, tw.mul(b, c)));
        CHECK(tw.add(tw.add(a, b), c) == tw.add(a, tw.add(b, c)));
    }
}

TEST_CASE("q-Frobenius") {
    FieldTower tw(FieldSpec{2, 2, 3, {}});
    const Elt g = tw.generator();
    CHECK(tw.q_frobenius(g, 0) == g);
    CHECK(tw.q_frobenius(g, tw.t()) == g);
    CHECK(tw.q_frobenius(g, 1) == tw.pow(g, 4));
    for (Elt x = 0; x < tw.order(); ++x) {
        Elt y = x;
        for (std::uint32_t i = 0; i < tw.t(); ++i) y = tw.q_frobenius(y, 1);
        CHECK(y == x);  // t-fold application is the identity
        for (Elt z = 0; z < tw.order(); ++z)
            CHECK(tw.q_frobenius(tw.add(x, z), 1) ==
                  tw.add(tw.q_frobenius(x, 1), tw.q_frobenius(z, 1)));
    }
    std::size_t fixed = 0;
    for (Elt x = 0; x < tw.order(); ++x)
        if (tw.q_frobenius(x, 1) == x) ++fixed;
    CHECK(fixed == tw.q());
}

TEST_CASE("relative norm") {
    FieldTower tw(FieldSpec{2, 2, 3, {}});
    const Elt g = tw.generator();
    CHECK(tw.rel_norm(1) == 1);
    CHECK(tw.rel_norm(0) == 0);
    // exponent (64-1)/(4-1) = 21; g^21 must generate F_4^*
    CHECK(tw.rel_norm(g) == tw.pow(g, 21));
    CHECK(oracles::multiplicative_order(tw, tw.rel_norm(g)) == 3);

    for (Elt x = 1; x < tw.order(); ++x) {
        CHECK(tw.in_subfield(tw.rel_norm(x)));
        for (Elt y = 1; y < tw.order(); ++y)
            CHECK(tw.rel_norm(tw.mul(x, y)) == tw.mul(tw.rel_norm(x), tw.rel_norm(y)));
    }

    // surjective onto F_q with uniform nonzero fibers of size (q^t-1)/(q-1)
    std::vector<std::size_t> fiber(tw.order(), 0);
    for (Elt x = 1; x < tw.order(); ++x) ++fiber[tw.rel_norm(x)];
    for (Elt v : tw.subfield()) {
        if (v == 0) continue;
        CHECK(fiber[v] == (tw.order() - 1) / (tw.q() - 1));
    }
}

TEST_CASE("subfield is a field of size q") {
    FieldTower tw(FieldSpec{5, 1, 4, {}});
    const auto& fq = tw.subfield();
    CHECK(fq.size() == 5);
    for (Elt a : fq)
        for (Elt b : fq) {
            CHECK(tw.in_subfield(tw.add(a, b)));
            CHECK(tw.in_subfield(tw.mul(a, b)));
        }
}

TEST_CASE("element codec") {
    FieldTower tw(FieldSpec{2, 2, 3, {}});
    CHECK(tw.parse_element("g^0") == 1);
    CHECK(tw.parse_element("0") == 0);
    CHECK(tw.parse_element("1") == 1);
    CHECK(tw.parse_element("g^1") == tw.generator());
    CHECK(tw.parse_element("7") == 7);
    for (Elt x = 0; x < tw.order(); ++x) CHECK(tw.parse_element(tw.format_element(x)) == x);
    CHECK_THROWS_AS(tw.parse_element("g^-1"), std::invalid_argument);
    CHECK_THROWS_AS(tw.parse_element("64"), std::invalid_argument);
    CHECK_THROWS_AS(tw.parse_element("x"), std::invalid_argument);
    CHECK_THROWS_AS(tw.parse_element(""), std::invalid_argument);
}

TEST_CASE("user-supplied modulus override") {
    // x^2 + x + 2 is irreducible over F_3 but is not the Conway polynomial
    FieldTower tw(FieldSpec{3, 1, 2, {2, 1, 1}});
    CHECK(tw.order() == 9);
    std::size_t fixed = 0;
    for (Elt x = 0; x < tw.order(); ++x)
        if (tw.pow(x, 3) == x) ++fixed;
    CHECK(fixed == 3);
}
