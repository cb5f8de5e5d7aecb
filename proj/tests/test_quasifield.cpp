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

#include "scatplane/lp.hpp"
#include "scatplane/quasifield.hpp"
#include "scatplane/subspace.hpp"

using namespace scatplane;

namespace {

// scattered LP polynomial at (4,3) with 0,1 already outside the linear set,
// normalizing first if needed
LinearizedPoly normalized_lp(const FieldTower& tw, Elt b) {
    auto f = lp_poly(tw, LPParams{b, 1});
    const auto ls = linear_set(f);
    if (!ls.contains(0) && !ls.contains(1)) return f;
    return normalize_poly(f).first;
}

}  // namespace

TEST_CASE("construction preconditions") {
    FieldTower binary(FieldSpec{2, 1, 5, {}});
    CHECK_THROWS_AS(Quasifield::build(LinearizedPoly::monomial(binary, 1, 1)),
                    std::domain_error);  // q = 2

    FieldTower tw(FieldSpec{2, 2, 3, {}});
    CHECK_THROWS_AS(Quasifield::build(LinearizedPoly::identity(tw)),
                    std::domain_error);  // not scattered
    // x^q is scattered but 1 lies in its linear set
    CHECK_THROWS_AS(Quasifield::build(LinearizedPoly::monomial(tw, 1, 1)), std::domain_error);
}

TEST_CASE("product rules at (4,3)") {
    FieldTower tw(FieldSpec{2, 2, 3, {}});
    const auto f = normalized_lp(tw, tw.generator());
    const Quasifield qf = Quasifield::build(f);
    const auto& slopes = qf.slopes();

    for (Elt m = 0; m < tw.order(); ++m) {
        CHECK(qf.circ(1, m) == m);  // right identity
        if (!slopes.contains(m))
            for (Elt x = 0; x < tw.order(); ++x) CHECK(qf.circ(x, m) == tw.mul(x, m));
        for (Elt alpha : tw.subfield()) CHECK(qf.circ(alpha, m) == tw.mul(alpha, m));
    }
}

TEST_CASE("circ is independent of the fiber representative") {
    FieldTower tw(FieldSpec{2, 2, 3, {}});
    const auto f = normalized_lp(tw, tw.generator());
    const Quasifield qf = Quasifield::build(f);
    const auto fvals = f.value_table();
    for (Elt m : qf.slopes().slopes) {
        for (Elt h = 1; h < tw.order(); ++h) {
            if (tw.div(fvals[h], h) != m) continue;
            for (Elt x = 0; x < tw.order(); ++x)
                CHECK(qf.circ(x, m) == tw.mul(tw.inv(h), fvals[tw.mul(h, x)]));
        }
    }
}

TEST_CASE("every rho_m is an F_q-linear bijection") {
    FieldTower tw(FieldSpec{2, 2, 3, {}});
    const Quasifield qf = Quasifield::build(normalized_lp(tw, tw.generator()));
    for (Elt m = 1; m < tw.order(); ++m) {
        const auto row = qf.row(m);
        std::vector<bool> seen(tw.order(), false);
        for (Elt x = 0; x < tw.order(); ++x) {
            CHECK_FALSE(seen[row[x]]);
            seen[row[x]] = true;
        }
        for (Elt alpha : tw.subfield())
            for (Elt x = 0; x < tw.order(); ++x)
                CHECK(row[tw.mul(alpha, x)] == tw.mul(alpha, row[x]));
        for (Elt x = 0; x < tw.order(); ++x)
            for (Elt y = x; y < tw.order(); y += 5)
                CHECK(row[tw.add(x, y)] == tw.add(row[x], row[y]));
    }
}

TEST_CASE("axioms pass and the kernel is F_q") {
    FieldTower tw(FieldSpec{2, 2, 3, {}});
    const Quasifield qf = Quasifield::build(normalized_lp(tw, tw.generator()));
    const AxiomReport rep = verify_axioms(qf);
    CHECK(rep.loop);
    CHECK(rep.left_distributive);
    CHECK(rep.solvability);
    CHECK(rep.pass());
    CHECK(rep.counterexample.empty());
    CHECK(kernel(qf) == tw.subfield());
}

TEST_CASE("kernel has exactly q elements at (5,4)") {
    FieldTower tw(FieldSpec{5, 1, 4, {}});
    const Elt b = tw.generator();
    REQUIRE(scattered_criterion(tw, LPParams{b, 1}));
    auto f = lp_poly(tw, LPParams{b, 1});
    const auto ls = linear_set(f);
    if (ls.contains(0) || ls.contains(1)) f = normalize_poly(f).first;
    const Quasifield qf = Quasifield::build(f);
    CHECK(kernel(qf).size() == 5);
}

TEST_CASE("tampered table fails with a counterexample") {
    FieldTower tw(FieldSpec{2, 2, 3, {}});
    const Quasifield qf = Quasifield::build(normalized_lp(tw, tw.generator()));
    const Quasifield bad = qf.with_swapped_entries(tw.parse_element("g^3"), 2, 5);
    const AxiomReport rep = verify_axioms(bad);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.counterexample.empty());
}

TEST_CASE("structure flags") {
    FieldTower tw(FieldSpec{2, 2, 3, {}});
    const Quasifield qf = Quasifield::build(normalized_lp(tw, tw.generator()));
    const StructureFlags flags = structure_flags(qf);
    CHECK_FALSE(flags.right_distributive);
    CHECK_FALSE(flags.associative);

    // the field product as control: both properties hold and axioms pass
    const Quasifield control = Quasifield::field_control(tw);
    const StructureFlags cflags = structure_flags(control);
    CHECK(cflags.right_distributive);
    CHECK(cflags.associative);
    CHECK(verify_axioms(control).pass());
}
