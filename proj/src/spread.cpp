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

#include "scatplane/spread.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scatplane {
namespace {

constexpr std::uint64_t kElementGuard = 1u << 22;  // total materialized vectors

void check_spread_size(const FieldTower& tw) {
    const std::uint64_t total = std::uint64_t(tw.order()) * tw.order();
    if (total > kElementGuard)
        throw GuardError("spread materialization of " + std::to_string(total) +
                         " vectors exceeds guard 2^22");
}

SpreadComponent line_at_infinity(const FieldTower& tw) {
    SpreadComponent comp;
    comp.tag = {ComponentTag::Kind::LineAtInfinity, 0};
    comp.elems.resize(tw.order());
    for (Elt y = 0; y < tw.order(); ++y) comp.elems[y] = pack_vec(tw, 0, y);
    return comp;
}

SpreadComponent desarguesian_line(const FieldTower& tw, Elt m) {
    SpreadComponent comp;
    comp.tag = {ComponentTag::Kind::Line, m};
    comp.elems.resize(tw.order());
    for (Elt x = 0; x < tw.order(); ++x) comp.elems[x] = pack_vec(tw, x, tw.mul(x, m));
    return comp;
}

std::vector<std::uint64_t> sorted_union(const std::vector<SpreadComponent>& comps) {
    std::vector<std::uint64_t> all;
    for (const auto& c : comps) all.insert(all.end(), c.elems.begin(), c.elems.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

}  // namespace

std::string ComponentTag::text(const FieldTower& tw) const {
    switch (kind) {
        case Kind::LineAtInfinity:
            return "line inf";
        case Kind::Line:
            return "line " + tw.format_element(param);
        case Kind::Replaced:
            return "replaced " + tw.format_element(param);
    }
    return {};
}

std::vector<Elt> fq_star_coset_reps(const FieldTower& tower) {
    std::vector<bool> taken(tower.order(), false);
    std::vector<Elt> reps;
    for (Elt h = 1; h < tower.order(); ++h) {
        if (taken[h]) continue;
        reps.push_back(h);
        for (Elt alpha : tower.subfield())
            if (alpha != 0) taken[tower.mul(alpha, h)] = true;
    }
    return reps;
}

Spread desarguesian(const FieldTower& tower) {
    check_spread_size(tower);
    std::vector<SpreadComponent> comps;
    comps.reserve(tower.order() + 1);
    comps.push_back(line_at_infinity(tower));
    for (Elt m = 0; m < tower.order(); ++m) comps.push_back(desarguesian_line(tower, m));
    return Spread(tower, std::move(comps));
}

Spread spread_from_poly(const LinearizedPoly& f) {
    const FieldTower& tw = f.tower();
    check_spread_size(tw);
    if (!is_scattered(f))
        throw std::domain_error("spread construction requires a scattered polynomial");
    const LinearSet ls = linear_set(f);
    const std::vector<Elt> fvals = f.value_table();
    std::vector<SpreadComponent> comps;
    comps.reserve(tw.order() + 1);
    comps.push_back(line_at_infinity(tw));
    for (Elt m = 0; m < tw.order(); ++m)
        if (!ls.contains(m)) comps.push_back(desarguesian_line(tw, m));
    for (Elt h : fq_star_coset_reps(tw)) {
        SpreadComponent comp;
        comp.tag = {ComponentTag::Kind::Replaced, h};
        comp.elems.resize(tw.order());
        for (Elt x = 0; x < tw.order(); ++x)
            comp.elems[x] = pack_vec(tw, tw.mul(h, x), tw.mul(h, fvals[x]));
        std::sort(comp.elems.begin(), comp.elems.end());
        comps.push_back(std::move(comp));
    }
    return Spread(tw, std::move(comps));
}

PlanarReport verify_planar(const Spread& spread) {
    const FieldTower& tw = spread.tower();
    PlanarReport rep;
    const std::uint64_t expected = std::uint64_t(tw.order()) + 1;
    if (spread.components().size() != expected) {
        rep.size_ok = false;
        rep.witness = "component count " + std::to_string(spread.components().size()) +
                      " != " + std::to_string(expected);
    }
    const std::uint64_t total = std::uint64_t(tw.order()) * tw.order();
    std::vector<std::uint32_t> owner(total, 0xffffffffu);
    for (std::uint32_t ci = 0; ci < spread.components().size(); ++ci) {
        const auto& comp = spread.components()[ci];
        if (comp.elems.size() != tw.order()) {
            rep.size_ok = false;
            if (rep.witness.empty())
                rep.witness = "component " + std::to_string(ci) + " has " +
                              std::to_string(comp.elems.size()) + " vectors";
            continue;
        }
        for (std::uint64_t v : comp.elems) {
            if (v == 0) continue;  // every subspace holds 0
            if (owner[v] != 0xffffffffu) {
                rep.disjoint_ok = false;
                if (rep.witness.empty()) {
                    auto [x, y] = unpack_vec(tw, v);
                    rep.witness = "vector (" + tw.format_element(x) + ", " + tw.format_element(y) +
                                  ") covered by components " + std::to_string(owner[v]) + " and " +
                                  std::to_string(ci);
                }
            } else {
                owner[v] = ci;
            }
        }
    }
    for (std::uint64_t v = 1; v < total; ++v)
        if (owner[v] == 0xffffffffu) {
            rep.cover_ok = false;
            if (rep.witness.empty()) {
                auto [x, y] = unpack_vec(tw, v);
                rep.witness = "vector (" + tw.format_element(x) + ", " + tw.format_element(y) +
                              ") not covered";
            }
            break;
        }
    return rep;
}

HyperRegulusPair hyper_regulus_pair(const LinearizedPoly& f) {
    const FieldTower& tw = f.tower();
    check_spread_size(tw);
    if (!is_scattered(f))
        throw std::domain_error("hyper-regulus construction requires a scattered polynomial");
    const LinearSet ls = linear_set(f);
    const std::vector<Elt> fvals = f.value_table();
    HyperRegulusPair pair;
    for (Elt m : ls.slopes) pair.inner.components.push_back(desarguesian_line(tw, m));
    for (Elt h : fq_star_coset_reps(tw)) {
        SpreadComponent comp;
        comp.tag = {ComponentTag::Kind::Replaced, h};
        comp.elems.resize(tw.order());
        for (Elt x = 0; x < tw.order(); ++x)
            comp.elems[x] = pack_vec(tw, tw.mul(h, x), tw.mul(h, fvals[x]));
        std::sort(comp.elems.begin(), comp.elems.end());
        pair.outer.components.push_back(std::move(comp));
    }
    pair.cover_equal = sorted_union(pair.inner.components) == sorted_union(pair.outer.components);
    return pair;
}

Spread andre_spread(const FieldTower& tower, const std::map<Elt, std::uint32_t>& replacements) {
    check_spread_size(tower);
    for (const auto& [xi, s] : replacements) {
        if (xi == 0 || !tower.in_subfield(xi))
            throw std::invalid_argument("Andre net index must lie in F_q^*");
        if (s >= tower.t()) throw std::invalid_argument("Andre replacement exponent out of [0,t)");
    }
    auto exponent_of = [&](Elt m) -> std::uint32_t {
        auto it = replacements.find(tower.rel_norm(m));
        return it == replacements.end() ? 0 : it->second;
    };
    std::vector<SpreadComponent> comps;
    comps.reserve(tower.order() + 1);
    comps.push_back(line_at_infinity(tower));
    for (Elt m = 0; m < tower.order(); ++m)
        if (m == 0 || exponent_of(m) == 0) comps.push_back(desarguesian_line(tower, m));
    for (Elt m = 1; m < tower.order(); ++m) {
        const std::uint32_t s = exponent_of(m);
        if (s == 0) continue;
        SpreadComponent comp;
        comp.tag = {ComponentTag::Kind::Replaced, m};
        comp.elems.resize(tower.order());
        for (Elt x = 0; x < tower.order(); ++x)
            comp.elems[x] = pack_vec(tower, x, tower.mul(tower.q_frobenius(x, s), m));
        std::sort(comp.elems.begin(), comp.elems.end());
        comps.push_back(std::move(comp));
    }
    return Spread(tower, std::move(comps));
}

Spread pseudoregulus_spread(const FieldTower& tower, Elt omega, std::uint32_t s) {
    if (std::gcd<std::uint64_t>(s, tower.t()) != 1)
        throw std::invalid_argument("pseudoregulus requires gcd(s,t) = 1");
    const Elt norm = tower.rel_norm(omega);
    if (norm == 0 || norm == 1)
        throw std::invalid_argument("pseudoregulus requires N(omega) outside {0,1}");
    return spread_from_poly(LinearizedPoly::monomial(tower, omega, s));
}

bool spreads_setwise_equal(const Spread& lhs, const Spread& rhs) {
    auto fingerprints = [](const Spread& s) {
        std::vector<std::vector<std::uint64_t>> fp;
        fp.reserve(s.components().size());
        for (const auto& c : s.components()) fp.push_back(c.elems);
        std::sort(fp.begin(), fp.end());
        return fp;
    };
    return fingerprints(lhs) == fingerprints(rhs);
}

}  // namespace scatplane
