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

#include "scatplane/lp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scatplane {
namespace {

std::uint64_t totient(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Reduce (b,s) through the GL-identification (b,s) ~ (b^{-1}, t-s) so that
// s < t/2; valid since gcd(s,t)=1 excludes s = t/2 for t > 2.
LPParams reduce_params(const FieldTower& tw, LPParams params) {
    params.s %= tw.t();
    if (2 * params.s > tw.t()) return {tw.inv(params.b), tw.t() - params.s};
    return params;
}

}  // namespace

LinearizedPoly lp_poly(const FieldTower& tower, const LPParams& params) {
    if (params.s < 1 || params.s >= tower.t())
        throw std::invalid_argument("LP exponent s must lie in [1,t)");
    std::vector<Elt> coeffs(tower.t(), 0);
    if (params.s == tower.t() - params.s) {
        coeffs[params.s] = tower.add(1, params.b);
    } else {
        coeffs[params.s] = 1;
        coeffs[tower.t() - params.s] = params.b;
    }
    return LinearizedPoly(tower, std::move(coeffs));
}

bool scattered_criterion(const FieldTower& tower, const LPParams& params) {
    return tower.rel_norm(params.b) != 1 &&
           std::gcd<std::uint64_t>(params.s, tower.t()) == 1;
}

HyperRegulus fundamental_hyper_regulus(const FieldTower& tower, const LPParams& params) {
    if (!scattered_criterion(tower, params))
        throw std::domain_error("fundamental hyper-regulus requires N(b) != 1 and gcd(s,t) = 1");
    const LinearizedPoly base = lp_poly(tower, params);
    const std::vector<Elt> base_vals = base.value_table();
    HyperRegulus hr;
    for (Elt d : fq_star_coset_reps(tower)) {
        // V_{b,d,s} = graph of x^{q^s} d^{1-q^s} + x^{q^{t-s}} d^{1-q^{t-s}} b
        const Elt c1 = tower.div(d, tower.q_frobenius(d, params.s));
        const Elt c2 = tower.mul(tower.div(d, tower.q_frobenius(d, tower.t() - params.s)), params.b);
        std::vector<Elt> coeffs(tower.t(), 0);
        if (params.s == tower.t() - params.s) {
            coeffs[params.s] = tower.add(c1, c2);
        } else {
            coeffs[params.s] = c1;
            coeffs[tower.t() - params.s] = c2;
        }
        const LinearizedPoly v(tower, std::move(coeffs));
        SpreadComponent comp;
        comp.tag = {ComponentTag::Kind::Replaced, d};
        comp.elems.resize(tower.order());
        for (Elt x = 0; x < tower.order(); ++x) comp.elems[x] = pack_vec(tower, x, v.evaluate(x));
        std::sort(comp.elems.begin(), comp.elems.end());
        // V_{b,d,s} must coincide with d U_{P_{b,s}}
        std::vector<std::uint64_t> scaled(tower.order());
        for (Elt x = 0; x < tower.order(); ++x)
            scaled[x] = pack_vec(tower, tower.mul(d, x), tower.mul(d, base_vals[x]));
        std::sort(scaled.begin(), scaled.end());
        if (scaled != comp.elems) throw std::logic_error("V_{b,d,s} != d U_{P_{b,s}}");
        hr.components.push_back(std::move(comp));
    }
    return hr;
}

bool ejj_equivalent(const FieldTower& tower, const LPParams& lhs, const LPParams& rhs) {
    if (!scattered_criterion(tower, lhs) || !scattered_criterion(tower, rhs))
        throw std::domain_error("ejj equivalence requires scattered LP parameters");
    if (2 * lhs.s == tower.t() || 2 * rhs.s == tower.t())
        throw std::domain_error("s = t/2 is excluded");
    const LPParams a = reduce_params(tower, lhs);
    const LPParams b = reduce_params(tower, rhs);
    if (a.s != b.s) return false;
    const std::uint32_t n = tower.mult_order();
    std::uint64_t q2s = 1;
    for (std::uint32_t i = 0; i < 2 * a.s; ++i) q2s *= tower.q();
    const std::uint64_t subgroup_index = std::gcd<std::uint64_t>(q2s - 1, n);
    const std::uint32_t log_target = tower.log(b.b);
    for (std::uint32_t j = 0; j < tower.e() * tower.t(); ++j) {
        const std::uint32_t log_image = tower.log(tower.p_frobenius(a.b, j));
        if ((std::uint64_t(log_target) + n - log_image) % subgroup_index == 0) return true;
    }
    return false;
}

std::uint64_t orbit_count_theorem(std::uint32_t p, std::uint32_t e, std::uint32_t t) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    if (q <= 3) throw std::domain_error("orbit count theorem requires q > 3");
    if (t <= 3) throw std::domain_error("orbit count theorem requires t > 3");
    // helper field F_{q^2}; it embeds F_q as the fixed set of x -> x^q
    FieldTower helper(FieldSpec{p, e, 2, {}});
    std::vector<bool> in_domain(helper.order(), false);
    if (t % 2 == 1) {
        for (Elt x : helper.subfield()) in_domain[x] = true;
        in_domain[0] = in_domain[1] = false;
    } else {
        for (Elt x = 0; x < helper.order(); ++x) in_domain[x] = true;
        for (Elt x = 0; x < helper.order(); ++x) in_domain[helper.pow(x, q - 1)] = false;
    }
    // orbits under x -> x^p
    std::vector<bool> seen(helper.order(), false);
    std::uint64_t orbits = 0;
    for (Elt x = 0; x < helper.order(); ++x) {
        if (!in_domain[x] || seen[x]) continue;
        ++orbits;
        Elt y = x;
        do {
            seen[y] = true;
            y = helper.p_frobenius(y, 1);
        } while (y != x);
    }
    return orbits;
}

std::uint64_t n_lower_bound(std::uint32_t p, std::uint32_t e, std::uint32_t t) {
    if (t < 2) throw std::invalid_argument("t must exceed 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    const std::uint64_t phi_half = totient(t) / 2;
    std::uint64_t num, den;
    if (t % 2 == 1) {
        num = (q - 2) * phi_half;
        den = e;
    } else {
        num = (q * q - 1 - (q + 1)) * phi_half;
        den = 2 * std::uint64_t(e);
    }
    return (num + den - 1) / den;  // = num/den in every integral case
}

LpCensusReport lp_census(const FieldTower& tower, std::uint32_t s, const SearchOptions& opts) {
    if (std::gcd<std::uint64_t>(s, tower.t()) != 1)
        throw std::domain_error("census requires gcd(s,t) = 1");
    const Elt order = tower.order();
    const std::uint32_t n = tower.mult_order();
    LpCensusReport rep;
    rep.q = std::uint32_t(tower.q());
    rep.t = tower.t();
    rep.s = s;

    // union-find over {b : N(b) != 1} under b -> b^p and b -> b * g^G, the
    // generator of the image subgroup {z^{q^{2s}-1}}
    const std::uint32_t s_reduced = 2 * s > tower.t() ? tower.t() - s : s;
    std::uint64_t q2s = 1;
    for (std::uint32_t i = 0; i < 2 * s_reduced; ++i) q2s *= tower.q();
    const std::uint64_t subgroup_index = std::gcd<std::uint64_t>(q2s - 1, n);
    const Elt subgroup_gen = tower.exp(subgroup_index);

    std::vector<std::uint32_t> parent(order);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Elt x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto merge = [&](Elt x, Elt y) { parent[find(x)] = find(y); };
    std::vector<bool> admissible(order, false);
    for (Elt b = 1; b < order; ++b) admissible[b] = tower.rel_norm(b) != 1;
    for (Elt b = 1; b < order; ++b) {
        if (!admissible[b]) continue;
        merge(b, tower.p_frobenius(b, 1));
        merge(b, tower.mul(b, subgroup_gen));
    }
    std::vector<Elt> reps;
    std::vector<bool> done(order, false);
    for (Elt b = 1; b < order; ++b) {
        if (!admissible[b]) continue;
        const Elt root = find(b);
        if (!done[root]) {
            done[root] = true;
            reps.push_back(b);  // ascending scan: least member of the class
        }
    }
    rep.classes = reps.size();
    rep.representatives = reps;

    // solver census over the representatives must be discrete, and each class
    // with a second member must be solver-united with its representative
    std::vector<LinearizedPoly> family;
    family.reserve(reps.size());
    for (Elt b : reps) family.push_back(lp_poly(tower, LPParams{b, s}));
    const auto partition = orbit_census(family, opts);
    rep.solver_classes = partition.size();
    bool agree = partition.size() == reps.size();
    if (agree) {
        for (Elt rep_b : reps) {
            Elt mate = 0;
            for (Elt b = rep_b + 1; b < order && !mate; ++b)
                if (admissible[b] && find(b) == find(rep_b)) mate = b;
            if (!mate) continue;
            if (!ejj_equivalent(tower, LPParams{rep_b, s}, LPParams{mate, s}) ||
                !equivalence_fast(lp_poly(tower, LPParams{rep_b, s}),
                                  lp_poly(tower, LPParams{mate, s}), opts)) {
                agree = false;
                break;
            }
        }
    }
    if (agree) {
        for (std::size_t i = 0; i < reps.size() && agree; ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                if (ejj_equivalent(tower, LPParams{reps[i], s}, LPParams{reps[j], s})) {
                    agree = false;
                    break;
                }
    }
    rep.agree_solver_vs_ejj = agree;

    rep.theorem_count = orbit_count_theorem(tower.p(), tower.e(), tower.t());
    rep.lower_bound = n_lower_bound(tower.p(), tower.e(), tower.t());
    rep.reduced_s_values = totient(tower.t()) / 2;
    rep.total_all_s = rep.classes * rep.reduced_s_values;
    const bool fixed = rep.theorem_count == rep.classes;
    const bool all = rep.theorem_count == rep.total_all_s;
    rep.theorem_matches = fixed && all ? "both" : fixed ? "fixed_s" : all ? "all_s" : "none";
    return rep;
}

}  // namespace scatplane
