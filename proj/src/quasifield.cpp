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

#include "scatplane/quasifield.hpp"

#include <stdexcept>

namespace scatplane {
namespace {
constexpr Elt kNone = 0xffffffffu;

std::string triple(const FieldTower& tw, const char* what, Elt x, Elt y, Elt z) {
    return std::string(what) + " at (" + tw.format_element(x) + ", " + tw.format_element(y) +
           ", " + tw.format_element(z) + ")";
}
}  // namespace

Quasifield Quasifield::build(const LinearizedPoly& f) {
    const FieldTower& tw = f.tower();
    if (tw.q() <= 2) throw std::domain_error("quasifield construction requires q > 2");
    if (!is_scattered(f)) throw std::domain_error("quasifield construction requires a scattered polynomial");
    Quasifield qf;
    qf.tw_ = &tw;
    qf.slopes_ = linear_set(f);
    if (qf.slopes_.contains(0) || qf.slopes_.contains(1))
        throw std::domain_error("0 or 1 lies in the linear set; normalize the polynomial first");
    qf.fvals_ = f.value_table();
    qf.fiber_rep_.assign(tw.order(), kNone);
    for (Elt x = 1; x < tw.order(); ++x) {
        const Elt m = tw.div(qf.fvals_[x], x);
        if (qf.fiber_rep_[m] == kNone) qf.fiber_rep_[m] = x;  // ascending x: least rep
    }
    if (tw.order() <= kTableLimit) {
        qf.table_.resize(std::size_t(tw.order()) * tw.order());
        for (Elt m = 0; m < tw.order(); ++m)
            for (Elt x = 0; x < tw.order(); ++x)
                qf.table_[std::size_t(m) * tw.order() + x] = qf.circ_slow(x, m);
    }
    return qf;
}

Quasifield Quasifield::field_control(const FieldTower& tower) {
    Quasifield qf;
    qf.tw_ = &tower;
    qf.fiber_rep_.assign(tower.order(), kNone);
    if (tower.order() <= kTableLimit) {
        qf.table_.resize(std::size_t(tower.order()) * tower.order());
        for (Elt m = 0; m < tower.order(); ++m)
            for (Elt x = 0; x < tower.order(); ++x)
                qf.table_[std::size_t(m) * tower.order() + x] = tower.mul(x, m);
    }
    return qf;
}

Elt Quasifield::fiber_representative(Elt m) const {
    if (m >= fiber_rep_.size() || fiber_rep_[m] == kNone || !slopes_.contains(m))
        throw std::domain_error("not a slope of f");
    return fiber_rep_[m];
}

Elt Quasifield::circ_slow(Elt x, Elt m) const {
    const FieldTower& tw = *tw_;
    if (fvals_.empty() || !slopes_.contains(m)) return tw.mul(x, m);
    const Elt h = fiber_rep_[m];
    return tw.mul(tw.inv(h), fvals_[tw.mul(h, x)]);
}

Quasifield Quasifield::with_swapped_entries(Elt m, Elt x1, Elt x2) const {
    if (table_.empty()) throw std::logic_error("fault injection needs a materialized table");
    Quasifield out = *this;
    std::swap(out.table_[std::size_t(m) * tw_->order() + x1],
              out.table_[std::size_t(m) * tw_->order() + x2]);
    return out;
}

std::vector<Elt> Quasifield::row(Elt m) const {
    const FieldTower& tw = *tw_;
    std::vector<Elt> r(tw.order());
    if (!table_.empty()) {
        std::copy(table_.begin() + std::size_t(m) * tw.order(),
                  table_.begin() + std::size_t(m + 1) * tw.order(), r.begin());
        return r;
    }
    for (Elt x = 0; x < tw.order(); ++x) r[x] = circ_slow(x, m);
    return r;
}

AxiomReport verify_axioms(const Quasifield& qf) {
    const FieldTower& tw = qf.tower();
    const Elt order = tw.order();
    AxiomReport rep;

    // (Q*, o) is a loop with identity 1: zero absorbs, both sections of the
    // table restricted to Q* are permutations, and 1 is two-sided neutral.
    rep.loop = true;
    for (Elt m = 0; m < order && rep.loop; ++m) {
        if (qf.circ(0, m) != 0 || qf.circ(m, 0) != 0) {
            rep.loop = false;
            rep.counterexample = triple(tw, "zero not absorbing", m, 0, 0);
            break;
        }
        if (qf.circ(1, m) != m || qf.circ(m, 1) != m) {
            rep.loop = false;
            rep.counterexample = triple(tw, "1 not neutral", m, 0, 0);
            break;
        }
    }
    if (rep.loop) {
        std::vector<bool> seen(order);
        for (Elt m = 1; m < order && rep.loop; ++m) {  // columns: x -> x o m
            std::fill(seen.begin(), seen.end(), false);
            for (Elt x = 1; x < order; ++x) {
                const Elt v = qf.circ(x, m);
                if (v == 0 || seen[v]) {
                    rep.loop = false;
                    rep.counterexample = triple(tw, "right section not bijective", x, m, v);
                    break;
                }
                seen[v] = true;
            }
        }
        for (Elt x = 1; x < order && rep.loop; ++x) {  // rows: m -> x o m
            std::fill(seen.begin(), seen.end(), false);
            for (Elt m = 1; m < order; ++m) {
                const Elt v = qf.circ(x, m);
                if (v == 0 || seen[v]) {
                    rep.loop = false;
                    rep.counterexample = triple(tw, "left section not bijective", x, m, v);
                    break;
                }
                seen[v] = true;
            }
        }
    }

    rep.left_distributive = true;
    for (Elt m = 0; m < order && rep.left_distributive; ++m) {
        const std::vector<Elt> row = qf.row(m);
        for (Elt x = 0; x < order && rep.left_distributive; ++x)
            for (Elt y = x; y < order; ++y)
                if (row[tw.add(x, y)] != tw.add(row[x], row[y])) {
                    rep.left_distributive = false;
                    if (rep.counterexample.empty())
                        rep.counterexample = triple(tw, "(x+y) o m != x o m + y o m", x, y, m);
                    break;
                }
    }

    // x o a = x o b + c has exactly one solution for a != b iff
    // x -> x o a - x o b is a bijection of Q.
    rep.solvability = true;
    std::vector<bool> hit(order);
    for (Elt a = 0; a < order && rep.solvability; ++a) {
        const std::vector<Elt> row_a = qf.row(a);
        for (Elt b = 0; b < order && rep.solvability; ++b) {
            if (a == b) continue;  // the axiom quantifies a != b
            const std::vector<Elt> row_b = qf.row(b);
            std::fill(hit.begin(), hit.end(), false);
            for (Elt x = 0; x < order; ++x) {
                const Elt v = tw.sub(row_a[x], row_b[x]);
                if (hit[v]) {
                    rep.solvability = false;
                    if (rep.counterexample.empty())
                        rep.counterexample = triple(tw, "x o a = x o b + c not uniquely solvable", x, a, b);
                    break;
                }
                hit[v] = true;
            }
        }
    }
    return rep;
}

std::vector<Elt> kernel(const Quasifield& qf) {
    const FieldTower& tw = qf.tower();
    const Elt order = tw.order();
    std::vector<Elt> out;
    for (Elt k = 0; k < order; ++k) {
        const std::vector<Elt> row_of = [&] {
            std::vector<Elt> kx(order);
            for (Elt x = 0; x < order; ++x) kx[x] = qf.circ(k, x);
            return kx;
        }();
        bool good = true;
        for (Elt x = 0; x < order && good; ++x)
            for (Elt y = 0; y < order; ++y)
                if (row_of[tw.add(x, y)] != tw.add(row_of[x], row_of[y])) {
                    good = false;
                    break;
                }
        for (Elt x = 0; x < order && good; ++x)
            for (Elt y = 0; y < order; ++y)
                if (row_of[qf.circ(x, y)] != qf.circ(row_of[x], y)) {
                    good = false;
                    break;
                }
        if (good) out.push_back(k);
    }
    return out;
}

StructureFlags structure_flags(const Quasifield& qf) {
    const FieldTower& tw = qf.tower();
    const Elt order = tw.order();
    StructureFlags flags;
    flags.right_distributive = true;
    for (Elt x = 0; x < order && flags.right_distributive; ++x)
        for (Elt m = 0; m < order && flags.right_distributive; ++m)
            for (Elt n = m; n < order; ++n)
                if (qf.circ(x, tw.add(m, n)) != tw.add(qf.circ(x, m), qf.circ(x, n))) {
                    flags.right_distributive = false;
                    break;
                }
    flags.associative = true;
    for (Elt x = 0; x < order && flags.associative; ++x)
        for (Elt y = 0; y < order && flags.associative; ++y)
            for (Elt z = 0; z < order; ++z)
                if (qf.circ(qf.circ(x, y), z) != qf.circ(x, qf.circ(y, z))) {
                    flags.associative = false;
                    break;
                }
    return flags;
}

}  // namespace scatplane
