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

#ifndef SCATPLANE_QUASIFIELD_HPP
#define SCATPLANE_QUASIFIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scatplane/linpoly.hpp"

namespace scatplane {

/// Q_f = F_{q^t} with the field sum and the product
///   x o m = x m            when m is not a slope of f,
///   x o m = h^{-1} f(h x)  when f(h) = m h, h != 0
/// (well defined: independent of the fiber representative). Requires q > 2,
/// f scattered and 0,1 not slopes; normalize first otherwise.
class Quasifield {
   public:
    static Quasifield build(const LinearizedPoly& f);
    /// The field itself (circ = field product): control input for the
    /// axiom/flag checkers.
    static Quasifield field_control(const FieldTower& tower);

    static constexpr Elt kTableLimit = 1u << 10;  // full table up to q^t <= 2^10

    const FieldTower& tower() const { return *tw_; }
    const LinearSet& slopes() const { return slopes_; }
    /// Least h with f(h) = m h (m must be a slope).
    Elt fiber_representative(Elt m) const;

    Elt circ(Elt x, Elt m) const {
        if (!table_.empty()) return table_[std::size_t(m) * tw_->order() + x];
        return circ_slow(x, m);
    }
    /// Row of the right-multiplication map rho_m.
    std::vector<Elt> row(Elt m) const;

    /// Fault injection for the axiom checkers: copy with circ(x1,m) and
    /// circ(x2,m) exchanged. Tabled instances only.
    Quasifield with_swapped_entries(Elt m, Elt x1, Elt x2) const;

   private:
    Elt circ_slow(Elt x, Elt m) const;

    const FieldTower* tw_ = nullptr;
    LinearSet slopes_;
    std::vector<Elt> fiber_rep_;  // indexed by slope, kNone elsewhere
    std::vector<Elt> fvals_;      // f value table (empty for the field control)
    std::vector<Elt> table_;      // row-per-m circ table when small enough
};

/// Exhaustive quasifield axiom verdict; `counterexample` holds the least
/// witness of the first failing axiom, empty when all pass.
struct AxiomReport {
    bool loop = false;
    bool left_distributive = false;
    bool solvability = false;
    std::string counterexample;

    bool pass() const { return loop && left_distributive && solvability; }
};

AxiomReport verify_axioms(const Quasifield& qf);

/// Exact kernel {k : k o (x+y) = k o x + k o y and k o (x o y) = (k o x) o y},
/// ascending. Equals the embedded F_q for scattered normalized inputs.
std::vector<Elt> kernel(const Quasifield& qf);

struct StructureFlags {
    bool right_distributive = false;
    bool associative = false;
};

/// Witness searches for the semifield / nearfield properties.
StructureFlags structure_flags(const Quasifield& qf);

}  // namespace scatplane

#endif
