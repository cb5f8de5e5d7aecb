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

#ifndef SCATPLANE_SPREAD_HPP
#define SCATPLANE_SPREAD_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scatplane/subspace.hpp"

namespace scatplane {

struct ComponentTag {
    enum class Kind { LineAtInfinity, Line, Replaced };
    Kind kind = Kind::Line;
    Elt param = 0;  // slope m for lines, representative h (or d) for replaced parts

    std::string text(const FieldTower& tw) const;
};

struct SpreadComponent {
    ComponentTag tag;
    std::vector<std::uint64_t> elems;  // sorted packed vectors, size q^t
};

/// Planar spread of F_{q^t}^2: q^t+1 pairwise-complementary t-dimensional
/// F_q-subspaces. Canonical component order: V_infinity, Desarguesian lines
/// by slope, replaced components by representative.
class Spread {
   public:
    Spread(const FieldTower& tower, std::vector<SpreadComponent> comps)
        : tw_(&tower), comps_(std::move(comps)) {}

    const FieldTower& tower() const { return *tw_; }
    const std::vector<SpreadComponent>& components() const { return comps_; }

   private:
    const FieldTower* tw_;
    std::vector<SpreadComponent> comps_;
};

struct PlanarReport {
    bool size_ok = true;
    bool disjoint_ok = true;
    bool cover_ok = true;
    std::string witness;

    bool pass() const { return size_ok && disjoint_ok && cover_ok; }
};

/// Least element index per coset of F_q^* in F_{q^t}^*, ascending.
std::vector<Elt> fq_star_coset_reps(const FieldTower& tower);

/// D = {<v>_{F_{q^t}}}: the q^t lines <(1,m)> plus <(0,1)>.
Spread desarguesian(const FieldTower& tower);

/// B_f: <(1,m)> for m outside L_f, one hU_f per F_q^*-coset, {0} x F_{q^t}.
Spread spread_from_poly(const LinearizedPoly& f);

/// Size, pairwise trivial intersection and exact cover of the nonzero vectors.
PlanarReport verify_planar(const Spread& spread);

/// Partial spread of size (q^t-1)/(q-1) with pairwise trivial intersections.
struct HyperRegulus {
    std::vector<SpreadComponent> components;
};

struct HyperRegulusPair {
    HyperRegulus inner;  // Desarguesian lines with slope in L_f
    HyperRegulus outer;  // the hU_f
    bool cover_equal = false;
};

HyperRegulusPair hyper_regulus_pair(const LinearizedPoly& f);

/// Andre plane spread: each net B'_xi = {<(1,m)> : N(m) = xi} with an entry in
/// `replacements` is replaced by {{(x, x^{q^s} m)} : N(m) = xi}. Keys are
/// elements of F_q^*; exponent 0 (or a missing key) means no replacement.
Spread andre_spread(const FieldTower& tower, const std::map<Elt, std::uint32_t>& replacements);

/// B_{g_s} for g_s(x) = omega x^{q^s}; requires gcd(s,t) = 1 and
/// N(omega) notin {0,1}.
Spread pseudoregulus_spread(const FieldTower& tower, Elt omega, std::uint32_t s);

/// Componentwise set equality under canonical element-set fingerprints.
bool spreads_setwise_equal(const Spread& lhs, const Spread& rhs);

}  // namespace scatplane

#endif
