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

#ifndef SCATPLANE_SUBSPACE_HPP
#define SCATPLANE_SUBSPACE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scatplane/field.hpp"
#include "scatplane/linpoly.hpp"

namespace scatplane {

/// Vectors of F_{q^t}^2 are packed as x * order + y; ascending packed value
/// is the canonical vector order used for coset representatives and diffs.
inline std::uint64_t pack_vec(const FieldTower& tw, Elt x, Elt y) {
    return std::uint64_t(x) * tw.order() + y;
}
inline std::pair<Elt, Elt> unpack_vec(const FieldTower& tw, std::uint64_t v) {
    return {Elt(v / tw.order()), Elt(v % tw.order())};
}

/// t-dimensional F_q-subspace of F_{q^t}^2, carried as a basis plus the full
/// sorted element set for O(log) membership.
class Subspace2 {
   public:
    static Subspace2 from_basis(const FieldTower& tower,
                                std::vector<std::array<Elt, 2>> basis);
    /// U_f = {(x, f(x))}, with basis over the fixed power basis.
    static Subspace2 from_poly(const LinearizedPoly& f);

    const FieldTower& tower() const { return *tw_; }
    const std::vector<std::array<Elt, 2>>& basis() const { return basis_; }
    const std::vector<std::uint64_t>& elements() const { return elems_; }
    bool contains(Elt x, Elt y) const;

    friend bool operator==(const Subspace2& lhs, const Subspace2& rhs) {
        return lhs.elems_ == rhs.elems_;
    }

   private:
    const FieldTower* tw_ = nullptr;
    std::vector<std::array<Elt, 2>> basis_;
    std::vector<std::uint64_t> elems_;  // sorted, size q^t
};

/// Element of GammaL(2,q^t): invertible matrix (a b; c d) over F_{q^t}
/// composed with the automorphism x -> x^{p^sigma}, acting as
/// (x,y) -> (a x^s + b y^s, c x^s + d y^s)  (automorphism first).
struct SemilinearMap {
    Elt a = 1, b = 0, c = 0, d = 1;
    std::uint32_t sigma = 0;

    static SemilinearMap identity() { return {}; }
    std::pair<Elt, Elt> apply(const FieldTower& tw, Elt x, Elt y) const;
    Elt det(const FieldTower& tw) const;
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1 && sigma == 0; }
};

/// lhs after rhs (apply rhs first).
SemilinearMap compose(const FieldTower& tw, const SemilinearMap& lhs, const SemilinearMap& rhs);
SemilinearMap inverse(const FieldTower& tw, const SemilinearMap& map);

/// Scattered iff every 1-dimensional F_{q^t}-subspace meets U in an
/// F_q-subspace of dimension <= 1 (i.e. in 0 or q-1 nonzero vectors).
bool is_scattered_subspace(const Subspace2& u);

/// Linear set of U in nonhomogeneous coordinates, infinity included when U
/// meets <(0,1)>.
LinearSet linear_set_of(const Subspace2& u);

Subspace2 apply_semilinear(const SemilinearMap& map, const Subspace2& u);

enum class Group { GL, GammaL };

struct SearchOptions {
    unsigned workers = 1;
    bool force = false;  // lifts the q^{2t} search guard
};

/// Witness lambda with lambda(U_f) = U_{f'}, or nullopt. Production solver:
/// enumerates the automorphism and the first matrix row (a,b); the second row
/// follows from a 2x2 linear system on two basis vectors and is verified on
/// the rest. Returns the lexicographically least accepted (sigma,a,b) witness.
std::optional<SemilinearMap> equivalence_fast(const LinearizedPoly& f, const LinearizedPoly& fprime,
                                              const SearchOptions& opts = {});

/// Brute force over every matrix of GL(2,q^t) and every automorphism,
/// testing setwise image equality. Guarded to q^t <= 32.
std::optional<SemilinearMap> equivalence_oracle(const LinearizedPoly& f,
                                                const LinearizedPoly& fprime);

/// Order of {lambda in group : lambda(B_f) = B_f} for scattered f, q > 3,
/// computed as (q^t-1)/(q-1) times the order of the stabilizer of U_f.
std::uint64_t stabilizer_order(const LinearizedPoly& f, Group group,
                               const SearchOptions& opts = {});

/// Partition of the family into GammaL(2,q^t)-orbits (union-find over
/// pairwise equivalence_fast). Orbits are listed by least member index.
std::vector<std::vector<std::size_t>> orbit_census(const std::vector<LinearizedPoly>& family,
                                                   const SearchOptions& opts = {});

/// Projectivity mu (sigma = id) moving U_f so that 0, 1 and infinity all
/// avoid the image linear set, with the image polynomial recovered by
/// interpolation. The first admissible matrix in lexicographic entry order
/// wins; the identity is tested first.
std::pair<LinearizedPoly, SemilinearMap> normalize_poly(const LinearizedPoly& f);

}  // namespace scatplane

#endif
