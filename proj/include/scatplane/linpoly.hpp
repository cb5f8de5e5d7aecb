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

#ifndef SCATPLANE_LINPOLY_HPP
#define SCATPLANE_LINPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "scatplane/field.hpp"

namespace scatplane {

/// F_q-linearized polynomial f(x) = sum_{i<t} a_i x^{q^i}, stored with exactly
/// t coefficients (every endomorphism of F_{q^t} has a unique such form).
class LinearizedPoly {
   public:
    LinearizedPoly(const FieldTower& tower, std::vector<Elt> coeffs);

    static LinearizedPoly zero(const FieldTower& tower);
    static LinearizedPoly identity(const FieldTower& tower);
    /// coeff * x^{q^s}
    static LinearizedPoly monomial(const FieldTower& tower, Elt coeff, std::uint32_t s);

    const FieldTower& tower() const { return *tw_; }
    const std::vector<Elt>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    std::uint32_t q_degree() const;  // undefined for the zero polynomial (throws)

    Elt evaluate(Elt x) const;
    Elt operator()(Elt x) const { return evaluate(x); }
    /// f(x) for every x, indexed by element.
    std::vector<Elt> value_table() const;

    friend bool operator==(const LinearizedPoly& lhs, const LinearizedPoly& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }

   private:
    const FieldTower* tw_;
    std::vector<Elt> coeffs_;
};

LinearizedPoly add(const LinearizedPoly& f, const LinearizedPoly& g);
LinearizedPoly scale(Elt c, const LinearizedPoly& f);
/// f(g(x)), reduced modulo x^{q^t} - x.
LinearizedPoly compose(const LinearizedPoly& f, const LinearizedPoly& g);
/// d with |ker f| = q^d.
std::uint32_t kernel_dimension(const LinearizedPoly& f);

/// Slope set {f(x)/x : x != 0} in nonhomogeneous coordinates; the infinity
/// flag is used only for subspace-derived sets meeting <(0,1)>.
struct LinearSet {
    std::vector<Elt> slopes;  // ascending
    bool contains_infinity = false;

    bool contains(Elt m) const;
    std::size_t size() const { return slopes.size() + (contains_infinity ? 1 : 0); }
};

/// True iff the slope map hits (q^t-1)/(q-1) distinct values, i.e. every
/// fiber is a punctured one-dimensional F_q-subspace.
bool is_scattered(const LinearizedPoly& f);
LinearSet linear_set(const LinearizedPoly& f);

/// The unique polynomial of q-degree < t with f(x_i) = y_i for the t given
/// pairs; the x_i must be F_q-independent. Solves the t x t Moore system.
LinearizedPoly interpolate_graph(const FieldTower& tower,
                                 const std::vector<std::pair<Elt, Elt>>& pairs);

}  // namespace scatplane

#endif
