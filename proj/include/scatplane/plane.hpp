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

#ifndef SCATPLANE_PLANE_HPP
#define SCATPLANE_PLANE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scatplane/spread.hpp"

namespace scatplane {

/// Affine translation plane of a planar spread: points are the q^{2t} vectors,
/// lines the cosets V + w, stored as (component, least vector of the coset).
class TranslationPlane {
   public:
    struct Line {
        std::uint32_t component;
        std::uint64_t rep;  // canonical coset representative (least packed vector)
    };

    explicit TranslationPlane(const Spread& spread);
    explicit TranslationPlane(Spread&&) = delete;  // plane references the spread

    const Spread& spread() const { return *spread_; }
    const FieldTower& tower() const { return spread_->tower(); }
    const std::vector<Line>& lines() const { return lines_; }

    std::uint64_t point_count() const;                     // q^{2t}
    std::uint64_t line_count() const { return lines_.size(); }
    std::uint64_t points_per_line() const;                 // q^t
    std::uint64_t lines_per_point() const;                 // q^t + 1

   private:
    const Spread* spread_;
    std::vector<Line> lines_;
};

TranslationPlane plane_from_spread(const Spread& spread);
TranslationPlane plane_from_spread(Spread&&) = delete;

enum class VerifyMode { Structural, Direct };

struct AffineReport {
    bool pass = false;
    std::string mode;
    std::string witness;
};

/// Structural mode re-checks the spread partition (nonzero vectors covered
/// exactly once); direct mode exhaustively checks the two-point axiom and the
/// Playfair parallel axiom, guarded to q^{2t} <= 2^16 points.
AffineReport verify_affine(const TranslationPlane& plane, VerifyMode mode);

/// A_f and A_{f'} are isomorphic iff U_f and U_{f'} lie in one
/// GammaL(2,q^t)-orbit (q > 3, both scattered); delegates to the subspace
/// solver, never building the planes.
std::optional<SemilinearMap> planes_isomorphic(const LinearizedPoly& f, const LinearizedPoly& fprime,
                                               const SearchOptions& opts = {});

/// Order of the collineation group of A_f inside the chosen group.
std::uint64_t collineation_order(const LinearizedPoly& f, Group group,
                                 const SearchOptions& opts = {});

}  // namespace scatplane

#endif
