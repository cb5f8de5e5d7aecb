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

#include "scatplane/plane.hpp"

#include <algorithm>
#include <stdexcept>

namespace scatplane {
namespace {

// packed vectors add componentwise
std::uint64_t vec_add(const FieldTower& tw, std::uint64_t v, std::uint64_t w) {
    auto [vx, vy] = unpack_vec(tw, v);
    auto [wx, wy] = unpack_vec(tw, w);
    return pack_vec(tw, tw.add(vx, wx), tw.add(vy, wy));
}

}  // namespace

TranslationPlane::TranslationPlane(const Spread& spread) : spread_(&spread) {
    const FieldTower& tw = spread.tower();
    const std::uint64_t total = std::uint64_t(tw.order()) * tw.order();
    std::vector<bool> visited(total);
    for (std::uint32_t ci = 0; ci < spread.components().size(); ++ci) {
        std::fill(visited.begin(), visited.end(), false);
        const auto& comp = spread.components()[ci];
        for (std::uint64_t v = 0; v < total; ++v) {
            if (visited[v]) continue;
            lines_.push_back({ci, v});  // ascending scan: v is the least coset vector
            for (std::uint64_t e : comp.elems) visited[vec_add(tw, v, e)] = true;
        }
    }
}

std::uint64_t TranslationPlane::point_count() const {
    const FieldTower& tw = tower();
    return std::uint64_t(tw.order()) * tw.order();
}

std::uint64_t TranslationPlane::points_per_line() const { return tower().order(); }

std::uint64_t TranslationPlane::lines_per_point() const { return std::uint64_t(tower().order()) + 1; }

TranslationPlane plane_from_spread(const Spread& spread) {
    const PlanarReport rep = verify_planar(spread);
    if (!rep.pass())
        throw std::domain_error("spread is not planar: " + rep.witness);
    return TranslationPlane(spread);
}

AffineReport verify_affine(const TranslationPlane& plane, VerifyMode mode) {
    AffineReport out;
    if (mode == VerifyMode::Structural) {
        out.mode = "structural";
        const PlanarReport rep = verify_planar(plane.spread());
        out.pass = rep.pass();
        out.witness = rep.witness;
        return out;
    }

    out.mode = "direct";
    const FieldTower& tw = plane.tower();
    const std::uint64_t points = plane.point_count();
    if (points > (1u << 16))
        throw GuardError("direct affine verification is guarded to q^{2t} <= 2^16 points");

    // incidence structures
    const auto& lines = plane.lines();
    std::vector<std::vector<std::uint32_t>> lines_of_point(points);
    std::vector<std::vector<std::uint64_t>> points_of_line(lines.size());
    std::vector<std::vector<bool>> on_line(lines.size(), std::vector<bool>(points, false));
    for (std::uint32_t li = 0; li < lines.size(); ++li) {
        const auto& comp = plane.spread().components()[lines[li].component];
        for (std::uint64_t e : comp.elems) {
            const std::uint64_t pt = vec_add(tw, lines[li].rep, e);
            points_of_line[li].push_back(pt);
            lines_of_point[pt].push_back(li);
            on_line[li][pt] = true;
        }
    }
    for (std::uint64_t pt = 0; pt < points; ++pt)
        if (lines_of_point[pt].size() != plane.lines_per_point()) {
            out.pass = false;
            out.witness = "point " + std::to_string(pt) + " lies on " +
                          std::to_string(lines_of_point[pt].size()) + " lines";
            return out;
        }

    // two-point axiom: from each point, every other point is reached by
    // exactly one incident line
    std::vector<std::uint32_t> reach(points);
    for (std::uint64_t p = 0; p < points; ++p) {
        std::fill(reach.begin(), reach.end(), 0);
        for (std::uint32_t li : lines_of_point[p])
            for (std::uint64_t r : points_of_line[li]) ++reach[r];
        for (std::uint64_t r = 0; r < points; ++r) {
            if (r == p) continue;
            if (reach[r] != 1) {
                out.pass = false;
                out.witness = "points " + std::to_string(p) + " and " + std::to_string(r) +
                              " lie on " + std::to_string(reach[r]) + " common lines";
                return out;
            }
        }
    }

    // Playfair: for p off l there is exactly one line through p missing l
    for (std::uint64_t p = 0; p < points; ++p) {
        for (std::uint32_t li = 0; li < lines.size(); ++li) {
            if (on_line[li][p]) continue;
            std::uint32_t disjoint = 0;
            for (std::uint32_t lj : lines_of_point[p]) {
                bool meets = false;
                for (std::uint64_t r : points_of_line[lj])
                    if (on_line[li][r]) {
                        meets = true;
                        break;
                    }
                if (!meets) ++disjoint;
            }
            if (disjoint != 1) {
                out.pass = false;
                out.witness = "point " + std::to_string(p) + " has " + std::to_string(disjoint) +
                              " parallels to line " + std::to_string(li);
                return out;
            }
        }
    }
    out.pass = true;
    return out;
}

std::optional<SemilinearMap> planes_isomorphic(const LinearizedPoly& f, const LinearizedPoly& fprime,
                                               const SearchOptions& opts) {
    const FieldTower& tw = f.tower();
    if (tw.q() <= 3) throw std::domain_error("plane isomorphism criterion requires q > 3");
    if (!is_scattered(f) || !is_scattered(fprime))
        throw std::domain_error("plane isomorphism criterion requires scattered polynomials");
    return equivalence_fast(f, fprime, opts);
}

std::uint64_t collineation_order(const LinearizedPoly& f, Group group, const SearchOptions& opts) {
    return stabilizer_order(f, group, opts);
}

}  // namespace scatplane
