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

#include "scatplane/subspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace scatplane {
namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void merge(std::size_t i, std::size_t j) { parent[find(i)] = find(j); }
};

bool is_line_poly(const LinearizedPoly& f) {
    const auto& c = f.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i]) return false;
    return c[0] != 0;
}

// Per-automorphism data for the (a,b) scan: sigma images of the fixed basis
// and of its f-values, plus the inverted 2x2 determinant at (i1,i2).
struct SigmaFrame {
    std::vector<Elt> xs, fs;
    Elt inv_det;
};

SigmaFrame make_frame(const FieldTower& tw, const std::vector<Elt>& basis,
                      const std::vector<Elt>& fvals, std::uint32_t sigma,
                      std::uint32_t i1, std::uint32_t i2) {
    SigmaFrame fr;
    const std::uint32_t t = tw.t();
    fr.xs.resize(t);
    fr.fs.resize(t);
    for (std::uint32_t i = 0; i < t; ++i) {
        fr.xs[i] = tw.p_frobenius(basis[i], sigma);
        fr.fs[i] = tw.p_frobenius(fvals[i], sigma);
    }
    Elt det = tw.sub(tw.mul(fr.xs[i1], fr.fs[i2]), tw.mul(fr.xs[i2], fr.fs[i1]));
    fr.inv_det = tw.inv(det);  // nonzero: det = D^sigma with D != 0
    return fr;
}

struct ScanResult {
    bool found = false;
    SemilinearMap witness;
    std::uint64_t count = 0;
};

// Scans a in [a_begin, a_end), b over all of F_{q^t}. For each candidate the
// second matrix row is the unique solution of the 2x2 system at (i1,i2); a
// candidate is accepted when it is invertible and maps every remaining basis
// vector of U_f into the graph of f'. In witness mode stops at the first
// (lexicographically least) accepted pair of the range.
ScanResult scan_ab(const FieldTower& tw, const std::vector<Elt>& fprime_tab,
                   const SigmaFrame& fr, std::uint32_t sigma, std::uint32_t i1, std::uint32_t i2,
                   Elt a_begin, Elt a_end, bool counting) {
    ScanResult res;
    const std::uint32_t t = tw.t();
    const Elt order = tw.order();
    std::vector<Elt> ax(t);
    for (Elt a = a_begin; a < a_end; ++a) {
        for (std::uint32_t i = 0; i < t; ++i) ax[i] = tw.mul(a, fr.xs[i]);
        for (Elt b = (a == 0 ? 1 : 0); b < order; ++b) {
            const Elt u1 = tw.add(ax[i1], tw.mul(b, fr.fs[i1]));
            const Elt u2 = tw.add(ax[i2], tw.mul(b, fr.fs[i2]));
            const Elt z1 = fprime_tab[u1];
            const Elt z2 = fprime_tab[u2];
            const Elt c =
                tw.mul(tw.sub(tw.mul(z1, fr.fs[i2]), tw.mul(z2, fr.fs[i1])), fr.inv_det);
            const Elt d =
                tw.mul(tw.sub(tw.mul(fr.xs[i1], z2), tw.mul(fr.xs[i2], z1)), fr.inv_det);
            if (tw.mul(a, d) == tw.mul(b, c)) continue;  // singular
            bool ok = true;
            for (std::uint32_t i = 0; i < t; ++i) {
                if (i == i1 || i == i2) continue;
                const Elt u = tw.add(ax[i], tw.mul(b, fr.fs[i]));
                if (tw.add(tw.mul(c, fr.xs[i]), tw.mul(d, fr.fs[i])) != fprime_tab[u]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (counting) {
                ++res.count;
            } else {
                res.found = true;
                res.witness = SemilinearMap{a, b, c, d, sigma};
                return res;
            }
        }
    }
    return res;
}

// Runs scan_ab over the whole (a,b) plane, sharded across workers by
// contiguous a-ranges. Witness mode merges to the least (a,b); count mode
// adds shard counts.
ScanResult scan_sigma(const FieldTower& tw, const std::vector<Elt>& fprime_tab,
                      const SigmaFrame& fr, std::uint32_t sigma, std::uint32_t i1, std::uint32_t i2,
                      bool counting, unsigned workers) {
    const Elt order = tw.order();
    if (workers <= 1) return scan_ab(tw, fprime_tab, fr, sigma, i1, i2, 0, order, counting);
    workers = std::min<unsigned>(workers, order);
    std::vector<ScanResult> parts(workers);
    std::vector<std::thread> pool;
    const Elt chunk = (order + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const Elt lo = Elt(w) * chunk;
        const Elt hi = std::min<Elt>(lo + chunk, order);
        if (lo >= hi) break;
        pool.emplace_back([&, w, lo, hi] {
            parts[w] = scan_ab(tw, fprime_tab, fr, sigma, i1, i2, lo, hi, counting);
        });
    }
    for (auto& th : pool) th.join();
    ScanResult merged;
    for (const auto& part : parts) {
        merged.count += part.count;
        if (part.found && !merged.found) merged = part;  // ranges are ascending in a
    }
    return merged;
}

void check_search_preconditions(const LinearizedPoly& f, const LinearizedPoly& fprime,
                                const SearchOptions& opts) {
    if (&f.tower() != &fprime.tower())
        throw std::invalid_argument("equivalence requires polynomials over the same tower");
    if (f.is_zero() || fprime.is_zero())
        throw std::domain_error("equivalence of the zero polynomial is undefined");
    const std::uint64_t plane = std::uint64_t(f.tower().order()) * f.tower().order();
    if (plane > (1u << 22) && !opts.force)
        throw GuardError("equivalence search size q^{2t} = " + std::to_string(plane) +
                         " exceeds guard 2^22 (use force)");
}

// First basis pair with x_{i1} f(x_{i2}) != x_{i2} f(x_{i1}); exists exactly
// when f is not multiplication by a scalar.
std::pair<std::uint32_t, std::uint32_t> det_pair(const FieldTower& tw,
                                                 const std::vector<Elt>& basis,
                                                 const std::vector<Elt>& fvals) {
    for (std::uint32_t i = 0; i < basis.size(); ++i)
        for (std::uint32_t j = i + 1; j < basis.size(); ++j)
            if (tw.mul(basis[i], fvals[j]) != tw.mul(basis[j], fvals[i])) return {i, j};
    throw std::logic_error("no determinant pair for a non-scalar polynomial");
}

}  // namespace

Subspace2 Subspace2::from_basis(const FieldTower& tower, std::vector<std::array<Elt, 2>> basis) {
    if (basis.size() != tower.t()) throw std::invalid_argument("basis must have t vectors");
    std::vector<std::array<Elt, 2>> span{{0, 0}};
    for (const auto& v : basis) {
        std::size_t cur = span.size();
        for (Elt alpha : tower.subfield()) {
            if (alpha == 0) continue;
            std::array<Elt, 2> av{tower.mul(alpha, v[0]), tower.mul(alpha, v[1])};
            for (std::size_t i = 0; i < cur; ++i)
                span.push_back({tower.add(span[i][0], av[0]), tower.add(span[i][1], av[1])});
        }
    }
    Subspace2 u;
    u.tw_ = &tower;
    u.basis_ = std::move(basis);
    u.elems_.reserve(span.size());
    for (const auto& v : span) u.elems_.push_back(pack_vec(tower, v[0], v[1]));
    std::sort(u.elems_.begin(), u.elems_.end());
    if (std::adjacent_find(u.elems_.begin(), u.elems_.end()) != u.elems_.end())
        throw std::invalid_argument("basis vectors are F_q-dependent");
    return u;
}

Subspace2 Subspace2::from_poly(const LinearizedPoly& f) {
    const FieldTower& tw = f.tower();
    Subspace2 u;
    u.tw_ = &tw;
    for (Elt x : tw.power_basis()) u.basis_.push_back({x, f.evaluate(x)});
    u.elems_.resize(tw.order());
    for (Elt x = 0; x < tw.order(); ++x) u.elems_[x] = pack_vec(tw, x, f.evaluate(x));
    std::sort(u.elems_.begin(), u.elems_.end());
    return u;
}

bool Subspace2::contains(Elt x, Elt y) const {
    return std::binary_search(elems_.begin(), elems_.end(), pack_vec(*tw_, x, y));
}

std::pair<Elt, Elt> SemilinearMap::apply(const FieldTower& tw, Elt x, Elt y) const {
    const Elt xs = tw.p_frobenius(x, sigma);
    const Elt ys = tw.p_frobenius(y, sigma);
    return {tw.add(tw.mul(a, xs), tw.mul(b, ys)), tw.add(tw.mul(c, xs), tw.mul(d, ys))};
}

Elt SemilinearMap::det(const FieldTower& tw) const {
    return tw.sub(tw.mul(a, d), tw.mul(b, c));
}

SemilinearMap compose(const FieldTower& tw, const SemilinearMap& lhs, const SemilinearMap& rhs) {
    // v -> A2 (A1 v^{s1})^{s2} = (A2 A1^{s2}) v^{s1+s2}
    const std::uint32_t et = tw.e() * tw.t();
    SemilinearMap out;
    out.sigma = (lhs.sigma + rhs.sigma) % et;
    const Elt ra = tw.p_frobenius(rhs.a, lhs.sigma), rb = tw.p_frobenius(rhs.b, lhs.sigma);
    const Elt rc = tw.p_frobenius(rhs.c, lhs.sigma), rd = tw.p_frobenius(rhs.d, lhs.sigma);
    out.a = tw.add(tw.mul(lhs.a, ra), tw.mul(lhs.b, rc));
    out.b = tw.add(tw.mul(lhs.a, rb), tw.mul(lhs.b, rd));
    out.c = tw.add(tw.mul(lhs.c, ra), tw.mul(lhs.d, rc));
    out.d = tw.add(tw.mul(lhs.c, rb), tw.mul(lhs.d, rd));
    return out;
}

SemilinearMap inverse(const FieldTower& tw, const SemilinearMap& map) {
    const std::uint32_t et = tw.e() * tw.t();
    const Elt det = map.det(tw);
    if (det == 0) throw std::domain_error("singular semilinear map");
    const Elt id = tw.inv(det);
    SemilinearMap adj{tw.mul(id, map.d), tw.neg(tw.mul(id, map.b)), tw.neg(tw.mul(id, map.c)),
                      tw.mul(id, map.a), 0};
    const std::uint32_t inv_sigma = (et - map.sigma % et) % et;
    SemilinearMap out;
    out.sigma = inv_sigma;
    out.a = tw.p_frobenius(adj.a, inv_sigma);
    out.b = tw.p_frobenius(adj.b, inv_sigma);
    out.c = tw.p_frobenius(adj.c, inv_sigma);
    out.d = tw.p_frobenius(adj.d, inv_sigma);
    return out;
}

bool is_scattered_subspace(const Subspace2& u) {
    const FieldTower& tw = u.tower();
    std::vector<std::uint32_t> per_slope(tw.order(), 0);
    std::uint32_t at_infinity = 0;
    const std::uint32_t max_fiber = std::uint32_t(tw.q()) - 1;
    for (std::uint64_t packed : u.elements()) {
        auto [x, y] = unpack_vec(tw, packed);
        if (x == 0 && y == 0) continue;
        std::uint32_t& count = (x == 0) ? at_infinity : per_slope[tw.div(y, x)];
        if (++count > max_fiber) return false;
    }
    return true;
}

LinearSet linear_set_of(const Subspace2& u) {
    const FieldTower& tw = u.tower();
    std::vector<bool> seen(tw.order(), false);
    LinearSet ls;
    for (std::uint64_t packed : u.elements()) {
        auto [x, y] = unpack_vec(tw, packed);
        if (x == 0) {
            if (y != 0) ls.contains_infinity = true;
            continue;
        }
        seen[tw.div(y, x)] = true;
    }
    for (Elt m = 0; m < tw.order(); ++m)
        if (seen[m]) ls.slopes.push_back(m);
    return ls;
}

Subspace2 apply_semilinear(const SemilinearMap& map, const Subspace2& u) {
    const FieldTower& tw = u.tower();
    if (map.det(tw) == 0) throw std::domain_error("singular semilinear map");
    std::vector<std::array<Elt, 2>> basis;
    basis.reserve(u.basis().size());
    for (const auto& v : u.basis()) {
        auto [x, y] = map.apply(tw, v[0], v[1]);
        basis.push_back({x, y});
    }
    return Subspace2::from_basis(tw, std::move(basis));
}

std::optional<SemilinearMap> equivalence_fast(const LinearizedPoly& f, const LinearizedPoly& fprime,
                                              const SearchOptions& opts) {
    check_search_preconditions(f, fprime, opts);
    const FieldTower& tw = f.tower();
    // U_f is an F_{q^t}-line iff f is multiplication by a scalar; semilinear
    // maps carry lines to lines, so these pair off separately.
    const bool line_f = is_line_poly(f), line_fp = is_line_poly(fprime);
    if (line_f || line_fp) {
        if (line_f && line_fp)
            return SemilinearMap{1, 0, tw.sub(fprime.coeffs()[0], f.coeffs()[0]), 1, 0};
        return std::nullopt;
    }
    const std::vector<Elt>& basis = tw.power_basis();
    std::vector<Elt> fvals(tw.t());
    for (std::uint32_t i = 0; i < tw.t(); ++i) fvals[i] = f.evaluate(basis[i]);
    const auto [i1, i2] = det_pair(tw, basis, fvals);
    const std::vector<Elt> fprime_tab = fprime.value_table();
    for (std::uint32_t sigma = 0; sigma < tw.e() * tw.t(); ++sigma) {
        SigmaFrame fr = make_frame(tw, basis, fvals, sigma, i1, i2);
        ScanResult r = scan_sigma(tw, fprime_tab, fr, sigma, i1, i2, false, opts.workers);
        if (r.found) return r.witness;
    }
    return std::nullopt;
}

std::optional<SemilinearMap> equivalence_oracle(const LinearizedPoly& f,
                                                const LinearizedPoly& fprime) {
    if (&f.tower() != &fprime.tower())
        throw std::invalid_argument("equivalence requires polynomials over the same tower");
    if (f.is_zero() || fprime.is_zero())
        throw std::domain_error("equivalence of the zero polynomial is undefined");
    const FieldTower& tw = f.tower();
    if (tw.order() > 32) throw GuardError("oracle enumeration is guarded to q^t <= 32");
    const std::vector<Elt>& basis = tw.power_basis();
    std::vector<Elt> fvals(tw.t());
    for (std::uint32_t i = 0; i < tw.t(); ++i) fvals[i] = f.evaluate(basis[i]);
    const std::vector<Elt> fprime_tab = fprime.value_table();
    const Subspace2 uf = Subspace2::from_poly(f);
    const Subspace2 ufp = Subspace2::from_poly(fprime);
    const Elt order = tw.order();
    for (std::uint32_t sigma = 0; sigma < tw.e() * tw.t(); ++sigma) {
        const std::vector<Elt> st = tw.p_frobenius_table(sigma);
        for (Elt a = 0; a < order; ++a)
            for (Elt b = 0; b < order; ++b)
                for (Elt c = 0; c < order; ++c)
                    for (Elt d = 0; d < order; ++d) {
                        if (tw.mul(a, d) == tw.mul(b, c)) continue;
                        bool ok = true;
                        for (std::uint32_t i = 0; i < tw.t() && ok; ++i) {
                            const Elt xs = st[basis[i]], fs = st[fvals[i]];
                            const Elt u = tw.add(tw.mul(a, xs), tw.mul(b, fs));
                            const Elt w = tw.add(tw.mul(c, xs), tw.mul(d, fs));
                            ok = (w == fprime_tab[u]);
                        }
                        if (!ok) continue;
                        SemilinearMap witness{a, b, c, d, sigma};
                        if (!(apply_semilinear(witness, uf) == ufp))
                            throw std::logic_error("oracle witness failed the setwise check");
                        return witness;
                    }
    }
    return std::nullopt;
}

std::uint64_t stabilizer_order(const LinearizedPoly& f, Group group, const SearchOptions& opts) {
    const FieldTower& tw = f.tower();
    if (tw.q() <= 3) throw std::domain_error("stabilizer order requires q > 3");
    if (!is_scattered(f)) throw std::domain_error("stabilizer order requires a scattered polynomial");
    check_search_preconditions(f, f, opts);
    const std::vector<Elt>& basis = tw.power_basis();
    std::vector<Elt> fvals(tw.t());
    for (std::uint32_t i = 0; i < tw.t(); ++i) fvals[i] = f.evaluate(basis[i]);
    const auto [i1, i2] = det_pair(tw, basis, fvals);
    const std::vector<Elt> f_tab = f.value_table();
    const std::uint32_t sigma_count = (group == Group::GL) ? 1 : tw.e() * tw.t();
    std::uint64_t stab_u = 0;
    for (std::uint32_t sigma = 0; sigma < sigma_count; ++sigma) {
        SigmaFrame fr = make_frame(tw, basis, fvals, sigma, i1, i2);
        stab_u += scan_sigma(tw, f_tab, fr, sigma, i1, i2, true, opts.workers).count;
    }
    // Spread components hU_f are one per F_q^*-coset; every coset is reached
    // by a scalar matrix, so the B_f-stabilizer splits into (q^t-1)/(q-1)
    // cosets of the U_f-stabilizer.
    return stab_u * ((tw.order() - 1) / (tw.q() - 1));
}

std::vector<std::vector<std::size_t>> orbit_census(const std::vector<LinearizedPoly>& family,
                                                   const SearchOptions& opts) {
    UnionFind uf(family.size());
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (uf.find(i) == uf.find(j)) continue;
            if (equivalence_fast(family[i], family[j], opts)) uf.merge(i, j);
        }
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<std::size_t> where(family.size(), SIZE_MAX);
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::size_t root = uf.find(i);
        if (where[root] == SIZE_MAX) {
            where[root] = orbits.size();
            orbits.emplace_back();
        }
        orbits[where[root]].push_back(i);
    }
    return orbits;
}

std::pair<LinearizedPoly, SemilinearMap> normalize_poly(const LinearizedPoly& f) {
    if (!is_scattered(f)) throw std::domain_error("normalization requires a scattered polynomial");
    const FieldTower& tw = f.tower();
    const LinearSet ls = linear_set(f);
    if (tw.order() + 1 - ls.slopes.size() < 3)
        throw std::domain_error("no projective points available to avoid (requires q > 2)");

    // mu maps the point of slope m to the point (a + b m : c + d m); it is
    // admissible when no image hits slope 0, slope 1 or infinity.
    auto admissible = [&](Elt a, Elt b, Elt c, Elt d) {
        for (Elt m : ls.slopes) {
            const Elt x = tw.add(a, tw.mul(b, m));
            const Elt y = tw.add(c, tw.mul(d, m));
            if (x == 0 || y == 0 || x == y) return false;
        }
        return true;
    };
    auto finish = [&](const SemilinearMap& mu) {
        std::vector<std::pair<Elt, Elt>> pairs;
        for (Elt x : tw.power_basis()) {
            auto [u, w] = mu.apply(tw, x, f.evaluate(x));
            pairs.emplace_back(u, w);
        }
        return std::make_pair(interpolate_graph(tw, pairs), mu);
    };

    if (admissible(1, 0, 0, 1)) return finish(SemilinearMap::identity());
    const Elt order = tw.order();
    for (Elt a = 0; a < order; ++a)
        for (Elt b = 0; b < order; ++b)
            for (Elt c = 0; c < order; ++c)
                for (Elt d = 0; d < order; ++d) {
                    if (tw.mul(a, d) == tw.mul(b, c)) continue;
                    if (!admissible(a, b, c, d)) continue;
                    return finish(SemilinearMap{a, b, c, d, 0});
                }
    throw std::logic_error("no admissible projectivity found");
}

}  // namespace scatplane
