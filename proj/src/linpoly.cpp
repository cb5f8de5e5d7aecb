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

#include "scatplane/linpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace scatplane {

LinearizedPoly::LinearizedPoly(const FieldTower& tower, std::vector<Elt> coeffs)
    : tw_(&tower), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != tower.t())
        throw std::invalid_argument("linearized polynomial needs exactly t coefficients");
    for (Elt c : coeffs_)
        if (c >= tower.order()) throw std::invalid_argument("coefficient out of range");
}

LinearizedPoly LinearizedPoly::zero(const FieldTower& tower) {
    return LinearizedPoly(tower, std::vector<Elt>(tower.t(), 0));
}

LinearizedPoly LinearizedPoly::identity(const FieldTower& tower) {
    std::vector<Elt> c(tower.t(), 0);
    c[0] = 1;
    return LinearizedPoly(tower, std::move(c));
}

LinearizedPoly LinearizedPoly::monomial(const FieldTower& tower, Elt coeff, std::uint32_t s) {
    std::vector<Elt> c(tower.t(), 0);
    c[s % tower.t()] = coeff;
    return LinearizedPoly(tower, std::move(c));
}

bool LinearizedPoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elt c) { return c == 0; });
}

std::uint32_t LinearizedPoly::q_degree() const {
    for (std::uint32_t i = std::uint32_t(coeffs_.size()); i-- > 0;)
        if (coeffs_[i]) return i;
    throw std::domain_error("q-degree of the zero polynomial is undefined");
}

Elt LinearizedPoly::evaluate(Elt x) const {
    const FieldTower& tw = *tw_;
    Elt acc = 0;
    for (std::uint32_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i]) acc = tw.add(acc, tw.mul(coeffs_[i], tw.q_frobenius(x, i)));
    return acc;
}

std::vector<Elt> LinearizedPoly::value_table() const {
    std::vector<Elt> tab(tw_->order());
    for (Elt x = 0; x < tw_->order(); ++x) tab[x] = evaluate(x);
    return tab;
}

LinearizedPoly add(const LinearizedPoly& f, const LinearizedPoly& g) {
    const FieldTower& tw = f.tower();
    std::vector<Elt> c(tw.t());
    for (std::uint32_t i = 0; i < tw.t(); ++i) c[i] = tw.add(f.coeffs()[i], g.coeffs()[i]);
    return LinearizedPoly(tw, std::move(c));
}

LinearizedPoly scale(Elt c, const LinearizedPoly& f) {
    const FieldTower& tw = f.tower();
    std::vector<Elt> out(tw.t());
    for (std::uint32_t i = 0; i < tw.t(); ++i) out[i] = tw.mul(c, f.coeffs()[i]);
    return LinearizedPoly(tw, std::move(out));
}

LinearizedPoly compose(const LinearizedPoly& f, const LinearizedPoly& g) {
    const FieldTower& tw = f.tower();
    const std::uint32_t t = tw.t();
    std::vector<Elt> c(t, 0);
    // f(g(x)) = sum_{i,j} a_i b_j^{q^i} x^{q^{i+j mod t}}
    for (std::uint32_t i = 0; i < t; ++i) {
        if (!f.coeffs()[i]) continue;
        for (std::uint32_t j = 0; j < t; ++j) {
            if (!g.coeffs()[j]) continue;
            std::uint32_t k = (i + j) % t;
            c[k] = tw.add(c[k], tw.mul(f.coeffs()[i], tw.q_frobenius(g.coeffs()[j], i)));
        }
    }
    return LinearizedPoly(tw, std::move(c));
}

std::uint32_t kernel_dimension(const LinearizedPoly& f) {
    const FieldTower& tw = f.tower();
    std::uint64_t zeros = 0;
    for (Elt x = 0; x < tw.order(); ++x)
        if (f.evaluate(x) == 0) ++zeros;
    std::uint32_t d = 0;
    while (zeros > 1) {
        if (zeros % tw.q() != 0) throw std::logic_error("kernel size is not a power of q");
        zeros /= tw.q();
        ++d;
    }
    return d;
}

bool is_scattered(const LinearizedPoly& f) {
    if (f.is_zero()) throw std::domain_error("scatteredness of the zero polynomial is undefined");
    const FieldTower& tw = f.tower();
    std::vector<bool> seen(tw.order(), false);
    std::size_t count = 0;
    for (Elt x = 1; x < tw.order(); ++x) {
        Elt m = tw.div(f.evaluate(x), x);
        if (!seen[m]) {
            seen[m] = true;
            ++count;
        }
    }
    return count == tw.norm_exponent();  // (q^t-1)/(q-1)
}

bool LinearSet::contains(Elt m) const {
    return std::binary_search(slopes.begin(), slopes.end(), m);
}

LinearSet linear_set(const LinearizedPoly& f) {
    if (f.is_zero()) throw std::domain_error("linear set of the zero polynomial is undefined");
    const FieldTower& tw = f.tower();
    std::vector<bool> seen(tw.order(), false);
    for (Elt x = 1; x < tw.order(); ++x) seen[tw.div(f.evaluate(x), x)] = true;
    LinearSet ls;
    for (Elt m = 0; m < tw.order(); ++m)
        if (seen[m]) ls.slopes.push_back(m);
    return ls;
}

LinearizedPoly interpolate_graph(const FieldTower& tower,
                                 const std::vector<std::pair<Elt, Elt>>& pairs) {
    const std::uint32_t t = tower.t();
    if (pairs.size() != t) throw std::invalid_argument("interpolation needs exactly t sample pairs");
    // Moore system: sum_j a_j x_i^{q^j} = y_i; singular iff the x_i are
    // F_q-dependent.
    std::vector<std::vector<Elt>> m(t, std::vector<Elt>(t + 1));
    for (std::uint32_t i = 0; i < t; ++i) {
        for (std::uint32_t j = 0; j < t; ++j) m[i][j] = tower.q_frobenius(pairs[i].first, j);
        m[i][t] = pairs[i].second;
    }
    for (std::uint32_t col = 0; col < t; ++col) {
        std::uint32_t piv = col;
        while (piv < t && m[piv][col] == 0) ++piv;
        if (piv == t) throw std::invalid_argument("sample points are F_q-dependent (singular system)");
        std::swap(m[col], m[piv]);
        Elt ip = tower.inv(m[col][col]);
        for (std::uint32_t j = col; j <= t; ++j) m[col][j] = tower.mul(ip, m[col][j]);
        for (std::uint32_t r = 0; r < t; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Elt factor = m[r][col];
            for (std::uint32_t j = col; j <= t; ++j)
                m[r][j] = tower.sub(m[r][j], tower.mul(factor, m[col][j]));
        }
    }
    std::vector<Elt> coeffs(t);
    for (std::uint32_t j = 0; j < t; ++j) coeffs[j] = m[j][t];
    return LinearizedPoly(tower, std::move(coeffs));
}

}  // namespace scatplane
