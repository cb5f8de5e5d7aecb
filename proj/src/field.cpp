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

#include "scatplane/field.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>

namespace scatplane {
namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Construction-time arithmetic on index-encoded polynomials over F_p,
// reduced modulo the (monic) tower modulus. Slow paths only; the runtime
// tables are built once through this.
struct PolyCtx {
    std::uint32_t p;
    std::uint32_t deg;                  // e*t
    std::vector<std::uint32_t> mod;     // ascending, size deg+1
    std::vector<std::uint64_t> ppow;    // p^i, i <= deg

    PolyCtx(std::uint32_t p_, const std::vector<std::uint32_t>& m) : p(p_), deg(std::uint32_t(m.size() - 1)), mod(m) {
        ppow.resize(deg + 1);
        ppow[0] = 1;
        for (std::uint32_t i = 1; i <= deg; ++i) ppow[i] = ppow[i - 1] * p;
    }

    std::uint32_t digit(Elt x, std::uint32_t i) const { return std::uint32_t(x / ppow[i] % p); }

    Elt add(Elt a, Elt b) const {
        std::uint64_t r = 0;
        for (std::uint32_t i = 0; i < deg; ++i) r += std::uint64_t((digit(a, i) + digit(b, i)) % p) * ppow[i];
        return Elt(r);
    }

    Elt neg(Elt a) const {
        std::uint64_t r = 0;
        for (std::uint32_t i = 0; i < deg; ++i) r += std::uint64_t((p - digit(a, i)) % p) * ppow[i];
        return Elt(r);
    }

    Elt mul(Elt a, Elt b) const {
        std::array<std::int64_t, 64> acc{};
        for (std::uint32_t i = 0; i < deg; ++i) {
            std::uint32_t da = digit(a, i);
            if (!da) continue;
            for (std::uint32_t j = 0; j < deg; ++j) acc[i + j] += std::int64_t(da) * digit(b, j);
        }
        for (std::uint32_t k = 2 * deg - 2 + 1; k-- > deg;) {
            std::int64_t c = ((acc[k] % p) + p) % p;
            if (!c) continue;
            for (std::uint32_t j = 0; j <= deg; ++j) acc[k - deg + j] -= c * mod[j];
        }
        std::uint64_t r = 0;
        for (std::uint32_t i = 0; i < deg; ++i) r += std::uint64_t(((acc[i] % p) + p) % p) * ppow[i];
        return Elt(r);
    }

    Elt pow(Elt a, std::uint64_t k) const {
        Elt r = 1, b = a;
        while (k) {
            if (k & 1) r = mul(r, b);
            b = mul(b, b);
            k >>= 1;
        }
        return r;
    }
};

// f of degree n over F_p is irreducible iff x^{p^n} == x (mod f) and
// gcd(x^{p^{n/l}} - x, f) = 1 for every prime l | n. Dense little-endian
// coefficient vectors; fine at deg <= 22.
using Coeffs = std::vector<std::uint32_t>;

Coeffs poly_rem(Coeffs a, const Coeffs& f, std::uint32_t p) {
    auto trim = [p](Coeffs& c) {
        for (auto& v : c) v %= p;
        while (!c.empty() && c.back() == 0) c.pop_back();
    };
    trim(a);
    std::size_t df = f.size() - 1;
    while (a.size() > df) {
        std::uint32_t c = a.back();
        std::size_t shift = a.size() - 1 - df;
        if (c)
            for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + (p - c % p) * f[i]) % p;
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_rem(std::move(r), f, p);
}

Coeffs poly_xpowmod(std::uint64_t k, const Coeffs& f, std::uint32_t p) {
    Coeffs r{1}, b = poly_rem({0, 1}, f, p);
    while (k) {
        if (k & 1) r = poly_mulmod(r, b, f, p);
        b = poly_mulmod(b, b, f, p);
        k >>= 1;
    }
    return r;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint32_t p) {
    auto inv_mod_p = [p](std::uint32_t v) {
        std::uint32_t r = 1;
        for (std::uint32_t k = p - 2; k; k >>= 1, v = v * v % p)
            if (k & 1) r = r * v % p;
        return r;
    };
    while (!b.empty()) {
        std::uint32_t lead = b.back();
        if (lead != 1) {
            std::uint32_t il = inv_mod_p(lead);
            for (auto& v : b) v = v * il % p;
        }
        Coeffs r = poly_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const Coeffs& f, std::uint32_t p) {
    std::size_t n = f.size() - 1;
    std::uint64_t pn = 1;
    for (std::size_t i = 0; i < n; ++i) pn *= p;
    Coeffs xpn = poly_xpowmod(pn, f, p);
    Coeffs x = poly_rem({0, 1}, f, p);
    // x^{p^n} - x must vanish mod f
    Coeffs diff = xpn;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = (diff[i] + (p - x[i])) % p;
    while (!diff.empty() && diff.back() == 0) diff.pop_back();
    if (!diff.empty()) return false;
    for (std::uint64_t ell : prime_factors(n)) {
        std::uint64_t pm = 1;
        for (std::size_t i = 0; i < n / ell; ++i) pm *= p;
        Coeffs xpm = poly_xpowmod(pm, f, p);
        Coeffs d = xpm;
        d.resize(std::max(d.size(), x.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i) d[i] = (d[i] + (p - x[i])) % p;
        while (!d.empty() && d.back() == 0) d.pop_back();
        Coeffs g = poly_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

FieldTower::FieldTower(const FieldSpec& spec, bool force) : spec_(spec) {
    if (!is_prime(spec.p)) throw std::invalid_argument("field spec: p must be prime");
    if (spec.e < 1) throw std::invalid_argument("field spec: e must be positive");
    if (spec.t < 2) throw std::invalid_argument("field spec: t must be > 1");
    const std::uint32_t deg = spec.e * spec.t;

    std::uint64_t ord = 1;
    for (std::uint32_t i = 0; i < deg; ++i) {
        ord *= spec.p;
        if (ord > (1u << 26)) throw GuardError("field order exceeds the hard table cap 2^26");
    }
    if (ord > kMaxOrder && !force)
        throw GuardError("field order " + std::to_string(ord) + " exceeds table guard 2^22");
    order_ = Elt(ord);
    n_ = order_ - 1;
    q_ = 1;
    for (std::uint32_t i = 0; i < spec.e; ++i) q_ *= spec.p;
    p2_ = (spec.p == 2);

    if (spec_.modulus.empty()) {
        const auto* cw = conway_polynomial(spec.p, deg);
        if (!cw)
            throw std::invalid_argument("no shipped Conway polynomial for p=" + std::to_string(spec.p) +
                                        ", degree " + std::to_string(deg) + "; supply a modulus");
        spec_.modulus = *cw;
    }
    const auto& m = spec_.modulus;
    if (m.size() != deg + 1) throw std::invalid_argument("modulus degree must be e*t");
    if (m.back() != 1) throw std::invalid_argument("modulus must be monic");
    for (auto c : m)
        if (c >= spec.p) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(m, spec.p)) throw std::invalid_argument("modulus is reducible over F_p");

    PolyCtx ctx(spec.p, spec_.modulus);

    // generator: least index of full multiplicative order
    auto factors = prime_factors(n_);
    Elt g = 0;
    for (Elt c = 2; c < order_; ++c) {
        bool full = true;
        for (auto ell : factors)
            if (ctx.pow(c, n_ / ell) == 1) {
                full = false;
                break;
            }
        if (full && ctx.pow(c, n_) == 1) {
            g = c;
            break;
        }
    }
    if (!g) throw std::logic_error("no generator found (modulus not irreducible?)");

    exp_.resize(std::size_t(2) * n_);
    log_.assign(order_, kNoLog);
    exp_[0] = 1;
    for (std::uint32_t k = 1; k < n_; ++k) exp_[k] = ctx.mul(exp_[k - 1], g);
    for (std::uint32_t k = 0; k < n_; ++k) {
        exp_[n_ + k] = exp_[k];
        if (log_[exp_[k]] != kNoLog) throw std::logic_error("generator order defect");
        log_[exp_[k]] = k;
    }

    if (!p2_) {
        neg_tab_.resize(order_);
        for (Elt x = 0; x < order_; ++x) neg_tab_[x] = ctx.neg(x);
        if (std::uint64_t(order_) * order_ <= (1u << 21)) {
            add_tab_.resize(std::size_t(order_) * order_);
            for (Elt x = 0; x < order_; ++x)
                for (Elt y = 0; y < order_; ++y) add_tab_[std::size_t(x) * order_ + y] = ctx.add(x, y);
        }
        zech_.resize(n_);
        for (std::uint32_t k = 0; k < n_; ++k) {
            Elt s = ctx.add(1, exp_[k]);
            zech_[k] = s ? log_[s] : kNoLog;
        }
    }

    qpow_mod_.resize(spec.t);
    std::uint64_t qp = 1;
    for (std::uint32_t i = 0; i < spec.t; ++i) {
        qpow_mod_[i] = std::uint32_t(qp % n_);
        qp = qp % n_ * (q_ % n_) % n_;
    }
    ppow_mod_.resize(deg);
    std::uint64_t pp = 1;
    for (std::uint32_t j = 0; j < deg; ++j) {
        ppow_mod_[j] = std::uint32_t(pp % n_);
        pp = pp % n_ * spec.p % n_;
    }
    norm_exp_ = n_ / std::uint32_t(q_ - 1);

    // F_q = fixed set of x -> x^q
    in_subfield_.assign(order_, false);
    in_subfield_[0] = true;
    subfield_.push_back(0);
    for (std::uint32_t mlt = 0; mlt < q_ - 1; ++mlt) {
        Elt x = exp_[std::uint64_t(mlt) * norm_exp_ % n_];
        in_subfield_[x] = true;
    }
    for (Elt x = 1; x < order_; ++x)
        if (in_subfield_[x]) subfield_.push_back(x);
    if (subfield_.size() != q_) throw std::logic_error("subfield size defect");

    // {g^0,...,g^{t-1}} is F_q-independent: a shorter dependence would put the
    // generator in a proper subfield.
    basis_.resize(spec.t);
    for (std::uint32_t i = 0; i < spec.t; ++i) basis_[i] = exp_[i];
}

std::vector<Elt> FieldTower::p_frobenius_table(std::uint32_t j) const {
    std::vector<Elt> tab(order_);
    tab[0] = 0;
    std::uint32_t pe = ppow_mod_[j % (spec_.e * spec_.t)];
    for (std::uint32_t k = 0; k < n_; ++k) tab[exp_[k]] = exp_[std::uint64_t(k) * pe % n_];
    return tab;
}

Elt FieldTower::parse_element(std::string_view text) const {
    if (text.empty()) throw std::invalid_argument("empty element token");
    if (text == "0") return 0;
    if (text == "1") return 1;
    if (text.size() > 2 && text[0] == 'g' && text[1] == '^') {
        std::uint64_t k = 0;
        auto s = text.substr(2);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw std::invalid_argument("malformed element token '" + std::string(text) + "'");
        return exp_[k % n_];
    }
    std::uint64_t idx = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), idx);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed element token '" + std::string(text) + "'");
    if (idx >= order_) throw std::invalid_argument("element index " + std::to_string(idx) + " out of range");
    return Elt(idx);
}

std::string FieldTower::format_element(Elt x) const {
    if (x == 0) return "0";
    if (x == 1) return "1";
    return "g^" + std::to_string(log_[x]);
}

}  // namespace scatplane
