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

#ifndef SCATPLANE_FIELD_HPP
#define SCATPLANE_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scatplane {

/// Element of F_{q^t}, encoded as an index in [0, p^{et}): the reduced
/// polynomial sum d_i x^i maps to sum d_i p^i (digits base p, little-endian).
using Elt = std::uint32_t;

/// Thrown when a size guard trips (table build or search too large).
/// The CLI maps this to exit code 2 with a --force hint.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters of the tower F_p < F_q < F_{q^t} with q = p^e.
struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::uint32_t t = 2;
    /// Coefficients of a monic irreducible polynomial of degree e*t over F_p,
    /// ascending. Empty means: use the shipped Conway polynomial.
    std::vector<std::uint32_t> modulus;
};

/// Shipped Conway polynomial of degree n over F_p (ascending coefficients),
/// or nullptr if outside the shipped table.
const std::vector<std::uint32_t>* conway_polynomial(std::uint32_t p, std::uint32_t n);

/// Exact arithmetic in F_{q^t} via exp/log tables with respect to a fixed
/// generator g (the least element index of multiplicative order q^t-1).
/// Immutable after construction; all operations are const and thread-safe.
class FieldTower {
   public:
    static constexpr Elt kMaxOrder = 1u << 22;  // table-size guard

    explicit FieldTower(const FieldSpec& spec, bool force = false);

    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t e() const { return spec_.e; }
    std::uint32_t t() const { return spec_.t; }
    std::uint64_t q() const { return q_; }
    Elt order() const { return order_; }           // q^t
    std::uint32_t mult_order() const { return n_; }  // q^t - 1
    Elt generator() const { return exp_[1]; }

    Elt add(Elt x, Elt y) const {
        if (p2_) return x ^ y;
        if (!add_tab_.empty()) return add_tab_[std::size_t(x) * order_ + y];
        return zech_add(x, y);
    }
    Elt neg(Elt x) const { return p2_ ? x : neg_tab_[x]; }
    Elt sub(Elt x, Elt y) const { return add(x, neg(y)); }
    Elt mul(Elt x, Elt y) const {
        if (x == 0 || y == 0) return 0;
        return exp_[std::size_t(log_[x]) + log_[y]];
    }
    Elt inv(Elt x) const {
        if (x == 0) throw std::domain_error("inversion of zero");
        return exp_[n_ - log_[x]];
    }
    Elt div(Elt x, Elt y) const { return mul(x, inv(y)); }

    /// x^k (0^0 = 1).
    Elt pow(Elt x, std::uint64_t k) const {
        if (x == 0) return k == 0 ? 1 : 0;
        return exp_[std::uint64_t(log_[x]) * (k % n_) % n_];
    }

    /// x^{q^i}; i is taken mod t.
    Elt q_frobenius(Elt x, std::uint32_t i) const {
        if (x == 0) return 0;
        return exp_[std::uint64_t(log_[x]) * qpow_mod_[i % spec_.t] % n_];
    }
    /// x^{p^j}; j is taken mod e*t. These are all automorphisms of F_{q^t}.
    Elt p_frobenius(Elt x, std::uint32_t j) const {
        if (x == 0) return 0;
        return exp_[std::uint64_t(log_[x]) * ppow_mod_[j % (spec_.e * spec_.t)] % n_];
    }
    /// Full permutation table of x -> x^{p^j}, materialized on demand.
    std::vector<Elt> p_frobenius_table(std::uint32_t j) const;

    /// Relative norm N_{q^t/q}(x) = x^{(q^t-1)/(q-1)}; lands in F_q.
    Elt rel_norm(Elt x) const {
        if (x == 0) return 0;
        return exp_[std::uint64_t(log_[x]) * norm_exp_ % n_];
    }
    std::uint32_t norm_exponent() const { return norm_exp_; }  // (q^t-1)/(q-1)

    std::uint32_t log(Elt x) const {
        if (x == 0) throw std::domain_error("log of zero");
        return log_[x];
    }
    Elt exp(std::uint64_t k) const { return exp_[k % n_]; }

    /// The embedded F_q (fixed set of x -> x^q), ascending element indices.
    const std::vector<Elt>& subfield() const { return subfield_; }
    bool in_subfield(Elt x) const { return in_subfield_[x]; }

    /// Fixed F_q-basis {g^0, ..., g^{t-1}} of F_{q^t}.
    const std::vector<Elt>& power_basis() const { return basis_; }

    /// Element text: "0", "1", "g^k" (k a nonnegative decimal), or a decimal index.
    Elt parse_element(std::string_view text) const;
    std::string format_element(Elt x) const;

   private:
    Elt zech_add(Elt x, Elt y) const {
        if (x == 0) return y;
        if (y == 0) return x;
        std::uint32_t z = zech_[(log_[y] + n_ - log_[x]) % n_];
        if (z == kNoLog) return 0;
        return exp_[log_[x] + z];
    }

    static constexpr std::uint32_t kNoLog = 0xffffffffu;

    FieldSpec spec_;
    std::uint64_t q_ = 0;
    Elt order_ = 0;
    std::uint32_t n_ = 0;  // order - 1
    bool p2_ = false;
    std::vector<Elt> exp_;            // size 2n, exp_[k] = g^k
    std::vector<std::uint32_t> log_;  // size order, log_[0] = kNoLog
    std::vector<Elt> add_tab_;        // order x order, small odd-p towers only
    std::vector<std::uint32_t> zech_;  // size n, zech_[k] = log(1 + g^k)
    std::vector<Elt> neg_tab_;
    std::vector<std::uint32_t> qpow_mod_;  // q^i mod n, i < t
    std::vector<std::uint32_t> ppow_mod_;  // p^j mod n, j < e*t
    std::uint32_t norm_exp_ = 0;
    std::vector<Elt> subfield_;
    std::vector<bool> in_subfield_;
    std::vector<Elt> basis_;
};

}  // namespace scatplane

#endif
