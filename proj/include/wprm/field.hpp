/*
   Copyright 2026 the wprm authors

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

#ifndef WPRM_FIELD_HPP
#define WPRM_FIELD_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace wprm {

/// Exact arithmetic in GF(q) = GF(p^k).
///
/// Elements are canonical integers 0..q-1: the base-p packing of the residue
/// polynomial's coefficient tuple (for k = 1 the residue itself), so 0 and 1
/// always denote the additive and multiplicative identities and the integer
/// order on representatives is total and deterministic.
///
/// Immutable after construction; all operations are const and safe to call
/// concurrently.
class Gf {
   public:
    /// GF(q) with a built-in irreducible modulus when k > 1.
    explicit Gf(int q) : Gf(q, builtin_modulus(q)) {}

    /// GF(q) with a user-supplied modulus (ascending coefficients, monic,
    /// degree k). Pass an empty modulus for prime q.
    Gf(int q, std::vector<int> modulus) {
        if (q < 2) throw Error(ErrorKind::invalid_argument, "field order must be at least 2");
        if (q > max_order)
            throw Error(ErrorKind::budget_exceeded,
                        "field order " + std::to_string(q) + " above desk-scale limit " +
                            std::to_string(max_order));
        factor_prime_power(q, p_, k_);
        q_ = q;
        if (k_ == 1) {
            if (!modulus.empty())
                throw Error(ErrorKind::invalid_argument, "prime field takes no modulus");
        } else {
            validate_modulus(modulus);
            modulus_ = std::move(modulus);
        }
        build_tables();
    }

    int p() const noexcept { return p_; }
    int k() const noexcept { return k_; }
    int q() const noexcept { return q_; }
    /// Empty for prime fields.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg_[check(b)])]; }
    int neg(int a) const { return neg_[check(a)]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }

    int inv(int a) const {
        if (check(a) == 0) throw Error(ErrorKind::division_by_zero, "inverse of zero");
        return inv_[a];
    }

    int div(int a, int b) const { return mul(a, inv(b)); }

    /// a^e for any integer e; 0^0 = 1 by the evaluation convention, negative
    /// exponents require a != 0.
    int pow(int a, long long e) const {
        check(a);
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        if (a == 0) return e == 0 ? 1 : 0;
        int r = 1;
        long long m = e % (q_ - 1);  // a^(q-1) = 1 for a != 0
        while (m > 0) {
            if (m & 1) r = mul(r, a);
            a = mul(a, a);
            m >>= 1;
        }
        return r;
    }

    /// Image of an ordinary integer under Z -> GF(q), i.e. n * 1. Lands in
    /// the prime subfield.
    int from_int(long long n) const {
        long long r = n % p_;
        if (r < 0) r += p_;
        return int(r);
    }

    /// All q elements in representative order 0, 1, ..., q-1.
    std::vector<int> elements() const {
        std::vector<int> e(q_);
        std::iota(e.begin(), e.end(), 0);
        return e;
    }

    bool operator==(const Gf& other) const noexcept {
        return q_ == other.q_ && modulus_ == other.modulus_;
    }
    bool operator!=(const Gf& other) const noexcept { return !(*this == other); }

    /// Raw table access for inner loops (rank computation, codeword
    /// enumeration); row-major q x q.
    const std::uint8_t* add_table() const noexcept { return add_.data(); }
    const std::uint8_t* mul_table() const noexcept { return mul_.data(); }

    static constexpr int max_order = 256;

   private:
    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;

    int check(int a) const {
        if (a < 0 || a >= q_)
            throw Error(ErrorKind::invalid_argument,
                        "element " + std::to_string(a) + " outside 0.." + std::to_string(q_ - 1));
        return a;
    }

    std::size_t idx(int a, int b) const { return std::size_t(check(a)) * q_ + check(b); }

    static void factor_prime_power(int q, int& p, int& k) {
        if (q < 2) throw Error(ErrorKind::invalid_argument, "field order must be at least 2");
        int m = q;
        for (p = 2; p * p <= m; ++p)
            if (m % p == 0) break;
        if (p * p > m) p = m;
        k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        if (m != 1)
            throw Error(ErrorKind::not_prime_power,
                        std::to_string(q) + " has two distinct prime factors");
    }

    static std::vector<int> builtin_modulus(int q) {
        // fixed constants; a user-supplied modulus overrides
        static const std::map<int, std::vector<int>> table = {
            {4, {1, 1, 1}},        // t^2 + t + 1
            {8, {1, 1, 0, 1}},     // t^3 + t + 1
            {9, {1, 0, 1}},        // t^2 + 1
            {16, {1, 1, 0, 0, 1}}, // t^4 + t + 1
            {25, {1, 1, 1}},       // t^2 + t + 1
            {27, {1, 2, 0, 1}},    // t^3 + 2t + 1
        };
        int p, k;
        factor_prime_power(q, p, k);
        if (k == 1) return {};
        auto it = table.find(q);
        if (it == table.end())
            throw Error(ErrorKind::no_builtin_modulus,
                        "no built-in modulus for GF(" + std::to_string(q) +
                            "), supply one explicitly");
        return it->second;
    }

    // -- polynomial helpers over GF(p), ascending coefficient vectors --

    static std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
        const int dm = int(m.size()) - 1;
        for (int d = int(a.size()) - 1; d >= dm; --d) {
            int c = a[d];
            if (c == 0) continue;
            for (int i = 0; i <= dm; ++i) {
                int& t = a[d - dm + i];
                t = (t - c * m[i]) % p;
                if (t < 0) t += p;
            }
        }
        a.resize(dm);
        return a;
    }

    void validate_modulus(const std::vector<int>& m) const {
        if (int(m.size()) != k_ + 1 || m.back() != 1)
            throw Error(ErrorKind::invalid_argument,
                        "modulus must be monic of degree " + std::to_string(k_));
        for (int c : m)
            if (c < 0 || c >= p_)
                throw Error(ErrorKind::invalid_argument, "modulus coefficients must lie in GF(p)");
        // Trial division by every monic polynomial of degree 1..k/2.
        for (int deg = 1; 2 * deg <= k_; ++deg) {
            long long count = 1;
            for (int i = 0; i < deg; ++i) count *= p_;
            for (long long code = 0; code < count; ++code) {
                std::vector<int> div(deg + 1);
                long long c = code;
                for (int i = 0; i < deg; ++i) {
                    div[i] = int(c % p_);
                    c /= p_;
                }
                div[deg] = 1;
                std::vector<int> rem = poly_mod(m, div, p_);
                bool zero = true;
                for (int x : rem) zero = zero && x == 0;
                if (zero)
                    throw Error(ErrorKind::reducible_modulus,
                                "modulus is divisible by a degree-" + std::to_string(deg) +
                                    " polynomial");
            }
        }
    }

    std::vector<int> digits(int x) const {
        std::vector<int> t(k_);
        for (int i = 0; i < k_; ++i) {
            t[i] = x % p_;
            x /= p_;
        }
        return t;
    }

    int pack(const std::vector<int>& t) const {
        int v = 0;
        for (int i = k_ - 1; i >= 0; --i) v = v * p_ + t[i];
        return v;
    }

    void build_tables() {
        add_.assign(std::size_t(q_) * q_, 0);
        mul_.assign(std::size_t(q_) * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (int a = 0; a < q_; ++a) {
            const auto ta = digits(a);
            std::vector<int> tn(k_);
            for (int i = 0; i < k_; ++i) tn[i] = (p_ - ta[i]) % p_;
            neg_[a] = std::uint8_t(pack(tn));
            for (int b = 0; b < q_; ++b) {
                const auto tb = digits(b);
                std::vector<int> ts(k_);
                for (int i = 0; i < k_; ++i) ts[i] = (ta[i] + tb[i]) % p_;
                add_[std::size_t(a) * q_ + b] = std::uint8_t(pack(ts));

                std::vector<int> prod(2 * k_ - 1, 0);
                for (int i = 0; i < k_; ++i)
                    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ta[i] * tb[j]) % p_;
                if (k_ > 1) prod = poly_mod(prod, modulus_, p_);
                prod.resize(k_);
                mul_[std::size_t(a) * q_ + b] = std::uint8_t(pack(prod));
            }
        }
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul_[std::size_t(a) * q_ + b] == 1) {
                    inv_[a] = std::uint8_t(b);
                    break;
                }
    }
};

}  // namespace wprm

#endif
