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

#ifndef WPRM_GRADED_POLY_HPP
#define WPRM_GRADED_POLY_HPP

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "weighted_space.hpp"

namespace wprm {

/// Ambient graded polynomial ring F_q[x_1,...,x_r] with deg x_i = w_i.
/// Shared immutable context for polynomials and points.
struct Ring {
    WeightedSpace space;
    Gf field;

    Ring(WeightedSpace s, Gf f) : space(std::move(s)), field(std::move(f)) {}

    bool operator==(const Ring& o) const { return space == o.space && field == o.field; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    static std::shared_ptr<const Ring> make(WeightedSpace s, Gf f) {
        return std::make_shared<const Ring>(std::move(s), std::move(f));
    }
};

using RingPtr = std::shared_ptr<const Ring>;

/// Exponent tuple with its weighted degree cached.
struct Monomial {
    std::vector<int> exps;
    int wdeg;

    Monomial(const WeightedSpace& X, std::vector<int> e) : exps(std::move(e)), wdeg(0) {
        if (int(exps.size()) != X.r())
            throw Error(ErrorKind::invalid_argument, "exponent count does not match space");
        for (int i = 0; i < X.r(); ++i) {
            if (exps[i] < 0) throw Error(ErrorKind::invalid_argument, "negative exponent");
            wdeg += exps[i] * X.weight(i);
        }
    }

    bool operator<(const Monomial& o) const { return exps < o.exps; }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// All monomials of weighted degree d, lexicographic on exponent tuples.
/// Empty when d is not in the weight semigroup.
inline std::vector<Monomial> monomial_basis(const WeightedSpace& X, int d) {
    if (d < 0) throw Error(ErrorKind::invalid_argument, "degree must be non-negative");
    std::vector<Monomial> out;
    std::vector<int> cur(X.r(), 0);
    const int r = X.r();
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == r - 1) {
            if (rem % X.weight(i) == 0) {
                cur[i] = rem / X.weight(i);
                out.emplace_back(X, cur);
            }
            return;
        }
        for (int m = 0; m * X.weight(i) <= rem; ++m) {
            cur[i] = m;
            self(self, i + 1, rem - m * X.weight(i));
        }
        cur[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

/// dim S_d; always equals monomial_basis(X, d).size().
inline int dim_graded_piece(const WeightedSpace& X, int d) {
    if (d < 0) throw Error(ErrorKind::invalid_argument, "degree must be non-negative");
    const int r = X.r();
    int count = 0;
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == r - 1) {
            count += rem % X.weight(i) == 0;
            return;
        }
        for (int m = 0; m * X.weight(i) <= rem; ++m) self(self, i + 1, rem - m * X.weight(i));
    };
    rec(rec, 0, d);
    return count;
}

/// Homogeneity classification of a polynomial: the zero polynomial is
/// homogeneous of every degree, a nonzero one either has a single common
/// weighted degree or none.
struct DegreeInfo {
    enum class Kind { every_degree, homogeneous, inhomogeneous } kind;
    int degree = 0;  // meaningful only when homogeneous
};

/// Sparse multivariate polynomial in its ambient ring. Terms map exponent
/// tuples to nonzero coefficients; the zero polynomial stores nothing.
class Gpoly {
   public:
    explicit Gpoly(RingPtr ring) : ring_(require(std::move(ring))) {}

    /// Coefficients are canonical representatives 0..q-1 throughout; use
    /// Gf::from_int / Gf::neg to lift ordinary integers.
    static Gpoly monomial(RingPtr ring, std::vector<int> exps, int coeff) {
        Gpoly f(std::move(ring));
        Monomial m(f.ring_->space, std::move(exps));  // validates exponents
        if (coeff < 0 || coeff >= f.field().q())
            throw Error(ErrorKind::invalid_argument, "coefficient is not a representative");
        if (coeff != 0) f.terms_[m.exps] = coeff;
        return f;
    }

    static Gpoly constant(RingPtr ring, int coeff) {
        std::vector<int> e(ring->space.r(), 0);
        return monomial(std::move(ring), std::move(e), coeff);
    }

    static Gpoly variable(RingPtr ring, int i, int exponent = 1) {
        std::vector<int> e(ring->space.r(), 0);
        e.at(i) = exponent;
        return monomial(std::move(ring), std::move(e), 1);
    }

    const RingPtr& ring() const noexcept { return ring_; }
    const Gf& field() const noexcept { return ring_->field; }
    const std::map<std::vector<int>, int>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }

    bool operator==(const Gpoly& o) const { return *ring_ == *o.ring_ && terms_ == o.terms_; }
    bool operator!=(const Gpoly& o) const { return !(*this == o); }

    Gpoly operator+(const Gpoly& o) const {
        check_ambient(o);
        Gpoly out = *this;
        for (const auto& [m, c] : o.terms_) out.add_term(m, c);
        return out;
    }

    Gpoly operator-() const {
        Gpoly out(ring_);
        for (const auto& [m, c] : terms_) out.terms_[m] = field().neg(c);
        return out;
    }

    Gpoly operator-(const Gpoly& o) const { return *this + (-o); }

    Gpoly operator*(const Gpoly& o) const {
        check_ambient(o);
        Gpoly out(ring_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) {
                std::vector<int> m(m1.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
                out.add_term(m, field().mul(c1, c2));
            }
        return out;
    }

    Gpoly scaled(int c) const {
        if (c < 0 || c >= field().q())
            throw Error(ErrorKind::invalid_argument, "coefficient is not a representative");
        Gpoly out(ring_);
        if (c == 0) return out;
        for (const auto& [m, cf] : terms_) out.terms_[m] = field().mul(cf, c);
        return out;
    }

    Gpoly times_monomial(const std::vector<int>& exps, int coeff = 1) const {
        return *this * monomial(ring_, exps, coeff);
    }

    /// Exact division by x_i^e; throws if any term is not divisible.
    Gpoly divided_by_variable(int i, int e = 1) const {
        Gpoly out(ring_);
        for (const auto& [m, c] : terms_) {
            if (m.at(i) < e)
                throw Error(ErrorKind::indivisible_term,
                            "term not divisible by x" + std::to_string(i + 1) + "^" +
                                std::to_string(e));
            std::vector<int> n = m;
            n[i] -= e;
            out.terms_[n] = c;
        }
        return out;
    }

    /// Evaluation at a point representative, with 0^0 = 1.
    int eval(const Coords& pt) const {
        if (int(pt.size()) != ring_->space.r())
            throw Error(ErrorKind::mismatched_ambient, "point dimension does not match ring");
        const Gf& F = field();
        int acc = 0;
        for (const auto& [m, c] : terms_) {
            int v = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0) v = F.mul(v, F.pow(pt[i], m[i]));
            acc = F.add(acc, v);
        }
        return acc;
    }

    DegreeInfo homogeneous_degree() const {
        if (terms_.empty()) return {DegreeInfo::Kind::every_degree, 0};
        std::optional<int> deg;
        for (const auto& [m, c] : terms_) {
            (void)c;
            int d = 0;
            for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * ring_->space.weight(i);
            if (!deg)
                deg = d;
            else if (*deg != d)
                return {DegreeInfo::Kind::inhomogeneous, 0};
        }
        return {DegreeInfo::Kind::homogeneous, *deg};
    }

   private:
    RingPtr ring_;
    std::map<std::vector<int>, int> terms_;

    static RingPtr require(RingPtr r) {
        if (!r) throw Error(ErrorKind::invalid_argument, "null ring");
        return r;
    }

    void check_ambient(const Gpoly& o) const {
        if (*ring_ != *o.ring_)
            throw Error(ErrorKind::mismatched_ambient, "operands live in different rings");
    }

    void add_term(const std::vector<int>& m, int c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_[m] = c;
            return;
        }
        int s = field().add(it->second, c);
        if (s == 0)
            terms_.erase(it);
        else
            it->second = s;
    }
};

// ---- text format: terms `c*x1^a*x2^b` joined by `+` ----

inline std::string to_string(const Gpoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        bool any_var = false;
        for (int e : m) any_var = any_var || e != 0;
        if (!any_var || c != 1) os << c;
        bool lead = !any_var || c != 1;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (lead) os << "*";
            lead = true;
            os << "x" << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Gpoly& f) { return os << to_string(f); }

/// Parse the text format back. Accepts `^1` omission and a missing `*`
/// between the coefficient and the first variable.
inline Gpoly parse_poly(const RingPtr& ring, const std::string& text) {
    Gpoly out(ring);
    const int r = ring->space.r();
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> long long {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw Error(ErrorKind::parse_error, "expected integer at offset " +
                                                                std::to_string(start));
        return std::stoll(text.substr(start, i - start));
    };
    skip_ws();
    if (i == text.size()) throw Error(ErrorKind::parse_error, "empty polynomial text");
    for (;;) {
        skip_ws();
        long long coeff = 1;
        bool saw_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = read_int();
            saw_coeff = true;
        }
        std::vector<int> exps(r, 0);
        bool saw_var = false;
        for (;;) {
            skip_ws();
            bool consumed_star = false;
            if (i < text.size() && text[i] == '*') {
                ++i;
                consumed_star = true;
                skip_ws();
            }
            if (i >= text.size() || text[i] != 'x') {
                if (consumed_star)
                    throw Error(ErrorKind::parse_error,
                                "dangling '*' at offset " + std::to_string(i));
                break;
            }
            ++i;
            long long var = read_int();
            if (var < 1 || var > r)
                throw Error(ErrorKind::parse_error, "variable x" + std::to_string(var) +
                                                        " outside x1..x" + std::to_string(r));
            long long e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                e = read_int();
            }
            exps[var - 1] += int(e);
            saw_var = true;
        }
        if (!saw_coeff && !saw_var)
            throw Error(ErrorKind::parse_error, "expected term at offset " + std::to_string(i));
        if (coeff >= ring->field.q())
            throw Error(ErrorKind::parse_error,
                        "coefficient " + std::to_string(coeff) + " is not a representative");
        out = out + Gpoly::monomial(ring, exps, int(coeff));
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '+')
            throw Error(ErrorKind::parse_error, "expected '+' at offset " + std::to_string(i));
        ++i;
    }
    return out;
}

/// Evaluation matrix of the degree-d monomial basis at the given point
/// representatives: entry (i, j) = (basis monomial i)(point j).
inline Mat evaluation_matrix(const Ring& ring, int d, std::span<const Coords> pts) {
    const auto basis = monomial_basis(ring.space, d);
    const Gf& F = ring.field;
    Mat m(int(basis.size()), int(pts.size()));
    // powers[j][i][e] = pt[j][i]^e
    const int r = ring.space.r();
    for (int j = 0; j < int(pts.size()); ++j) {
        if (int(pts[j].size()) != r)
            throw Error(ErrorKind::mismatched_ambient, "point dimension does not match ring");
        std::vector<std::vector<int>> pw(r);
        for (int i = 0; i < r; ++i) {
            int maxe = 0;
            for (const auto& b : basis) maxe = std::max(maxe, b.exps[i]);
            pw[i].resize(maxe + 1);
            pw[i][0] = 1;
            for (int e = 1; e <= maxe; ++e) pw[i][e] = F.mul(pw[i][e - 1], pts[j][i]);
        }
        for (int bi = 0; bi < int(basis.size()); ++bi) {
            int v = 1;
            for (int i = 0; i < r; ++i) v = F.mul(v, pw[i][basis[bi].exps[i]]);
            m.at(bi, j) = std::uint8_t(v);
        }
    }
    return m;
}

}  // namespace wprm

#endif
