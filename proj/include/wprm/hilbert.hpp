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

#ifndef WPRM_HILBERT_HPP
#define WPRM_HILBERT_HPP

#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "errors.hpp"
#include "graded_poly.hpp"
#include "linalg.hpp"
#include "weighted_space.hpp"

namespace wprm {

/// Hilbert series of P(1,a,b)(F_q) as a rational function: the numerator is
/// a sparse integer polynomial, the denominator is prod (1 - t^w) over the
/// weights (1, a, b).
struct HilbertSeries {
    std::map<int, long long> numerator;  // degree -> nonzero coefficient
    std::vector<int> denom_weights;

    int max_degree() const {
        int m = 0;
        for (const auto& [d, c] : numerator)
            if (c != 0) m = std::max(m, d);
        return m;
    }

    long long eval_at_one() const {
        long long s = 0;
        for (const auto& [d, c] : numerator) s += c;
        return s;
    }

    /// Synthetic division: true iff (1 - t)^power divides the numerator.
    /// The numerator always has a zero of order exactly 2 at t = 1, matching
    /// the simple pole of the series there.
    bool divisible_by_one_minus_t(int power) const {
        int maxd = max_degree();
        std::vector<long long> c(maxd + 1, 0);
        for (const auto& [d, co] : numerator) c[d] = co;
        for (int round = 0; round < power; ++round) {
            // divide by (1 - t): quotient via running sums, remainder = sum
            long long run = 0;
            for (int d = 0; d <= maxd; ++d) run += c[d];
            if (run != 0) return false;
            std::vector<long long> qu(maxd, 0);
            long long acc = 0;
            for (int d = 0; d < maxd; ++d) {
                acc += c[d];
                qu[d] = acc;
            }
            c = std::move(qu);
            maxd = int(c.size()) - 1;
            if (maxd < 0) return round + 1 >= power;
        }
        return true;
    }
};

/// Numerator 1 - t^{qa+1} - t^{qb+1} - t^{(q-1)ab+a+b} + t^{qa+qb+1}
///           + t^{(q-1)ab+a+b+1}, with equal exponents combined (at a = 1
/// the middle terms merge into -2 t^{qb+1}).
inline HilbertSeries series_numerator(int q, int a, int b) {
    if (a < 1 || b < 1) throw Error(ErrorKind::invalid_argument, "a, b must be positive");
    if (std::gcd(a, b) != 1)
        throw Error(ErrorKind::gcd_violation, "gcd(a,b) = " + std::to_string(std::gcd(a, b)));
    HilbertSeries s;
    s.denom_weights = {1, a, b};
    auto addterm = [&s](int deg, long long coeff) {
        s.numerator[deg] += coeff;
        if (s.numerator[deg] == 0) s.numerator.erase(deg);
    };
    addterm(0, 1);
    addterm(q * a + 1, -1);
    addterm(q * b + 1, -1);
    addterm((q - 1) * a * b + a + b, -1);
    addterm(q * a + q * b + 1, 1);
    addterm((q - 1) * a * b + a + b + 1, 1);
    return s;
}

/// Power-series coefficients of numerator / prod (1 - t^w) for d = 0..d_max,
/// by stride prefix sums (one pass of c[d] += c[d-w] per weight).
inline std::vector<long long> series_expand(const HilbertSeries& s, int d_max) {
    if (d_max < 0) throw Error(ErrorKind::invalid_argument, "d_max must be non-negative");
    std::vector<long long> c(d_max + 1, 0);
    for (const auto& [d, co] : s.numerator)
        if (d <= d_max) c[d] = co;
    for (int w : s.denom_weights)
        for (int d = w; d <= d_max; ++d) c[d] += c[d - w];
    return c;
}

/// Coefficients of p(t) = (numerator for a=1) / (1-t)^2, degrees
/// 0..qb+q-1: j+1 up to q-1, then q+1 up to qb, then qb+q-j.
inline std::vector<long long> p_coefficients(int q, int b) {
    std::vector<long long> p(std::size_t(q) * b + q);
    for (int j = 0; j < int(p.size()); ++j) {
        if (j <= q - 1)
            p[j] = j + 1;
        else if (j <= q * b)
            p[j] = q + 1;
        else
            p[j] = q * b + q - j;
    }
    return p;
}

/// Closed-form Hilbert function of P(1,1,b)(F_q).
///
/// The q <= b case follows the four-branch form in d = d0*b + r0. The q > b
/// case (which needs b >= 2) uses the summation forms with d = q + k*b + r:
/// the middle branches are the expanded sums, whose totals the sweep suite
/// pins against both the series expansion and the evaluation-rank oracle.
inline long long hf_closed(int q, int b, int d) {
    if (d < 0) throw Error(ErrorKind::invalid_argument, "degree must be non-negative");
    if (b < 1) throw Error(ErrorKind::invalid_argument, "b must be positive");
    const int d0 = d / b, r0 = d % b;
    if (q <= b) {
        if (d0 <= q - 1) return r0 <= q - 1 ? (long long)d0 * (q + 1) + r0 + 1
                                            : (long long)(d0 + 1) * (q + 1);
        return r0 == 0 ? (long long)q * (q + 1) + 1 : (long long)q * (q + 1);
    }
    if (b == 1)
        throw Error(ErrorKind::unsupported_regime,
                    "no closed form for q > b with b = 1; use the series or the oracle");
    if (d <= b - 1) return d + 1;
    if (d <= q) return (long long)(d0 + 1) * (d + 1) - (long long)b * d0 * (d0 + 1) / 2;
    const int k = (d - q) / b;
    if (d <= q * b)
        return (long long)(k + 1) * (q + 1) + (long long)(d0 - k) * (d + 1) -
               (long long)b * ((long long)d0 * (d0 + 1) - (long long)k * (k + 1)) / 2;
    const long long kappa = r0 == 0 ? q + 1 : q - r0;
    if (k < q)
        return (long long)b * (k + q) * (k - q + 1) / 2 + (long long)q * (d + 1 + k) -
               (long long)b * d0 - (long long)k * d + kappa;
    return (long long)q * q + r0 + kappa;
}

/// Hilbert function by rank of the evaluation matrix (Definition route:
/// H(d) = dim S_d - dim I_d = rank of evaluation of the degree-d basis).
inline int hf_oracle(const Ring& ring, std::span<const Coords> points, int d,
                     long long matrix_budget = 400'000'000LL) {
    const long long dim = dim_graded_piece(ring.space, d);
    if (dim * (long long)points.size() > matrix_budget)
        throw Error(ErrorKind::budget_exceeded, "evaluation matrix above budget");
    Mat m = evaluation_matrix(ring, d, points);
    return rank(ring.field, std::move(m));
}

inline int hf_oracle(const PointSet& pts, int d) {
    Ring ring(pts.space, pts.field);
    return hf_oracle(ring, std::span<const Coords>(pts.points), d);
}

/// First element (q + floor((q-1)/b)) * b of the regularity set of
/// P(1,1,b)(F_q); membership is first + N*b.
inline int regularity_first(int q, int b) { return (q + (q - 1) / b) * b; }

inline bool reg_contains(int q, int b, int d) {
    return d >= regularity_first(q, b) && d % b == 0;
}

/// Degree of the Hilbert series as a rational function: max numerator degree
/// minus deg prod(1 - t^w) = 1 + a + b. For a = 1 this is qb + q - b - 1.
inline int a_invariant(int q, int a, int b) {
    return series_numerator(q, a, b).max_degree() - (1 + a + b);
}

/// Eventual periodic value of the Hilbert function: q(q+1)+1 on multiples of
/// b, q(q+1) elsewhere. Agrees with H for every d > a_invariant.
inline long long quasi_poly_eval(int q, int b, int d) {
    return (long long)q * (q + 1) + (d % b == 0 ? 1 : 0);
}

}  // namespace wprm

#endif
