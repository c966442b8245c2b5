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

#ifndef WPRM_WEIGHTED_SPACE_HPP
#define WPRM_WEIGHTED_SPACE_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace wprm {

/// Weight sequence (w_1, ..., w_r) of the weighted projective space
/// P(w_1, ..., w_r). Weights are positive with trivial gcd.
class WeightedSpace {
   public:
    explicit WeightedSpace(std::vector<int> weights) : w_(std::move(weights)) {
        if (w_.size() < 2) throw Error(ErrorKind::empty_weights, "need at least two weights");
        int g = 0;
        for (int wi : w_) {
            if (wi < 1) throw Error(ErrorKind::invalid_argument, "weights must be positive");
            g = std::gcd(g, wi);
        }
        if (g != 1)
            throw Error(ErrorKind::non_trivial_gcd,
                        "weights have common factor " + std::to_string(g));
    }

    int r() const noexcept { return int(w_.size()); }
    const std::vector<int>& weights() const noexcept { return w_; }
    int weight(int i) const { return w_.at(i); }

    bool operator==(const WeightedSpace& o) const noexcept { return w_ == o.w_; }
    bool operator!=(const WeightedSpace& o) const noexcept { return !(*this == o); }

   private:
    std::vector<int> w_;
};

/// Coordinates of a point representative: r field elements in canonical
/// integer form. Comparisons are lexicographic (std::vector order).
using Coords = std::vector<int>;

/// (lambda^{w_1} x_1, ..., lambda^{w_r} x_r) for a unit lambda.
inline Coords scale_point(const WeightedSpace& X, const Gf& F, const Coords& x, int lambda) {
    if (int(x.size()) != X.r())
        throw Error(ErrorKind::invalid_argument, "coordinate count does not match space");
    if (lambda == 0) throw Error(ErrorKind::zero_lambda, "scaling requires a unit");
    Coords y(x.size());
    for (int i = 0; i < X.r(); ++i) y[i] = F.mul(F.pow(lambda, X.weight(i)), x[i]);
    return y;
}

/// All F_q-representatives equivalent to x, sorted and deduplicated.
///
/// Two F_q-tuples represent the same rational point when one is
/// (lambda^{w_1} x_1, ..., lambda^{w_r} x_r) for a unit lambda of the
/// algebraic closure. Restricted to F_q-tuples this is the action
/// x_i -> mu^{w_i/g} x_i with mu running over F_q^* and g the gcd of the
/// weights on the support of x: lambda only enters through lambda^g, which
/// must land in F_q^* because the reduced support weights are coprime.
inline std::vector<Coords> rational_orbit(const WeightedSpace& X, const Gf& F, const Coords& x) {
    if (int(x.size()) != X.r())
        throw Error(ErrorKind::invalid_argument, "coordinate count does not match space");
    bool all_zero = true;
    int g = 0;
    for (int i = 0; i < X.r(); ++i)
        if (x[i] != 0) {
            all_zero = false;
            g = std::gcd(g, X.weight(i));
        }
    if (all_zero) throw Error(ErrorKind::zero_point, "the zero tuple represents no point");
    std::set<Coords> orbit;
    Coords y(x.size());
    for (int mu = 1; mu < F.q(); ++mu) {
        for (int i = 0; i < X.r(); ++i)
            y[i] = x[i] == 0 ? 0 : F.mul(F.pow(mu, X.weight(i) / g), x[i]);
        orbit.insert(y);
    }
    return {orbit.begin(), orbit.end()};
}

/// Canonical representative: the lexicographically smallest member of the
/// orbit of x among F_q-tuples. Idempotent and constant on orbits.
inline Coords canonicalize(const WeightedSpace& X, const Gf& F, const Coords& x) {
    auto orbit = rational_orbit(X, F, x);
    return orbit.front();
}

/// The F_q-rational points of P(w_1,...,w_r) as sorted canonical
/// representatives (or any sub-multiset thereof when built by hand).
struct PointSet {
    WeightedSpace space;
    Gf field;
    std::vector<Coords> points;

    int size() const noexcept { return int(points.size()); }
};

/// Canonicalize and deduplicate every nonzero tuple of F_q^r. For the full
/// space the result has q^{r-1} + ... + q + 1 points.
inline PointSet enumerate_points(const WeightedSpace& X, const Gf& F,
                                 long long budget = 100'000'000LL) {
    long long total = 1;
    for (int i = 0; i < X.r(); ++i) {
        total *= F.q();
        if (total > budget)
            throw Error(ErrorKind::budget_exceeded,
                        "q^r exceeds enumeration budget " + std::to_string(budget));
    }
    std::set<Coords> canon;
    Coords x(X.r(), 0);
    for (;;) {
        // odometer over F_q^r
        int i = 0;
        while (i < X.r() && x[i] == F.q() - 1) x[i++] = 0;
        if (i == X.r()) break;
        ++x[i];
        canon.insert(canonicalize(X, F, x));
    }
    return PointSet{X, F, {canon.begin(), canon.end()}};
}

/// The three point strata of P(1,1,b): [1:y2:y3], [0:y2:1], [0:1:0], with
/// sizes q^2, q, 1. These are raw orbit labels, not canonical forms; their
/// canonical images cover the whole point set exactly when gcd(b, q-1) = 1
/// (otherwise distinct labels can collide and some [0:y2:y3] orbits have no
/// representative with y3 = 1).
struct P11bStrata {
    std::vector<Coords> x1_chart;   // q^2 labels [1 : y2 : y3]
    std::vector<Coords> x3_line;    // q   labels [0 : y2 : 1]
    std::vector<Coords> infinity;   // 1   label  [0 : 1 : 0]
};

inline P11bStrata stratify_p11b(const WeightedSpace& X, const Gf& F) {
    if (X.r() != 3 || X.weight(0) != 1 || X.weight(1) != 1)
        throw Error(ErrorKind::wrong_weights, "stratification requires weights (1,1,b)");
    P11bStrata s;
    for (int y2 = 0; y2 < F.q(); ++y2)
        for (int y3 = 0; y3 < F.q(); ++y3) s.x1_chart.push_back({1, y2, y3});
    for (int y2 = 0; y2 < F.q(); ++y2) s.x3_line.push_back({0, y2, 1});
    s.infinity.push_back({0, 1, 0});
    return s;
}

}  // namespace wprm

#endif
