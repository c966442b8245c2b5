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

#ifndef WPRM_IDEAL_HPP
#define WPRM_IDEAL_HPP

#include <array>
#include <future>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "graded_poly.hpp"
#include "linalg.hpp"
#include "weighted_space.hpp"

namespace wprm {

/// The three minimal generators of the vanishing ideal of P(1,a,b)(F_q):
///   f1 = x2^{(q-1)b+1} x3 - x2 x3^{(q-1)a+1}
///   f2 = x1^{(q-1)b+1} x3 - x1 x3^q
///   f3 = x1^{(q-1)a+1} x2 - x1 x2^q
/// with degrees (q-1)ab+a+b, qb+1, qa+1 in the (1,a,b) grading.
struct IdealGens {
    int q, a, b;
    RingPtr ring;
    Gpoly f1, f2, f3;

    std::array<const Gpoly*, 3> all() const { return {&f1, &f2, &f3}; }
};

inline RingPtr make_p1ab_ring(int q, int a, int b) {
    return Ring::make(WeightedSpace({1, a, b}), Gf(q));
}

inline IdealGens vanishing_gens(RingPtr ring, int q, int a, int b) {
    if (a < 1 || b < 1) throw Error(ErrorKind::invalid_argument, "a, b must be positive");
    if (std::gcd(a, b) != 1)
        throw Error(ErrorKind::gcd_violation, "gcd(a,b) = " + std::to_string(std::gcd(a, b)));
    const Gf& F = ring->field;
    if (F.q() != q) throw Error(ErrorKind::mismatched_ambient, "ring field order differs from q");
    const int neg1 = F.neg(1);
    auto mono = [&](int e1, int e2, int e3, int c) {
        return Gpoly::monomial(ring, {e1, e2, e3}, c);
    };
    Gpoly f1 = mono(0, (q - 1) * b + 1, 1, 1) + mono(0, 1, (q - 1) * a + 1, neg1);
    Gpoly f2 = mono((q - 1) * b + 1, 0, 1, 1) + mono(1, 0, q, neg1);
    Gpoly f3 = mono((q - 1) * a + 1, 1, 0, 1) + mono(1, q, 0, neg1);
    return IdealGens{q, a, b, ring, std::move(f1), std::move(f2), std::move(f3)};
}

inline IdealGens vanishing_gens(int q, int a, int b) {
    return vanishing_gens(make_p1ab_ring(q, a, b), q, a, b);
}

/// The graded minimal free resolution data of S/I:
///   0 -> S(-sigma_1) + S(-sigma_2) --phi2--> + S(-lambda_j) --phi1--> S
/// phi1 = [f1 f2 f3], phi2 = [x1, 0; A1, f3/x1; A2, -f2/x1].
struct ResolutionData {
    IdealGens gens;
    std::array<std::array<Gpoly, 2>, 3> phi2;
    std::array<int, 3> lambda;
    std::array<int, 2> sigma;
};

inline ResolutionData resolution_data(RingPtr ring, int q, int a, int b) {
    IdealGens g = vanishing_gens(ring, q, a, b);
    const Gf& F = ring->field;
    const int neg1 = F.neg(1);

    // A1 = -sum_{i=1..a} x1^{(i-1)(q-1)b} x2 x3^{(q-1)a-iq+i}
    Gpoly A1(ring);
    for (int i = 1; i <= a; ++i) {
        const int e3 = (q - 1) * a - i * q + i;
        if (e3 < 0)
            throw Error(ErrorKind::negative_exponent,
                        "A1 exponent " + std::to_string(e3) + " at i=" + std::to_string(i));
        A1 = A1 + Gpoly::monomial(ring, {(i - 1) * (q - 1) * b, 1, e3}, neg1);
    }
    // A2 = sum_{i=1..b} x1^{(i-1)(q-1)a} x2^{(q-1)b-iq+i} x3
    Gpoly A2(ring);
    for (int i = 1; i <= b; ++i) {
        const int e2 = (q - 1) * b - i * q + i;
        if (e2 < 0)
            throw Error(ErrorKind::negative_exponent,
                        "A2 exponent " + std::to_string(e2) + " at i=" + std::to_string(i));
        A2 = A2 + Gpoly::monomial(ring, {(i - 1) * (q - 1) * a, e2, 1}, 1);
    }

    Gpoly x1 = Gpoly::variable(ring, 0);
    Gpoly zero(ring);
    Gpoly f3_over_x1 = g.f3.divided_by_variable(0);
    Gpoly neg_f2_over_x1 = -g.f2.divided_by_variable(0);

    ResolutionData res{std::move(g),
                       {{{x1, zero}, {A1, f3_over_x1}, {A2, neg_f2_over_x1}}},
                       {(q - 1) * a * b + a + b, q * b + 1, q * a + 1},
                       {(q - 1) * a * b + a + b + 1, q * b + q * a + 1}};
    return res;
}

inline ResolutionData resolution_data(int q, int a, int b) {
    return resolution_data(make_p1ab_ring(q, a, b), q, a, b);
}

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Computable consequences of exactness for the resolution complex:
///  (i)   phi1 . phi2 = (0, 0) as polynomials;
///  (ii)  the 2x2 minors of phi2 are f1, -f2, f3 (rows {2,3}, {1,3}, {1,2}),
///        so they generate the ideal and rank(phi2) = 2;
///  (iii) every phi1 entry is nonzero (rank(phi1) = 1);
///  (iv)  entry (i,j) of phi2 is zero or homogeneous of degree
///        sigma_j - lambda_i, and phi1 entry j is homogeneous of degree
///        lambda_j (the maps are graded);
///  (v)   rank(phi2) + rank(phi1) = rank(S^3).
inline VerificationReport verify_resolution(const ResolutionData& res) {
    VerificationReport rep;
    const auto& g = res.gens;
    const auto& m = res.phi2;
    const std::array<const Gpoly*, 3> f = g.all();

    Gpoly col0 = (*f[0]) * m[0][0] + (*f[1]) * m[1][0] + (*f[2]) * m[2][0];
    Gpoly col1 = (*f[0]) * m[0][1] + (*f[1]) * m[1][1] + (*f[2]) * m[2][1];
    rep.checks.push_back({"phi1_phi2_zero", col0.is_zero() && col1.is_zero(),
                          "composite entries (" + to_string(col0) + ", " + to_string(col1) + ")"});

    Gpoly minor23 = m[1][0] * m[2][1] - m[2][0] * m[1][1];
    Gpoly minor13 = m[0][0] * m[2][1] - m[2][0] * m[0][1];
    Gpoly minor12 = m[0][0] * m[1][1] - m[1][0] * m[0][1];
    const bool minors_ok = !minor23.is_zero() && !minor13.is_zero() && !minor12.is_zero() &&
                           minor23 == g.f1 && minor13 == -g.f2 && minor12 == g.f3;
    rep.checks.push_back({"minors_generate_ideal", minors_ok,
                          "2x2 minors against (f1, -f2, f3)"});

    bool phi1_ok = !g.f1.is_zero() && !g.f2.is_zero() && !g.f3.is_zero();
    rep.checks.push_back({"phi1_rank_one", phi1_ok, "all phi1 entries nonzero"});

    bool graded = true;
    for (int i = 0; i < 3 && graded; ++i) {
        DegreeInfo di = f[i]->homogeneous_degree();
        graded = di.kind == DegreeInfo::Kind::homogeneous && di.degree == res.lambda[i];
    }
    for (int i = 0; i < 3 && graded; ++i)
        for (int j = 0; j < 2 && graded; ++j) {
            DegreeInfo di = m[i][j].homogeneous_degree();
            if (di.kind == DegreeInfo::Kind::every_degree) continue;
            graded = di.kind == DegreeInfo::Kind::homogeneous &&
                     di.degree == res.sigma[j] - res.lambda[i];
        }
    rep.checks.push_back({"graded_maps", graded, "entry degrees match the shifts"});

    const int rank_phi2 = minors_ok ? 2 : 0;  // a nonzero 2x2 minor exhibits rank 2
    const int rank_phi1 = phi1_ok ? 1 : 0;
    rep.checks.push_back({"rank_sum", rank_phi2 + rank_phi1 == 3,
                          "rank(phi2) + rank(phi1) = " + std::to_string(rank_phi2 + rank_phi1)});
    return rep;
}

/// dim_{F_q} of the degree-d span of { m * f_i : wdeg(m) + deg f_i = d },
/// as the rank of the product coefficient matrix in the degree-d monomial
/// basis. Zero generators (used by negative controls) contribute nothing.
inline int ideal_piece_dim(const IdealGens& gens, int d) {
    if (d < 0) throw Error(ErrorKind::invalid_argument, "degree must be non-negative");
    const auto& X = gens.ring->space;
    const Gf& F = gens.ring->field;
    const auto basis = monomial_basis(X, d);
    std::map<std::vector<int>, int> col;
    for (int i = 0; i < int(basis.size()); ++i) col[basis[i].exps] = i;

    // count rows first
    struct GenInfo {
        std::vector<Monomial> mults;
        const Gpoly* f;
    };
    std::vector<GenInfo> infos;
    int rows = 0;
    for (const Gpoly* f : gens.all()) {
        if (f->is_zero()) continue;
        DegreeInfo di = f->homogeneous_degree();
        if (di.kind != DegreeInfo::Kind::homogeneous)
            throw Error(ErrorKind::invalid_argument, "generators must be homogeneous");
        if (di.degree > d) continue;
        GenInfo gi{monomial_basis(X, d - di.degree), f};
        rows += int(gi.mults.size());
        infos.push_back(std::move(gi));
    }
    if (rows == 0 || basis.empty()) return 0;

    Mat mat(rows, int(basis.size()));
    int r = 0;
    std::vector<int> shifted(X.r());
    for (const auto& gi : infos) {
        for (const auto& mult : gi.mults) {
            for (const auto& [me, c] : gi.f->terms()) {
                for (int i = 0; i < X.r(); ++i) shifted[i] = me[i] + mult.exps[i];
                auto it = col.find(shifted);
                // every product monomial has weighted degree d by construction
                mat.at(r, it->second) = std::uint8_t(F.add(mat.at(r, it->second), c));
            }
            ++r;
        }
    }
    return rank(F, std::move(mat));
}

struct GenerationReport {
    int d_max = 0;
    std::vector<int> disagreeing_degrees;

    bool pass() const { return disagreeing_degrees.empty(); }
};

/// Degreewise comparison of the generated ideal against the full vanishing
/// space: for each d <= d_max, the span of the generator multiples must have
/// the same dimension as the kernel of evaluation at the points,
/// dim S_d - rank(evaluation matrix). Per-degree checks run in parallel.
inline GenerationReport check_generation(const IdealGens& gens, const PointSet& points, int d_max,
                                         bool parallel = true) {
    if (*gens.ring != Ring(points.space, points.field))
        throw Error(ErrorKind::mismatched_ambient, "points and generators disagree on ambient");
    const Ring& R = *gens.ring;

    auto check_one = [&](int d) -> bool {
        const int lhs = ideal_piece_dim(gens, d);
        Mat ev = evaluation_matrix(R, d, std::span<const Coords>(points.points));
        const int rhs = ev.rows() - rank(R.field, std::move(ev));
        return lhs == rhs;
    };

    std::vector<char> ok(d_max + 1, 1);
    unsigned workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    workers = std::min<unsigned>(workers, unsigned(d_max) + 1);
    if (workers <= 1) {
        for (int d = 0; d <= d_max; ++d) ok[d] = check_one(d);
    } else {
        std::vector<std::future<void>> futs;
        for (unsigned w = 0; w < workers; ++w)
            futs.push_back(std::async(std::launch::async, [&, w] {
                for (int d = int(w); d <= d_max; d += int(workers)) ok[d] = check_one(d);
            }));
        for (auto& fu : futs) fu.get();
    }

    GenerationReport rep;
    rep.d_max = d_max;
    for (int d = 0; d <= d_max; ++d)
        if (!ok[d]) rep.disagreeing_degrees.push_back(d);
    return rep;
}

}  // namespace wprm

#endif
