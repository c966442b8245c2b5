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

#ifndef WPRM_CODE_HPP
#define WPRM_CODE_HPP

#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graded_poly.hpp"
#include "hilbert.hpp"
#include "linalg.hpp"
#include "weighted_space.hpp"

namespace wprm {

/// Evaluation (generator) matrix of the code C_{d,Y}: row i holds the values
/// of the i-th degree-d basis monomial at the ordered points. Rank = K.
struct GeneratorMatrix {
    RingPtr ring;
    int d;
    std::vector<Coords> points;
    Mat m;  // dim S_d rows, |points| columns

    int n() const noexcept { return m.cols(); }
};

inline GeneratorMatrix build_generator_matrix(const RingPtr& ring, int d,
                                              std::vector<Coords> points,
                                              long long matrix_budget = 400'000'000LL) {
    if (d < 0) throw Error(ErrorKind::invalid_argument, "degree must be non-negative");
    if (points.empty()) throw Error(ErrorKind::invalid_argument, "empty evaluation set");
    const long long rows = dim_graded_piece(ring->space, d);
    if (rows * (long long)points.size() > matrix_budget)
        throw Error(ErrorKind::budget_exceeded, "generator matrix above budget");
    Mat m = evaluation_matrix(*ring, d, std::span<const Coords>(points));
    return GeneratorMatrix{ring, d, std::move(points), std::move(m)};
}

inline int code_dimension(const GeneratorMatrix& g) { return rank(g.ring->field, g.m); }

/// Minimum distance of C_{d,Y} on P(1,1,b)(F_q) by the closed decision
/// procedure:
///   1 <= d < q            -> q (q - d + 1)
///   d >= q, k = (d-q)/b   -> max(q - k, 1)
/// The degree-0 code (constants) is outside the case analysis; callers that
/// want it use the delta = N convention at the code_params level.
inline long long mindist_formula(int q, int b, int d) {
    if (d == 0)
        throw Error(ErrorKind::unsupported_degree,
                    "degree 0 has no formula case; the constant code has delta = N");
    if (d < 0) throw Error(ErrorKind::invalid_argument, "degree must be positive");
    if (b < 1) throw Error(ErrorKind::invalid_argument, "b must be positive");
    if (d < q) return (long long)q * (q - d + 1);
    const int k = (d - q) / b;
    return std::max(q - k, 1);
}

/// Default exhaustive-search budget (codeword count); WPRM_BUDGET overrides.
inline long long default_budget() {
    if (const char* env = std::getenv("WPRM_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw Error(ErrorKind::invalid_argument, "WPRM_BUDGET must be a positive integer");
    }
    return 1LL << 24;
}

/// Exhaustive minimum Hamming weight over all q^K - 1 nonzero codewords,
/// enumerated over a row-reduced basis. The message odometer updates the
/// current codeword by one row-addition per digit change, so the cost is
/// O(q^K * N) with small constants. Deterministic.
inline int mindist_oracle(const GeneratorMatrix& g, long long budget = default_budget()) {
    const Gf& F = g.ring->field;
    const int q = F.q();
    RowReduction rr = row_reduce(F, g.m);
    const int K = rr.rank;
    const int n = g.m.cols();
    if (K == 0) throw Error(ErrorKind::invalid_argument, "zero code has no minimum distance");

    long long count = 1;
    for (int i = 0; i < K; ++i) {
        if (count > std::numeric_limits<long long>::max() / q || count * q - 1 > budget)
            throw Error(ErrorKind::budget_exceeded,
                        "q^" + std::to_string(K) + " - 1 codewords exceed budget " +
                            std::to_string(budget));
        count *= q;
    }

    const std::uint8_t* add_t = F.add_table();
    std::vector<std::uint8_t> cw(n, 0);
    std::vector<int> digits(K, 0);
    auto add_row = [&](int i) {
        const std::uint8_t* row = rr.reduced.row(i);
        for (int j = 0; j < n; ++j) cw[j] = add_t[std::size_t(cw[j]) * q + row[j]];
    };
    int best = n + 1;
    for (;;) {
        int i = 0;
        while (i < K && digits[i] == q - 1) {
            digits[i] = 0;
            add_row(i);  // q-th addition returns the digit's contribution to zero
            ++i;
        }
        if (i == K) break;
        ++digits[i];
        add_row(i);
        int w = 0;
        for (int j = 0; j < n; ++j) w += cw[j] != 0;
        if (w < best) best = w;
    }
    return best;
}

enum class DistanceMode { formula, oracle, both };

enum class DeltaProvenance { formula, oracle, both_agree, convention };

inline const char* provenance_name(DeltaProvenance p) {
    switch (p) {
        case DeltaProvenance::formula: return "formula";
        case DeltaProvenance::oracle: return "oracle";
        case DeltaProvenance::both_agree: return "both-agree";
        case DeltaProvenance::convention: return "convention";
    }
    return "?";
}

/// The [N, K, delta] triple with provenance. N comes from point enumeration,
/// K from the matrix rank.
struct CodeParams {
    int n = 0;
    int k = 0;
    long long delta = 0;
    DeltaProvenance delta_provenance = DeltaProvenance::formula;
};

/// Parameters of C_{d,Y} for Y = P(1,1,b)(F_q), cross-checking every route:
/// N against q^2+q+1, K against the closed-form Hilbert function, and (for
/// mode both) the distance formula against the exhaustive oracle. Any
/// disagreement is an OracleDisagreement error rather than a silent pick.
inline CodeParams code_params(const RingPtr& ring, const PointSet& points, int q, int b, int d,
                              DistanceMode mode = DistanceMode::both,
                              long long budget = default_budget()) {
    CodeParams out;
    out.n = points.size();
    if (out.n != q * q + q + 1)
        throw Error(ErrorKind::oracle_disagreement,
                    "point count " + std::to_string(out.n) + " != q^2+q+1");
    GeneratorMatrix g = build_generator_matrix(ring, d, points.points);
    out.k = code_dimension(g);
    // independent dimension route: series always, closed form where defined
    const long long k_series = series_expand(series_numerator(q, 1, b), d)[d];
    if (out.k != k_series)
        throw Error(ErrorKind::oracle_disagreement,
                    "rank K = " + std::to_string(out.k) + " differs from series value " +
                        std::to_string(k_series));
    if (!(q > b && b == 1)) {
        const long long k_closed = hf_closed(q, b, d);
        if (out.k != k_closed)
            throw Error(ErrorKind::oracle_disagreement,
                        "rank K = " + std::to_string(out.k) + " differs from closed form " +
                            std::to_string(k_closed));
    }
    if (d == 0) {
        out.delta = out.n;
        out.delta_provenance = DeltaProvenance::convention;
        return out;
    }
    switch (mode) {
        case DistanceMode::formula:
            out.delta = mindist_formula(q, b, d);
            out.delta_provenance = DeltaProvenance::formula;
            break;
        case DistanceMode::oracle:
            out.delta = mindist_oracle(g, budget);
            out.delta_provenance = DeltaProvenance::oracle;
            break;
        case DistanceMode::both: {
            const long long f = mindist_formula(q, b, d);
            const long long o = mindist_oracle(g, budget);
            if (f != o)
                throw Error(ErrorKind::oracle_disagreement,
                            "formula delta " + std::to_string(f) + " != oracle delta " +
                                std::to_string(o) + " at q=" + std::to_string(q) +
                                " b=" + std::to_string(b) + " d=" + std::to_string(d));
            out.delta = f;
            out.delta_provenance = DeltaProvenance::both_agree;
            break;
        }
    }
    return out;
}

inline CodeParams code_params(int q, int b, int d, DistanceMode mode = DistanceMode::both,
                              long long budget = default_budget()) {
    RingPtr ring = Ring::make(WeightedSpace({1, 1, b}), Gf(q));
    PointSet pts = enumerate_points(ring->space, ring->field);
    return code_params(ring, pts, q, b, d, mode, budget);
}

/// For 0 < d < b the distance is at least q; checked on both routes.
inline bool lemma41_bound_check(int q, int b, int d, long long budget = default_budget()) {
    if (!(0 < d && d < b))
        throw Error(ErrorKind::invalid_argument, "bound applies for 0 < d < b");
    if (mindist_formula(q, b, d) < q) return false;
    RingPtr ring = Ring::make(WeightedSpace({1, 1, b}), Gf(q));
    PointSet pts = enumerate_points(ring->space, ring->field);
    GeneratorMatrix g = build_generator_matrix(ring, d, pts.points);
    return mindist_oracle(g, budget) >= q;
}

// ---- matrix export / import ----

enum class GenmatFormat { plain, csv, json };

inline std::string export_genmat(const GeneratorMatrix& g, GenmatFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case GenmatFormat::plain:
        case GenmatFormat::csv: {
            const char sep = fmt == GenmatFormat::plain ? ' ' : ',';
            for (int r = 0; r < g.m.rows(); ++r) {
                for (int c = 0; c < g.m.cols(); ++c) {
                    if (c) os << sep;
                    os << int(g.m.at(r, c));
                }
                os << '\n';
            }
            break;
        }
        case GenmatFormat::json: {
            os << "{\"rows\":" << g.m.rows() << ",\"cols\":" << g.m.cols() << ",\"entries\":[";
            for (int r = 0; r < g.m.rows(); ++r) {
                if (r) os << ',';
                os << '[';
                for (int c = 0; c < g.m.cols(); ++c) {
                    if (c) os << ',';
                    os << int(g.m.at(r, c));
                }
                os << ']';
            }
            os << "]}";
            break;
        }
    }
    return os.str();
}

/// Inverse of export_genmat (entries only; the ambient is the caller's).
inline Mat parse_genmat(const std::string& text, GenmatFormat fmt) {
    std::vector<std::vector<int>> rows;
    auto push_row = [&rows](const std::string& line, char sep) {
        std::vector<int> row;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, sep))
            if (!tok.empty()) row.push_back(std::stoi(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    };
    if (fmt == GenmatFormat::json) {
        // minimal scan: entry rows are [..] groups inside "entries"
        std::size_t pos = text.find("\"entries\"");
        if (pos == std::string::npos) throw Error(ErrorKind::parse_error, "missing entries");
        pos = text.find('[', pos);
        std::size_t depth = 0;
        std::string cur;
        for (std::size_t i = pos; i < text.size(); ++i) {
            char ch = text[i];
            if (ch == '[') {
                ++depth;
                if (depth == 2) cur.clear();
            } else if (ch == ']') {
                if (depth == 2) push_row(cur, ',');
                if (depth == 0) throw Error(ErrorKind::parse_error, "unbalanced brackets");
                --depth;
                if (depth == 0) break;
            } else if (depth == 2) {
                cur += ch;
            }
        }
    } else {
        const char sep = fmt == GenmatFormat::plain ? ' ' : ',';
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line))
            if (!line.empty()) push_row(line, sep);
    }
    if (rows.empty()) throw Error(ErrorKind::parse_error, "no matrix rows");
    Mat m(int(rows.size()), int(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r) {
        if (int(rows[r].size()) != m.cols())
            throw Error(ErrorKind::parse_error, "ragged matrix rows");
        for (int c = 0; c < m.cols(); ++c) {
            if (rows[r][c] < 0 || rows[r][c] > 255)
                throw Error(ErrorKind::parse_error, "entry outside representative range");
            m.at(r, c) = std::uint8_t(rows[r][c]);
        }
    }
    return m;
}

// ---- per-degree parameter tables ----

struct TableRow {
    int d = 0;
    int n = 0;
    int k = 0;
    long long delta = 0;
    std::string marker;  // "", "reg-first", "reg"
};

/// Rows (d, N, K, delta) for d in [d_min, d_max], delta by formula, with the
/// regularity markers. K is the matrix rank, cross-checked against the
/// closed form inside code_params.
inline std::vector<TableRow> table_rows(int q, int b, int d_min, int d_max) {
    if (d_min < 0 || d_max < d_min)
        throw Error(ErrorKind::invalid_argument, "bad degree range");
    RingPtr ring = Ring::make(WeightedSpace({1, 1, b}), Gf(q));
    PointSet pts = enumerate_points(ring->space, ring->field);
    std::vector<TableRow> rows;
    const int reg_first = regularity_first(q, b);
    for (int d = d_min; d <= d_max; ++d) {
        CodeParams p = code_params(ring, pts, q, b, d, DistanceMode::formula);
        TableRow row{d, p.n, p.k, p.delta, ""};
        if (d == reg_first)
            row.marker = "reg-first";
        else if (reg_contains(q, b, d))
            row.marker = "reg";
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace wprm

#endif
