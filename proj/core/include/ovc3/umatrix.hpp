#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ovc3/qexpansions.hpp"

namespace ovc3 {

/**
 * The matrix of U in the basis V(E_kappa) * (w0 y)^j, truncated to beta
 * columns and rows. Entries are integral; columns j with 3 !| j vanish.
 */
struct UMatrix {
    int beta{0};
    std::vector<std::vector<CycElt>> n; // n[i][j]

    UMatrix top_left(int b) const {
        UMatrix out;
        out.beta = b;
        out.n.reserve(b);
        for (int i = 0; i < b; ++i)
            out.n.emplace_back(n[i].begin(), n[i].begin() + b);
        return out;
    }
};

/**
 * Generating-function route: column 3t is the X-expansion of
 * g(X) * ((w0^2 X + 3 w0 X^2 + 9 X^3) / (1 + (6/w0) X)^3)^t.
 * g must be g_kappa at truncation >= beta.
 */
UMatrix u_matrix_gf(const CharacterWeight& cw, int beta, const PowSeries<CycElt>& g);

/**
 * Independent q-space route: column j is U(V(E) y^j) / V(E) expanded in y,
 * with coefficient i rescaled by w0^(j-i). Needs q_prec >= 3*beta.
 */
UMatrix u_matrix_qspace(const CharacterWeight& cw, int beta, int q_prec);

/**
 * P(T) = det(1 - T N) truncated past T^alpha_max, by Gaussian elimination
 * over truncated T-series; every pivot is 1 + O(T), so no precision is
 * spent. b[0] = 1.
 */
struct CharSeries {
    std::vector<CycElt> b;
    std::vector<Valuation> vals() const;
};
CharSeries char_series(const UMatrix& N, int alpha_max);

struct SlopeMult {
    Rational slope;
    long mult;
};

struct NewtonPolygon {
    std::vector<std::pair<long, Rational>> points;   // exact (alpha, v(b_alpha))
    std::vector<long> omitted;                       // alphas measured only as AT_LEAST
    std::vector<std::pair<long, Rational>> vertices; // lower convex hull
    std::vector<SlopeMult> slopes;                   // ascending, with multiplicities
};

/**
 * Lower convex hull of the exact valuation points. Throws PrecisionError if
 * an omitted point's certified lower bound dips below the hull (the hull
 * would then be unsupported at the working precision).
 */
NewtonPolygon newton_polygon(const std::vector<Valuation>& vals);

/**
 * The full slope pipeline for one weight, including the beta-stability
 * recomputation at beta + 3. Matches the CLI's JSON report field for field.
 */
struct SlopeReport {
    int conductor{0};
    int generator_exponent{0};
    Rational v;
    int beta{0};
    int alpha_max{0};
    std::vector<Valuation> b_valuations; // index alpha
    NewtonPolygon polygon;
    bool stable{false};
    int precision_remaining{0};
    // Diagnostics, not serialized: exact quadratic valuation law and the
    // arithmetic-progression slope pattern.
    bool progression_ok{false};
    std::string note;
};

SlopeReport slopes_run(const CharacterWeight& cw, int alpha_max, int beta, int q_prec);

/**
 * Randomized check of the column-divisibility lemma: for matrices shaped
 * like U-matrices (columns off 3Z zero, column j divisible by d^j) the
 * characteristic coefficient a_alpha is divisible by d^(3 alpha(alpha-1)/2),
 * and for alpha <= s the quotient is a unit iff det of the compressed
 * alpha x alpha block is. Coefficients come from brute-force principal
 * minors, independent of char_series. Returns a failure description or the
 * empty string.
 */
std::string strip_lemma_trials(const RingPtr& R, const CycElt& d, int s, int trials,
                               uint64_t seed);

} // namespace ovc3
