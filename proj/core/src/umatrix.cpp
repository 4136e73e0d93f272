#include "ovc3/umatrix.hpp"

#include <algorithm>
#include <random>

namespace ovc3 {

UMatrix u_matrix_gf(const CharacterWeight& cw, int beta, const PowSeries<CycElt>& g) {
    if (g.var() != Var::X)
        throw std::invalid_argument("u_matrix_gf: g must be an X-expansion");
    if (g.trunc() < beta)
        throw std::invalid_argument("u_matrix_gf: g truncated below beta");
    const RingPtr& R = cw.ring();
    const CycElt& w0 = cw.w0();

    // six_over_w0 = 2 * w0^(e-1) / (w0^e / 3): integral, costs no digits.
    CycElt six_over = cw.div_w0_pow(R->from_int(6), 1);

    // B(X) = (w0^2 X + 3 w0 X^2 + 9 X^3) / (1 + (6/w0) X)^3
    PowSeries<CycElt> num = PowSeries<CycElt>::zeros(Var::X, beta, R->zero());
    if (beta > 1) num.at(1) = w0 * w0;
    if (beta > 2) num.at(2) = R->from_int(3) * w0;
    if (beta > 3) num.at(3) = R->from_int(9);
    PowSeries<CycElt> den = PowSeries<CycElt>::zeros(Var::X, beta, R->zero());
    den.at(0) = R->one();
    if (beta > 1) den.at(1) = six_over;
    den = den * den * den;
    PowSeries<CycElt> B = num * invert_unit_series(den);

    UMatrix M;
    M.beta = beta;
    M.n.assign(beta, std::vector<CycElt>(beta, R->zero()));
    PowSeries<CycElt> col = truncated(g, beta);
    for (int t = 0; 3 * t < beta; ++t) {
        if (t > 0) col = col * B;
        for (int i = 0; i < beta; ++i) M.n[i][3 * t] = col[i];
    }
    return M;
}

UMatrix u_matrix_qspace(const CharacterWeight& cw, int beta, int q_prec) {
    if (q_prec < 3 * beta)
        throw std::invalid_argument("u_matrix_qspace: need q_prec >= 3*beta");
    const RingPtr& R = cw.ring();

    PowSeries<CycElt> E = eisenstein_character(cw, q_prec);
    PowSeries<CycElt> VE = v_op(E, q_prec);
    PowSeries<CycElt> invVE = invert_unit_series(VE);
    PowSeries<CycElt> yq = lift_series(y_qexp(q_prec), R);
    CoordFrame frame = y_frame(q_prec);

    UMatrix M;
    M.beta = beta;
    M.n.assign(beta, std::vector<CycElt>(beta, R->zero()));

    PowSeries<CycElt> W = VE; // V(E) * y^j, built incrementally
    for (int j = 0; j < beta; ++j) {
        if (j > 0) W = W * yq;
        PowSeries<CycElt> A = u_op(W);
        if (j % 3 != 0) {
            // U annihilates these: exponent support of V(E) y^j misses 3Z.
            for (int i = 0; i < A.trunc(); ++i)
                if (!A[i].is_zero())
                    throw std::logic_error("u_matrix_qspace: column " + std::to_string(j) +
                                           " expected to vanish");
            continue;
        }
        PowSeries<CycElt> h = frame.to_target(A * truncated(invVE, A.trunc()));
        int rows = std::min(beta, h.trunc());
        for (int i = 0; i < rows; ++i) {
            M.n[i][j] = i <= j ? cw.mul_w0_pow(h[i], j - i) : cw.div_w0_pow(h[i], i - j);
        }
    }
    return M;
}

std::vector<Valuation> CharSeries::vals() const {
    std::vector<Valuation> v;
    v.reserve(b.size());
    for (const auto& x : b) v.push_back(valuation(x));
    return v;
}

CharSeries char_series(const UMatrix& N, int alpha_max) {
    const int beta = N.beta;
    if (beta < 1) throw std::invalid_argument("char_series: empty matrix");
    const RingPtr& R = N.n[0][0].ring();
    const int L = alpha_max + 1;

    // a = I - T N over O[[T]]/(T^L)
    std::vector<std::vector<PowSeries<CycElt>>> a;
    a.reserve(beta);
    for (int i = 0; i < beta; ++i) {
        std::vector<PowSeries<CycElt>> row;
        row.reserve(beta);
        for (int j = 0; j < beta; ++j) {
            PowSeries<CycElt> s = PowSeries<CycElt>::zeros(Var::T, L, R->zero());
            if (i == j) s.at(0) = R->one();
            if (L > 1) s.at(1) = -N.n[i][j];
            row.push_back(std::move(s));
        }
        a.push_back(std::move(row));
    }

    PowSeries<CycElt> det = PowSeries<CycElt>::zeros(Var::T, L, R->zero());
    det.at(0) = R->one();
    for (int i = 0; i < beta; ++i) {
        // Pivots stay 1 + O(T) through elimination; inversion spends nothing.
        if (!(a[i][i][0] == R->one()))
            throw std::logic_error("char_series: pivot lost its unit constant term");
        det = det * a[i][i];
        PowSeries<CycElt> inv = invert_unit_series(a[i][i]);
        for (int k = i + 1; k < beta; ++k) {
            if (is_zero_upto(a[k][i], L)) continue;
            PowSeries<CycElt> fac = a[k][i] * inv;
            for (int j = i; j < beta; ++j) a[k][j] = a[k][j] - fac * a[i][j];
        }
    }

    CharSeries cs;
    cs.b.assign(det.coeffs().begin(), det.coeffs().end());
    return cs;
}

NewtonPolygon newton_polygon(const std::vector<Valuation>& vals) {
    NewtonPolygon P;
    for (size_t alpha = 0; alpha < vals.size(); ++alpha) {
        if (vals[alpha].is_exact())
            P.points.emplace_back(static_cast<long>(alpha), vals[alpha].value);
        else
            P.omitted.push_back(static_cast<long>(alpha));
    }
    if (P.points.empty())
        throw PrecisionError("newton_polygon: no exact valuations to build on", 0);

    // Lower convex hull, alphas already ascending.
    auto cross_keeps = [](const std::pair<long, Rational>& a,
                          const std::pair<long, Rational>& b,
                          const std::pair<long, Rational>& c) {
        // true when b lies strictly below segment ac (keep b)
        Rational lhs = (b.second - a.second) * Rational(c.first - a.first);
        Rational rhs = (c.second - a.second) * Rational(b.first - a.first);
        return lhs < rhs;
    };
    std::vector<std::pair<long, Rational>>& hull = P.vertices;
    for (const auto& pt : P.points) {
        while (hull.size() >= 2 && !cross_keeps(hull[hull.size() - 2], hull.back(), pt))
            hull.pop_back();
        hull.push_back(pt);
    }

    // Every omitted point's certified bound must sit on or above the hull.
    for (long alpha : P.omitted) {
        Rational bound = vals[alpha].value;
        for (size_t k = 0; k + 1 < hull.size(); ++k) {
            if (alpha <= hull[k].first || alpha > hull[k + 1].first) continue;
            Rational dx(hull[k + 1].first - hull[k].first);
            Rational t(alpha - hull[k].first);
            Rational on_hull = hull[k].second + t * (hull[k + 1].second - hull[k].second) *
                                                    Rational(1, dx.num);
            if (bound < on_hull)
                throw PrecisionError(
                    "newton_polygon: coefficient " + std::to_string(alpha) +
                        " is zero at working precision but its bound cuts the hull; raise N",
                    0);
        }
    }

    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        Rational ds = (hull[k + 1].second - hull[k].second) *
                      Rational(1, hull[k + 1].first - hull[k].first);
        P.slopes.push_back(SlopeMult{ds, hull[k + 1].first - hull[k].first});
    }
    return P;
}

SlopeReport slopes_run(const CharacterWeight& cw, int alpha_max, int beta, int q_prec) {
    if (beta % 3 != 0) throw std::invalid_argument("slopes_run: beta must be a multiple of 3");
    if (beta < 3 * alpha_max + 3)
        throw std::invalid_argument("slopes_run: beta must be >= 3*alpha_max + 3");
    const int beta2 = beta + 3;
    if (q_prec < beta2)
        throw std::invalid_argument("slopes_run: q_prec must cover beta + 3");

    PowSeries<CycElt> g = g_kappa(cw, beta2, q_prec);
    UMatrix M2 = u_matrix_gf(cw, beta2, g);
    UMatrix M1 = M2.top_left(beta);
    CharSeries cs = char_series(M1, alpha_max);
    CharSeries cs2 = char_series(M2, alpha_max);

    SlopeReport rep;
    rep.conductor = cw.conductor();
    rep.generator_exponent = cw.generator_exponent();
    rep.v = cw.v();
    rep.beta = beta;
    rep.alpha_max = alpha_max;
    rep.b_valuations = cs.vals();

    // Stability means the Newton data stopped moving: the raw coefficients
    // keep absorbing minors from the new columns (at valuations >= 2*beta*v/3,
    // well below working precision), so compare measured valuations instead.
    std::vector<Valuation> vals2 = cs2.vals();
    rep.stable = true;
    for (int alpha = 0; alpha <= alpha_max; ++alpha)
        if (!(rep.b_valuations[alpha] == vals2[alpha])) rep.stable = false;

    rep.polygon = newton_polygon(rep.b_valuations);

    // The boundary law: v(b_alpha) = alpha(alpha-1) * v. Column 3t of the U
    // matrix is divisible by exactly w0^2t, so the minimal minor (the strip
    // bound) carries v(w0^2) per step and the polygon is the arithmetic
    // progression 0, 2v, 4v, ... each with multiplicity 1.
    rep.progression_ok = true;
    for (int alpha = 0; alpha <= alpha_max; ++alpha) {
        Rational expect = Rational(static_cast<long long>(alpha) * (alpha - 1)) * rep.v;
        if (!rep.b_valuations[alpha].certifies_exactly(expect)) {
            rep.progression_ok = false;
            if (!rep.b_valuations[alpha].is_exact())
                throw PrecisionError("slopes_run: v(b_" + std::to_string(alpha) +
                                         ") not resolved at working precision",
                                     cw.ring()->N() + 8);
            rep.note = "v(b_" + std::to_string(alpha) + ") = " +
                       rep.b_valuations[alpha].str() + ", expected " + expect.str();
        }
    }
    if (rep.progression_ok) {
        if (static_cast<int>(rep.polygon.slopes.size()) != alpha_max)
            rep.progression_ok = false;
        for (int k = 0; k < alpha_max && rep.progression_ok; ++k) {
            const SlopeMult& sm = rep.polygon.slopes[k];
            if (!(sm.slope == Rational(2 * k) * rep.v) || sm.mult != 1)
                rep.progression_ok = false;
        }
        if (!rep.progression_ok) rep.note = "slope sequence broke the progression";
    }
    if (!rep.stable && rep.note.empty()) rep.note = "char series changed between beta and beta+3";

    int remaining = cw.ring()->N();
    for (int alpha = 0; alpha <= alpha_max; ++alpha) {
        const Valuation& val = rep.b_valuations[alpha];
        int spent = val.is_exact()
                        ? static_cast<int>((val.value.num + val.value.den - 1) / val.value.den)
                        : 0;
        remaining = std::min(remaining, cs.b[alpha].precision() - spent);
    }
    rep.precision_remaining = remaining;
    return rep;
}

namespace {

mpz_class random_mpz(std::mt19937_64& rng, const mpz_class& mod) {
    mpz_class hi(static_cast<unsigned long>(rng()));
    mpz_class lo(static_cast<unsigned long>(rng()));
    mpz_class x = hi;
    x <<= 64;
    x += lo;
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    return r;
}

CycElt random_elt(std::mt19937_64& rng, const RingPtr& R) {
    std::vector<mpz_class> c(R->degree());
    const mpz_class& mod = R->pow3(R->N());
    for (auto& x : c) x = random_mpz(rng, mod);
    return R->from_coeffs(std::move(c));
}

// Determinant by Laplace expansion along the first row: only ring
// multiplications and additions, exact at working precision.
CycElt det_laplace(const std::vector<std::vector<CycElt>>& m, std::vector<int> cols, int row,
                   const RingPtr& R) {
    if (cols.empty()) return R->one();
    CycElt acc = R->zero();
    for (size_t k = 0; k < cols.size(); ++k) {
        const CycElt& pivot = m[row][cols[k]];
        if (pivot.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t t = 0; t < cols.size(); ++t)
            if (t != k) rest.push_back(cols[t]);
        CycElt sub = det_laplace(m, std::move(rest), row + 1, R);
        CycElt term = pivot * sub;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

std::string strip_lemma_trials(const RingPtr& R, const CycElt& d, int s, int trials,
                               uint64_t seed) {
    const int n = 3 * s;
    std::mt19937_64 rng(seed);
    Valuation vd = valuation(d);
    if (!vd.is_exact() || !(Rational(0) < vd.value))
        return "scaling element must have positive exact valuation";

    for (int trial = 0; trial < trials; ++trial) {
        // n[i][j] = d^j * a[i][j] on columns in 3Z, zero elsewhere.
        std::vector<std::vector<CycElt>> a(n, std::vector<CycElt>(n, R->zero()));
        std::vector<std::vector<CycElt>> mat(n, std::vector<CycElt>(n, R->zero()));
        for (int j = 0; j < n; j += 3) {
            CycElt dj = pow(d, static_cast<unsigned long>(j));
            for (int i = 0; i < n; ++i) {
                a[i][j] = random_elt(rng, R);
                mat[i][j] = dj * a[i][j];
            }
        }

        // P(T) = det(1 - T mat) via principal minors: a_alpha = (-1)^alpha e_alpha.
        for (int alpha = 1; alpha <= n; ++alpha) {
            CycElt e_alpha = R->zero();
            std::vector<int> subset(alpha);
            for (int i = 0; i < alpha; ++i) subset[i] = i;
            while (true) {
                std::vector<std::vector<CycElt>> block(alpha, std::vector<CycElt>(alpha, R->zero()));
                for (int r = 0; r < alpha; ++r)
                    for (int c = 0; c < alpha; ++c) block[r][c] = mat[subset[r]][subset[c]];
                std::vector<int> cols(alpha);
                for (int i = 0; i < alpha; ++i) cols[i] = i;
                e_alpha += det_laplace(block, cols, 0, R);
                int pos = alpha - 1;
                while (pos >= 0 && subset[pos] == n - alpha + pos) --pos;
                if (pos < 0) break;
                ++subset[pos];
                for (int t = pos + 1; t < alpha; ++t) subset[t] = subset[t - 1] + 1;
            }
            Rational bound = Rational(3LL * alpha * (alpha - 1), 2) * vd.value;
            Valuation va = valuation(e_alpha);
            if (!va.certifies_at_least(bound))
                return "trial " + std::to_string(trial) + ": v(a_" + std::to_string(alpha) +
                       ") = " + va.str() + " below bound " + bound.str();
            if (alpha <= s) {
                // Unit part iff det of the compressed block is a unit.
                std::vector<std::vector<CycElt>> tbl(alpha, std::vector<CycElt>(alpha, R->zero()));
                for (int r = 0; r < alpha; ++r)
                    for (int c = 0; c < alpha; ++c) tbl[r][c] = a[3 * r][3 * c];
                std::vector<int> cols(alpha);
                for (int i = 0; i < alpha; ++i) cols[i] = i;
                CycElt dt = det_laplace(tbl, cols, 0, R);
                bool quotient_unit = va.certifies_exactly(bound);
                bool det_unit = !dt.is_zero() && dt.residue() != 0;
                if (quotient_unit != det_unit)
                    return "trial " + std::to_string(trial) + ": alpha " +
                           std::to_string(alpha) + " unit-part biconditional failed";
            }
        }
    }
    return "";
}

} // namespace ovc3
