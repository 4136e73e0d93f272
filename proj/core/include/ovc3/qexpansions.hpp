#pragma once

#include <vector>

#include "ovc3/cyclotomic.hpp"
#include "ovc3/power_series.hpp"

namespace ovc3 {

// --- the integer q-expansions everything is built from ---

// theta = sum over (a,b) in Z^2 of q^(a^2+ab+b^2) = 1 + 6q + 6q^3 + 6q^4 + ...
PowSeries<mpz_class> theta_qexp(int M);

// delta = q * prod (1-q^n)^24 = q - 24q^2 + 252q^3 - ...
PowSeries<mpz_class> delta_qexp(int M);

// f = q * prod_{3 !| n} (1-q^n)^{-12} = q + 12q^2 + 90q^3 + ...; f^2 * delta(q) = delta(q^3)
PowSeries<mpz_class> f_qexp(int M);

// y = (theta/V(theta) - 1)/6 = q - 5q^4 + 32q^7 - ...; exponents are 1 mod 3
PowSeries<mpz_class> y_qexp(int M);

/**
 * A weight near the boundary of weight space: an even character of 3-power
 * order and conductor 3^(m+1), pinned down by kappa(2) = zeta^a with a
 * coprime to 3. The point of weight space it determines is w0 = kappa(4)-1,
 * with 0 < v(w0) < 1. The attached Eisenstein series uses the unique odd
 * Dirichlet character tau with tau(4) = kappa(4), namely kappa twisted by
 * the quadratic character mod 3.
 */
class CharacterWeight {
public:
    CharacterWeight(int conductor, int a, int N);

    const RingPtr& ring() const { return ring_; }
    int conductor() const { return conductor_; }
    int generator_exponent() const { return a_; }
    const CycElt& w0() const { return w0_; }
    const Rational& v() const { return v_; }

    CycElt kappa_of(long n) const; // the stored even character; 0 when 3 | n
    CycElt tau_of(long n) const;   // the odd twist driving the Eisenstein series

    // x / w0^k at the cost of ceil(k/e) digits: batches uniformizer powers
    // through w0^e = 3 * unit instead of k single-digit divisions.
    CycElt div_w0_pow(const CycElt& x, int k) const;
    CycElt mul_w0_pow(const CycElt& x, int k) const;

private:
    // Validates conductor = 3^(m+1), m >= 1, and returns m.
    static int level_of(int conductor);

    RingPtr ring_;
    int conductor_;
    int a_;
    int m_;
    CycElt w0_;
    Rational v_;
    CycElt w0e_unit_;     // w0^e / 3
    CycElt w0e_unit_inv_;
    std::vector<int> dlog_; // discrete log base 2 mod conductor; -1 off units
};

// Classical level-3 Eisenstein series of even weight k >= 2, normalized to
// constant term 1, coefficients embedded in Z3: U-eigenforms with U E_k = E_k.
PowSeries<CycElt> eisenstein_classical(int k, int M, const RingPtr& R);

// The weight-kappa Eisenstein series: constant term 1, coefficient of q^n
// equal to -(B1(tau)/2)^{-1} * sum_{3 !| d | n} tau(d).
PowSeries<CycElt> eisenstein_character(const CharacterWeight& cw, int M);

/**
 * Change of coordinates between q-expansions and expansions in an integer
 * series base = q + O(q^2) with unit linear coefficient (y or f here).
 */
class CoordFrame {
public:
    CoordFrame(PowSeries<mpz_class> base, Var target);

    const PowSeries<mpz_class>& base() const { return fwd_; }
    // Expand a q-series in powers of the base series.
    PowSeries<mpz_class> to_target(const PowSeries<mpz_class>& g) const;
    PowSeries<CycElt> to_target(const PowSeries<CycElt>& g) const;
    // Realize a base-expansion back as a q-series.
    PowSeries<mpz_class> to_q(const PowSeries<mpz_class>& h) const;
    PowSeries<CycElt> to_q(const PowSeries<CycElt>& h) const;

private:
    PowSeries<mpz_class> fwd_; // base(q), variable q
    PowSeries<mpz_class> rev_; // q as a series in the target variable
    Var target_;
};

CoordFrame y_frame(int M);
CoordFrame f_frame(int M);

/**
 * g_kappa: the function E_kappa / V(E_kappa), expanded around the boundary:
 * coefficient j is the y^j coefficient divided by w0^j. Integral by the
 * main boundary estimate; a non-exact division aborts with the offending
 * index. Variable tag X.
 */
PowSeries<CycElt> g_kappa(const CharacterWeight& cw, int X_trunc, int q_prec);

} // namespace ovc3
