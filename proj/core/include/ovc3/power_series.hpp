#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ovc3/cyclotomic.hpp"

namespace ovc3 {

// Runtime variable tags. Mixing coordinates (q-expansions vs y- or
// X-expansions vs characteristic-series variables) is a silent-corruption
// hazard, so every series carries its variable and binary operations check.
enum class Var { q, y, X, Y, T };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::q: return "q";
        case Var::y: return "y";
        case Var::X: return "X";
        case Var::Y: return "Y";
        case Var::T: return "T";
    }
    return "?";
}

// Coefficient-ring glue. A coefficient type provides zero/one modelled on an
// existing value (CycElt needs its ring), an exact zero test, and inversion.
template <class C>
struct RingTraits;

template <>
struct RingTraits<mpz_class> {
    static mpz_class zero_like(const mpz_class&) { return mpz_class(0); }
    static mpz_class one_like(const mpz_class&) { return mpz_class(1); }
    static bool is_zero(const mpz_class& a) { return a == 0; }
    static mpz_class invert(const mpz_class& a) {
        if (a == 1 || a == -1) return a;
        throw std::domain_error("series over Z: constant term must be a unit (+-1)");
    }
};

template <>
struct RingTraits<CycElt> {
    // Prototypes are exact constants at full ring precision: a fresh zero
    // accumulator must not cap the precision of what gets added to it.
    static CycElt zero_like(const CycElt& a) { return a.ring()->zero(); }
    static CycElt one_like(const CycElt& a) { return a.ring()->one(); }
    static bool is_zero(const CycElt& a) { return a.is_zero(); }
    static CycElt invert(const CycElt& a) { return invert_unit(a); }
};

/**
 * Dense truncated power series: exactly trunc coefficients, indices
 * 0..trunc-1, nothing known beyond. Binary operations truncate to the
 * shorter operand. Value type.
 */
template <class C>
class PowSeries {
public:
    PowSeries(Var var, std::vector<C> coeffs) : var_(var), c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("PowSeries: truncation must be >= 1");
    }

    static PowSeries zeros(Var var, int trunc, const C& like) {
        if (trunc < 1) throw std::invalid_argument("PowSeries: truncation must be >= 1");
        return PowSeries(var, std::vector<C>(trunc, RingTraits<C>::zero_like(like)));
    }

    Var var() const { return var_; }
    int trunc() const { return static_cast<int>(c_.size()); }
    const C& operator[](int i) const { return c_.at(i); }
    C& at(int i) { return c_.at(i); }
    const std::vector<C>& coeffs() const { return c_; }

    PowSeries retagged(Var var) const { return PowSeries(var, c_); }

private:
    Var var_;
    std::vector<C> c_;
};

namespace detail {
template <class C>
void check_var(const PowSeries<C>& a, const PowSeries<C>& b, const char* op) {
    if (a.var() != b.var())
        throw std::invalid_argument(std::string(op) + ": variable mismatch (" +
                                    var_name(a.var()) + " vs " + var_name(b.var()) + ")");
}
} // namespace detail

template <class C>
PowSeries<C> truncated(const PowSeries<C>& a, int M) {
    if (M >= a.trunc()) return a;
    if (M < 1) throw std::invalid_argument("truncated: truncation must be >= 1");
    std::vector<C> c(a.coeffs().begin(), a.coeffs().begin() + M);
    return PowSeries<C>(a.var(), std::move(c));
}

template <class C>
PowSeries<C> operator+(const PowSeries<C>& a, const PowSeries<C>& b) {
    detail::check_var(a, b, "add");
    int M = std::min(a.trunc(), b.trunc());
    std::vector<C> c;
    c.reserve(M);
    for (int i = 0; i < M; ++i) c.push_back(a[i] + b[i]);
    return PowSeries<C>(a.var(), std::move(c));
}

template <class C>
PowSeries<C> operator-(const PowSeries<C>& a, const PowSeries<C>& b) {
    detail::check_var(a, b, "sub");
    int M = std::min(a.trunc(), b.trunc());
    std::vector<C> c;
    c.reserve(M);
    for (int i = 0; i < M; ++i) c.push_back(a[i] - b[i]);
    return PowSeries<C>(a.var(), std::move(c));
}

template <class C>
PowSeries<C> operator-(const PowSeries<C>& a) {
    std::vector<C> c;
    c.reserve(a.trunc());
    for (int i = 0; i < a.trunc(); ++i) c.push_back(-a[i]);
    return PowSeries<C>(a.var(), std::move(c));
}

// Schoolbook product; the deliberate baseline everything else is checked
// against.
template <class C>
PowSeries<C> operator*(const PowSeries<C>& a, const PowSeries<C>& b) {
    detail::check_var(a, b, "mul");
    int M = std::min(a.trunc(), b.trunc());
    PowSeries<C> out = PowSeries<C>::zeros(a.var(), M, a[0]);
    for (int i = 0; i < std::min(a.trunc(), M); ++i) {
        if (RingTraits<C>::is_zero(a[i])) continue;
        for (int j = 0; i + j < M && j < b.trunc(); ++j) {
            if (RingTraits<C>::is_zero(b[j])) continue;
            out.at(i + j) = out.at(i + j) + a[i] * b[j];
        }
    }
    return out;
}

template <class C>
PowSeries<C> scale(const PowSeries<C>& a, const C& k) {
    std::vector<C> c;
    c.reserve(a.trunc());
    for (int i = 0; i < a.trunc(); ++i) c.push_back(a[i] * k);
    return PowSeries<C>(a.var(), std::move(c));
}

template <class C>
bool is_zero_upto(const PowSeries<C>& a, int M) {
    if (M > a.trunc())
        throw std::invalid_argument("is_zero_upto: fewer coefficients than requested");
    for (int i = 0; i < M; ++i)
        if (!RingTraits<C>::is_zero(a[i])) return false;
    return true;
}

template <class C>
bool equal_upto(const PowSeries<C>& a, const PowSeries<C>& b, int M) {
    detail::check_var(a, b, "equal_upto");
    if (M > a.trunc() || M > b.trunc())
        throw std::invalid_argument("equal_upto: fewer coefficients than requested");
    for (int i = 0; i < M; ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

/**
 * Multiplicative inverse of a series with unit constant term, by Newton
 * iteration doubling the correct length each step.
 */
template <class C>
PowSeries<C> invert_unit_series(const PowSeries<C>& a) {
    const int M = a.trunc();
    C inv0 = RingTraits<C>::invert(a[0]);
    std::vector<C> w{inv0};
    int len = 1;
    while (len < M) {
        len = std::min(2 * len, M);
        // w <- w * (2 - a*w) computed at the new length
        PowSeries<C> wcur(a.var(), std::vector<C>(w.begin(), w.end()));
        PowSeries<C> wpad = PowSeries<C>::zeros(a.var(), len, a[0]);
        for (int i = 0; i < wcur.trunc(); ++i) wpad.at(i) = wcur[i];
        PowSeries<C> prod = truncated(a, len) * wpad;
        PowSeries<C> corr = PowSeries<C>::zeros(a.var(), len, a[0]);
        C two = RingTraits<C>::one_like(a[0]) + RingTraits<C>::one_like(a[0]);
        corr.at(0) = two - prod[0];
        for (int i = 1; i < len; ++i) corr.at(i) = -prod[i];
        PowSeries<C> next = wpad * corr;
        w.assign(next.coeffs().begin(), next.coeffs().end());
    }
    return PowSeries<C>(a.var(), std::move(w));
}

/**
 * outer(inner) for inner with zero constant term. The result lives in
 * inner's variable; truncation is the shorter of the two.
 */
template <class C>
PowSeries<C> compose(const PowSeries<C>& outer, const PowSeries<C>& inner) {
    if (!RingTraits<C>::is_zero(inner[0]))
        throw std::invalid_argument("compose: inner series must have zero constant term");
    int M = std::min(outer.trunc(), inner.trunc());
    PowSeries<C> in = truncated(inner, M);
    PowSeries<C> acc = PowSeries<C>::zeros(inner.var(), M, inner[0]);
    acc.at(0) = outer[M - 1];
    for (int i = M - 2; i >= 0; --i) {
        acc = acc * in;
        acc.at(0) = acc[0] + outer[i];
    }
    return acc;
}

/**
 * Compositional inverse of s = c1*v + ... with c1 a unit: the unique series
 * rho with rho(s) = v. Determined coefficient by coefficient against the
 * identity. out_var names the variable of the result (q as a series in y,
 * for instance).
 */
template <class C>
PowSeries<C> reversion(const PowSeries<C>& s, Var out_var) {
    const int M = s.trunc();
    if (M < 2) throw std::invalid_argument("reversion: need at least two coefficients");
    if (!RingTraits<C>::is_zero(s[0]))
        throw std::invalid_argument("reversion: series must have zero constant term");
    C inv1 = RingTraits<C>::invert(s[1]);

    PowSeries<C> rho = PowSeries<C>::zeros(out_var, M, s[0]);
    rho.at(1) = inv1;
    // acc = sum_{k<=n} t_k s^k; spow = s^n; invp = inv1^n
    PowSeries<C> s_re = s.retagged(out_var);
    PowSeries<C> spow = s_re;
    PowSeries<C> acc = scale(s_re, inv1);
    C invp = inv1;
    for (int n = 2; n < M; ++n) {
        spow = spow * s_re;
        invp = invp * inv1;
        C tn = -acc[n] * invp;
        rho.at(n) = tn;
        acc = acc + scale(spow, tn);
    }
    return rho;
}

// --- the three q-expansion operators ---

namespace detail {
template <class C>
void require_q(const PowSeries<C>& g, const char* op) {
    if (g.var() != Var::q)
        throw std::invalid_argument(std::string(op) + ": expects a q-expansion, got " +
                                    var_name(g.var()));
}
} // namespace detail

// U: sum a_n q^n  ->  sum a_{3n} q^n. Output truncation floor((M-1)/3)+1.
template <class C>
PowSeries<C> u_op(const PowSeries<C>& g) {
    detail::require_q(g, "u_op");
    int M = g.trunc();
    int out = (M - 1) / 3 + 1;
    PowSeries<C> r = PowSeries<C>::zeros(Var::q, out, g[0]);
    for (int i = 0; i < out; ++i) r.at(i) = g[3 * i];
    return r;
}

// V: sum a_n q^n  ->  sum a_n q^{3n}, truncation 3(M-1)+1 capped by the caller.
template <class C>
PowSeries<C> v_op(const PowSeries<C>& g, int cap = -1) {
    detail::require_q(g, "v_op");
    int M = g.trunc();
    int natural = 3 * (M - 1) + 1;
    int out = cap < 0 ? natural : std::min(cap, natural);
    if (out < 1) throw std::invalid_argument("v_op: cap must be >= 1");
    PowSeries<C> r = PowSeries<C>::zeros(Var::q, out, g[0]);
    for (int i = 0; 3 * i < out; ++i) r.at(3 * i) = g[i];
    return r;
}

// sigma: q -> omega*q on q-expansions, i.e. coefficient n picks up omega^n.
template <class C>
PowSeries<C> sigma_op(const PowSeries<C>& g, const C& omega) {
    detail::require_q(g, "sigma_op");
    C w2 = omega * omega;
    std::vector<C> c;
    c.reserve(g.trunc());
    for (int i = 0; i < g.trunc(); ++i) {
        switch (i % 3) {
            case 0: c.push_back(g[i]); break;
            case 1: c.push_back(g[i] * omega); break;
            default: c.push_back(g[i] * w2); break;
        }
    }
    return PowSeries<C>(Var::q, std::move(c));
}

// Coefficientwise conversion between coefficient rings.
template <class D, class C, class F>
PowSeries<D> map_series(const PowSeries<C>& a, F&& f) {
    std::vector<D> c;
    c.reserve(a.trunc());
    for (int i = 0; i < a.trunc(); ++i) c.push_back(f(a[i]));
    return PowSeries<D>(a.var(), std::move(c));
}

inline PowSeries<CycElt> lift_series(const PowSeries<mpz_class>& a, const RingPtr& R) {
    return map_series<CycElt>(a, [&](const mpz_class& v) { return R->from_mpz(v); });
}

} // namespace ovc3
