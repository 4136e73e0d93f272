#include "ovc3/qexpansions.hpp"

#include <cmath>
#include <numeric>

namespace ovc3 {

PowSeries<mpz_class> theta_qexp(int M) {
    if (M < 1) throw std::invalid_argument("theta_qexp: M must be >= 1");
    std::vector<mpz_class> c(M, 0);
    // a^2+ab+b^2 >= max(a^2,b^2)/2, so |a|,|b| <= ceil(2 sqrt(M)) covers all
    // exponents below M.
    long B = static_cast<long>(std::ceil(2.0 * std::sqrt(static_cast<double>(M)))) + 1;
    for (long a = -B; a <= B; ++a) {
        for (long b = -B; b <= B; ++b) {
            long n = a * a + a * b + b * b;
            if (n < M) c[n] += 1;
        }
    }
    return PowSeries<mpz_class>(Var::q, std::move(c));
}

namespace {

// Multiply the series in place by (1 - q^n)^pow for pow >= 1.
void mul_one_minus_qn(std::vector<mpz_class>& c, int n, int pow) {
    const int M = static_cast<int>(c.size());
    for (int rep = 0; rep < pow; ++rep)
        for (int i = M - 1; i >= n; --i) c[i] -= c[i - n];
}

} // namespace

PowSeries<mpz_class> delta_qexp(int M) {
    if (M < 2) throw std::invalid_argument("delta_qexp: M must be >= 2");
    std::vector<mpz_class> c(M, 0);
    c[1] = 1; // the leading q
    for (int n = 1; n < M - 1; ++n) mul_one_minus_qn(c, n, 24);
    return PowSeries<mpz_class>(Var::q, std::move(c));
}

PowSeries<mpz_class> f_qexp(int M) {
    if (M < 2) throw std::invalid_argument("f_qexp: M must be >= 2");
    // prod_{3 !| n} (1-q^n)^{12}, then invert and shift by q.
    std::vector<mpz_class> p(M - 1, 0);
    p[0] = 1;
    for (int n = 1; n < M - 1; ++n)
        if (n % 3 != 0) mul_one_minus_qn(p, n, 12);
    PowSeries<mpz_class> inv = invert_unit_series(PowSeries<mpz_class>(Var::q, std::move(p)));
    std::vector<mpz_class> c(M, 0);
    for (int i = 0; i + 1 < M; ++i) c[i + 1] = inv[i];
    return PowSeries<mpz_class>(Var::q, std::move(c));
}

PowSeries<mpz_class> y_qexp(int M) {
    if (M < 2) throw std::invalid_argument("y_qexp: M must be >= 2");
    PowSeries<mpz_class> th = theta_qexp(M);
    PowSeries<mpz_class> vth = v_op(th, M);
    PowSeries<mpz_class> ratio = th * invert_unit_series(vth);
    std::vector<mpz_class> c(M);
    for (int i = 0; i < M; ++i) {
        mpz_class t = ratio[i];
        if (i == 0) t -= 1;
        if (!mpz_divisible_ui_p(t.get_mpz_t(), 6))
            throw std::logic_error("y_qexp: theta/V(theta) - 1 not divisible by 6");
        c[i] = t / 6;
    }
    return PowSeries<mpz_class>(Var::q, std::move(c));
}

// --- CharacterWeight ---

int CharacterWeight::level_of(int conductor) {
    // conductor = 3^(m+1) with m >= 1; anything else leaves the open disc
    // 1/3 < |w0| < 1 around the boundary.
    int c = conductor, m = -1;
    while (c > 1 && c % 3 == 0) { c /= 3; ++m; }
    if (conductor < 9 || c != 1 || m < 1)
        throw std::invalid_argument(
            "CharacterWeight: conductor must be 3^(m+1), m >= 1 "
            "(weight outside 1/3 < |w0| < 1)");
    return m;
}

CharacterWeight::CharacterWeight(int conductor, int a, int N)
    : ring_(CycRing::make(level_of(conductor), N)),
      conductor_(conductor),
      a_(a),
      m_(level_of(conductor)),
      w0_(ring_->zero()),
      w0e_unit_(ring_->zero()),
      w0e_unit_inv_(ring_->zero()) {
    if (a_ % 3 == 0)
        throw std::invalid_argument("CharacterWeight: generator exponent must be coprime to 3");
    long order = ring_->root_order(); // 3^m
    a_ = static_cast<int>(((a_ % order) + order) % order);

    w0_ = ring_->zeta(2L * a_) - ring_->one();
    Valuation val = valuation(w0_);
    if (!val.is_exact() || !(Rational(0) < val.value) || !(val.value < Rational(1)))
        throw std::invalid_argument("CharacterWeight: weight outside 1/3 < |w0| < 1");
    v_ = val.value;

    w0e_unit_ = div_pow3(pow(w0_, static_cast<unsigned long>(ring_->degree())), 1);
    if (w0e_unit_.residue() == 0)
        throw std::logic_error("CharacterWeight: w0^e / 3 must be a unit");
    w0e_unit_inv_ = invert_unit(w0e_unit_);

    // (Z/3^(m+1))^* is cyclic, generated by 2.
    dlog_.assign(conductor_, -1);
    long t = 1;
    long ord = 2L * order;
    for (int k = 0; k < ord; ++k) {
        dlog_[t] = k;
        t = (t * 2) % conductor_;
    }
}

CycElt CharacterWeight::kappa_of(long n) const {
    n %= conductor_;
    if (n < 0) n += conductor_;
    int d = dlog_[n];
    if (d < 0) return ring_->zero();
    return ring_->zeta(static_cast<long>(a_) * d);
}

CycElt CharacterWeight::tau_of(long n) const {
    n %= conductor_;
    if (n < 0) n += conductor_;
    int d = dlog_[n];
    if (d < 0) return ring_->zero();
    CycElt k = ring_->zeta(static_cast<long>(a_) * d);
    return (n % 3 == 1) ? k : -k;
}

CycElt CharacterWeight::div_w0_pow(const CycElt& x, int k) const {
    if (k == 0) return x;
    if (k < 0) return mul_w0_pow(x, -k);
    const int e = ring_->degree();
    int q = k / e, r = k % e;
    CycElt t = x;
    if (r > 0) {
        t = t * pow(w0_, static_cast<unsigned long>(e - r));
        ++q;
    }
    t = div_pow3(t, q);
    return t * pow(w0e_unit_inv_, static_cast<unsigned long>(q));
}

CycElt CharacterWeight::mul_w0_pow(const CycElt& x, int k) const {
    if (k == 0) return x;
    if (k < 0) return div_w0_pow(x, -k);
    return x * pow(w0_, static_cast<unsigned long>(k));
}

// --- Eisenstein series ---

namespace {

// Exact Bernoulli numbers B_0..B_k by the defining recurrence.
std::vector<mpq_class> bernoulli_upto(int k) {
    std::vector<mpq_class> B(k + 1);
    std::vector<mpz_class> binom(k + 2);
    B[0] = 1;
    for (int n = 1; n <= k; ++n) {
        // binomials C(n+1, j)
        binom[0] = 1;
        for (int j = 1; j <= n + 1; ++j)
            binom[j] = binom[j - 1] * (n + 2 - j) / j;
        mpq_class s = 0;
        for (int j = 0; j < n; ++j) s += mpq_class(binom[j]) * B[j];
        B[n] = -s / mpq_class(binom[n]);
        B[n].canonicalize();
    }
    return B;
}

} // namespace

PowSeries<CycElt> eisenstein_classical(int k, int M, const RingPtr& R) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("eisenstein_classical: weight must be even and >= 2");
    if (M < 2) throw std::invalid_argument("eisenstein_classical: M must be >= 2");

    // constant = 2 / ((1 - 3^(k-1)) * zeta(1-k)) with zeta(1-k) = -B_k / k.
    mpq_class Bk = bernoulli_upto(k)[k];
    mpz_class p3 = 1;
    for (int i = 0; i < k - 1; ++i) p3 *= 3;
    mpq_class constant = mpq_class(-2 * k) / (mpq_class(1 - p3) * Bk);
    constant.canonicalize();

    // Embed into Z3: by von Staudt-Clausen 3 divides den(B_k) exactly once,
    // cancelling v(3^... ) so the constant is a 3-adic integer; anything else
    // is a hard error surfaced here.
    const mpz_class den = constant.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), 3))
        throw std::domain_error("eisenstein_classical: constant is not 3-integral");
    const mpz_class& mod = R->pow3(R->N());
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::domain_error("eisenstein_classical: denominator not invertible");
    CycElt A = R->from_mpz(constant.get_num() * dinv);

    // sigma*_{k-1}(n): sum of d^(k-1) over divisors prime to 3.
    std::vector<CycElt> coeff(M, R->zero());
    coeff[0] = R->one();
    std::vector<mpz_class> dsum(M, 0);
    for (int d = 1; d < M; ++d) {
        if (d % 3 == 0) continue;
        mpz_class dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), d, k - 1);
        for (int n = d; n < M; n += d) dsum[n] += dk;
    }
    for (int n = 1; n < M; ++n) coeff[n] = A * R->from_mpz(dsum[n]);
    return PowSeries<CycElt>(Var::q, std::move(coeff));
}

PowSeries<CycElt> eisenstein_character(const CharacterWeight& cw, int M) {
    if (M < 2) throw std::invalid_argument("eisenstein_character: M must be >= 2");
    const RingPtr& R = cw.ring();
    const int c = cw.conductor();

    // A = -2c / sum_{j<c} j*tau(j); the division is exact in the ring.
    CycElt S = R->zero();
    for (int j = 1; j < c; ++j) S += R->from_int(j) * cw.tau_of(j);
    CycElt A = div_exact(R->from_int(-2L * c), S);

    std::vector<CycElt> coeff(M, R->zero());
    coeff[0] = R->one();
    std::vector<CycElt> dsum(M, R->zero());
    for (int d = 1; d < M; ++d) {
        if (d % 3 == 0) continue;
        CycElt td = cw.tau_of(d);
        for (int n = d; n < M; n += d) dsum[n] += td;
    }
    for (int n = 1; n < M; ++n) coeff[n] = A * dsum[n];
    return PowSeries<CycElt>(Var::q, std::move(coeff));
}

// --- coordinate frames ---

CoordFrame::CoordFrame(PowSeries<mpz_class> base, Var target)
    : fwd_(std::move(base)), rev_(reversion(fwd_, target)), target_(target) {
    if (fwd_.var() != Var::q)
        throw std::invalid_argument("CoordFrame: base must be a q-expansion");
}

PowSeries<mpz_class> CoordFrame::to_target(const PowSeries<mpz_class>& g) const {
    return compose(g, rev_);
}

PowSeries<CycElt> CoordFrame::to_target(const PowSeries<CycElt>& g) const {
    if (g.trunc() < 1) throw std::invalid_argument("CoordFrame: empty series");
    return compose(g, lift_series(rev_, g[0].ring()));
}

PowSeries<mpz_class> CoordFrame::to_q(const PowSeries<mpz_class>& h) const {
    return compose(h, fwd_);
}

PowSeries<CycElt> CoordFrame::to_q(const PowSeries<CycElt>& h) const {
    if (h.trunc() < 1) throw std::invalid_argument("CoordFrame: empty series");
    return compose(h, lift_series(fwd_, h[0].ring()));
}

CoordFrame y_frame(int M) { return CoordFrame(y_qexp(M), Var::y); }
CoordFrame f_frame(int M) { return CoordFrame(f_qexp(M), Var::y); }

// --- g_kappa ---

PowSeries<CycElt> g_kappa(const CharacterWeight& cw, int X_trunc, int q_prec) {
    if (q_prec < X_trunc)
        throw std::invalid_argument("g_kappa: q precision must cover the X truncation");
    const RingPtr& R = cw.ring();
    PowSeries<CycElt> E = eisenstein_character(cw, q_prec);
    PowSeries<CycElt> VE = v_op(E, q_prec);
    PowSeries<CycElt> f0 = E * invert_unit_series(VE);
    PowSeries<CycElt> f0y = y_frame(q_prec).to_target(f0);

    std::vector<CycElt> c;
    c.reserve(X_trunc);
    for (int j = 0; j < X_trunc; ++j) {
        try {
            c.push_back(cw.div_w0_pow(f0y[j], j));
        } catch (const std::domain_error&) {
            throw std::domain_error("g_kappa: coefficient " + std::to_string(j) +
                                    " is not integral after dividing by w0^j");
        }
    }
    if (!(c[0] == R->one()))
        throw std::logic_error("g_kappa: constant term must be 1");
    return PowSeries<CycElt>(Var::X, std::move(c));
}

} // namespace ovc3
