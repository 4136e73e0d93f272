#include "ovc3/cyclotomic.hpp"

#include <algorithm>
#include <cassert>

namespace ovc3 {

namespace {

long ipow3(int k) {
    long r = 1;
    while (k-- > 0) r *= 3;
    return r;
}

// Largest g <= cap with 3^g dividing every coordinate.
int common_pow3(const std::vector<mpz_class>& coeffs, int cap) {
    static const mpz_class three = 3;
    int g = cap;
    mpz_class scratch;
    for (const auto& x : coeffs) {
        if (g == 0) break;
        if (x == 0) continue;
        int v3 = static_cast<int>(
            mpz_remove(scratch.get_mpz_t(), x.get_mpz_t(), three.get_mpz_t()));
        g = std::min(g, v3);
    }
    return g;
}

} // namespace

// --- CycRing ---

CycRing::CycRing(int m, int N) : m_(m), N_(N) {
    h_ = static_cast<int>(ipow3(m - 1));
    e_ = 2 * h_;
    order_ = 3L * h_;
    pow3_.resize(N_ + 1);
    pow3_[0] = 1;
    for (int k = 1; k <= N_; ++k) pow3_[k] = pow3_[k - 1] * 3;
}

RingPtr CycRing::make(int m, int N) {
    if (m < 1) throw std::invalid_argument("CycRing: m must be >= 1");
    if (N < 2) throw std::invalid_argument("CycRing: N must be >= 2");
    return RingPtr(new CycRing(m, N));
}

const mpz_class& CycRing::pow3(int k) const {
    if (k < 0 || k > N_) throw std::invalid_argument("CycRing::pow3: exponent out of range");
    return pow3_[k];
}

CycElt CycRing::zero() const {
    return CycElt(shared_from_this(), std::vector<mpz_class>(e_), N_);
}

CycElt CycRing::one() const { return from_int(1); }

CycElt CycRing::from_int(long long v) const { return from_mpz(mpz_class(static_cast<long>(v))); }

CycElt CycRing::from_mpz(const mpz_class& v) const {
    std::vector<mpz_class> c(e_);
    c[0] = v;
    return CycElt(shared_from_this(), std::move(c), N_);
}

CycElt CycRing::from_coeffs(std::vector<mpz_class> coeffs) const {
    if (static_cast<int>(coeffs.size()) != e_)
        throw std::invalid_argument("CycRing::from_coeffs: need exactly e coordinates");
    return CycElt(shared_from_this(), std::move(coeffs), N_);
}

CycElt CycRing::zeta(long k) const {
    k %= order_;
    if (k < 0) k += order_;
    std::vector<mpz_class> c(e_);
    if (k < e_) {
        c[k] = 1;
    } else {
        // x^k = -x^(k-h) - x^(k-2h) once k >= 2h; here e <= k < 3h so one step lands below e.
        c[k - h_] = -1;
        c[k - 2 * h_] = -1;
    }
    return CycElt(shared_from_this(), std::move(c), N_);
}

CycElt CycRing::omega() const { return zeta(h_); }

CycElt CycRing::uniformizer() const {
    std::vector<mpz_class> c(e_);
    c[0] = -1;
    if (e_ > 1) c[1] = 1;
    return CycElt(shared_from_this(), std::move(c), N_);
}

// --- CycElt ---

namespace {

void check_same_ring(const CycElt& a, const CycElt& b) {
    const CycRing& ra = *a.ring();
    const CycRing& rb = *b.ring();
    if (ra.m() != rb.m() || ra.N() != rb.N())
        throw std::invalid_argument("CycElt: operands from different rings");
}

} // namespace

CycElt::CycElt(RingPtr ring, std::vector<mpz_class> coeffs, int prec)
    : ring_(std::move(ring)), prec_(prec), c_(std::move(coeffs)) {
    if (prec_ < 0) prec_ = 0;
    if (prec_ > ring_->N()) prec_ = ring_->N();
    if (static_cast<int>(c_.size()) != ring_->degree())
        throw std::invalid_argument("CycElt: coordinate count must equal ring degree");
    canonicalize();
}

void CycElt::canonicalize() {
    const mpz_class& mod = ring_->pow3(prec_);
    for (auto& x : c_) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    }
}

bool CycElt::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

int CycElt::residue() const {
    if (prec_ < 1)
        throw PrecisionError("CycElt::residue: no digits left", ring_->N() + 1);
    mpz_class s = 0;
    for (const auto& x : c_) s += x;
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), 3);
    return static_cast<int>(r.get_ui());
}

CycElt CycElt::reduced_to(int prec) const {
    if (prec >= prec_) return *this;
    return CycElt(ring_, c_, prec);
}

CycElt CycElt::operator-() const {
    std::vector<mpz_class> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return CycElt(ring_, std::move(c), prec_);
}

CycElt operator+(const CycElt& a, const CycElt& b) {
    check_same_ring(a, b);
    std::vector<mpz_class> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return CycElt(a.ring_, std::move(c), std::min(a.prec_, b.prec_));
}

CycElt operator-(const CycElt& a, const CycElt& b) {
    check_same_ring(a, b);
    std::vector<mpz_class> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return CycElt(a.ring_, std::move(c), std::min(a.prec_, b.prec_));
}

CycElt operator*(const CycElt& a, const CycElt& b) {
    check_same_ring(a, b);
    const int e = a.ring_->degree();
    const int h = a.ring_->half();
    std::vector<mpz_class> t(2 * e - 1);
    for (int i = 0; i < e; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < e; ++j) {
            if (b.c_[j] == 0) continue;
            mpz_addmul(t[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    // Fold degrees >= e back with x^k = -x^(k-h) - x^(k-2h).
    for (int k = 2 * e - 2; k >= e; --k) {
        if (t[k] == 0) continue;
        t[k - h] -= t[k];
        t[k - 2 * h] -= t[k];
        t[k] = 0;
    }
    t.resize(e);
    return CycElt(a.ring_, std::move(t), std::min(a.prec_, b.prec_));
}

bool operator==(const CycElt& a, const CycElt& b) {
    check_same_ring(a, b);
    int p = std::min(a.prec_, b.prec_);
    const mpz_class& mod = a.ring_->pow3(p);
    mpz_class x, y;
    for (size_t i = 0; i < a.c_.size(); ++i) {
        mpz_fdiv_r(x.get_mpz_t(), a.c_[i].get_mpz_t(), mod.get_mpz_t());
        mpz_fdiv_r(y.get_mpz_t(), b.c_[i].get_mpz_t(), mod.get_mpz_t());
        if (x != y) return false;
    }
    return true;
}

std::string CycElt::str() const {
    const mpz_class& mod = ring_->pow3(prec_);
    mpz_class halfmod = mod / 2;
    std::string out;
    const char* root = ring_->m() == 1 ? "w" : "z";
    for (size_t i = 0; i < c_.size(); ++i) {
        mpz_class v = c_[i];
        if (v > halfmod) v -= mod; // symmetric lift for readability
        if (v == 0) continue;
        bool neg = v < 0;
        mpz_class av = neg ? mpz_class(-v) : v;
        std::string term;
        if (i == 0) {
            term = av.get_str();
        } else {
            if (av != 1) term = av.get_str() + "*";
            term += root;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (out.empty()) {
            out = (neg ? "-" : "") + term;
        } else {
            out += (neg ? "-" : "+") + term;
        }
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> CycElt::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.get_str());
    return out;
}

// --- division and valuation ---

CycElt div_uniformizer(const CycElt& z) {
    const RingPtr& R = z.ring();
    const int e = R->degree();
    const int h = R->half();
    const int P = z.precision();
    if (P < 1)
        throw PrecisionError("div_uniformizer: no digits left to divide", R->N() + 1);

    mpz_class c1 = 0; // z evaluated at x = 1
    for (const auto& x : z.coeffs()) c1 += x;
    const mpz_class& mod = R->pow3(P);
    mpz_fdiv_r(c1.get_mpz_t(), c1.get_mpz_t(), mod.get_mpz_t());
    if (mpz_fdiv_ui(c1.get_mpz_t(), 3) != 0)
        throw std::domain_error("div_uniformizer: element not divisible by zeta-1");

    // Synthetic division: z(x) = (x-1) q(x) + z(1).
    std::vector<mpz_class> q(e, 0);
    if (e >= 2) {
        q[e - 2] = z.coeffs()[e - 1];
        for (int i = e - 3; i >= 0; --i) q[i] = z.coeffs()[i + 1] + q[i + 1];
    }
    // 3 = -(zeta-1) * psi(zeta) with psi = sum_{i<2h} x^i + sum_{i<h} x^i,
    // so z / (zeta-1) = q(zeta) - (z(1)/3) * psi(zeta).
    mpz_class cp = c1 / 3;
    for (int i = 0; i < e; ++i) q[i] -= (i < h ? 2 : 1) * cp;
    return CycElt(R, std::move(q), P - 1);
}

CycElt div_pow3(const CycElt& z, int k) {
    if (k == 0) return z;
    if (k < 0) throw std::invalid_argument("div_pow3: negative exponent");
    const RingPtr& R = z.ring();
    const int P = z.precision();
    if (k >= P)
        throw PrecisionError("div_pow3: dividing away all known digits",
                             R->N() + (k - P) + 2);
    const mpz_class& d = R->pow3(k);
    std::vector<mpz_class> c(z.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (!mpz_divisible_p(z.coeffs()[i].get_mpz_t(), d.get_mpz_t()))
            throw std::domain_error("div_pow3: coordinate " + std::to_string(i) +
                                    " not divisible by 3^" + std::to_string(k));
        c[i] = z.coeffs()[i] / d;
    }
    return CycElt(R, std::move(c), P - k);
}

CycElt invert_unit(const CycElt& z) {
    const RingPtr& R = z.ring();
    int r = z.residue();
    if (r == 0) throw std::domain_error("invert_unit: element is not a unit");
    // First approximation inverts the residue (1 or 2 are self-inverse mod 3);
    // each Newton step w <- w(2 - zw) doubles the number of correct digits
    // in the maximal-ideal filtration.
    CycElt w = R->from_int(r);
    CycElt two = R->from_int(2);
    const int P = z.precision();
    long target = static_cast<long>(P) * R->degree();
    int iters = 1;
    for (long reach = 1; reach < target; reach *= 2) ++iters;
    for (int i = 0; i < iters; ++i) w = w * (two - z * w);
    if (!((z * w) == R->one().reduced_to(P)))
        throw std::logic_error("invert_unit: Newton iteration failed to converge");
    return w;
}

Valuation valuation(const CycElt& z) {
    const RingPtr& R = z.ring();
    const int e = R->degree();
    const int P = z.precision();
    if (P < 1 || z.is_zero()) return Valuation::lower_bound(Rational(P - 1));

    // Strip the exact power of 3 shared by all coordinates, then at most
    // e-1 uniformizer divisions separate the remaining part from a unit.
    int g = common_pow3(z.coeffs(), P - 1);
    CycElt w = g > 0 ? div_pow3(z, g) : z;
    int t = 0;
    while (w.residue() == 0) {
        ++t;
        if (t >= e)
            throw std::logic_error("valuation: divisibility exceeded ramification index");
        if (w.precision() <= 1)
            return Valuation::lower_bound(Rational(static_cast<long long>(g) * e + t, e));
        w = div_uniformizer(w);
    }
    return Valuation::exact(Rational(static_cast<long long>(g) * e + t, e));
}

CycElt div_exact(const CycElt& a, const CycElt& b) {
    check_same_ring(a, b);
    const RingPtr& R = a.ring();
    if (b.is_zero()) throw std::domain_error("div_exact: division by zero");
    // Factor b = 3^g * (zeta-1)^t * unit and peel the same factors off a.
    int g = common_pow3(b.coeffs(), b.precision() - 1);
    CycElt bu = g > 0 ? div_pow3(b, g) : b;
    CycElt au = g > 0 ? div_pow3(a, g) : a;
    while (bu.residue() == 0) {
        bu = div_uniformizer(bu);
        au = div_uniformizer(au);
    }
    return au * invert_unit(bu);
}

CycElt pow(const CycElt& z, unsigned long k) {
    CycElt acc = z.ring()->one().reduced_to(z.precision());
    CycElt base = z;
    while (k > 0) {
        if (k & 1UL) acc = acc * base;
        base = base * base;
        k >>= 1UL;
    }
    return acc;
}

} // namespace ovc3
