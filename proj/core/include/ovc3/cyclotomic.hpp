#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ovc3/rational.hpp"

namespace ovc3 {

/**
 * Raised when an operation cannot certify enough 3-adic digits to proceed.
 * recommended_N suggests a working precision that would have sufficed.
 */
class PrecisionError : public std::runtime_error {
public:
    PrecisionError(const std::string& msg, int recommended)
        : std::runtime_error(msg), recommended_N(recommended) {}
    int recommended_N;
};

/**
 * A 3-adic valuation measurement. Values are rationals t/e with
 * e = 2*3^(m-1), normalized so that v(3) = 1. Elements indistinguishable
 * from zero at the working precision yield a certified lower bound instead
 * of an exact value.
 */
struct Valuation {
    Rational value;
    bool at_least{false};

    static Valuation exact(Rational v) { return Valuation{v, false}; }
    static Valuation lower_bound(Rational v) { return Valuation{v, true}; }

    bool is_exact() const { return !at_least; }

    // True when the measurement certifies v >= bound. An exact value
    // certifies both directions; a lower bound only certifies >=.
    bool certifies_at_least(const Rational& bound) const { return value >= bound; }
    // True when the measurement certifies v == target exactly.
    bool certifies_exactly(const Rational& target) const {
        return !at_least && value == target;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.at_least == b.at_least && a.value == b.value;
    }
    std::string str() const {
        return at_least ? (">=" + value.str()) : value.str();
    }
};

class CycElt;
class CycRing;
using RingPtr = std::shared_ptr<const CycRing>;

/**
 * The ring Z3[zeta] with zeta a primitive 3^m-th root of unity, realized as
 * Z[x] / (Phi(x), 3^N) where Phi(x) = x^(2h) + x^h + 1 and h = 3^(m-1).
 * Totally ramified over Z3: residue field F3, uniformizer zeta - 1,
 * (zeta-1)^e = 3 * unit with e = 2h. All elements are integral; N is the
 * ceiling on known absolute precision. Instances are immutable and safe to
 * share across threads.
 */
class CycRing : public std::enable_shared_from_this<CycRing> {
public:
    static RingPtr make(int m, int N);

    int m() const { return m_; }
    int N() const { return N_; }
    int degree() const { return e_; }   // e = 2*3^(m-1), the ramification index
    int half() const { return h_; }     // h = 3^(m-1)
    long root_order() const { return order_; } // 3^m

    const mpz_class& pow3(int k) const; // 3^k for 0 <= k <= N

    CycElt zero() const;
    CycElt one() const;
    CycElt from_int(long long v) const;
    CycElt from_mpz(const mpz_class& v) const;
    CycElt from_coeffs(std::vector<mpz_class> coeffs) const; // power-basis coordinates
    CycElt zeta(long k = 1) const;      // zeta^k, any integer exponent
    CycElt omega() const;               // zeta^h, a primitive cube root of unity
    CycElt uniformizer() const;         // zeta - 1

private:
    CycRing(int m, int N);
    int m_, N_, e_, h_;
    long order_;
    std::vector<mpz_class> pow3_;
    friend class CycElt;
};

/**
 * An element of a CycRing, stored as power-basis coordinates canonically
 * reduced mod 3^prec, where prec <= N is the number of guaranteed 3-adic
 * digits. Every arithmetic result carries min(operand precisions); exact
 * divisions deduct the digits they consume. Value type, immutable in all
 * public operations.
 */
class CycElt {
public:
    CycElt(RingPtr ring, std::vector<mpz_class> coeffs, int prec);

    const RingPtr& ring() const { return ring_; }
    int precision() const { return prec_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool is_zero() const;
    int residue() const;               // image in F3 under zeta -> 1; needs prec >= 1
    CycElt reduced_to(int prec) const; // forget digits down to the given precision

    CycElt operator-() const;
    friend CycElt operator+(const CycElt& a, const CycElt& b);
    friend CycElt operator-(const CycElt& a, const CycElt& b);
    friend CycElt operator*(const CycElt& a, const CycElt& b);
    CycElt& operator+=(const CycElt& b) { *this = *this + b; return *this; }
    CycElt& operator-=(const CycElt& b) { *this = *this - b; return *this; }
    CycElt& operator*=(const CycElt& b) { *this = *this * b; return *this; }

    // Equality of residues mod 3^min(prec): the only equality finite
    // precision can certify.
    friend bool operator==(const CycElt& a, const CycElt& b);
    friend bool operator!=(const CycElt& a, const CycElt& b) { return !(a == b); }

    // Human-readable polynomial in the root, coefficients lifted to the
    // symmetric range. The root prints as "w" for m = 1 (a cube root) and
    // "z" otherwise.
    std::string str() const;
    // Canonical nonnegative residue strings, machine-facing.
    std::vector<std::string> coeff_strings() const;

private:
    RingPtr ring_;
    int prec_;
    std::vector<mpz_class> c_;
    void canonicalize();
    friend CycElt mul_impl(const CycElt&, const CycElt&);
};

// --- arithmetic beyond the ring operations ---

// Exact division by the uniformizer zeta - 1. Throws std::domain_error if
// the argument is not divisible; costs one digit of known precision.
CycElt div_uniformizer(const CycElt& z);

// Exact division by 3^k (coefficientwise). Throws std::domain_error if any
// power-basis coordinate is not divisible; costs k digits.
CycElt div_pow3(const CycElt& z, int k);

// Inverse of a unit (residue != 0) by Newton iteration; full precision kept.
CycElt invert_unit(const CycElt& z);

// a / b for exact ring division (throws std::domain_error when a is not a
// multiple of b). Costs as many digits as the 3-part plus uniformizer-part
// of b's valuation.
CycElt div_exact(const CycElt& a, const CycElt& b);

CycElt pow(const CycElt& z, unsigned long k);

/**
 * The 3-adic valuation of z, normalized so v(3) = 1; exact rational with
 * denominator dividing e whenever z is distinguishable from zero, otherwise
 * AT_LEAST(prec - 1). Measures a scratch copy; z is untouched.
 */
Valuation valuation(const CycElt& z);

} // namespace ovc3
