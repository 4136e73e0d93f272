#include "ovc3/verify_suites.hpp"

#include <cstdlib>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ovc3/cyclotomic.hpp"
#include "ovc3/f3.hpp"
#include "ovc3/power_series.hpp"
#include "ovc3/qexpansions.hpp"
#include "ovc3/residue_series.hpp"
#include "ovc3/umatrix.hpp"

namespace ovc3 {

namespace {

// 3-adic valuation of an integer, -1 standing in for +infinity.
long v3_or_inf(const mpz_class& z) {
    if (z == 0) return -1;
    mpz_class scratch;
    const mpz_class three = 3;
    return (long)mpz_remove(scratch.get_mpz_t(), z.get_mpz_t(), three.get_mpz_t());
}

template <class C>
PowSeries<C> poly(Var var, int trunc, std::vector<std::pair<int, C>> terms,
                  const C& like) {
    auto s = PowSeries<C>::zeros(var, trunc, like);
    for (auto& [e, c] : terms) s.at(e) = c;
    return s;
}

template <class C>
PowSeries<C> pow_series(const PowSeries<C>& s, int k) {
    PowSeries<C> acc = s;
    for (int i = 1; i < k; ++i) acc = acc * s;
    return acc;
}

bool int_coeffs_match(const PowSeries<mpz_class>& s, const std::vector<long>& expect) {
    if (s.trunc() < (int)expect.size()) return false;
    for (size_t i = 0; i < expect.size(); ++i)
        if (s[(int)i] != expect[i]) return false;
    return true;
}

CycElt ab_omega(const RingPtr& R, long a, long b) {
    return R->from_int(a) + R->from_int(b) * R->omega();
}

bool int_floors(const PowSeries<mpz_class>& s, int m_lo, int m_hi,
                const std::function<Rational(int)>& bound, std::string& fail) {
    for (int m = m_lo; m < m_hi; ++m) {
        long v = v3_or_inf(s[m]);
        if (v < 0) continue;
        if (Rational(v) < bound(m)) {
            std::ostringstream os;
            os << "coefficient " << m << " has valuation " << v
               << ", below the floor " << bound(m).str();
            fail = os.str();
            return false;
        }
    }
    return true;
}

bool cyc_floors(const PowSeries<CycElt>& s, int m_lo, int m_hi,
                const std::function<Rational(int)>& bound, std::string& fail) {
    for (int m = m_lo; m < m_hi; ++m) {
        Valuation va = valuation(s[m]);
        if (!va.certifies_at_least(bound(m))) {
            std::ostringstream os;
            os << "coefficient " << m << " measured " << va.str()
               << ", below the floor " << bound(m).str();
            fail = os.str();
            return false;
        }
    }
    return true;
}

PowSeries<mpz_class> random_int_series(std::mt19937_64& rng, int trunc) {
    std::uniform_int_distribution<long> dist(-50, 50);
    std::vector<mpz_class> c((size_t)trunc);
    for (auto& x : c) x = dist(rng);
    return PowSeries<mpz_class>(Var::q, std::move(c));
}

CycElt random_elt(std::mt19937_64& rng, const RingPtr& R) {
    std::vector<mpz_class> c((size_t)R->degree());
    for (auto& x : c) {
        mpz_class hi = (unsigned long)rng();
        hi <<= 64;
        x = hi + mpz_class((unsigned long)rng());
    }
    return R->from_coeffs(c);
}

PowSeries<CycElt> random_cyc_series(std::mt19937_64& rng, const RingPtr& R, int trunc) {
    std::vector<CycElt> c;
    c.reserve((size_t)trunc);
    for (int i = 0; i < trunc; ++i) c.push_back(random_elt(rng, R));
    return PowSeries<CycElt>(Var::q, std::move(c));
}

} // namespace

CheckReport verify_fund_lemma() {
    CheckReport rep;
    rep.suite = "fund-lemma";
    const int QF = 301; // 100 exact output terms after U
    const mpz_class z0 = 0;

    auto theta = theta_qexp(QF);
    auto delta = delta_qexp(QF);
    auto f = f_qexp(QF);
    auto y = y_qexp(QF);
    auto one = poly<mpz_class>(Var::q, QF, {{0, mpz_class(1)}}, z0);

    rep.add("theta expansion leading terms",
            int_coeffs_match(theta, {1, 6, 0, 6, 6, 0, 0, 12, 0, 6}),
            "1 + 6q + 6q^3 + 6q^4 + 12q^7 + 6q^9");
    rep.add("delta expansion leading terms",
            int_coeffs_match(delta, {0, 1, -24, 252, -1472, 4830}),
            "q - 24q^2 + 252q^3 - 1472q^4 + 4830q^5");
    rep.add("f expansion leading terms",
            int_coeffs_match(f, {0, 1, 12, 90, 508}),
            "q + 12q^2 + 90q^3 + 508q^4");
    rep.add("y expansion leading terms",
            int_coeffs_match(y, {0, 1, 0, 0, -5, 0, 0, 32, 0, 0, -198, 0, 0, 1214}),
            "q - 5q^4 + 32q^7 - 198q^10 + 1214q^13");

    {
        bool ok = true;
        for (int n = 0; n < QF && ok; ++n)
            if (y[n] != 0 && n % 3 != 1) ok = false;
        rep.add("y is supported on exponents 1 mod 3", ok, "300 q-terms");
    }
    {
        auto ratio = theta * invert_unit_series(v_op(theta, QF));
        rep.add("theta/V(theta) = 1 + 6y",
                equal_upto(ratio - one, scale(y, mpz_class(6)), QF), "300 q-terms");
    }

    auto y2 = y * y;
    auto y3 = y2 * y;
    rep.add("U annihilates y", is_zero_upto(u_op(y), 101), "100 q-terms");
    rep.add("U annihilates y^2", is_zero_upto(u_op(y2), 101), "100 q-terms");

    auto Uy3 = u_op(y3);
    auto one_6y = one + scale(y, mpz_class(6));
    auto y_139 = y * (one + scale(y, mpz_class(3)) + scale(y2, mpz_class(9)));
    rep.add("U(y^3)(1+6y)^3 = y(1+3y+9y^2)",
            equal_upto(Uy3 * pow_series(one_6y, 3), y_139, 101), "100 q-terms");
    {
        bool ok = true;
        auto ypow = y3;
        auto upow = Uy3;
        for (int m = 2; m <= 5 && ok; ++m) {
            ypow = ypow * y3;
            upow = upow * Uy3;
            ok = equal_upto(u_op(ypow), upow, 101);
        }
        rep.add("U(y^{3m}) = U(y^3)^m for m <= 5", ok, "100 q-terms each");
    }
    rep.add("f(1-3y)^3 = y(1+3y+9y^2)",
            equal_upto(f * pow_series(one - scale(y, mpz_class(3)), 3), y_139, QF),
            "300 q-terms");
    {
        auto rhs = scale(f, mpz_class(90)) + scale(f * f, mpz_class(8748)) +
                   scale(f * f * f, mpz_class(177147));
        rep.add("U(f) = 90f + 8748f^2 + 177147f^3",
                equal_upto(u_op(f), rhs, 101), "100 q-terms");
    }
    rep.add("V(f)(1-27y^3) = y^3",
            equal_upto(v_op(f, QF) * (one - scale(y3, mpz_class(27))), y3, QF),
            "300 q-terms");
    rep.add("f^2 delta(q) = delta(q^3)",
            equal_upto(f * f * delta, v_op(delta, QF), QF), "300 q-terms");

    {
        std::mt19937_64 rng(20240811);
        bool ok = true;
        for (int t = 0; t < 100 && ok; ++t) {
            auto g = random_int_series(rng, 60);
            auto h = random_int_series(rng, 20);
            auto lhs = u_op(g * v_op(h, 60));
            auto rhs = truncated(h, lhs.trunc()) * u_op(g);
            ok = equal_upto(lhs, rhs, lhs.trunc());
        }
        rep.add("U(g V(h)) = h U(g), randomized", ok, "100 trials, 20 output terms");
    }
    {
        std::mt19937_64 rng(20240812);
        bool ok = true;
        for (int t = 0; t < 100 && ok; ++t) {
            auto g = random_int_series(rng, 20);
            auto h = random_int_series(rng, 20);
            ok = equal_upto(v_op(g * h, 58), v_op(g, 58) * v_op(h, 58), 58);
        }
        rep.add("V(gh) = V(g)V(h), randomized", ok, "100 trials, 58 output terms");
    }
    {
        auto R = CycRing::make(1, 16);
        const CycElt w = R->omega();
        std::mt19937_64 rng(20240813);
        bool ok = true, ok_order = true;
        for (int t = 0; t < 100 && ok; ++t) {
            auto g = random_cyc_series(rng, R, 60);
            auto lhs = scale(v_op(u_op(g), 60), R->from_int(3));
            auto sg = sigma_op(g, w);
            auto s2g = sigma_op(sg, w);
            ok = equal_upto(lhs, g + sg + s2g, 58);
            ok_order = ok_order && equal_upto(sigma_op(s2g, w), g, 60);
        }
        rep.add("3VU(g) = g + sigma(g) + sigma^2(g), randomized", ok, "100 trials");
        rep.add("sigma^3 = id, randomized", ok_order, "100 trials");
    }
    return rep;
}

CheckReport verify_member_lemma() {
    CheckReport rep;
    rep.suite = "member-lemma";
    const int QP = 91; // 30 exact output terms after U
    const int M = 31;  // coordinate truncation; floors checked for m = 1..30
    auto R = CycRing::make(1, 52);
    const CycElt w = R->omega();

    auto theta = theta_qexp(QP);
    auto fframe = f_frame(M);
    auto yframe = y_frame(M);

    {
        auto yf = fframe.to_target(y_qexp(M));
        std::string fail = "30 f-terms";
        bool ok = int_floors(scale(yf, mpz_class(6)), 1, M,
                             [](int m) { return Rational(m); }, fail);
        rep.add("theta/V(theta) - 1 has f-coefficient floors v >= m", ok, fail);
    }

    for (long k : {1L, 2L, 3L, 5L}) {
        const long vk = (k % 3 == 0) ? 1 : 0;
        const std::string at_k = " at k = " + std::to_string(k);
        auto Tq = pow_series(theta, (int)k);
        auto UT = u_op(Tq); // 31 q-terms
        auto VUT = v_op(UT, QP);

        {
            auto s = fframe.to_target(Tq * invert_unit_series(v_op(Tq, QP)));
            std::string fail = "v >= 1 + v3(k) + (m-1)/2, 30 f-terms";
            bool ok = int_floors(s, 1, M, [&](int m) {
                return Rational(1 + vk) + Rational(m - 1, 2);
            }, fail);
            rep.add("T/V(T) floor" + at_k, ok, fail);
        }
        {
            auto s = fframe.to_target(UT * invert_unit_series(truncated(Tq, UT.trunc())));
            std::string fail = "v >= 2 + v3(k) + 3(m-1)/2, 30 f-terms";
            bool ok = int_floors(s, 1, M, [&](int m) {
                return Rational(2 + vk) + Rational(3 * (m - 1), 2);
            }, fail);
            rep.add("U(T)/T floor" + at_k, ok, fail);
        }
        {
            auto Tc = lift_series(Tq, R);
            auto invTc = invert_unit_series(Tc);
            auto s1 = yframe.to_target(sigma_op(Tc, w) * invTc);
            auto s2 = yframe.to_target(sigma_op(sigma_op(Tc, w), w) * invTc);
            auto bound = [&](int m) {
                return Rational(3, 2) + Rational(vk) + Rational(m - 1);
            };
            std::string f1 = "v >= 3/2 + v3(k) + (m-1), 30 y-terms";
            std::string f2 = f1;
            bool ok1 = cyc_floors(s1, 1, M, bound, f1);
            bool ok2 = cyc_floors(s2, 1, M, bound, f2);
            rep.add("sigma(T)/T floor" + at_k, ok1, f1);
            rep.add("sigma^2(T)/T floor" + at_k, ok2, f2);
        }
        {
            auto s = yframe.to_target(VUT * invert_unit_series(Tq));
            std::string fail = "v >= 1/2 + v3(k) + (m-1), 30 y-terms";
            bool ok = int_floors(s, 1, M, [&](int m) {
                return Rational(1, 2) + Rational(vk) + Rational(m - 1);
            }, fail);
            rep.add("VU(T)/T floor" + at_k, ok, fail);
        }
        {
            // Integer arithmetic end to end, which is itself the rational
            // integrality half of the statement.
            auto s = yframe.to_target(UT * invert_unit_series(truncated(VUT, UT.trunc())));
            std::string fail = "v >= 1 + v3(k) + (m-1), 30 y-terms, integral";
            bool ok = int_floors(s, 1, M, [&](int m) {
                return Rational(1 + vk) + Rational(m - 1);
            }, fail);
            rep.add("U(T)/VU(T) floor" + at_k, ok, fail);
        }
    }

    {
        auto R2 = CycRing::make(1, 40);
        const int QT = 34; // 11 exact output terms after U
        auto Lf = lift_series(f_qexp(QT), R2);
        auto fframe12 = f_frame(12);
        std::mt19937_64 rng(20240814);
        for (int which = 0; which < 2; ++which) {
            const CycElt r = which == 0 ? R2->uniformizer() : R2->from_int(3);
            const Rational vr = which == 0 ? Rational(1, 2) : Rational(1);
            std::vector<PowSeries<CycElt>> rfpow;
            rfpow.push_back(poly<CycElt>(Var::q, QT, {{0, R2->one()}}, R2->zero()));
            auto rf = scale(Lf, r);
            for (int j = 1; j <= 30; ++j) rfpow.push_back(rfpow.back() * rf);

            bool ok = true;
            std::string fail = "100 trials, 11 f-terms";
            for (int t = 0; t < 100 && ok; ++t) {
                const bool drop_const = (t % 2 == 1);
                auto g = PowSeries<CycElt>::zeros(Var::q, QT, R2->zero());
                for (int j = drop_const ? 1 : 0; j <= 30; ++j)
                    g = g + scale(rfpow[(size_t)j], random_elt(rng, R2));
                auto s = fframe12.to_target(u_op(g));
                ok = cyc_floors(s, 1, 12, [&](int m) { return Rational(3 * m) * vr; },
                                fail);
                if (ok && drop_const && !s[0].is_zero()) {
                    ok = false;
                    fail = "constant term should vanish when the input has none";
                }
            }
            rep.add(std::string("U-image coefficient floors, r = ") +
                        (which == 0 ? "pi" : "3"),
                    ok, fail);
        }
    }
    return rep;
}

CheckReport verify_eisenstein() {
    CheckReport rep;
    rep.suite = "eisenstein";

    {
        auto R = CycRing::make(1, 32);
        auto E2 = eisenstein_classical(2, 121, R);
        bool disp = true;
        const long expect[] = {1, 12, 36, 12, 84};
        for (int i = 0; i < 5; ++i) disp = disp && E2[i] == R->from_int(expect[i]);
        rep.add("E_2 expansion leading terms", disp, "1 + 12q + 36q^2 + 12q^3 + 84q^4");
        bool fixed = true;
        for (int k : {2, 4, 6}) {
            auto E = k == 2 ? E2 : eisenstein_classical(k, 121, R);
            fixed = fixed && equal_upto(u_op(E), E, 41);
        }
        rep.add("U fixes E_k for k = 2, 4, 6", fixed, "40 q-terms");
    }

    CharacterWeight cw9(9, 2, 48);
    const auto& R9 = cw9.ring();
    const CycElt w = R9->omega();
    auto E9 = eisenstein_character(cw9, 121);
    auto f09 = E9 * invert_unit_series(v_op(E9, 121));

    {
        bool disp = E9[0] == R9->one() && E9[1] == ab_omega(R9, 1, -1) &&
                    E9[2] == R9->from_int(3) && E9[3] == ab_omega(R9, 1, -1) &&
                    E9[4] == ab_omega(R9, 4, 2);
        rep.add("E_kappa expansion at conductor 9", disp,
                "1 + (1-w)q + 3q^2 + (1-w)q^3 + (4+2w)q^4");
        rep.add("U fixes E_kappa at conductor 9", equal_upto(u_op(E9), E9, 41),
                "40 q-terms");
        bool disp0 = f09[0] == R9->one() && f09[1] == ab_omega(R9, 1, -1) &&
                     f09[2] == R9->from_int(3) && f09[3].is_zero() &&
                     f09[4] == ab_omega(R9, 4, 5);
        rep.add("f0 = E/V(E) expansion", disp0, "1 + (1-w)q + 3q^2 + (4+5w)q^4");
    }
    {
        CharacterWeight cw27(27, 2, 40);
        auto E = eisenstein_character(cw27, 91);
        rep.add("U fixes E_kappa at conductor 27", equal_upto(u_op(E), E, 31),
                "30 q-terms");
    }

    {
        auto F = y_frame(60).to_target(f09);
        auto P = [&](std::vector<std::pair<int, CycElt>> t) {
            return poly<CycElt>(Var::y, 60, std::move(t), R9->zero());
        };
        auto A3 = P({{3, R9->from_int(9)}});
        auto A2 = P({{3, R9->from_int(-27)}, {2, R9->from_int(-9)}, {1, R9->from_int(-3)}});
        auto A1 = P({{3, ab_omega(R9, 27, -27)},
                     {2, R9->from_int(27)},
                     {1, R9->from_int(9)},
                     {0, ab_omega(R9, 2, 1)}});
        auto A0 = P({{3, ab_omega(R9, -27, 27)},
                     {2, R9->from_int(-27)},
                     {1, R9->from_int(-9)},
                     {0, ab_omega(R9, -2, -1)}});
        auto F2 = F * F;
        auto resid = A3 * F2 * F + A2 * F2 + A1 * F + A0;
        rep.add("f0 cubic in y coordinates", is_zero_upto(resid, 60), "60 y-terms");

        auto Fbad = F;
        Fbad.at(2) = Fbad[2] + R9->one();
        auto F2bad = Fbad * Fbad;
        auto rbad = A3 * F2bad * Fbad + A2 * F2bad + A1 * Fbad + A0;
        rep.add("f0 cubic detects a perturbed series", !is_zero_upto(rbad, 60),
                "coefficient 2 bumped by 1");
    }
    {
        auto g = g_kappa(cw9, 60, 60);
        rep.add("generating series starts 1 - X",
                g[0] == R9->one() && g[1] == -R9->one(), "c0 = 1, c1 = -1");
        auto P = [&](std::vector<std::pair<int, CycElt>> t) {
            return poly<CycElt>(Var::X, 60, std::move(t), R9->zero());
        };
        auto B3 = P({{3, R9->one()}});
        auto B2 = P({{3, R9->from_int(-3)}, {2, ab_omega(R9, 1, -1)}, {1, w}});
        auto B1 = P({{3, ab_omega(R9, 3, -3)},
                     {2, ab_omega(R9, -3, 3)},
                     {1, ab_omega(R9, 0, -3)},
                     {0, w}});
        auto B0 = P({{3, ab_omega(R9, -3, 3)},
                     {2, ab_omega(R9, 3, -3)},
                     {1, ab_omega(R9, 0, 3)},
                     {0, -w}});
        auto g2 = g * g;
        auto resid = B3 * g2 * g + B2 * g2 + B1 * g + B0;
        rep.add("generating series cubic in X coordinates", is_zero_upto(resid, 60),
                "60 X-terms");
    }
    {
        auto gbar = g_bar_series(81);
        auto same = [&](const PowSeries<CycElt>& g) {
            auto rs = residue_series_of(g);
            for (int i = 0; i < 81; ++i)
                if (rs[i] != gbar[i]) return false;
            return true;
        };
        auto g9 = g_kappa(cw9, 81, 81);
        rep.add("residue of the generating series at conductor 9", same(g9),
                "81 terms vs closed form");
        CharacterWeight cw27(27, 2, 64);
        auto g27 = g_kappa(cw27, 81, 81);
        rep.add("residue of the generating series at conductor 27", same(g27),
                "81 terms vs closed form");
    }
    return rep;
}

CheckReport verify_residue() {
    CheckReport rep;
    rep.suite = "residue";
    const int M = 101;
    const F3 f0(0), f1(1);

    auto r = r_series(M);
    auto X = poly<F3>(Var::X, M, {{1, f1}}, f0);
    rep.add("r - r^3 = X", equal_upto(r - r * r * r, X, M), "100 terms");

    auto gbar = g_bar_series(M);
    rep.add("reduced cubic holds for the closed form",
            is_zero_upto(reduced_cubic(gbar), M), "100 terms");
    {
        const int expect[] = {1, 2, 2, 0, 1, 0, 0, 2, 2, 0, 2};
        bool ok = true;
        for (int i = 0; i < 11; ++i) ok = ok && gbar[i].v == expect[i];
        rep.add("g-bar leading terms", ok, "1 - X - X^2 + X^4 - X^7 - X^8 + 2X^10");
    }
    {
        auto g = poly<F3>(Var::X, M, {{0, f1}}, f0);
        for (int it = 0; it < 8; ++it) {
            auto deriv = scale(g * X, F3(2));
            deriv.at(0) = deriv[0] + f1;
            g = g - reduced_cubic(g) * invert_unit_series(deriv);
        }
        rep.add("Newton iteration from g = 1 recovers g-bar", equal_upto(g, gbar, M),
                "unique solution with unit constant term");
    }
    {
        bool ok = true;
        for (int k : {1, 2, 3, 5, 10}) {
            auto h = gbar;
            h.at(k) = h[k] + f1;
            ok = ok && !is_zero_upto(reduced_cubic(h), M);
        }
        rep.add("reduced cubic detects perturbed solutions", ok,
                "coefficients 1, 2, 3, 5, 10 bumped");
    }

    rep.add("s_{3i,3j} = t_{i,j} for i, j < 27", st_identity_holds(27), "729 entries");
    {
        bool ok = true;
        int bad = 0;
        for (int a = 1; a <= 24 && ok; ++a)
            if (det_tbar(a) == f0) {
                ok = false;
                bad = a;
            }
        rep.add("det of the compressed t-block is nonzero for alpha <= 24", ok,
                ok ? "alpha = 1..24" : "vanishes at alpha " + std::to_string(bad));
    }
    {
        bool ok = true;
        for (int n = 0; n < 12 && ok; ++n) {
            auto p = t_column_in_r(n);
            ok = (int)p.size() == n + 1 && p.back() != f0;
        }
        rep.add("t-column as a polynomial in r has degree n", ok, "n < 12");
    }
    {
        CharacterWeight cw(9, 2, 32);
        auto g = g_kappa(cw, 24, 24);
        auto Mx = u_matrix_gf(cw, 24, g);
        bool ok = true;
        for (int i = 0; i < 8 && ok; ++i)
            for (int j = 0; j < 8 && ok; ++j) {
                auto z = cw.div_w0_pow(Mx.n[(size_t)(3 * i)][(size_t)(3 * j)], 2 * j);
                ok = F3(z.residue()) == t_entry(i, j);
            }
        rep.add("U-matrix entries reduce to the t-matrix", ok,
                "n_{3i,3j} / w0^{2j} mod pi for i, j < 8");
    }
    return rep;
}

CheckReport verify_strip_lemma() {
    CheckReport rep;
    rep.suite = "strip-lemma";
    auto R = CycRing::make(1, 32);
    {
        auto fail = strip_lemma_trials(R, R->uniformizer(), 2, 100, 20240815);
        rep.add("determinant valuation biconditional, d = pi, s = 2", fail.empty(),
                fail.empty() ? "100 random 6x6 trials" : fail);
    }
    {
        // d = 3 pushes the alpha = 6 strip bound to v >= 45, past what an
        // N = 32 ring can certify for a vanishing determinant.
        auto R64 = CycRing::make(1, 64);
        auto fail = strip_lemma_trials(R64, R64->from_int(3), 2, 40, 20240816);
        rep.add("determinant valuation biconditional, d = 3, s = 2", fail.empty(),
                fail.empty() ? "40 random 6x6 trials" : fail);
    }
    {
        auto fail = strip_lemma_trials(R, R->uniformizer(), 1, 20, 20240817);
        rep.add("determinant valuation biconditional, d = pi, s = 1", fail.empty(),
                fail.empty() ? "20 random 3x3 trials" : fail);
    }
    return rep;
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "fund-lemma", "member-lemma", "eisenstein", "residue", "strip-lemma"};
    return names;
}

CheckReport run_verify_suite(const std::string& name) {
    if (name == "fund-lemma") return verify_fund_lemma();
    if (name == "member-lemma") return verify_member_lemma();
    if (name == "eisenstein") return verify_eisenstein();
    if (name == "residue") return verify_residue();
    if (name == "strip-lemma") return verify_strip_lemma();
    throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<CheckReport> verify_all() {
    const auto& names = verify_suite_names();
    int workers = 1;
    if (const char* env = std::getenv("OVC3_WORKERS")) {
        workers = std::atoi(env);
        if (workers < 1) workers = 1;
    }
    std::vector<CheckReport> out(names.size());
    if (workers <= 1) {
        for (size_t i = 0; i < names.size(); ++i) out[i] = run_verify_suite(names[i]);
        return out;
    }
    // Suites are independent; cap in-flight futures at the worker count.
    std::vector<std::future<CheckReport>> futs(names.size());
    size_t next = 0, done = 0;
    size_t inflight = 0;
    std::vector<size_t> order;
    while (done < names.size()) {
        while (next < names.size() && inflight < (size_t)workers) {
            futs[next] = std::async(std::launch::async, run_verify_suite, names[next]);
            order.push_back(next);
            ++next;
            ++inflight;
        }
        size_t idx = order[done];
        out[idx] = futs[idx].get();
        ++done;
        --inflight;
    }
    return out;
}

} // namespace ovc3
