// Acceptance gate: ten end-to-end criteria, one line each, nonzero exit on
// any failure. Each criterion recomputes its objects from scratch; timed
// criteria fail if they exceed their wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ovc3/cyclotomic.hpp"
#include "ovc3/f3.hpp"
#include "ovc3/power_series.hpp"
#include "ovc3/qexpansions.hpp"
#include "ovc3/residue_series.hpp"
#include "ovc3/umatrix.hpp"
#include "ovc3/verify_suites.hpp"

using namespace ovc3;

namespace {

template <class C>
PowSeries<C> poly(Var var, int trunc, std::vector<std::pair<int, C>> terms,
                  const C& like) {
    auto s = PowSeries<C>::zeros(var, trunc, like);
    for (auto& [e, c] : terms) s.at(e) = c;
    return s;
}

template <class C>
PowSeries<C> cube(const PowSeries<C>& s) {
    return s * s * s;
}

CycElt ab_omega(const RingPtr& R, long a, long b) {
    return R->from_int(a) + R->from_int(b) * R->omega();
}

bool starts_with(const PowSeries<mpz_class>& s, const std::vector<long>& expect) {
    if (s.trunc() < (int)expect.size()) return false;
    for (size_t i = 0; i < expect.size(); ++i)
        if (s[(int)i] != expect[i]) return false;
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

bool criterion1(std::string& why) {
    const int QF = 301; // 100 exact output terms after U
    const mpz_class z0 = 0;
    auto f = f_qexp(QF);
    auto y = y_qexp(QF);
    auto y3 = cube(y);
    auto one = poly<mpz_class>(Var::q, QF, {{0, 1}}, z0);
    auto one6y = one + scale(y, mpz_class(6));
    auto quad = y * (one + scale(y, mpz_class(3)) + scale(y * y, mpz_class(9)));

    if (!is_zero_upto(u_op(y), 101) || !is_zero_upto(u_op(y * y), 101)) {
        why = "U(y) or U(y^2) has a nonzero coefficient within 100 q-terms";
        return false;
    }
    auto u3 = u_op(y3);
    if (!equal_upto(u3 * cube(one6y), quad, 101)) {
        why = "U(y^3)(1+6y)^3 != y(1+3y+9y^2)";
        return false;
    }
    auto ypow = y3;
    auto upow = u3;
    for (int m = 2; m <= 5; ++m) {
        ypow = ypow * y3;
        upow = upow * u3;
        if (!equal_upto(u_op(ypow), upow, 101)) {
            why = "U(y^{3m}) != U(y^3)^m at m = " + std::to_string(m);
            return false;
        }
    }
    auto one3y = one - scale(y, mpz_class(3));
    if (!equal_upto(f * cube(one3y), quad, 101)) {
        why = "f(1-3y)^3 != y(1+3y+9y^2)";
        return false;
    }
    auto rhs = scale(f, mpz_class(90)) + scale(f * f, mpz_class(8748)) +
               scale(cube(f), mpz_class(177147));
    if (!equal_upto(u_op(f), rhs, 101)) {
        why = "U(f) != 90f + 8748f^2 + 177147f^3";
        return false;
    }
    if (!equal_upto(v_op(f, QF) * (one - scale(y3, mpz_class(27))), y3, 101)) {
        why = "V(f)(1-27y^3) != y^3";
        return false;
    }
    return true;
}

bool criterion2(std::string& why) {
    if (!starts_with(theta_qexp(8), {1, 6, 0, 6, 6, 0, 0, 12})) {
        why = "theta != 1 + 6q + 6q^3 + 6q^4 + 12q^7 + ...";
        return false;
    }
    if (!starts_with(delta_qexp(5), {0, 1, -24, 252, -1472})) {
        why = "delta != q - 24q^2 + 252q^3 - 1472q^4 + ...";
        return false;
    }
    if (!starts_with(f_qexp(5), {0, 1, 12, 90, 508})) {
        why = "f != q + 12q^2 + 90q^3 + 508q^4 + ...";
        return false;
    }
    if (!starts_with(y_qexp(14),
                     {0, 1, 0, 0, -5, 0, 0, 32, 0, 0, -198, 0, 0, 1214})) {
        why = "y != q - 5q^4 + 32q^7 - 198q^10 + 1214q^13 - ...";
        return false;
    }
    CharacterWeight cw(9, 2, 48);
    const auto& R = cw.ring();
    auto E = eisenstein_character(cw, 8);
    if (!(E[0] == R->one() && E[1] == ab_omega(R, 1, -1) && E[2] == R->from_int(3) &&
          E[3] == ab_omega(R, 1, -1) && E[4] == ab_omega(R, 4, 2))) {
        why = "E_kappa != 1 + (1-w)q + 3q^2 + (1-w)q^3 + (4+2w)q^4 + ...";
        return false;
    }
    auto f0 = E * invert_unit_series(v_op(E, 8));
    if (!(f0[0] == R->one() && f0[1] == ab_omega(R, 1, -1) && f0[2] == R->from_int(3) &&
          f0[3].is_zero() && f0[4] == ab_omega(R, 4, 5))) {
        why = "f0 != 1 + (1-w)q + 3q^2 + (4+5w)q^4 + ...";
        return false;
    }
    return true;
}

bool criterion3(std::string& why) {
    CharacterWeight cw(9, 2, 48);
    const auto& R = cw.ring();
    auto E = eisenstein_character(cw, 61);
    auto f0 = E * invert_unit_series(v_op(E, 61));
    auto F = y_frame(60).to_target(f0);
    auto P = [&](std::vector<std::pair<int, CycElt>> t) {
        return poly<CycElt>(Var::y, 60, std::move(t), R->zero());
    };
    auto A3 = P({{3, R->from_int(9)}});
    auto A2 = P({{3, R->from_int(-27)}, {2, R->from_int(-9)}, {1, R->from_int(-3)}});
    auto A1 = P({{3, ab_omega(R, 27, -27)},
                 {2, R->from_int(27)},
                 {1, R->from_int(9)},
                 {0, ab_omega(R, 2, 1)}});
    auto A0 = P({{3, ab_omega(R, -27, 27)},
                 {2, R->from_int(-27)},
                 {1, R->from_int(-9)},
                 {0, ab_omega(R, -2, -1)}});
    auto F2 = F * F;
    if (!is_zero_upto(A3 * F2 * F + A2 * F2 + A1 * F + A0, 60)) {
        why = "cubic equation for f0 fails within 60 y-terms";
        return false;
    }
    auto gbar = g_bar_series(100);
    if (!is_zero_upto(reduced_cubic(gbar), 100)) {
        why = "X^3 g^3 + X g^2 + g - 1 != 0 within 100 terms";
        return false;
    }
    auto r = r_series(100);
    auto X = poly<F3>(Var::X, 100, {{1, F3(1)}}, F3(0));
    if (!equal_upto(r - cube(r), X, 100)) {
        why = "r - r^3 != X within 100 terms";
        return false;
    }
    return true;
}

bool criterion4(std::string& why) {
    auto gbar = g_bar_series(81);
    CharacterWeight cw9(9, 2, 48);
    if (!equal_upto(residue_series_of(g_kappa(cw9, 81, 81)), gbar, 81)) {
        why = "residue at conductor 9 differs from the closed form";
        return false;
    }
    CharacterWeight cw27(27, 2, 64);
    if (!equal_upto(residue_series_of(g_kappa(cw27, 81, 81)), gbar, 81)) {
        why = "residue at conductor 27 differs from the closed form";
        return false;
    }
    return true;
}

bool criterion5(std::string& why) {
    CharacterWeight cw(9, 2, 48);
    UMatrix A = u_matrix_gf(cw, 12, g_kappa(cw, 12, 40));
    UMatrix B = u_matrix_qspace(cw, 12, 40);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
            if (!(A.n[i][j] == B.n[i][j])) {
                why = "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") differs between the two routes";
                return false;
            }
    return true;
}

bool slope_criterion(const SlopeReport& rep, long val_den, long slope_den,
                     std::string& why) {
    for (int a = 0; a <= rep.alpha_max; ++a) {
        Rational expect(static_cast<long long>(a) * (a - 1), val_den);
        if (!rep.b_valuations[a].certifies_exactly(expect)) {
            why = "v(b_" + std::to_string(a) + ") measured " +
                  rep.b_valuations[a].str() + ", expected " + expect.str();
            return false;
        }
    }
    if ((int)rep.polygon.slopes.size() != rep.alpha_max) {
        why = "polygon has " + std::to_string(rep.polygon.slopes.size()) +
              " slopes, expected " + std::to_string(rep.alpha_max);
        return false;
    }
    for (int k = 0; k < rep.alpha_max; ++k) {
        const auto& sm = rep.polygon.slopes[k];
        if (!(sm.slope == Rational(k, slope_den)) || sm.mult != 1) {
            why = "slope " + std::to_string(k) + " is " + sm.slope.str() + " x" +
                  std::to_string(sm.mult) + ", expected " +
                  Rational(k, slope_den).str() + " x1";
            return false;
        }
    }
    if (!rep.stable) {
        why = "valuations moved when beta was raised by 3";
        return false;
    }
    return true;
}

bool criterion6(std::string& why) {
    CharacterWeight cw(9, 2, 48);
    return slope_criterion(slopes_run(cw, 8, 27, 120), 2, 1, why);
}

bool criterion7(std::string& why) {
    CharacterWeight cw(27, 2, 48);
    return slope_criterion(slopes_run(cw, 6, 21, 120), 6, 3, why);
}

bool criterion8(std::string& why) {
    for (int a = 1; a <= 24; ++a)
        if (det_tbar(a) == F3(0)) {
            why = "det of the compressed block vanishes at alpha = " + std::to_string(a);
            return false;
        }
    if (!st_identity_holds(27)) {
        why = "t_{i,j} != s_{3i,3j} somewhere with i, j < 27";
        return false;
    }
    return true;
}

bool criterion9(std::string& why) {
    std::mt19937_64 rng(20240901);
    for (int t = 0; t < 100; ++t) {
        auto g = random_int_series(rng, 181);
        auto h = random_int_series(rng, 61);
        if (!equal_upto(u_op(g * v_op(h, 181)), h * u_op(g), 61)) {
            why = "U(g V(h)) != h U(g) at trial " + std::to_string(t);
            return false;
        }
    }
    for (int t = 0; t < 100; ++t) {
        auto g = random_int_series(rng, 61);
        auto h = random_int_series(rng, 61);
        if (!equal_upto(v_op(g * h, 181), v_op(g, 181) * v_op(h, 181), 181)) {
            why = "V(gh) != V(g)V(h) at trial " + std::to_string(t);
            return false;
        }
    }
    auto R = CycRing::make(1, 24);
    const CycElt w = R->omega();
    for (int t = 0; t < 100; ++t) {
        auto g = random_cyc_series(rng, R, 61);
        auto lhs = scale(v_op(u_op(g), 61), R->from_int(3));
        auto s1 = sigma_op(g, w);
        if (!equal_upto(lhs, g + s1 + sigma_op(s1, w), 61)) {
            why = "3VU(g) != g + sigma(g) + sigma^2(g) at trial " + std::to_string(t);
            return false;
        }
    }
    auto ml = run_verify_suite("member-lemma");
    int floor_checks = 0;
    for (const auto& chk : ml.checks)
        if (chk.name.rfind("U-image coefficient floors", 0) == 0) {
            ++floor_checks;
            if (!chk.pass) {
                why = chk.name + ": " + chk.detail;
                return false;
            }
        }
    if (floor_checks != 2) {
        why = "expected two randomized floor checks, found " +
              std::to_string(floor_checks);
        return false;
    }
    auto R32 = CycRing::make(1, 32);
    auto fail = strip_lemma_trials(R32, R32->uniformizer(), 2, 100, 20240902);
    if (!fail.empty()) {
        why = fail;
        return false;
    }
    return true;
}

bool criterion10(std::string& why) {
    auto ml = run_verify_suite("member-lemma");
    for (const auto& chk : ml.checks)
        if (!chk.pass) {
            why = chk.name + ": " + chk.detail;
            return false;
        }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* what;
        double budget_sec; // 0: untimed
        bool (*run)(std::string&);
    };
    const std::vector<Criterion> criteria = {
        {1, "exact operator identities for y and f to 100 q-terms", 10, criterion1},
        {2, "leading coefficients of theta, delta, f, y, E_kappa, f0", 0, criterion2},
        {3, "cubic equations: f0 in y, reduced residue cubic, r - r^3 = X", 0,
         criterion3},
        {4, "residue of the generating series matches the closed form twice", 0,
         criterion4},
        {5, "U-matrix generating-function route matches the q-space route", 60,
         criterion5},
        {6, "conductor 9: v(b_a) = a(a-1)/2, slopes 0..7, stable in beta", 300,
         criterion6},
        {7, "conductor 27: v(b_a) = a(a-1)/6, slopes k/3 for k < 6, stable", 600,
         criterion7},
        {8, "nonzero compressed determinants to 24, s/t identity to 27", 5,
         criterion8},
        {9, "randomized operator, floor and determinant trials", 0, criterion9},
        {10, "valuation floor specializations at k = 1, 2, 3, 5", 0, criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string why;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        if (ok && c.budget_sec > 0 && secs > c.budget_sec) {
            ok = false;
            char buf[96];
            std::snprintf(buf, sizeof(buf), "finished correct but over the %.0fs budget",
                          c.budget_sec);
            why = buf;
        }
        std::printf("%s criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.id,
                    c.what, secs);
        if (!ok) {
            std::printf("     -> %s\n", why.c_str());
            ++failures;
        }
    }
    if (failures == 0)
        std::printf("all %d criteria passed\n", (int)criteria.size());
    else
        std::printf("%d of %d criteria failed\n", failures, (int)criteria.size());
    return failures == 0 ? 0 : 1;
}
