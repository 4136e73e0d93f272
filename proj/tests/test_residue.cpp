#include <doctest.h>

#include <vector>

#include <ovc3/f3.hpp>
#include <ovc3/residue_series.hpp>

using namespace ovc3;

namespace {

F3Series f3s(std::vector<int> v) {
    std::vector<F3> c;
    c.reserve(v.size());
    for (int x : v) c.emplace_back(x);
    return F3Series(Var::X, std::move(c));
}

// Determinant of (t_{i,j})_{i,j<alpha} by straight Gaussian elimination
// mod 3, independent of det_tbar.
F3 det_oracle(int alpha) {
    std::vector<std::vector<int>> M(alpha, std::vector<int>(alpha));
    for (int i = 0; i < alpha; ++i)
        for (int j = 0; j < alpha; ++j) M[i][j] = t_entry(i, j).v;
    int det = 1;
    for (int k = 0; k < alpha; ++k) {
        int piv = -1;
        for (int r = k; r < alpha; ++r)
            if (M[r][k] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return F3(0);
        if (piv != k) {
            std::swap(M[piv], M[k]);
            det = (det * 2) % 3; // row swap flips the sign; -1 = 2 mod 3
        }
        det = (det * M[k][k]) % 3;
        int inv = M[k][k]; // 1 and 2 are self-inverse mod 3
        for (int r = k + 1; r < alpha; ++r) {
            int factor = (M[r][k] * inv) % 3;
            if (factor == 0) continue;
            for (int c = k; c < alpha; ++c)
                M[r][c] = ((M[r][c] - factor * M[k][c]) % 3 + 3) % 3;
        }
    }
    return F3(det);
}

} // namespace

TEST_SUITE("residue") {

TEST_CASE("F3 arithmetic tables") {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            CHECK((F3(a) + F3(b)).v == (a + b) % 3);
            CHECK((F3(a) * F3(b)).v == (a * b) % 3);
            CHECK((F3(a) - F3(b)).v == ((a - b) % 3 + 3) % 3);
        }
    CHECK((-F3(1)).v == 2);
    CHECK(RingTraits<F3>::invert(F3(2)) == F3(2));
    CHECK_THROWS_AS(RingTraits<F3>::invert(F3(0)), std::domain_error);
    CHECK(F3(-4) == F3(2));
}

TEST_CASE("r series supports exactly the powers of three") {
    auto r = r_series(200);
    for (int n = 0; n < 200; ++n) {
        bool pow3 = (n == 1 || n == 3 || n == 9 || n == 27 || n == 81);
        CHECK(r[n] == F3(pow3 ? 1 : 0));
    }
    // r - r^3 = X: the defining Artin-Schreier relation.
    auto lhs = r - r * r * r;
    for (int n = 0; n < 200; ++n) CHECK(lhs[n] == F3(n == 1 ? 1 : 0));
}

TEST_CASE("g-bar satisfies the reduced cubic and nothing nearby does") {
    auto g = g_bar_series(200);
    std::vector<int> lead{1, 2, 2, 0, 1, 0, 0, 2, 2, 0, 2};
    for (size_t n = 0; n < lead.size(); ++n) CHECK(g[static_cast<int>(n)] == F3(lead[n]));

    CHECK(is_zero_upto(reduced_cubic(g), 190));

    for (int k : {1, 2, 5, 10, 50}) {
        auto bumped = g;
        bumped.at(k) = bumped[k] + F3(1);
        CAPTURE(k);
        CHECK(!is_zero_upto(reduced_cubic(bumped), 190));
    }
}

TEST_CASE("shifting down by X powers") {
    auto a = f3s({0, 0, 1, 2, 0, 1});
    auto b = x_shift_down(a, 2);
    CHECK(equal_upto(b, f3s({1, 2, 0, 1}), 4));
    CHECK_THROWS_AS(x_shift_down(f3s({1, 0, 0}), 1), std::domain_error);
}

TEST_CASE("t columns follow the three-term pattern") {
    auto r = r_series(40);
    auto r2mr = r * r - r;
    for (int j = 0; j < 12; ++j) {
        auto col = t_column(j, 40);
        int t = j / 3;
        F3Series expect = f3s({1});
        switch (j % 3) {
            case 0: expect = f3s(std::vector<int>(40, 0)); expect.at(t) = F3(1); break;
            case 1: {
                auto shifted = F3Series::zeros(Var::X, 40, F3(0));
                for (int n = 0; n + t < 40; ++n) shifted.at(n + t) = (-r)[n];
                expect = shifted;
                break;
            }
            default: {
                auto shifted = F3Series::zeros(Var::X, 40, F3(0));
                for (int n = 0; n + t < 40; ++n) shifted.at(n + t) = r2mr[n];
                expect = shifted;
                break;
            }
        }
        CAPTURE(j);
        CHECK(equal_upto(col, expect, 35));
    }
}

TEST_CASE("compressed entries agree with the straight entries") {
    CHECK(st_identity_holds(15));
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) CHECK(t_entry(i, j) == s_entry(3 * i, 3 * j));
}

TEST_CASE("compressed determinants are nonzero and match elimination") {
    for (int alpha = 1; alpha <= 12; ++alpha) {
        F3 lib = det_tbar(alpha);
        CAPTURE(alpha);
        CHECK(lib != F3(0));
        CHECK(lib == det_oracle(alpha));
    }
}

TEST_CASE("t columns rewritten in r have full degree") {
    auto r = r_series(60);
    for (int n = 0; n < 10; ++n) {
        auto poly = t_column_in_r(n);
        CHECK(static_cast<int>(poly.size()) == n + 1);
        CHECK(poly.back() != F3(0));
        // Substitute the series for r and compare with the column itself.
        auto acc = F3Series::zeros(Var::X, 60, F3(0));
        auto rpow = F3Series::zeros(Var::X, 60, F3(0));
        rpow.at(0) = F3(1);
        for (size_t k = 0; k < poly.size(); ++k) {
            if (poly[k] != F3(0)) {
                for (int idx = 0; idx < 60; ++idx) acc.at(idx) = acc[idx] + poly[k] * rpow[idx];
            }
            if (k + 1 < poly.size()) rpow = rpow * r;
        }
        CAPTURE(n);
        CHECK(equal_upto(acc, t_column(n, 60), 55));
    }
}

} // TEST_SUITE("residue")
