#include "ovc3/residue_series.hpp"

#include <stdexcept>
#include <string>

namespace ovc3 {

F3Series r_series(int M) {
    F3Series r = F3Series::zeros(Var::X, M, F3(0));
    for (long p = 1; p < M; p *= 3) r.at(static_cast<int>(p)) = F3(1);
    return r;
}

F3Series x_shift_down(const F3Series& a, int k) {
    if (k == 0) return a;
    if (k < 0 || k >= a.trunc())
        throw std::invalid_argument("x_shift_down: shift out of range");
    for (int i = 0; i < k; ++i)
        if (a[i] != F3(0))
            throw std::domain_error("x_shift_down: coefficient " + std::to_string(i) +
                                    " nonzero, series not divisible by X^" + std::to_string(k));
    std::vector<F3> c(a.coeffs().begin() + k, a.coeffs().end());
    return F3Series(a.var(), std::move(c));
}

F3Series g_bar_series(int M) {
    // Work two coefficients high so both shifts stay exact.
    int W = M + 2;
    F3Series r3 = F3Series::zeros(Var::X, W, F3(0));
    for (long p = 3; p < W; p *= 3) r3.at(static_cast<int>(p)) = F3(1); // r(X^3)
    F3Series term1 = x_shift_down(r3, 1);
    F3Series term2 = x_shift_down(r3 - r3 * r3, 2);
    F3Series g = F3Series::zeros(Var::X, W, F3(0));
    g.at(0) = F3(1);
    g = g - truncated(term1, W) - truncated(term2, W);
    return truncated(g, M);
}

F3Series reduced_cubic(const F3Series& g) {
    const int M = g.trunc();
    F3Series g2 = g * g;
    F3Series g3 = g2 * g;
    F3Series X1 = F3Series::zeros(g.var(), M, F3(0));
    if (M > 1) X1.at(1) = F3(1);
    F3Series X3 = X1 * X1 * X1;
    F3Series one = F3Series::zeros(g.var(), M, F3(0));
    one.at(0) = F3(1);
    return X3 * g3 + X1 * g2 + g - one;
}

F3Series t_column(int j, int M) {
    if (j < 0) throw std::invalid_argument("t_column: negative index");
    int t = j / 3, rho = j % 3;
    F3Series fac = F3Series::zeros(Var::X, M, F3(0));
    if (rho == 0) {
        fac.at(0) = F3(1);
    } else {
        F3Series r = r_series(M);
        fac = rho == 1 ? -r : r * r - r;
    }
    F3Series out = F3Series::zeros(Var::X, M, F3(0));
    for (int i = t; i < M; ++i) out.at(i) = fac[i - t];
    return out;
}

F3 t_entry(int i, int j) { return t_column(j, i + 1)[i]; }

F3 s_entry(int i, int j) {
    if (j % 3 != 0) return F3(0);
    int t = j / 3;
    if (i < t) return F3(0);
    return g_bar_series(i - t + 1)[i - t];
}

bool st_identity_holds(int n) {
    // t_{i,j} vs s_{3i,3j}; one gbar expansion covers every entry.
    F3Series gb = g_bar_series(3 * n);
    for (int j = 0; j < n; ++j) {
        F3Series col = t_column(j, n);
        for (int i = 0; i < n; ++i) {
            int idx = 3 * i - j;
            F3 s = idx < 0 ? F3(0) : gb[idx];
            if (col[i] != s) return false;
        }
    }
    return true;
}

F3 det_tbar(int alpha) {
    if (alpha < 1) throw std::invalid_argument("det_tbar: alpha must be >= 1");
    std::vector<std::vector<F3>> m(alpha, std::vector<F3>(alpha));
    for (int j = 0; j < alpha; ++j) {
        F3Series col = t_column(j, alpha);
        for (int i = 0; i < alpha; ++i) m[i][j] = col[i];
    }
    F3 det(1);
    for (int c = 0; c < alpha; ++c) {
        int piv = -1;
        for (int r = c; r < alpha; ++r)
            if (m[r][c] != F3(0)) { piv = r; break; }
        if (piv < 0) return F3(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        F3 inv = RingTraits<F3>::invert(m[c][c]);
        for (int r = c + 1; r < alpha; ++r) {
            if (m[r][c] == F3(0)) continue;
            F3 f = m[r][c] * inv;
            for (int k = c; k < alpha; ++k) m[r][k] = m[r][k] - f * m[c][k];
        }
    }
    return det;
}

std::vector<F3> t_column_in_r(int n) {
    if (n < 0) throw std::invalid_argument("t_column_in_r: negative index");
    int t = n / 3, rho = n % 3;
    // (r - r^3)^t, exact polynomial arithmetic in F3[r]
    std::vector<F3> p{F3(1)};
    std::vector<F3> base{F3(0), F3(1), F3(0), F3(2)}; // r - r^3
    auto polymul = [](const std::vector<F3>& a, const std::vector<F3>& b) {
        std::vector<F3> c(a.size() + b.size() - 1, F3(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
        return c;
    };
    for (int i = 0; i < t; ++i) p = polymul(p, base);
    if (rho == 1) p = polymul(p, {F3(0), F3(2)});          // * (-r)
    else if (rho == 2) p = polymul(p, {F3(0), F3(2), F3(1)}); // * (r^2 - r)
    while (p.size() > 1 && p.back() == F3(0)) p.pop_back();
    return p;
}

} // namespace ovc3
