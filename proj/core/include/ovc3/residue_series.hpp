#pragma once

#include <vector>

#include "ovc3/f3.hpp"

namespace ovc3 {

// r(X) = sum_{mu >= 0} X^(3^mu), the Artin-Schreier-style series over F3
// with r - r^3 = X.
F3Series r_series(int M);

// The residue of g_kappa, independent of the character:
// gbar = 1 - X^{-1} r(X^3) - X^{-2} (r(X^3) - r(X^3)^2).
F3Series g_bar_series(int M);

// Exact division by X^k: shifts down, failing loudly if any of the low k
// coefficients is nonzero.
F3Series x_shift_down(const F3Series& a, int k);

// X^3 g^3 + X g^2 + g - 1 evaluated at g (the reduced boundary cubic).
F3Series reduced_cubic(const F3Series& g);

/**
 * Column j of T(X,Y) = (1 - r Y + (r^2 - r) Y^2) / (1 - X Y^3), i.e.
 * f_j = factor_(j mod 3) * X^(j div 3) with factors 1, -r, r^2 - r.
 */
F3Series t_column(int j, int M);

// Entry t_{i,j} = [X^i] f_j.
F3 t_entry(int i, int j);

// s_{i,j} from S(X,Y) = gbar(X) / (1 - X Y^3): zero unless 3 | j, else
// [X^i] of gbar * X^(j/3).
F3 s_entry(int i, int j);

// Verifies t_{i,j} == s_{3i,3j} for all i, j < n.
bool st_identity_holds(int n);

// Determinant of (t_{i,j})_{i,j < alpha} over F3.
F3 det_tbar(int alpha);

// f_n rewritten as a polynomial in r via X = r - r^3; exact coefficients,
// degree must equal n.
std::vector<F3> t_column_in_r(int n);

} // namespace ovc3
