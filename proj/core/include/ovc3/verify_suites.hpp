#pragma once

#include <string>
#include <vector>

#include "ovc3/check_report.hpp"

namespace ovc3 {

// Each suite recomputes a family of identities from scratch and reports one
// CheckResult per identity. They are independent of each other and build
// their own rings, so they can run concurrently.

// Expansions of theta, delta, f, y and the exact operator identities tying
// them together, plus randomized U/V/sigma operator laws. Integer
// arithmetic throughout except the sigma trials.
CheckReport verify_fund_lemma();

// Valuation floors for the six containments satisfied by theta^k and its
// U/V/sigma transforms, specialized to k in {1,2,3,5}, plus randomized
// floors for U applied to series in r*f.
CheckReport verify_member_lemma();

// Eisenstein series displays, U-fixedness, the generating series g and its
// cubic equations, and the character independence of the residue of g.
CheckReport verify_eisenstein();

// The residue-field series r, g-bar, the reduced cubic, the s = t matrix
// identity, determinant nonvanishing, and the link back to the U-matrix.
CheckReport verify_residue();

// Randomized determinant-valuation trials for matrices whose j-th column is
// divisible by d^j and supported on columns divisible by 3.
CheckReport verify_strip_lemma();

const std::vector<std::string>& verify_suite_names();

// Run one suite by name; throws std::invalid_argument for unknown names.
CheckReport run_verify_suite(const std::string& name);

// All five suites. Honors OVC3_WORKERS > 1 by fanning suites out to that
// many threads; report order is fixed regardless.
std::vector<CheckReport> verify_all();

} // namespace ovc3
