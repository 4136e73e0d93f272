#pragma once

#include <string>

#include "ovc3/check_report.hpp"
#include "ovc3/power_series.hpp"
#include "ovc3/qexpansions.hpp"
#include "ovc3/umatrix.hpp"

namespace ovc3 {

// q-expansion exports.  Text is a comma-separated coefficient list, CSV has
// one row per exponent, JSON carries the variable name, truncation and
// precision alongside the coefficient strings.  Integer series report their
// precision as "exact".
std::string expansion_text(const PowSeries<mpz_class>& s);
std::string expansion_text(const PowSeries<CycElt>& s);
std::string expansion_csv(const PowSeries<mpz_class>& s);
std::string expansion_csv(const PowSeries<CycElt>& s);
std::string expansion_json(const PowSeries<mpz_class>& s);
std::string expansion_json(const PowSeries<CycElt>& s);

// Compactified operator matrix exports.
std::string matrix_text(const UMatrix& M);
std::string matrix_csv(const UMatrix& M);
std::string matrix_json(const UMatrix& M, const CharacterWeight& cw);

// Slope run exports.  The JSON layout is the stable machine interface:
// {"kappa":{"conductor","generator_exponent"},"v":{"num","den"},"beta",
//  "alpha_max","b_valuations":[{"alpha","num","den"}],
//  "vertices":[{"alpha","num","den"}],"slopes":[{"num","den","mult"}],
//  "stable","precision_remaining"}
std::string slope_report_json(const SlopeReport& rep);
std::string slope_report_text(const SlopeReport& rep);
std::string slope_report_csv(const SlopeReport& rep);

// Verification suite exports.
std::string check_report_text(const CheckReport& rep);
std::string check_report_json(const CheckReport& rep);
std::string check_reports_text(const std::vector<CheckReport>& reps);
std::string check_reports_json(const std::vector<CheckReport>& reps);
std::string check_reports_csv(const std::vector<CheckReport>& reps);

} // namespace ovc3
