#include "ovc3/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace ovc3 {

using json = nlohmann::ordered_json;

namespace {

std::string join_text(const std::vector<std::string>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    out += "\n";
    return out;
}

json rational_json(const Rational& r) {
    json j;
    j["num"] = r.num;
    j["den"] = r.den;
    return j;
}

} // namespace

std::string expansion_text(const PowSeries<mpz_class>& s) {
    std::vector<std::string> parts;
    parts.reserve(s.trunc());
    for (int i = 0; i < s.trunc(); ++i) parts.push_back(s[i].get_str());
    return join_text(parts);
}

std::string expansion_text(const PowSeries<CycElt>& s) {
    std::vector<std::string> parts;
    parts.reserve(s.trunc());
    for (int i = 0; i < s.trunc(); ++i) parts.push_back(s[i].str());
    return join_text(parts);
}

std::string expansion_csv(const PowSeries<mpz_class>& s) {
    std::ostringstream out;
    out << "exponent,coefficient,precision\n";
    for (int i = 0; i < s.trunc(); ++i)
        out << i << "," << s[i].get_str() << ",exact\n";
    return out.str();
}

std::string expansion_csv(const PowSeries<CycElt>& s) {
    std::ostringstream out;
    out << "exponent,coefficient,precision\n";
    for (int i = 0; i < s.trunc(); ++i)
        out << i << "," << s[i].str() << "," << s[i].precision() << "\n";
    return out.str();
}

std::string expansion_json(const PowSeries<mpz_class>& s) {
    json j;
    j["var"] = var_name(s.var());
    j["terms"] = s.trunc();
    j["precision"] = "exact";
    json cs = json::array();
    for (int i = 0; i < s.trunc(); ++i) cs.push_back(s[i].get_str());
    j["coefficients"] = cs;
    return j.dump(2) + "\n";
}

std::string expansion_json(const PowSeries<CycElt>& s) {
    json j;
    j["var"] = var_name(s.var());
    j["terms"] = s.trunc();
    if (s.trunc() > 0) {
        const auto& R = s[0].ring();
        j["ring"]["root_order"] = R->root_order();
        j["ring"]["digits"] = R->N();
    }
    json cs = json::array();
    for (int i = 0; i < s.trunc(); ++i) {
        json c;
        c["value"] = s[i].str();
        c["precision"] = s[i].precision();
        cs.push_back(c);
    }
    j["coefficients"] = cs;
    return j.dump(2) + "\n";
}

std::string matrix_text(const UMatrix& M) {
    std::ostringstream out;
    for (int i = 0; i < M.beta; ++i) {
        for (int j = 0; j < M.beta; ++j) {
            if (j) out << " | ";
            out << M.n[i][j].str();
        }
        out << "\n";
    }
    return out.str();
}

std::string matrix_csv(const UMatrix& M) {
    std::ostringstream out;
    out << "row,col,value,precision\n";
    for (int i = 0; i < M.beta; ++i)
        for (int j = 0; j < M.beta; ++j)
            out << i << "," << j << "," << M.n[i][j].str() << ","
                << M.n[i][j].precision() << "\n";
    return out.str();
}

std::string matrix_json(const UMatrix& M, const CharacterWeight& cw) {
    json j;
    j["kappa"]["conductor"] = cw.conductor();
    j["kappa"]["generator_exponent"] = cw.generator_exponent();
    j["beta"] = M.beta;
    json rows = json::array();
    for (int i = 0; i < M.beta; ++i) {
        json row = json::array();
        for (int jj = 0; jj < M.beta; ++jj) {
            json e;
            e["value"] = M.n[i][jj].str();
            e["precision"] = M.n[i][jj].precision();
            row.push_back(e);
        }
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j.dump(2) + "\n";
}

std::string slope_report_json(const SlopeReport& rep) {
    json j;
    j["kappa"]["conductor"] = rep.conductor;
    j["kappa"]["generator_exponent"] = rep.generator_exponent;
    j["v"] = rational_json(rep.v);
    j["beta"] = rep.beta;
    j["alpha_max"] = rep.alpha_max;

    json bv = json::array();
    for (size_t alpha = 0; alpha < rep.b_valuations.size(); ++alpha) {
        json row;
        row["alpha"] = (long long)alpha;
        row["num"] = rep.b_valuations[alpha].value.num;
        row["den"] = rep.b_valuations[alpha].value.den;
        bv.push_back(row);
    }
    j["b_valuations"] = bv;

    json vx = json::array();
    for (const auto& [alpha, val] : rep.polygon.vertices) {
        json row;
        row["alpha"] = alpha;
        row["num"] = val.num;
        row["den"] = val.den;
        vx.push_back(row);
    }
    j["vertices"] = vx;

    json sl = json::array();
    for (const auto& sm : rep.polygon.slopes) {
        json row;
        row["num"] = sm.slope.num;
        row["den"] = sm.slope.den;
        row["mult"] = sm.mult;
        sl.push_back(row);
    }
    j["slopes"] = sl;

    j["stable"] = rep.stable;
    j["precision_remaining"] = rep.precision_remaining;
    return j.dump(2) + "\n";
}

std::string slope_report_text(const SlopeReport& rep) {
    std::ostringstream out;
    out << "weight character: conductor " << rep.conductor
        << ", generator exponent " << rep.generator_exponent
        << "  (v = " << rep.v.str() << ")\n";
    out << "beta = " << rep.beta << ", alpha_max = " << rep.alpha_max << "\n";
    out << "v(b_alpha), alpha = 0.." << rep.alpha_max << ": ";
    for (size_t a = 0; a < rep.b_valuations.size(); ++a) {
        if (a) out << ", ";
        out << rep.b_valuations[a].str();
    }
    out << "\n";
    out << "polygon vertices:";
    for (const auto& [alpha, val] : rep.polygon.vertices)
        out << " (" << alpha << ", " << val.str() << ")";
    out << "\n";
    out << "slopes:";
    for (const auto& sm : rep.polygon.slopes)
        out << " " << sm.slope.str() << " x" << sm.mult;
    out << "\n";
    out << "stable under beta+3 recomputation: " << (rep.stable ? "yes" : "no")
        << "\n";
    out << "precision remaining: " << rep.precision_remaining << " digits\n";
    if (!rep.note.empty()) out << "note: " << rep.note << "\n";
    return out.str();
}

std::string slope_report_csv(const SlopeReport& rep) {
    std::ostringstream out;
    out << "record,alpha,num,den,mult\n";
    for (size_t a = 0; a < rep.b_valuations.size(); ++a)
        out << "b_valuation," << a << "," << rep.b_valuations[a].value.num
            << "," << rep.b_valuations[a].value.den << ",\n";
    for (const auto& [alpha, val] : rep.polygon.vertices)
        out << "vertex," << alpha << "," << val.num << "," << val.den << ",\n";
    for (const auto& sm : rep.polygon.slopes)
        out << "slope,," << sm.slope.num << "," << sm.slope.den << ","
            << sm.mult << "\n";
    return out.str();
}

std::string check_report_text(const CheckReport& rep) {
    std::ostringstream out;
    int passed = 0;
    for (const auto& c : rep.checks) {
        out << (c.pass ? "PASS" : "FAIL") << "  [" << rep.suite << "] "
            << c.name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
        if (c.pass) ++passed;
    }
    out << rep.suite << ": " << passed << "/" << rep.checks.size()
        << " checks passed\n";
    return out.str();
}

namespace {

json check_report_obj(const CheckReport& rep) {
    json j;
    j["suite"] = rep.suite;
    j["pass"] = rep.all_pass();
    json cs = json::array();
    for (const auto& c : rep.checks) {
        json row;
        row["name"] = c.name;
        row["pass"] = c.pass;
        row["detail"] = c.detail;
        cs.push_back(row);
    }
    j["checks"] = cs;
    return j;
}

} // namespace

std::string check_report_json(const CheckReport& rep) {
    return check_report_obj(rep).dump(2) + "\n";
}

std::string check_reports_text(const std::vector<CheckReport>& reps) {
    std::string out;
    bool pass = true;
    for (const auto& r : reps) {
        out += check_report_text(r);
        pass = pass && r.all_pass();
    }
    out += pass ? "all checks passed\n" : "some checks FAILED\n";
    return out;
}

std::string check_reports_json(const std::vector<CheckReport>& reps) {
    json j;
    bool pass = true;
    json arr = json::array();
    for (const auto& r : reps) {
        arr.push_back(check_report_obj(r));
        pass = pass && r.all_pass();
    }
    j["pass"] = pass;
    j["suites"] = arr;
    return j.dump(2) + "\n";
}

std::string check_reports_csv(const std::vector<CheckReport>& reps) {
    std::ostringstream out;
    out << "suite,check,pass,detail\n";
    auto unc = [](std::string s) {
        for (auto& ch : s)
            if (ch == ',') ch = ';';
        return s;
    };
    for (const auto& r : reps)
        for (const auto& c : r.checks)
            out << r.suite << "," << unc(c.name) << ","
                << (c.pass ? "pass" : "FAIL") << "," << unc(c.detail) << "\n";
    return out.str();
}

} // namespace ovc3
