// ovc3: exact 3-adic expansions, identity checks, U-matrices and slopes for
// overconvergent modular forms at weights near the boundary of weight space.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "ovc3/cyclotomic.hpp"
#include "ovc3/power_series.hpp"
#include "ovc3/qexpansions.hpp"
#include "ovc3/serialize.hpp"
#include "ovc3/umatrix.hpp"
#include "ovc3/verify_suites.hpp"

namespace {

struct RunConfig {
    int conductor = 9;
    int generator_exponent = 2;
    int q_prec = 120;
    int y_prec = 0; // 0: follow --terms
    int alpha_max = 8;
    int beta = 27;
    int precision_N = 48;
    std::string output_format = "text";
    std::string output_path;

    std::string form;
    int terms = 10;
    int weight = 2;
    std::string coords = "q";
    std::string route = "gf";
    std::string suite = "all";
};

void add_common(CLI::App* cmd, RunConfig& rc) {
    cmd->add_option("--conductor", rc.conductor,
                    "conductor 3^(m+1) of the weight character");
    cmd->add_option("--generator_exponent,--generator-exponent",
                    rc.generator_exponent, "a in kappa(2) = zeta^a, coprime to 3");
    cmd->add_option("--precision_N,--precision-N", rc.precision_N,
                    "3-adic working precision (digits)");
    cmd->add_option("--q_prec,--q-prec", rc.q_prec, "q-expansion truncation");
    cmd->add_option("--y_prec,--y-prec", rc.y_prec, "y-expansion truncation");
    cmd->add_option("--alpha_max,--alpha-max", rc.alpha_max,
                    "highest characteristic-series coefficient checked");
    cmd->add_option("--beta", rc.beta, "U-matrix truncation size");
    cmd->add_option("--output_format,--output-format", rc.output_format,
                    "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--output_path,--output-path,--output", rc.output_path,
                    "write output to this file instead of stdout");
}

void validate(const RunConfig& rc, bool char_series_run) {
    if (rc.beta % 3 != 0)
        throw std::invalid_argument("beta must be a multiple of 3");
    if (rc.beta < 3) throw std::invalid_argument("beta must be positive");
    // The alpha_max coupling only constrains runs that truncate a
    // characteristic series; the plain matrix printer ignores alpha_max.
    if (char_series_run && rc.beta < 3 * rc.alpha_max + 3)
        throw std::invalid_argument("beta must be at least 3*alpha_max + 3");
    if (rc.y_prec > rc.q_prec)
        throw std::invalid_argument("q_prec must be at least y_prec");
    if (rc.precision_N < 2)
        throw std::invalid_argument("precision_N must be at least 2");
    if (rc.terms < 1) throw std::invalid_argument("terms must be positive");
}

void emit(const std::string& text, const RunConfig& rc) {
    if (rc.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(rc.output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + rc.output_path);
    out << text;
}

template <class C>
std::string render_series(const ovc3::PowSeries<C>& s, const RunConfig& rc) {
    if (rc.output_format == "json") return ovc3::expansion_json(s);
    if (rc.output_format == "csv") return ovc3::expansion_csv(s);
    return ovc3::expansion_text(s);
}

int run_expand(const RunConfig& rc) {
    using namespace ovc3;
    const bool to_y = rc.coords == "y";
    const int yN = rc.y_prec > 0 ? rc.y_prec : rc.terms;
    const int M = to_y ? std::max(rc.terms, yN) : rc.terms;

    const bool integral =
        rc.form == "theta" || rc.form == "delta" || rc.form == "f" || rc.form == "y";
    if (integral) {
        PowSeries<mpz_class> s = rc.form == "theta"   ? theta_qexp(M)
                                 : rc.form == "delta" ? delta_qexp(M)
                                 : rc.form == "f"     ? f_qexp(M)
                                                      : y_qexp(M);
        if (to_y) s = y_frame(yN).to_target(s);
        emit(render_series(s, rc), rc);
        return 0;
    }

    PowSeries<CycElt> s = [&] {
        if (rc.form == "E_classical") {
            if (rc.weight < 2 || rc.weight % 2 != 0)
                throw std::invalid_argument("weight must be a positive even integer");
            auto R = CycRing::make(1, rc.precision_N);
            return eisenstein_classical(rc.weight, M, R);
        }
        CharacterWeight cw(rc.conductor, rc.generator_exponent, rc.precision_N);
        return eisenstein_character(cw, M);
    }();
    if (to_y) s = y_frame(yN).to_target(s);
    emit(render_series(s, rc), rc);
    return 0;
}

int run_verify(const RunConfig& rc) {
    using namespace ovc3;
    std::vector<CheckReport> reps;
    if (rc.suite == "all")
        reps = verify_all();
    else
        reps.push_back(run_verify_suite(rc.suite));

    std::string out;
    if (rc.output_format == "json")
        out = check_reports_json(reps);
    else if (rc.output_format == "csv")
        out = check_reports_csv(reps);
    else
        out = check_reports_text(reps);
    emit(out, rc);

    for (const auto& r : reps)
        if (!r.all_pass()) return 1;
    return 0;
}

int run_matrix(const RunConfig& rc) {
    using namespace ovc3;
    CharacterWeight cw(rc.conductor, rc.generator_exponent, rc.precision_N);
    UMatrix M = rc.route == "gf"
                    ? u_matrix_gf(cw, rc.beta, g_kappa(cw, rc.beta, rc.q_prec))
                    : u_matrix_qspace(cw, rc.beta, rc.q_prec);
    std::string out;
    if (rc.output_format == "json")
        out = matrix_json(M, cw);
    else if (rc.output_format == "csv")
        out = matrix_csv(M);
    else
        out = matrix_text(M);
    emit(out, rc);
    return 0;
}

int run_slopes(const RunConfig& rc) {
    using namespace ovc3;
    CharacterWeight cw(rc.conductor, rc.generator_exponent, rc.precision_N);
    SlopeReport rep = slopes_run(cw, rc.alpha_max, rc.beta, rc.q_prec);
    std::string out;
    if (rc.output_format == "json")
        out = slope_report_json(rep);
    else if (rc.output_format == "csv")
        out = slope_report_csv(rep);
    else
        out = slope_report_text(rep);
    emit(out, rc);
    return (rep.progression_ok && rep.stable) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig rc;
    CLI::App app{
        "exact 3-adic slope and expansion computations for overconvergent "
        "modular forms near the boundary of weight space"};
    app.require_subcommand(1);

    auto* expand = app.add_subcommand("expand", "print a q- or y-expansion");
    expand->add_option("form", rc.form, "one of theta, delta, f, y, E_classical, E_kappa")
        ->required()
        ->check(CLI::IsMember({"theta", "delta", "f", "y", "E_classical", "E_kappa"}));
    expand->add_option("--terms", rc.terms, "number of coefficients to print");
    expand->add_option("--weight", rc.weight, "weight k for E_classical");
    expand->add_option("--coords", rc.coords, "expansion variable")
        ->check(CLI::IsMember({"q", "y"}));
    add_common(expand, rc);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    {
        std::vector<std::string> allowed = ovc3::verify_suite_names();
        allowed.push_back("all");
        verify->add_option("--suite", rc.suite, "suite name or all")
            ->check(CLI::IsMember(allowed));
    }
    add_common(verify, rc);

    auto* matrix = app.add_subcommand("matrix", "print the compactified U-matrix");
    matrix->add_option("--route", rc.route,
                       "gf: generating-function columns; qspace: direct U on "
                       "q-expansions")
        ->check(CLI::IsMember({"gf", "qspace"}));
    add_common(matrix, rc);

    auto* slopes = app.add_subcommand(
        "slopes", "characteristic series valuations and Newton slopes");
    add_common(slopes, rc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        validate(rc, static_cast<bool>(*slopes));
        if (*expand) return run_expand(rc);
        if (*verify) return run_verify(rc);
        if (*matrix) return run_matrix(rc);
        if (*slopes) return run_slopes(rc);
        return 2;
    } catch (const ovc3::PrecisionError& e) {
        std::cerr << "precision exhausted: " << e.what()
                  << "; retry with --precision_N " << e.recommended_N << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    }
}
