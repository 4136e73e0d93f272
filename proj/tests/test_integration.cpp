#include <doctest.h>

#include <json.hpp>

#include <ovc3/check_report.hpp>
#include <ovc3/qexpansions.hpp>
#include <ovc3/serialize.hpp>
#include <ovc3/umatrix.hpp>
#include <ovc3/verify_suites.hpp>

using namespace ovc3;
using json = nlohmann::json;

TEST_SUITE("integration") {

TEST_CASE("every verification suite passes") {
    auto reports = verify_all();
    REQUIRE(reports.size() == verify_suite_names().size());
    for (const auto& rep : reports) {
        CAPTURE(rep.suite);
        for (const auto& chk : rep.checks) {
            CAPTURE(chk.name);
            CHECK(chk.pass);
        }
        CHECK(rep.all_pass());
    }
}

TEST_CASE("slope law at the worked weight") {
    CharacterWeight cw(9, 2, 48);
    SlopeReport rep = slopes_run(cw, 4, 15, 40);
    CHECK(rep.stable);
    CHECK(rep.progression_ok);
    long expect[] = {0, 0, 1, 3, 6}; // alpha(alpha-1) * v with v = 1/2
    for (int a = 0; a <= 4; ++a)
        CHECK(rep.b_valuations[a].certifies_exactly(Rational(expect[a])));
    REQUIRE(rep.polygon.slopes.size() == 4);
    for (int k = 0; k < 4; ++k) {
        CHECK(rep.polygon.slopes[k].slope == Rational(k));
        CHECK(rep.polygon.slopes[k].mult == 1);
    }
}

TEST_CASE("slope law one level deeper in the tower") {
    CharacterWeight cw(27, 2, 32);
    SlopeReport rep = slopes_run(cw, 3, 12, 30);
    CHECK(rep.stable);
    CHECK(rep.progression_ok);
    CHECK(rep.v == Rational(1, 6));
    Rational expect[] = {Rational(0), Rational(0), Rational(1, 3), Rational(1)};
    for (int a = 0; a <= 3; ++a) CHECK(rep.b_valuations[a].certifies_exactly(expect[a]));
    REQUIRE(rep.polygon.slopes.size() == 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(rep.polygon.slopes[k].slope == Rational(k, 3));
        CHECK(rep.polygon.slopes[k].mult == 1);
    }
}

TEST_CASE("slope report serializes to the documented schema") {
    CharacterWeight cw(9, 2, 32);
    SlopeReport rep = slopes_run(cw, 2, 9, 30);
    json j = json::parse(slope_report_json(rep));

    CHECK(j.at("kappa").at("conductor").get<int>() == 9);
    CHECK(j.at("kappa").at("generator_exponent").get<int>() == 2);
    CHECK(j.at("v").at("num").get<long>() == 1);
    CHECK(j.at("v").at("den").get<long>() == 2);
    CHECK(j.at("beta").get<int>() == 9);
    CHECK(j.at("alpha_max").get<int>() == 2);
    REQUIRE(j.at("b_valuations").size() == 3);
    for (int a = 0; a <= 2; ++a) {
        const auto& row = j.at("b_valuations").at(a);
        CHECK(row.at("alpha").get<int>() == a);
        CHECK(row.at("den").get<long>() >= 1);
    }
    CHECK(j.at("b_valuations").at(2).at("num").get<long>() == 1);
    CHECK(j.at("b_valuations").at(2).at("den").get<long>() == 1);
    REQUIRE(j.at("slopes").size() == 2);
    CHECK(j.at("slopes").at(1).at("num").get<long>() == 1);
    CHECK(j.at("slopes").at(1).at("mult").get<long>() == 1);
    CHECK(j.at("stable").get<bool>() == true);
    CHECK(j.at("precision_remaining").get<int>() > 0);
    CHECK(j.at("vertices").is_array());
}

TEST_CASE("expansion serializations agree on content") {
    auto th = theta_qexp(6);
    CHECK(expansion_text(th) == "1, 6, 0, 6, 6, 0\n");

    json j = json::parse(expansion_json(th));
    CHECK(j.at("var").get<std::string>() == "q");
    CHECK(j.at("terms").get<int>() == 6);
    REQUIRE(j.at("coefficients").size() == 6);
    CHECK(j.at("coefficients").at(1).get<std::string>() == "6");

    std::string csv = expansion_csv(th);
    CHECK(csv.rfind("exponent,coefficient,precision\n", 0) == 0);
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 7);
}

TEST_CASE("check reports serialize with pass flags") {
    CheckReport rep;
    rep.suite = "demo";
    rep.add("first", true, "fine");
    rep.add("second, with comma", false, "broke, badly");
    CHECK(!rep.all_pass());

    json j = json::parse(check_report_json(rep));
    CHECK(j.at("suite").get<std::string>() == "demo");
    CHECK(j.at("pass").get<bool>() == false);
    REQUIRE(j.at("checks").size() == 2);
    CHECK(j.at("checks").at(0).at("pass").get<bool>() == true);

    std::string csv = check_reports_csv({rep});
    CHECK(csv.find("second; with comma") != std::string::npos);
    CHECK(csv.find("broke; badly") != std::string::npos);

    std::string text = check_report_text(rep);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("FAIL") != std::string::npos);
}

TEST_CASE("matrix serializations carry the weight block") {
    CharacterWeight cw(9, 2, 24);
    auto g = g_kappa(cw, 6, 20);
    UMatrix M = u_matrix_gf(cw, 6, g);

    json j = json::parse(matrix_json(M, cw));
    CHECK(j.at("kappa").at("conductor").get<int>() == 9);
    CHECK(j.at("beta").get<int>() == 6);
    REQUIRE(j.at("entries").is_array());

    std::string csv = matrix_csv(M);
    CHECK(csv.rfind("row,col,value,precision\n", 0) == 0);
}

} // TEST_SUITE("integration")
