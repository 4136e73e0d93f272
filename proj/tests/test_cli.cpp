#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <utility>

// End-to-end runs of the installed binary. OVC3_BIN_PATH is injected by the
// build so the tests exercise exactly the artifact that ships.

namespace {

std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = std::string(OVC3_BIN_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("expand prints exact coefficient lists") {
    auto [code, out] = run_cli("expand theta --terms 5");
    CHECK(code == 0);
    CHECK(out == "1, 6, 0, 6, 6\n");

    auto [code2, out2] = run_cli("expand f --terms 5");
    CHECK(code2 == 0);
    CHECK(out2 == "0, 1, 12, 90, 508\n");

    auto [code3, out3] = run_cli("expand y --terms 8");
    CHECK(code3 == 0);
    CHECK(out3 == "0, 1, 0, 0, -5, 0, 0, 32\n");

    auto [code4, out4] = run_cli("expand f --coords y --terms 5");
    CHECK(code4 == 0);
    CHECK(out4 == "0, 1, 12, 90, 513\n");
}

TEST_CASE("slopes run end to end in json") {
    auto [code, out] = run_cli(
        "slopes --alpha_max 2 --beta 9 --precision_N 24 --q_prec 30 "
        "--output_format json");
    REQUIRE(code == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j.at("kappa").at("conductor").get<int>() == 9);
    CHECK(j.at("stable").get<bool>() == true);
    REQUIRE(j.at("b_valuations").size() == 3);
    CHECK(j.at("b_valuations").at(2).at("num").get<long>() == 1);
    CHECK(j.at("slopes").size() == 2);
}

TEST_CASE("verify reports pass and exits clean") {
    auto [code, out] = run_cli("verify --suite residue --output_format json");
    REQUIRE(code == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j.at("pass").get<bool>() == true);
    REQUIRE(j.at("suites").size() == 1);
    CHECK(j.at("suites").at(0).at("suite").get<std::string>() == "residue");
    for (const auto& chk : j.at("suites").at(0).at("checks"))
        CHECK(chk.at("pass").get<bool>() == true);
}

TEST_CASE("configuration errors exit 2 with a diagnostic") {
    auto [code, out] = run_cli("slopes --conductor 3 --alpha_max 2 --beta 9");
    CHECK(code == 2);
    CHECK(out.find("configuration error") != std::string::npos);
    CHECK(out.find("conductor") != std::string::npos);

    auto [code2, out2] = run_cli("slopes --beta 10");
    CHECK(code2 == 2);
    CHECK(out2.find("multiple of 3") != std::string::npos);

    auto [code3, out3] = run_cli("verify --suite no-such-suite");
    CHECK(code3 == 2);

    auto [code4, out4] = run_cli("expand nonsense");
    CHECK(code4 == 2);

    auto [code5, out5] = run_cli("");
    CHECK(code5 == 2);
}

TEST_CASE("low precision is reported as retryable") {
    auto [code, out] =
        run_cli("slopes --alpha_max 4 --beta 15 --precision_N 3 --q_prec 30");
    CHECK(code == 2);
    CHECK(out.find("precision exhausted") != std::string::npos);
    CHECK(out.find("--precision_N") != std::string::npos);
}

TEST_CASE("help is available and exits 0") {
    auto [code, out] = run_cli("--help");
    CHECK(code == 0);
    CHECK(out.find("slopes") != std::string::npos);
    CHECK(out.find("expand") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
    const std::string args =
        "slopes --alpha_max 2 --beta 9 --precision_N 24 --q_prec 30 "
        "--output_format json";
    auto [c1, o1] = run_cli(args);
    auto [c2, o2] = run_cli(args);
    CHECK(c1 == 0);
    CHECK(c1 == c2);
    CHECK(o1 == o2);

    auto [c3, o3] = run_cli("verify --suite fund-lemma --output_format csv");
    auto [c4, o4] = run_cli("verify --suite fund-lemma --output_format csv");
    CHECK(c3 == 0);
    CHECK(o3 == o4);
}

TEST_CASE("output_path writes the same bytes as stdout") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "ovc3_cli_expand_check.csv";
    auto [c1, o1] = run_cli("expand delta --terms 8 --output_format csv");
    REQUIRE(c1 == 0);

    auto [c2, o2] = run_cli("expand delta --terms 8 --output_format csv --output_path " +
                            tmp.string());
    REQUIRE(c2 == 0);
    CHECK(o2.empty());

    std::ifstream in(tmp, std::ios::binary);
    REQUIRE(in.good());
    std::string file_bytes((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    CHECK(file_bytes == o1);
    fs::remove(tmp);
}

} // TEST_SUITE("cli")
