// Integration tests for the command-line front end: spawns the real binary,
// parses its JSON envelopes, and checks schemas, exit codes, determinism and
// the CSV formats.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cmath>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QSREP_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.output.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

json run_json(const std::string& args) {
    auto res = run_cli(args);
    REQUIRE(res.exit_code == 0);
    return json::parse(res.output);
}

} // namespace

TEST_CASE("encode emits the envelope with digits and backend") {
    auto env = run_json("encode --q 1/3,1/3,1/3 --x 1/2 --n 4");
    CHECK(env["command"] == "encode");
    CHECK(env["backend"] == "exact");
    CHECK(env["result"]["digits"] == json::array({1, 1, 1, 1}));
    CHECK(env["inputs"]["system"]["q"] == json::array({"1/3", "1/3", "1/3"}));

    auto floaty = run_json("encode --q 0.2,0.3,0.5 --x 0.5 --n 3");
    CHECK(floaty["backend"] == "float");
    CHECK(floaty["result"]["digits"] == json::array({2, 0, 0}));
    CHECK(floaty["inputs"]["system"]["q"][0].is_number());
}

TEST_CASE("decode word and periodic") {
    auto env = run_json("decode --q 1/5,3/10,1/2 --digits 2,0");
    CHECK(env["result"]["value"] == 0.5);
    CHECK(env["result"]["exact"] == "1/2");

    auto per = run_json("decode --q 1/2,1/2 --period 1");
    CHECK(per["result"]["value"] == 1.0);
    CHECK(per["result"]["exact"] == "1");

    auto mixed = run_json("decode --q 1/3,1/3,1/3 --preperiod 1 --period 0");
    CHECK(mixed["result"]["exact"] == "1/3");
}

TEST_CASE("cylinder geometry") {
    auto env = run_json("cylinder --q 1/5,3/10,1/2 --digits 2,0");
    CHECK(env["result"]["left"] == 0.5);
    CHECK(env["result"]["length"] == doctest::Approx(0.1));
    CHECK(env["result"]["left_exact"] == "1/2");
    CHECK(env["result"]["length_exact"] == "1/10");
}

TEST_CASE("stats over explicit digits") {
    auto env = run_json("stats --digits 0,1,1,2,0");
    CHECK(env["result"]["n"] == 5);
    CHECK(env["result"]["counts"] == json::array({2, 2, 1}));
    CHECK(env["result"]["mean"] == doctest::Approx(0.8));
}

TEST_CASE("stats over a periodic expansion is exact") {
    auto env = run_json("stats --period 0,1,2 --s 3");
    CHECK(env["backend"] == "exact");
    CHECK(env["result"]["mean"] == "1");
    CHECK(env["result"]["frequencies"] == json::array({"1/3", "1/3", "1/3"}));
}

TEST_CASE("stats series CSV has the documented columns") {
    auto res = run_cli("stats --construct champernowne --checkpoints 10,100 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.output.rfind("position,mean,freq_0", 0) == 0);
    CHECK(res.output.find("\n10,") != std::string::npos);
    CHECK(res.output.find("\n100,") != std::string::npos);
}

TEST_CASE("oscillation report via default checkpoint families") {
    auto env = run_json("oscillation --c 0 --d 1 --s 2 --rounds 12");
    CHECK(env["result"]["limit_estimate_b"] == 0.5);
    double gap = env["result"]["gap"].get<double>();
    CHECK(gap > 1.0 / 8);
    CHECK(gap < 1.0 / 4);
}

TEST_CASE("dim subcommands") {
    auto be = run_json("dim be --q 1/3,1/3,1/3 --tau 0.5828,0.2517,0.1655");
    CHECK(be["result"]["value"].get<double>() == doctest::Approx(0.8733).epsilon(6e-4));
    CHECK(be["result"]["method"] == "be_formula");

    auto be0 = run_json("dim be --q 1/3,1/3,1/3 --tau 1,0,0");
    CHECK(be0["result"]["value"] == 0.0);

    auto moran = run_json("dim moran --q 1/3,1/3,1/3 --subset 0,2");
    CHECK(moran["result"]["value"].get<double>() ==
          doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-12));
    CHECK(moran["result"]["residual"].get<double>() <= 1e-13);

    auto ak = run_json("dim ak --k 9");
    CHECK(ak["result"]["exact"] == "9/10");
    CHECK(ak["result"]["value"] == 0.9);
    CHECK(ak["backend"] == "exact");

    auto lb = run_json("dim level-bound --q 1/3,1/3,1/3 --theta 1");
    CHECK(lb["result"]["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("opt subcommands") {
    auto m0 = run_json("opt m0");
    CHECK(m0["result"]["tau"][0].get<double>() == doctest::Approx(0.5828).epsilon(1e-3));
    CHECK(m0["result"]["dim"].get<double>() == doctest::Approx(0.8733).epsilon(1e-3));
    CHECK(m0["result"].contains("stationarity_root"));
    CHECK(m0["result"]["method_gap"].get<double>() <= 1e-6);

    auto m1 = run_json("opt m1");
    CHECK(m1["result"]["tau"] == json::array({0.5, 0.5, 0.0}));
    CHECK(m1["result"]["dim"].get<double>() ==
          doctest::Approx(0.6309297535714574).epsilon(1e-12));
    CHECK(m1["result"]["note"].get<std::string>().find("log2(3)") != std::string::npos);

    auto m2 = run_json("opt m2");
    CHECK(m2["result"]["dim"] == 0.0);

    auto con = run_json("opt constrained --q 1/3,1/3,1/3 --constraint 0,2,3=1");
    CHECK(con["result"]["dim"].get<double>() == doctest::Approx(0.8733).epsilon(1e-3));
}

TEST_CASE("cubic accepts positional coefficients") {
    auto env = run_json("cubic 31,-23,9,-1");
    CHECK(env["result"]["count"] == 1);
    CHECK(env["result"]["roots"][0].get<double>() ==
          doctest::Approx(0.1655).epsilon(5e-4));
    CHECK(env["result"]["residuals"][0].get<double>() <= 1e-12 * 31);
}

TEST_CASE("construct emits digits in JSON and CSV") {
    auto champ = run_json("construct champernowne --n 16");
    CHECK(champ["result"]["digits"] ==
          json::array({1, 2, 3, 4, 5, 6, 7, 8, 9, 1, 0, 1, 1, 1, 2, 1}));

    auto ce = run_json("construct copeland-erdos --n 10");
    CHECK(ce["result"]["digits"] == json::array({2, 3, 5, 7, 1, 1, 1, 3, 1, 7}));

    auto cyc = run_json("construct cyclic --s 3 --n 6");
    CHECK(cyc["result"]["period"] == json::array({0, 1, 2}));
    CHECK(cyc["result"]["digits"] == json::array({0, 1, 2, 0, 1, 2}));

    auto osc = run_json("construct oscillating --c 0 --d 1 --s 2 --n 6");
    CHECK(osc["result"]["digits"] == json::array({1, 0, 1, 1, 0, 0}));

    auto ak = run_json("construct ak --k 1 --s 3 --n 4");
    auto digits = ak["result"]["digits"];
    CHECK(digits[2] == 0);
    CHECK(digits[3] == 1);

    auto csv = run_cli("construct champernowne --n 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output == "position,digit\n1,1\n2,2\n3,3\n");
}

TEST_CASE("simulate borel is deterministic and well-formed") {
    std::string args = "simulate borel --q 1/3,1/3,1/3 --n 1000 --trials 20 --seed 7";
    auto a = run_json(args);
    auto b = run_json(args);
    CHECK(a == b);
    CHECK(a["result"]["per_trial_max_dev"].size() == 20);
    CHECK(a["result"]["pass_fraction"].get<double>() >= 0.9);
    CHECK(a["result"]["expected_mean"].get<double>() == doctest::Approx(1.0));

    auto c = run_json("simulate borel --q 1/3,1/3,1/3 --n 1000 --trials 20 --seed 8");
    CHECK(a["result"]["mean_of_means"] != c["result"]["mean_of_means"]);
}

TEST_CASE("simulate mean-dist emits a histogram, CSV optional") {
    auto env = run_json(
        "simulate mean-dist --q 1/3,1/3,1/3 --n 500 --trials 50 --seed 3 --bins 8");
    CHECK(env["result"]["histogram"]["bin_left"].size() == 8);
    CHECK(env["result"]["histogram"]["count"].size() == 8);

    auto csv = run_cli(
        "simulate mean-dist --q 1/3,1/3,1/3 --n 500 --trials 50 --seed 3 --bins 8 "
        "--format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("bin_left,count\n", 0) == 0);
}

TEST_CASE("exit codes: 2 for argument errors, 1 for domain errors") {
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("encode --q 1/3,1/3,1/3").exit_code == 2); // missing --x
    CHECK(run_cli("encode --q 1/3,abc,1/3 --x 1/2 --n 4").exit_code == 2); // malformed weight
    CHECK(run_cli("encode --q 1/3,1/3 --x 1/2 --n 4").exit_code == 1); // weight sum off
    CHECK(run_cli("encode --q 1/3,1/3,1/3 --x 3/2 --n 4").exit_code == 1); // x out of range
    CHECK(run_cli("dim moran --q 1/3,1/3,1/3 --subset 5").exit_code == 1);
    CHECK(run_cli("opt constrained --q 1/3,1/3,1/3 --constraint 0,2,3=9").exit_code == 1);
    CHECK(run_cli("cubic 1,2,3").exit_code == 2); // wrong coefficient count
    CHECK(run_cli("construct nope --n 4").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("encode --help").exit_code == 0);
}

TEST_CASE("diagnostics name the offending argument") {
    std::string cmd = std::string(QSREP_CLI_PATH) +
                      " encode --q 1/3,1/3 --x 1/2 --n 4 2>&1 1>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::string err;
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) err.append(buf.data(), got);
    pclose(pipe);
    CHECK(err.find("--q") != std::string::npos);
    CHECK(err.find("weight_sum_mismatch") != std::string::npos);
}

TEST_CASE("max-digits guards materialization") {
    CHECK(run_cli("construct champernowne --n 100 --max-digits 50").exit_code == 2);
    CHECK(run_cli("construct champernowne --n 50 --max-digits 50").exit_code == 0);
}
