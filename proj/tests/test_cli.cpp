#include "motfilt/cli.hpp"

#include "motfilt/curve_zeta.hpp"
#include "motfilt/hodge.hpp"
#include "motfilt/number_ring.hpp"
#include "motfilt/selftest.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int code = 0;
    std::string out, err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string data(const std::string& rel) { return std::string(MOTFILT_SOURCE_DIR "/data/") + rel; }

} // namespace

TEST_CASE("pinned command examples", "[cli]") {
    auto thh = run({"thh-z", "--degree", "5"});
    REQUIRE(thh.code == 0);
    CHECK(thh.json()["results"] == nlohmann::json{{"group", "Z/3"}});
    CHECK_FALSE(thh.json().contains("pass")); // not a verifier

    auto vc = run({"verify-cinf", "--ring", data("rings/gauss.json"), "--n", "4"});
    REQUIRE(vc.code == 0);
    auto vcr = vc.json()["results"];
    CHECK(vcr["product_side"] == "1/36");
    CHECK(vcr["closed_form"] == "1/36");
    CHECK(vcr["pass"] == true);
    CHECK(vc.json()["pass"] == true);

    auto fe = run({"verify-fe", "--curve", data("curves/p1.json"), "--n", "0"});
    REQUIRE(fe.code == 0);
    auto fer = fe.json()["results"];
    CHECK(fer["lhs"] == -2);
    CHECK(fer["rhs"] == -2);
    CHECK(fer["pass"] == true);
}

TEST_CASE("reports are byte-identical across runs", "[cli]") {
    const std::vector<std::string> cmds[] = {
        {"thh-of", "--ring", data("rings/x2m2.json"), "--degree", "3"},
        {"special", "--curve", data("curves/ell_x3px_q5.json"), "--n", "1"},
        {"selftest", "--only", "bokstedt"},
        {"graded", "--theory", "TP", "--n", "2", "--j", "0", "--format", "tsv"},
    };
    for (const auto& cmd : cmds) {
        auto a = run(cmd), b = run(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("input echoes parse back to the same object", "[cli]") {
    auto ring = run({"thh-of", "--ring", data("rings/gauss.json"), "--degree", "1"});
    REQUIRE(ring.code == 0);
    auto recho = ring.json()["inputs"]["ring"];
    CHECK(numring::NumberRing::from_json(recho).to_json() == recho);

    auto curve = run({"zeta", "--curve", data("curves/ell_counts_q5.json")});
    REQUIRE(curve.code == 0);
    auto cecho = curve.json()["inputs"]["curve"];
    CHECK(zeta::CurveZeta::from_json(cecho).to_json() == cecho);

    auto dia = run({"cinf", "--diamond", data("diamonds/gauss_point.json"), "--n", "4"});
    REQUIRE(dia.code == 0);
    auto decho = dia.json()["inputs"]["diamond"];
    CHECK(motfilt::HodgeDiamond::from_json(decho).to_json() == decho);
    CHECK(dia.json()["results"]["value"] == "36");
}

TEST_CASE("tsv is a flat view of the json report", "[cli]") {
    auto r = run({"thh-z", "--degree", "5", "--format", "tsv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("command\tthh-z\n") != std::string::npos);
    CHECK(r.out.find("results.group\tZ/3\n") != std::string::npos);
    CHECK(r.out.find("inputs.degree\t5\n") != std::string::npos);

    auto v = run({"verify-fe", "--curve", data("curves/p1.json"), "--n", "0", "--format", "tsv"});
    CHECK(v.out.find("results.pass\ttrue\n") != std::string::npos);
    CHECK(v.out.find("inputs.curve.p_coeffs.0\t1\n") != std::string::npos);
}

TEST_CASE("exit codes distinguish usage, input, and verification failures", "[cli]") {
    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"thh-z"}).code == 2);                       // missing --degree
    CHECK(run({"thh-z", "--degree", "zzz"}).code == 2);    // not an integer
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"thh-z", "--degree", "5", "--format", "xml"}).code == 2);

    auto missing = run({"thh-of", "--ring", "/nonexistent.json", "--degree", "1"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("error:") != std::string::npos);

    auto gone = run({"lambda", "--ring", data("rings/does_not_exist.json"), "--degree", "1"});
    CHECK(gone.code == 2);
    CHECK(gone.err.find("error:") != std::string::npos);

    // Mismatched curve/diamond pair.
    auto mism = run({"verify-fe", "--curve", data("curves/p1.json"), "--diamond",
                     data("diamonds/elliptic_f5.json"), "--n", "0"});
    CHECK(mism.code == 2);
    CHECK(mism.err.find("genus") != std::string::npos);

    // verify-cinf wants exactly one input source.
    CHECK(run({"verify-cinf", "--n", "2"}).code == 2);
    CHECK(run({"verify-cinf", "--ring", data("rings/z.json"), "--diamond",
               data("diamonds/spec_z.json"), "--n", "2"})
              .code == 2);
}

TEST_CASE("graded pieces evaluate only for THH", "[cli]") {
    auto ok = run({"graded", "--theory", "THH", "--n", "3", "--j", "3", "--ring",
                   data("rings/z.json")});
    REQUIRE(ok.code == 0);
    CHECK(ok.json()["results"]["homotopy"] == nlohmann::json{{"5", "Z/3"}});
    CHECK(ok.json()["results"]["expression"] == "LLambda^0 L (x) Z/3 [5]");

    auto bad = run({"graded", "--theory", "TP", "--n", "3", "--j", "1", "--ring",
                    data("rings/z.json")});
    CHECK(bad.code == 2);

    auto sym = run({"graded", "--theory", "TC-", "--n", "4", "--j", "1"});
    REQUIRE(sym.code == 0);
    CHECK(sym.json()["results"]["expression"] == "LOmega^hat^{>=3} (x) Z/1 [7]");
    CHECK_FALSE(sym.json()["results"].contains("homotopy"));
}

TEST_CASE("selftest subcommand reports and filters criteria", "[cli]") {
    setenv("MOTFILT_NO_COLOR", "1", 1);
    auto one = run({"selftest", "--only", "lomega2"});
    REQUIRE(one.code == 0);
    auto j = one.json();
    CHECK(j["pass"] == true);
    CHECK(j["results"]["pass"] == true);
    REQUIRE(j["results"]["criteria"].size() == 1);
    CHECK(j["results"]["criteria"][0]["id"] == "lomega2");
    CHECK(j["results"]["criteria"][0]["pass"] == true);
    CHECK(j["results"]["criteria"][0].contains("budget_ms"));
    CHECK(j["inputs"]["seed"] == selftest::kDefaultSeed);
    // Progress lines go to the diagnostic stream, uncolored in tests.
    CHECK(one.err.find("lomega2") != std::string::npos);
    CHECK(one.err.find("\033") == std::string::npos);

    CHECK(run({"selftest", "--only", "zzz"}).code == 2);

    auto seeded = run({"selftest", "--seed", "7", "--only", "bokstedt"});
    REQUIRE(seeded.code == 0);
    CHECK(seeded.json()["inputs"]["seed"] == 7);
    unsetenv("MOTFILT_NO_COLOR");
}

TEST_CASE("remaining calculators produce the pinned numbers", "[cli]") {
    CHECK(run({"thh-z", "--degree", "0"}).json()["results"]["group"] == "Z");
    CHECK(run({"thh-z", "--degree", "-3"}).json()["results"]["group"] == "0");
    CHECK(run({"thh-z", "--degree", "7"}).json()["results"]["group"] == "Z/4");

    auto lam = run({"lambda", "--ring", data("rings/gauss.json"), "--degree", "1"});
    CHECK(lam.json()["results"]["order"] == 4);
    CHECK(lam.json()["results"]["homological_degree"] == 0);

    auto lo = run({"lomega2", "--ring", data("rings/x2m2.json")});
    CHECK(lo.json()["results"]["h1"]["group"] == "Z/2");
    CHECK(lo.json()["results"]["h0"]["free_rank"] == 2);
    CHECK(lo.json()["results"]["euler_rank"] == 2);

    CHECK(run({"fp-euler", "--p", "5", "--n", "1"}).json()["results"]["euler_order"] == 5);
    CHECK(run({"fp-euler", "--p", "2", "--n", "3"}).json()["results"]["euler_order"] == 8);
    CHECK(run({"fp-euler", "--p", "6", "--n", "1"}).code == 2);

    auto mil = run({"milne", "--diamond", data("diamonds/p1_f5.json"), "--n", "1"});
    CHECK(mil.json()["results"]["exponent"] == 1);

    auto zz = run({"zeta", "--curve", data("curves/ell_x3px_q5.json")});
    CHECK(zz.json()["results"]["p_coeffs"] == nlohmann::json::array({1, -2, 5}));
    CHECK(zz.json()["results"]["functional_equation"] == true);

    auto sp = run({"special", "--curve", data("curves/p1.json"), "--n", "0"});
    CHECK(sp.json()["results"]["order"] == -1);
    CHECK(sp.json()["results"]["coeff"] == "-1/4");
    CHECK(sp.json()["results"]["logq_power"] == -1);

    auto cond = run({"conductor", "--curve", data("curves/genus2_q3.json")});
    CHECK(cond.json()["results"]["base"] == 3);
    CHECK(cond.json()["results"]["exponent"] == 2);
    CHECK(cond.json()["results"]["value"] == "9");

    auto vfp = run({"verify-fe", "--curve", data("curves/genus2_q3.json"), "--n", "3"});
    CHECK(vfp.json()["results"]["lhs"] == -10);
    CHECK(vfp.json()["results"]["rhs"] == -10);
    CHECK(vfp.code == 0);
}
