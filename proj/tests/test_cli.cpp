#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "tclab/cli.hpp"

using namespace tc;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "tclab");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("argument validation") {
    CHECK(run_cli({"no-such-command"}).code == cli::kInvalidArguments);
    CHECK(run_cli({}).code == cli::kInvalidArguments);
    CHECK(run_cli({"spectrum", "--format", "yaml"}).code == cli::kInvalidArguments);
    CHECK(run_cli({"analytic"}).code == cli::kInvalidArguments);  // --method required
    CHECK(run_cli({"spectrum", "--block", "-1", "0"}).code == cli::kInvalidArguments);
}

TEST_CASE("spectrum command") {
    SUBCASE("decoupled qmax scan") {
        const auto r = run_cli({"spectrum", "--w1", "1", "--w2", "1", "--w3", "1", "--g",
                                "0", "--qmax", "1"});
        REQUIRE(r.code == cli::kOk);
        const json doc = json::parse(r.out);
        std::vector<double> all;
        for (const auto& blk : doc)
            for (double ev : blk["eigenvalues"]) all.push_back(ev);
        std::sort(all.begin(), all.end());
        const std::vector<double> expected{0, 1, 1, 1, 2};
        REQUIRE(all.size() == expected.size());
        for (size_t i = 0; i < all.size(); ++i)
            CHECK(all[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
    SUBCASE("single block closed form") {
        const auto r = run_cli({"spectrum", "--g", "0.1", "--block", "1", "1"});
        REQUIRE(r.code == cli::kOk);
        const json doc = json::parse(r.out);
        REQUIRE(doc.size() == 1);
        const auto ev = doc[0]["eigenvalues"];
        CHECK(double(ev[0]) == doctest::Approx(1.5 - std::sqrt(0.26)).epsilon(1e-12));
        CHECK(double(ev[1]) == doctest::Approx(1.5 + std::sqrt(0.26)).epsilon(1e-12));
    }
    SUBCASE("empty block range") {
        const auto r = run_cli({"spectrum"});
        CHECK(r.code == cli::kOk);
        CHECK(json::parse(r.out).empty());
    }
    SUBCASE("csv rows") {
        const auto r = run_cli({"spectrum", "--block", "1", "1", "--format", "csv"});
        CHECK(first_line(r.out) == "q_ab,q_ac,eigenvalue");
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
    }
}

TEST_CASE("analytic command") {
    SUBCASE("isotropic g=0 su(1,1) ladder") {
        const auto r = run_cli({"analytic", "--method", "su11", "--w1", "1", "--w2", "1",
                                "--w3", "1", "--g", "0", "--nmax", "2"});
        REQUIRE(r.code == cli::kOk);
        const json doc = json::parse(r.out);
        CHECK(doc["quantum_numbers"] == json({"n_a", "n_l", "m_n"}));
        for (const auto& row : doc["rows"]) {
            const auto& q = row["quantum_numbers"];
            const double expected = double(q[0]) + 2.0 * double(q[1]) + double(q[2]);
            CHECK(double(row["energy"]) == doctest::Approx(expected).epsilon(1e-12));
            CHECK(bool(row["is_real"]));
        }
    }
    SUBCASE("bogoliubov off the symmetric line is inapplicable") {
        const auto r = run_cli({"analytic", "--method", "bogoliubov", "--w2", "1", "--w3",
                                "2"});
        CHECK(r.code == cli::kMethodInapplicable);
        CHECK(r.err.find("inapplicable") != std::string::npos);
    }
    SUBCASE("delta-sign conventions differ off resonance") {
        const std::vector<std::string> base{"analytic", "--method", "nm",    "--w1", "1",
                                            "--w2",     "1.6",      "--nmax", "1"};
        auto paper = base;
        paper.insert(paper.end(), {"--delta-sign", "paper"});
        auto alt = base;
        alt.insert(alt.end(), {"--delta-sign", "alt"});
        const auto rp = run_cli(paper), ra = run_cli(alt);
        REQUIRE(rp.code == cli::kOk);
        REQUIRE(ra.code == cli::kOk);
        CHECK(rp.out != ra.out);
    }
}

TEST_CASE("verify command") {
    SUBCASE("default parameters pass everything") {
        const auto r = run_cli({"verify"});
        CHECK(r.code == cli::kOk);
        const json doc = json::parse(r.out);
        CHECK(bool(doc["all_pass"]));
        CHECK(doc["suites"].size() >= 8);
        for (const auto& s : doc["suites"]) CHECK(bool(s["pass"]));
    }
    SUBCASE("injected fault is caught") {
        const auto r = run_cli({"verify", "--inject-fault"});
        CHECK(r.code == cli::kAccuracyFailure);
        const json doc = json::parse(r.out);
        CHECK_FALSE(bool(doc["all_pass"]));
    }
    SUBCASE("single-suite filter") {
        const auto r = run_cli({"verify", "--only", "su2-surrogate"});
        CHECK(r.code == cli::kOk);
        const json doc = json::parse(r.out);
        REQUIRE(doc["suites"].size() == 1);
        CHECK(doc["suites"][0]["name"] == "su2-surrogate");
        CHECK(run_cli({"verify", "--only", "bogus"}).code == cli::kInvalidArguments);
    }
}

TEST_CASE("coherent command") {
    SUBCASE("xi = 0 is a delta amplitude table") {
        const auto r = run_cli({"coherent", "--group", "su11", "--k", "0.5", "--n", "2",
                                "--xi", "0", "0", "--truncation", "6"});
        REQUIRE(r.code == cli::kOk);
        const json doc = json::parse(r.out);
        for (const auto& a : doc["amplitudes"]) {
            const double expected = int(a["index"]) == 2 ? 1.0 : 0.0;
            CHECK(double(a["re"]) == doctest::Approx(expected));
            CHECK(double(a["im"]) == doctest::Approx(0.0));
        }
    }
    SUBCASE("su(2) j = 1/2 rotation column") {
        const auto r = run_cli({"coherent", "--group", "su2", "--j", "0.5", "--mu", "0.5",
                                "--xi", "0.4", "0"});
        REQUIRE(r.code == cli::kOk);
        const json doc = json::parse(r.out);
        REQUIRE(doc["amplitudes"].size() == 2);
        CHECK(std::abs(double(doc["amplitudes"][0]["re"])) ==
              doctest::Approx(std::sin(0.4)).epsilon(1e-12));
        CHECK(double(doc["amplitudes"][1]["re"]) ==
              doctest::Approx(std::cos(0.4)).epsilon(1e-12));
    }
    SUBCASE("polar grid csv header") {
        const auto r = run_cli({"coherent", "--group", "su2", "--grid", "--nl", "0",
                                "--mn", "1", "--zeta", "0.2", "0.1", "--n-rho", "4",
                                "--n-phi", "4", "--format", "csv"});
        REQUIRE(r.code == cli::kOk);
        CHECK(first_line(r.out) == "rho,phi,re,im,abs2");
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 17);
    }
    SUBCASE("su(1,1) grid rejects |zeta| >= 1") {
        const auto r = run_cli({"coherent", "--group", "su11", "--grid", "--zeta", "1.0",
                                "0"});
        CHECK(r.code == cli::kAccuracyFailure);
    }
}

TEST_CASE("compare command") {
    SUBCASE("zero-coupling grid has zero deviations") {
        const auto r = run_cli({"compare", "--qmax", "2", "--g-grid", "0"});
        REQUIRE(r.code == cli::kOk);
        const json doc = json::parse(r.out);
        for (const auto& row : doc["rows"]) CHECK(double(row["deviation"]) == 0.0);
    }
    SUBCASE("csv header is fixed") {
        const auto r =
            run_cli({"compare", "--qmax", "1", "--g-grid", "0.1", "--format", "csv"});
        CHECK(first_line(r.out) == "q_ab,q_ac,g,deviation");
    }
    SUBCASE("matching scan minimum sits at the matched alpha") {
        const auto r = run_cli({"compare", "--qmax", "1", "--g-grid", "0.1"});
        REQUIRE(r.code == cli::kOk);
        const json doc = json::parse(r.out);
        for (const auto& m : doc["matching"]) {
            const double beta = m["beta"], alpha = m["alpha"];
            CHECK(alpha == doctest::Approx(beta / std::sqrt(1.0 - 0.01)).epsilon(1e-12));
            CHECK(double(m["abs_diff"]) <= 5e-4);
        }
    }
    SUBCASE("negative g rejected") {
        CHECK(run_cli({"compare", "--g-grid", "-0.1"}).code == cli::kInvalidArguments);
    }
}

TEST_CASE("determinism and file output") {
    const std::vector<std::string> args{"spectrum", "--g", "0.3", "--qmax", "2"};
    const auto a = run_cli(args), b = run_cli(args);
    CHECK(a.out == b.out);

    const std::string path = "cli_test_output.json";
    auto with_file = args;
    with_file.insert(with_file.end(), {"--output", path});
    const auto r = run_cli(with_file);
    REQUIRE(r.code == cli::kOk);
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == a.out);
    std::remove(path.c_str());
}

TEST_CASE("config file with flag precedence") {
    const std::string path = "cli_test_config.ini";
    {
        std::ofstream cfg(path);
        cfg << "g=0\nqmax=1\n";
    }
    const auto from_cfg = run_cli({"spectrum", "--config", path});
    REQUIRE(from_cfg.code == cli::kOk);
    const json doc = json::parse(from_cfg.out);
    CHECK(doc.size() == 4);  // qmax=1 scan
    double top = 0.0;
    for (const auto& blk : doc)
        for (double ev : blk["eigenvalues"]) top = std::max(top, ev);
    CHECK(top == doctest::Approx(2.0));  // g = 0: free spectrum

    // flag overrides the config value
    const auto overridden = run_cli({"spectrum", "--config", path, "--qmax", "0"});
    REQUIRE(overridden.code == cli::kOk);
    CHECK(json::parse(overridden.out).size() == 1);
    std::remove(path.c_str());
}
