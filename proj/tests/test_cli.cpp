#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef PFQ_CLI_PATH
#error "PFQ_CLI_PATH must point at the built binary"
#endif

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(PFQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace

TEST_CASE("eval-pfq geometric series") {
    auto r = run_cli("--format json eval-pfq --num 1,1 --den 1 --z 0.5");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(doc["status"] == "Converged");
}

TEST_CASE("eval-pfq at z = 0") {
    auto r = run_cli("--format json eval-pfq --num 4.2,0.3 --den 0.9 --z 0");
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["value"].get<double>() == 1.0);
}

TEST_CASE("eval-pfq terminating rational") {
    auto r = run_cli("--format json eval-pfq --num -2,1,1 --den 2,2 --z 1");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["value"].get<double>() == doctest::Approx(11.0 / 18.0).epsilon(1e-14));
    CHECK(doc["status"] == "Terminated");
    CHECK(doc["terms_used"] == 3);
}

TEST_CASE("rational flag forms parse exactly") {
    auto r = run_cli("--format json eval-pfq --num 1/2,-1/2 --den 3/2 --z -3/4");
    CHECK(r.exit_code == 0);
    auto direct = run_cli("--format json eval-pfq --num 0.5,-0.5 --den 1.5 --z -0.75");
    CHECK(nlohmann::json::parse(r.out)["value"].get<double>() ==
          nlohmann::json::parse(direct.out)["value"].get<double>());
}

TEST_CASE("eval-pfq exit codes") {
    CHECK(run_cli("eval-pfq --num 1,1 --den 1 --z 0.99 --max-terms 10").exit_code == 1);
    CHECK(run_cli("eval-pfq --num 1,1 --den 1 --z 1.5").exit_code == 3);
    CHECK(run_cli("eval-pfq --num abc --den 1 --z 0.5").exit_code == 2);
    CHECK(run_cli("eval-pfq --z 0.5").exit_code == 2); // --num required
}

TEST_CASE("dixon hand-summed point") {
    auto r = run_cli("--format json dixon --a 2 --b -1 --c 1/2 --i 0 --j 0");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["closed_form"].get<double>() == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(doc["oracle"].get<double>() == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("dixon unsupported pair exits distinctly") {
    CHECK(run_cli("dixon --a 2 --b 0.2 --c 0.2 --i 3 --j 2").exit_code == 4);
}

TEST_CASE("dixon negative j goes through the symmetry") {
    auto r = run_cli("--format json dixon --a 3.4 --b 0.3 --c 0.5 --i 0 --j -1");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["symmetry_image"]["i"] == -1);
    CHECK(doc["symmetry_image"]["j"] == 1);
    CHECK(doc["residual"].get<double>() <= 1e-9);
}

TEST_CASE("transform special case and the equivalent theorem call") {
    auto e31 = run_cli("--format json transform --case E31 --b 0.4 --d 1.1 --x 0.5");
    CHECK(e31.exit_code == 0);
    auto d31 = nlohmann::json::parse(e31.out);
    CHECK(d31["residual"].get<double>() <= 1e-9);

    auto thm = run_cli("--format json transform --case theorem --i 0 --j 0 --b 0.4 --d 1.1 --x 0.5");
    CHECK(thm.exit_code == 0);
    auto dthm = nlohmann::json::parse(thm.out);
    CHECK(dthm["lhs"].get<double>() ==
          doctest::Approx(d31["lhs"].get<double>()).epsilon(1e-14));
    CHECK(dthm["rhs"].get<double>() ==
          doctest::Approx(d31["rhs"].get<double>()).epsilon(1e-12));
}

TEST_CASE("transform domain error exit") {
    CHECK(run_cli("transform --case E31 --b 0.4 --d 1.1 --x 1.5").exit_code == 3);
    CHECK(run_cli("transform --case nosuch --b 0.4 --d 1.1 --x 0.5").exit_code == 2);
}

TEST_CASE("pole points exit with the pole code") {
    // d - b = -1 poles the closed-form quotients at (0,0)
    CHECK(run_cli("transform --case theorem --i 0 --j 0 --b 1.6 --d 0.6 --x 0.5").exit_code == 5);
    CHECK(run_cli("transform --case E37 --b 1.6 --d 0.6 --x 0.3").exit_code == 5);
}

TEST_CASE("verify srivastava suite in json") {
    auto r = run_cli("--format json verify --suite srivastava");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 1);
    CHECK(doc[0]["identity"] == "SRIVASTAVA");
    CHECK(doc[0]["summary"]["fail"] == 0);
    CHECK(doc[0]["summary"]["points"] == 15);
}

TEST_CASE("verify tables json round-trips its summary") {
    auto r = run_cli("--format json verify --suite tables --samples 4 --seed 11");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    long pass = 0, fail = 0, pole = 0, slow = 0;
    for (const auto& o : doc[0]["outcomes"]) {
        std::string cls = o["class"];
        if (cls == "Pass") ++pass;
        else if (cls == "Fail") ++fail;
        else if (cls == "PoleSkip") ++pole;
        else ++slow;
    }
    CHECK(pass == doc[0]["summary"]["pass"].get<long>());
    CHECK(fail == doc[0]["summary"]["fail"].get<long>());
    CHECK(pole == doc[0]["summary"]["pole_skip"].get<long>());
    CHECK(slow == doc[0]["summary"]["slow_skip"].get<long>());
    CHECK(fail == 0);
}

TEST_CASE("verify runs are byte-identical for a fixed seed") {
    const std::string args = "--format json --seed 7 verify --suite limiting";
    auto r1 = run_cli(args);
    auto r2 = run_cli(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK_FALSE(r1.out.empty());
}

TEST_CASE("dump-tables lists every cell with corrections and gaps") {
    auto r = run_cli("--format json dump-tables");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 28);
    int supported = 0, corrected = 0, gaps = 0;
    for (const auto& cell : doc) {
        if (cell["supported"].get<bool>()) {
            ++supported;
            if (cell.contains("correction")) ++corrected;
            if (cell["i"] == 0 && cell["j"] == 0) {
                CHECK(cell["A"] == "1");
                CHECK(cell["B"] == "0");
            }
        } else {
            ++gaps;
        }
    }
    CHECK(supported == 23);
    CHECK(gaps == 5);
    CHECK(corrected == 1);

    auto human = run_cli("dump-tables");
    CHECK(human.exit_code == 0);
    CHECK(human.out.find("unsupported") != std::string::npos);
    CHECK(human.out.find("correction:") != std::string::npos);
}
