#include "prym/cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run(std::vector<const char*> args) {
    args.insert(args.begin(), "prym");
    std::ostringstream out, err;
    const int status = prym::run_cli(static_cast<int>(args.size()), args.data(),
                                     out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("coeff emits the documented json object") {
    auto result = run({"--format", "json", "coeff", "--t", "2", "--r", "2",
                       "--d", "8"});
    CHECK(result.status == 0);
    CHECK(result.out == "{\"t\":2,\"r\":2,\"d\":8,\"c\":\"2\"}\n");
}

TEST_CASE("coeff text output is a plain rational") {
    auto result = run({"coeff", "--t", "0", "--r", "3", "--d", "7"});
    CHECK(result.status == 0);
    CHECK(result.out == "c_{0,3,7} = 1/24\n");
}

TEST_CASE("example2 output is deterministic and complete") {
    auto first = run({"example2"});
    auto second = run({"example2"});
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
    for (const char* piece :
         {"821/6 * Z^{*3}", "- 84 * Z^{*2}*2_*Z", "+ 89/6 * Z^{*2}*3_*Z",
          "- 7/4 * Z^{*2}*4_*Z", "+ 1/10 * Z^{*2}*5_*Z",
          "+ 89/8 * Z*(2_*Z)^{*2}", "- 7/3 * Z*2_*Z*3_*Z",
          "+ 1/8 * Z*2_*Z*4_*Z", "+ 1/18 * Z*(3_*Z)^{*2}",
          "- 7/24 * (2_*Z)^{*3}", "+ 1/24 * (2_*Z)^{*2}*3_*Z"}) {
        CHECK_MESSAGE(first.out.find(piece) != std::string::npos, piece);
    }
}

TEST_CASE("bn-check reports the trigonal inapplicable case") {
    auto result = run({"bn-check", "--g", "6", "--r", "1", "--d", "4"});
    CHECK(result.status == 0);
    CHECK(result.out.find("INAPPLICABLE") != std::string::npos);
    CHECK(result.out.find("rho <= 0") != std::string::npos);
}

TEST_CASE("unknown flags yield usage text and exit 1") {
    auto result = run({"coeff", "--bogus", "3"});
    CHECK(result.status == 1);
    CHECK(!result.err.empty());
}

TEST_CASE("domain errors exit 2") {
    auto result = run({"coeff", "--t", "0", "--r", "2", "--d", "4"});
    CHECK(result.status == 2);
    CHECK(result.err.find("2r < d") != std::string::npos);
}

TEST_CASE("cap breach exits 3") {
    auto result = run({"scan", "--t", "0", "--r", "2", "--d", "20..30",
                       "--cap", "5"});
    CHECK(result.status == 3);
}

TEST_CASE("scan csv and json are value-equivalent") {
    auto csv = run({"scan", "--t", "0..1", "--r", "1", "--d", "4..6"});
    auto json = run({"--format", "json", "scan", "--t", "0..1", "--r", "1",
                     "--d", "4..6"});
    REQUIRE(csv.status == 0);
    REQUIRE(json.status == 0);

    const auto doc = nlohmann::json::parse(json.out);
    std::istringstream in(csv.out);
    std::string line;
    std::getline(in, line);
    REQUIRE(line == "t,r,d,c,is_integer");
    for (const auto& row : doc.at("rows")) {
        REQUIRE(std::getline(in, line));
        std::ostringstream expected;
        expected << row.at("t").get<int>() << ',' << row.at("r").get<int>()
                 << ',' << row.at("d").get<int>() << ','
                 << row.at("c").get<std::string>() << ','
                 << (row.at("is_integer").get<bool>() ? "true" : "false");
        CHECK(line == expected.str());
    }
}

TEST_CASE("scan --expect passes on a true closed form and fails otherwise") {
    auto good = run({"scan", "--t", "2", "--r", "2", "--d", "5..20",
                     "--expect", "pow2"});
    CHECK(good.status == 0);
    CHECK(good.out.find("all rows match") != std::string::npos);

    // The Bernoulli form only holds for d >= s + 1, so start at d = 6 to
    // stay inside its validity range for t up to 6 (s up to 3).
    auto bernoulli = run({"scan", "--t", "0..6", "--r", "1", "--d", "6..12",
                          "--expect", "bernoulli-even"});
    CHECK(bernoulli.status == 0);

    auto fact = run({"scan", "--t", "0", "--r", "1..3", "--d", "7..12",
                     "--expect", "factorial-scaled"});
    CHECK(fact.status == 0);

    auto bad = run({"scan", "--t", "0..2", "--r", "1", "--d", "5..10",
                    "--expect", "pow2"});
    CHECK(bad.status == 4);
    CHECK(bad.out.find("mismatch") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
    for (std::vector<const char*> args :
         {std::vector<const char*>{"scan", "--t", "0..2", "--r", "1..2",
                                   "--d", "5..9"},
          std::vector<const char*>{"vclass", "--t", "2", "--r", "2", "--d",
                                   "7", "--p", "6"},
          std::vector<const char*>{"zeta", "--t", "2", "--r", "2", "--d", "7",
                                   "--p", "8"}}) {
        auto first = run(std::vector<const char*>(args));
        auto second = run(std::vector<const char*>(args));
        CHECK(first.status == 0);
        CHECK(first.out == second.out);
        CHECK(!first.out.empty());
    }
}

TEST_CASE("zeta output shifts graded degrees to odd generators") {
    auto result = run({"zeta", "--t", "2", "--r", "1", "--d", "6", "--p", "8"});
    CHECK(result.status == 0);
    CHECK(result.out.find("zeta_3") != std::string::npos);
}
