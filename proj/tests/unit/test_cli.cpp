#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

using namespace momentforge;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json strip_time(nlohmann::json j) {
  j["manifest"].erase("wall_time_seconds");
  return j;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("domino moments carry the sample-space sums") {
    const auto r = run({"moments", "--family", "domino", "--m", "2", "--n", "3", "--r", "3"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["moments"][3]["sample_space_sum"] == "3920");
    CHECK(j["moments"][3]["value"] == "245/4");
    CHECK(j["manifest"]["subcommand"] == "moments");
    CHECK(j["manifest"]["seed"].is_null());
  }

  TEST_CASE("trivial PGF") {
    const auto r = run({"pgf", "--family", "invmaj", "--n", "1"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["pgf"]["text"] == "1");
  }

  TEST_CASE("identity battery passes") {
    const auto r = run({"identities", "--r-max", "10"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["all_hold"] == true);
    CHECK(j["rows"].size() > 30);
  }

  TEST_CASE("usage errors exit 1 with a hint") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"moments", "--family", "nosuch", "--n", "3"},
             {"moments", "--family", "schur", "--n", "3"},
             {"oracle", "--family", "invmaj", "--n", "12"},
             {"bogus"},
             {}}) {
      const auto r = run(args);
      CHECK(r.code == cli::kExitUsage);
      CHECK_FALSE(r.err.empty());
    }
  }

  TEST_CASE("fit verification failure exits 2") {
    const auto bad = run({"fit", "--family", "schur", "--c", "2", "--moment", "1", "--period", "1", "--degree", "2",
                          "--from", "2", "--to", "12"});
    CHECK(bad.code == cli::kExitVerification);
    CHECK(nlohmann::json::parse(bad.out)["verified"] == false);
    const auto good = run({"fit", "--family", "schur", "--c", "2", "--moment", "1", "--period", "2", "--degree", "2",
                           "--from", "2", "--to", "14"});
    CHECK(good.code == cli::kExitOk);
  }

  TEST_CASE("sampling is reproducible from the manifest") {
    const std::vector<std::string> args{"oracle", "--family", "boolean", "--n", "5", "--k", "1", "--samples", "3000",
                                        "--seed", "11", "--threads", "3"};
    const auto a = nlohmann::json::parse(run(args).out);
    const auto b = nlohmann::json::parse(run(args).out);
    CHECK(strip_time(a) == strip_time(b));
    CHECK(a["manifest"]["seed"] == 11);
    CHECK(a["mode"] == "sampled");
  }

  TEST_CASE("csv output keeps the manifest on stderr") {
    const auto r = run({"central", "--family", "board1n", "--n", "6", "--r", "2", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("family,params,kind,r,value", 0) == 0);
    CHECK(nlohmann::json::parse(r.err)["tool"] == "momentforge");
  }
}
