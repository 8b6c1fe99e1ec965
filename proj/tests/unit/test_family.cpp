#include <doctest.h>

#include "momentforge/family.hpp"
#include "momentforge/oracle.hpp"

using namespace momentforge;

TEST_SUITE("family") {
  TEST_CASE("ids and parameter validation") {
    CHECK(parse_family("board1n") == Family::Board1n);
    CHECK(family_id(Family::Schur) == "schur");
    try {
      parse_family("frob");
      FAIL("unknown family accepted");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("invmaj") != std::string::npos);
    }
    CHECK_THROWS_AS(validate_parameters(Family::Schur, {{"n", 5}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_parameters(Family::Domino, {{"m", 0}, {"n", 5}}), std::invalid_argument);
    CHECK_NOTHROW(validate_parameters(Family::Boolean, {{"n", 3}, {"k", 1}}));
  }

  TEST_CASE("every kind converts consistently") {
    const ParamMap p{{"m", 2}, {"n", 3}};
    const auto raw = family_moments(Family::Domino, p, MomentKind::Raw, 4);
    CHECK(raw[3] * 64 == 3920);
    const auto cen = family_moments(Family::Domino, p, MomentKind::Central, 4);
    CHECK(cen.entries == raw_to_central(raw, raw[1]).entries);
    const auto bin = family_moments(Family::Domino, p, MomentKind::Binomial, 4);
    CHECK(bin.entries == raw_to_binomial(raw).entries);
  }

  TEST_CASE("PGF routes agree with the oracle") {
    const ParamMap inv{{"n", 5}};
    CHECK(family_pgf(Family::Invmaj, inv) == oracle::enumerate_permutations(5).inv_marginal().pgf());
    const ParamMap board{{"m", 2}, {"n", 3}};
    CHECK(family_pgf(Family::Domino, board) == oracle::enumerate_boards(2, 3).pgf());
    const ParamMap b0{{"n", 3}, {"k", 0}};
    CHECK(family_pgf(Family::Boolean, b0) == oracle::enumerate_boolean(3, 0).pgf());
    CHECK(family_pgf(Family::Invmaj, {{"n", 1}}).to_string() == "1");
  }

  TEST_CASE("Schur higher moments come from enumeration") {
    const ParamMap p{{"n", 8}, {"c", 2}};
    const auto m = family_moments(Family::Schur, p, MomentKind::Raw, 4);
    CHECK(m.entries == oracle::histogram_moments(oracle::enumerate_schur(8, 2), 4).entries);
  }

  TEST_CASE("central sources feed the normality report") {
    const std::vector<std::int64_t> grid{10, 40, 160};
    const auto report = normality_report("invmaj", {}, grid, 6, central_source(Family::Invmaj, {}), {0.3, 40});
    CHECK(report.all_converged());
    CHECK_THROWS(central_source(Family::Schur, {{"c", 2}}));
  }
}
