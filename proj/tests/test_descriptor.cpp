#include "doctest.h"
#include "qh/descriptor.hpp"

using namespace qh;

TEST_CASE("shipped descriptor parses to the conic blow-up setup") {
  auto d = load_descriptor(std::string(QH_DATA_DIR) + "/M2_30.fano");
  CHECK(d.name == "M2_30");
  CHECK(d.ambient == Ambient::P3);
  REQUIRE(d.curves.size() == 1);
  CHECK(d.curves[0].degree == 2);
  REQUIRE(d.effective_basis.size() == 2);
  CHECK(d.effective_basis[0] == std::vector<int>{1, -2});
  CHECK(d.effective_basis[1] == std::vector<int>{0, 1});
  REQUIRE(d.geometric_relations.size() == 3);
  CHECK(d.geometric_relations[0].value == Rational(-1));
  CHECK(d.geometric_relations[1].insertions == std::vector<std::string>{"rho", "pt"});
}

TEST_CASE("round-trip: parse(render(d)) == d") {
  for (const char* name : {"M2_30", "M2_21", "M3_12", "M3_25", "M2_30_alt"}) {
    auto d = load_descriptor(std::string(QH_DATA_DIR) + "/" + name + ".fano");
    auto d2 = parse_descriptor(render_descriptor(d));
    CHECK(d2.name == d.name);
    CHECK(d2.ambient == d.ambient);
    CHECK(d2.effective_basis == d.effective_basis);
    REQUIRE(d2.curves.size() == d.curves.size());
    for (std::size_t i = 0; i < d.curves.size(); ++i)
      CHECK(d2.curves[i].degree == d.curves[i].degree);
    REQUIRE(d2.geometric_relations.size() == d.geometric_relations.size());
    for (std::size_t i = 0; i < d.geometric_relations.size(); ++i) {
      CHECK(d2.geometric_relations[i].geo_class == d.geometric_relations[i].geo_class);
      CHECK(d2.geometric_relations[i].insertions == d.geometric_relations[i].insertions);
      CHECK(d2.geometric_relations[i].value == d.geometric_relations[i].value);
    }
  }
}

TEST_CASE("file with no geom lines parses (solve later reports underdetermined)") {
  auto d = parse_descriptor(
      "name: bare\nambient: P3\ncurve: 1 degree=2\nbasis: q0 = L0 - 2*F1\nbasis: q1 = F1\n");
  CHECK(d.geometric_relations.empty());
}

TEST_CASE("errors carry line numbers and reasons") {
  CHECK_THROWS_WITH_AS(parse_descriptor("name: x\nambient: P5\n"),
                       doctest::Contains("line 2"), std::invalid_argument);
  // Unknown keys are errors, never silently tolerated.
  CHECK_THROWS_WITH_AS(parse_descriptor("name: x\nambient: P3\ncurve: 1 degree=1\n"
                                        "basis: q0 = L0 - F1\nbasis: q1 = F1\nshape: round\n"),
                       doctest::Contains("unknown key"), std::invalid_argument);
  // Rank-deficient basis: q0 mentions F1 but no q1 = F1 row exists.
  CHECK_THROWS_WITH_AS(
      parse_descriptor("name: x\nambient: P3\ncurve: 1 degree=2\nbasis: q0 = L0 - 2*F1\n"
                       "basis: q1 = 2*F1\n"),
      doctest::Contains("unimodular"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_descriptor("name: x\nambient: P3\ncurve: 1 degree=2\n"
                                        "basis: q0 = L0 - 2*F1\n"),
                       doctest::Contains("missing basis"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_descriptor("name: x\nambient: P3\ncurve: 1 degree=2\n"
                                        "basis: q0 = L0 - 2*F1\nbasis: q1 = F1\n"
                                        "geom: I(F1 | phi3) = -1\n"),
                       doctest::Contains("insertion"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("name: x\nambient: P3\ncurve: 1 degree=2\n"
                                   "curve: 2 degree=1\ncurve: 3 degree=1\n"),
                  std::invalid_argument);
}

TEST_CASE("genus or curve-count violations are rejected at build time") {
  ThreefoldDescriptor d;
  d.name = "bad";
  d.ambient = Ambient::P3;
  d.curves = {{1, 2, 1}};  // genus 1
  d.effective_basis = {{1, -2}, {0, 1}};
  CHECK_THROWS_AS(build_blowup_ring(d), std::invalid_argument);
}

TEST_CASE("expected files parse") {
  auto e = load_expected(std::string(QH_DATA_DIR) + "/M3_15.expected");
  CHECK(e.essential_count == 81);
  CHECK(e.dim_a == 3);
  CHECK(e.deg_a == 7);
  REQUIRE(e.relations.size() == 3);
  CHECK(e.relations[0] == "E1E2 + 2E1q0 + E2q0 - 2Hq0");
}

TEST_CASE("presentation files parse and sniffing works") {
  std::string text = read_file(std::string(QH_DATA_DIR) + "/P3.presentation");
  CHECK(looks_like_presentation(text));
  CHECK(!looks_like_presentation("name: x\nambient: P3\n"));
  auto lp = parse_presentation(text);
  CHECK(lp.input.gen_vars.size() == 1);
  CHECK(lp.input.q_vars.size() == 1);
  REQUIRE(lp.input.relations.size() == 1);
  CHECK(lp.input.relations[0].str() == "H^4 - q0");
  CHECK(lp.ring->weight(lp.input.q_vars[0]) == 4);
}
