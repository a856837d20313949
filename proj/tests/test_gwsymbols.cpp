#include <algorithm>
#include <set>

#include "doctest.h"
#include "qh/descriptor.hpp"
#include "qh/gwsymbols.hpp"
#include "qh/quantum.hpp"

using namespace qh;

namespace {

BlowupData make(const std::string& name) {
  return build_blowup_ring(load_descriptor(std::string(QH_DATA_DIR) + "/" + name + ".fano"));
}

}  // namespace

TEST_CASE("class enumeration for the conic blow-up") {
  auto b = make("M2_30");
  auto cs = enumerate_classes(b.lattice, 3);
  // F, 2F, 3F, L, L+F; graded-lex on effective coordinates over (L0-2F, F).
  std::vector<std::vector<int>> want = {{0, 1}, {1, 0}, {0, 2}, {1, 1}, {0, 3}};
  REQUIRE(cs.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(cs[i].coords == want[i]);

  auto b33 = make("M2_33");
  auto cs33 = enumerate_classes(b33.lattice, 1);
  REQUIRE(cs33.size() == 1);
  CHECK(cs33[0].coords == std::vector<int>{0, 1});

  CHECK(enumerate_classes(b.lattice, 0).empty());
}

TEST_CASE("divisor insertions peel off with intersection factors") {
  auto b = make("M2_30");
  const auto& r = b.ring;
  CurveClass fiber{{0, 1}};
  // I_F(H, phi, pt): F.H = 0 kills it.
  auto z = normalize(r, b.lattice, fiber, {r.h_index(), r.phi_index(0), r.point_index()});
  CHECK(z.kind == NormalizeResult::Kind::Zero);
  // I_F(E, phi): factor F.E = -1, residue I_F(phi) survives grading.
  auto s = normalize(r, b.lattice, fiber, {r.divisors()[0], r.phi_index(0)});
  REQUIRE(s.kind == NormalizeResult::Kind::Essential);
  CHECK(s.factor == Rational(-1));
  CHECK(s.sym.insertions == std::vector<int>{r.phi_index(0)});
}

TEST_CASE("grading axiom: I_F(rho) survives, I_2F(rho) vanishes") {
  auto b = make("M2_30");
  auto a = normalize(b.ring, b.lattice, CurveClass{{0, 1}}, {b.ring.rho_index()});
  CHECK(a.kind == NormalizeResult::Kind::Essential);
  auto z = normalize(b.ring, b.lattice, CurveClass{{0, 2}}, {b.ring.rho_index()});
  CHECK(z.kind == NormalizeResult::Kind::Zero);
}

TEST_CASE("pure-divisor invariants vanish for nonzero classes") {
  auto b = make("M2_33");
  const auto& r = b.ring;
  for (int a = 0; a <= 2; ++a)
    for (int f = 0; f <= 2; ++f) {
      if (a + f == 0) continue;
      CurveClass beta{{a, f}};
      auto n = normalize(r, b.lattice, beta, {r.divisors()[0], r.h_index(), r.h_index()});
      CHECK(n.kind == NormalizeResult::Kind::Zero);
    }
}

TEST_CASE("normalize is idempotent and permutation-invariant") {
  auto b = make("M3_15");
  const auto& r = b.ring;
  CurveClass beta{{1, 1, 1}};  // L0
  std::vector<int> ins = {r.point_index(), r.rho_index()};
  auto n1 = normalize(r, b.lattice, beta, ins);
  std::reverse(ins.begin(), ins.end());
  auto n2 = normalize(r, b.lattice, beta, ins);
  REQUIRE(n1.kind == NormalizeResult::Kind::Essential);
  CHECK(n1.sym == n2.sym);
  auto again = normalize(r, b.lattice, n1.sym.cls, n1.sym.insertions);
  CHECK(again.kind == NormalizeResult::Kind::Essential);
  CHECK(again.factor == Rational(1));
  CHECK(again.sym == n1.sym);
}

TEST_CASE("beta = 0 falls back to classical cup numbers") {
  auto b = make("M2_33");
  const auto& r = b.ring;
  auto n = normalize(r, b.lattice, CurveClass{{0, 0}}, {r.h_index(), r.rho_index()});
  CHECK(n.kind == NormalizeResult::Kind::Known);
  CHECK(n.known == Rational(1));  // H . rho = pt
}

TEST_CASE("insertion indices are validated") {
  auto b = make("M2_33");
  CHECK_THROWS_AS(normalize(b.ring, b.lattice, CurveClass{{0, 1}}, {42}), std::invalid_argument);
}

TEST_CASE("essential counts for the quick cases") {
  QContext c33(load_descriptor(std::string(QH_DATA_DIR) + "/M2_33.fano"));
  CHECK(c33.essential().size() == 10);
  QContext c30(load_descriptor(std::string(QH_DATA_DIR) + "/M2_30.fano"));
  CHECK(c30.essential().size() == 14);
}

TEST_CASE("closure: the system's unknowns all lie in the essential set") {
  // For M2_30 every essential symbol also survives into the difference.
  QContext ctx(load_descriptor(std::string(QH_DATA_DIR) + "/M2_30.fano"));
  std::set<VarId> used;
  for (const auto& g : ctx.assoc_ideal().generators)
    for (VarId v : g.poly.variables()) used.insert(v);
  std::set<VarId> declared(ctx.x_vars().begin(), ctx.x_vars().end());
  CHECK(used == declared);

  // For M2_33 the standard fiber invariant cancels in the difference but is
  // still essential (both association orders involve it).
  QContext c33(load_descriptor(std::string(QH_DATA_DIR) + "/M2_33.fano"));
  std::set<VarId> used33;
  for (const auto& g : c33.assoc_ideal().generators)
    for (VarId v : g.poly.variables()) used33.insert(v);
  std::set<VarId> declared33(c33.x_vars().begin(), c33.x_vars().end());
  CHECK(std::includes(declared33.begin(), declared33.end(), used33.begin(), used33.end()));
  // The standard fiber symbol is essential even though it cancels.
  CHECK(c33.essential().find("I(F1|phi)") >= 0);
}

TEST_CASE("symbol keys render canonically") {
  auto b = make("M2_30");
  InvariantSymbol s{CurveClass{{1, 0}}, {b.ring.rho_index(), b.ring.rho_index()}};
  CHECK(symbol_key(b.ring, b.lattice, s) == "I(L0-2*F1|rho,rho)");
}
