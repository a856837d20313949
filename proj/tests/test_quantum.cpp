#include <set>

#include "doctest.h"
#include "qh/descriptor.hpp"
#include "qh/quantum.hpp"

using namespace qh;

namespace {

QContext make(const std::string& name, ExecutionPolicy p = ExecutionPolicy::Parallel) {
  return QContext(load_descriptor(std::string(QH_DATA_DIR) + "/" + name + ".fano"), p);
}

}  // namespace

TEST_CASE("nondiagonal triples") {
  CHECK(QContext::nondiagonal_triples(2).size() == 2);
  CHECK(QContext::nondiagonal_triples(3).size() == 7);
}

TEST_CASE("unit is a two-sided identity") {
  QContext ctx = make("M2_30");
  const int n = ctx.ring().basis_size();
  for (int b = 0; b < n; ++b) {
    QuantumElement e = ctx.basis_element(b);
    CHECK(ctx.qmul(ctx.basis_element(0), e) == e);
    CHECK(ctx.qmul(e, ctx.basis_element(0)) == e);
  }
}

TEST_CASE("all unknowns to zero reduces the product to the cup product") {
  QContext ctx = make("M2_29");
  std::map<VarId, Rational> zeros;
  for (VarId v : ctx.candidate_vars()) zeros[v] = 0;
  auto table = ctx.specialized_table(zeros);
  const int n = ctx.ring().basis_size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // Only q-free terms can survive with x = 0 in a graded table.
        Polynomial p = table[i][j].comp[k];
        CHECK(p.coefficient(Monomial::one()) == ctx.ring().cup(i, j)[k]);
        for (const auto& t : p.terms()) CHECK(t.mono.is_one());
      }
    }
}

TEST_CASE("table entries are graded in q-weight plus codimension") {
  QContext ctx = make("M3_20");
  const auto& r = ctx.ring();
  const auto& lat = ctx.lattice();
  for (int i = 0; i < r.basis_size(); ++i)
    for (int j = 0; j < r.basis_size(); ++j)
      for (int l = 0; l < r.basis_size(); ++l)
        for (const auto& t : ctx.table(i, j).comp[l].terms()) {
          long qw = 0;
          for (std::size_t qi = 0; qi < ctx.q_vars().size(); ++qi)
            qw += t.mono.degree_in(ctx.q_vars()[qi]) * lat.minus_k_basis(static_cast<int>(qi));
          CHECK(qw + r.codim(l) == r.codim(i) + r.codim(j));
        }
}

TEST_CASE("quantum product is commutative and bilinear on basis elements") {
  QContext ctx = make("M2_33");
  const int n = ctx.ring().basis_size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(ctx.qmul(ctx.basis_element(i), ctx.basis_element(j)) ==
                                      ctx.qmul(ctx.basis_element(j), ctx.basis_element(i)));
}

TEST_CASE("serial and parallel expansions are identical") {
  for (const char* name : {"M2_30", "M3_20"}) {
    QContext ctx = make(name);
    auto serial = expand_triples(ctx, ExecutionPolicy::Serial);
    auto parallel = expand_triples(ctx, ExecutionPolicy::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].coeff == parallel[i].coeff);
      CHECK(serial[i].basis_index == parallel[i].basis_index);
      CHECK(serial[i].q_class == parallel[i].q_class);
    }
    QContext s(load_descriptor(std::string(QH_DATA_DIR) + "/" + name + ".fano"),
               ExecutionPolicy::Serial);
    REQUIRE(s.assoc_ideal().generators.size() == ctx.assoc_ideal().generators.size());
    for (std::size_t i = 0; i < s.assoc_ideal().generators.size(); ++i)
      CHECK(s.assoc_ideal().generators[i].poly.str() == ctx.assoc_ideal().generators[i].poly.str());
    CHECK(s.essential().size() == ctx.essential().size());
  }
}

TEST_CASE("generators are primitive, deduplicated, and at most quadratic") {
  QContext ctx = make("M2_21");
  std::set<std::string> seen;
  for (const auto& g : ctx.assoc_ideal().generators) {
    CHECK(!g.poly.is_zero());
    CHECK(g.poly.total_degree() <= 2);
    CHECK(g.poly == g.poly.primitive_part());
    CHECK(seen.insert(g.poly.str()).second);
    CHECK(g.i >= 1);
    CHECK(g.k <= ctx.ring().b2());
  }
  CHECK(!ctx.assoc_ideal().generators.empty());
}

TEST_CASE("q monomial round-trip") {
  QContext ctx = make("M3_25");
  CurveClass c{{2, 0, 1}};
  Monomial m = ctx.q_monomial(c);
  CHECK(m.degree_in(ctx.q_vars()[0]) == 2);
  CHECK(m.degree_in(ctx.q_vars()[1]) == 0);
  CHECK(m.degree_in(ctx.q_vars()[2]) == 1);
}
