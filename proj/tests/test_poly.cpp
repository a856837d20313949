#include <random>

#include "doctest.h"
#include "qh/poly.hpp"

using namespace qh;

namespace {

struct XYRing {
  PolyRing ring;
  VarId x, y, z, w;
  XYRing() {
    x = ring.add_var("x");
    y = ring.add_var("y");
    z = ring.add_var("z");
    w = ring.add_var("w");
  }
  Polynomial X() const { return Polynomial::variable(&ring, x); }
  Polynomial Y() const { return Polynomial::variable(&ring, y); }
  Polynomial C(long n, long d = 1) const { return Polynomial::constant(&ring, Rational(n, d)); }
};

Polynomial random_poly(const XYRing& r, std::mt19937_64& rng) {
  std::vector<Term> ts;
  int nterms = 1 + static_cast<int>(rng() % 5);
  for (int t = 0; t < nterms; ++t) {
    std::vector<std::pair<VarId, int>> e;
    VarId vars[4] = {r.x, r.y, r.z, r.w};
    int total = 0;
    for (VarId v : vars) {
      int d = static_cast<int>(rng() % 3);
      if (total + d > 4) d = 0;
      total += d;
      if (d) e.emplace_back(v, d);
    }
    long num = static_cast<long>(rng() % 13) - 6;
    long den = 1 + static_cast<long>(rng() % 4);
    if (num) ts.push_back({Monomial(std::move(e)), Rational(num, den)});
  }
  return Polynomial::from_terms(&r.ring, std::move(ts));
}

}  // namespace

TEST_CASE("difference of squares") {
  XYRing r;
  Polynomial p = (r.X() + r.C(1, 2)) * (r.X() - r.C(1, 2));
  CHECK(p == r.X() * r.X() - r.C(1, 4));
  CHECK(p.str() == "x^2 - 1/4");
}

TEST_CASE("adding zero is the identity") {
  XYRing r;
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 20; ++i) {
    Polynomial p = random_poly(r, rng);
    CHECK(p + Polynomial::zero(&r.ring) == p);
  }
}

TEST_CASE("binomial cube against the repeated-multiplication oracle") {
  XYRing r;
  Polynomial s = r.X() + r.Y();
  Polynomial cube = s * s * s;
  // Frozen expansion: x^3 + 3x^2y + 3xy^2 + y^3.
  Polynomial expected = Polynomial::parse(&r.ring, "x^3 + 3x^2y + 3xy^2 + y^3");
  CHECK(cube == expected);
}

TEST_CASE("algebraic laws on random polynomials") {
  XYRing r;
  std::mt19937_64 rng(777);
  for (int i = 0; i < 40; ++i) {
    Polynomial p = random_poly(r, rng), q = random_poly(r, rng), s = random_poly(r, rng);
    CHECK((p + q) + s == p + (q + s));
    CHECK(p * q == q * p);
    CHECK(p * (q + s) == p * q + p * s);
    CHECK((p * q) * s == p * (q * s));
  }
}

TEST_CASE("coefficients remain normalized") {
  XYRing r;
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    Polynomial p = random_poly(r, rng) * random_poly(r, rng) + random_poly(r, rng);
    for (const auto& t : p.terms()) {
      CHECK(qh::gcd(t.coeff.num(), t.coeff.den()) == 1);
      CHECK(t.coeff.den() > 0);
      CHECK(!t.coeff.is_zero());
    }
  }
}

TEST_CASE("specialize binds subsets and leaves the rest") {
  XYRing r;
  Polynomial p = r.X() * r.X() * r.Y();  // x^2 y
  Polynomial sp = p.specialize({{r.y, Rational(2)}});
  CHECK(sp == r.X() * r.X() * r.C(2));
  CHECK(p.specialize({}) == p);

  // H^4 - q at q = 1.
  PolyRing hr;
  VarId h = hr.add_var("H", 1);
  VarId q = hr.add_var("q", 4);
  Polynomial f = Polynomial::parse(&hr, "H^4 - q");
  CHECK(f.specialize({{q, Rational(1)}}) == Polynomial::parse(&hr, "H^4 - 1"));
}

TEST_CASE("specialize composes over disjoint bindings") {
  XYRing r;
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    Polynomial p = random_poly(r, rng);
    std::map<VarId, Rational> a{{r.x, Rational(3, 2)}}, b{{r.y, Rational(-1, 3)}};
    std::map<VarId, Rational> ab = a;
    ab.insert(b.begin(), b.end());
    CHECK(p.specialize(a).specialize(b) == p.specialize(ab));
  }
}

TEST_CASE("weighted degree respects per-variable weights") {
  PolyRing r;
  VarId e = r.add_var("E", 1);
  VarId h = r.add_var("H", 1);
  VarId q0 = r.add_var("q0", 2);
  VarId q1 = r.add_var("q1", 1);
  Polynomial eq1 = Polynomial::variable(&r, e) * Polynomial::variable(&r, q1);
  CHECK(eq1.weighted_degree() == 2);
  CHECK(Polynomial::constant(&r, 5).weighted_degree() == 0);
  Polynomial ehq0 =
      Polynomial::variable(&r, e) * Polynomial::variable(&r, h) * Polynomial::variable(&r, q0);
  CHECK(ehq0.weighted_degree() == 4);
  CHECK_THROWS_AS(Polynomial::zero(&r).weighted_degree(), std::domain_error);
}

TEST_CASE("canonical rendering and parsing round-trip") {
  PolyRing r;
  r.add_var("E", 1);
  r.add_var("H", 1);
  r.add_var("q0", 1);
  r.add_var("q1", 1);
  std::string s = "EH^2 + 8EHq0 - 10H^2q0 + 28Eq0^2 + 6Hq0^2 - 8Hq0q1 - 16q0^2q1";
  Polynomial p = Polynomial::parse(&r, s);
  CHECK(p.str() == s);
  // Explicit '*' and whitespace are tolerated on input.
  CHECK(Polynomial::parse(&r, "E*H^2+8*E*H*q0 - 10*H^2*q0+28E q0^2+6Hq0^2-8Hq0q1-16q0^2q1") == p);
  CHECK(Polynomial::parse(&r, "0").is_zero());
  CHECK_THROWS(Polynomial::parse(&r, "E +"));
  CHECK_THROWS(Polynomial::parse(&r, "Ez"));
}

TEST_CASE("display order is weighted degrevlex with creation priority") {
  PolyRing r;
  r.add_var("E1", 1);
  r.add_var("E2", 1);
  r.add_var("H", 1);
  r.add_var("q0", 1);
  r.add_var("q1", 1);
  r.add_var("q2", 1);
  Polynomial p = Polynomial::parse(&r, "q0q1 + E1q1 + Hq0 + E2q0 - E1q0 + q0q2");
  CHECK(p.str() == "-E1q0 + E2q0 + Hq0 + E1q1 + q0q1 + q0q2");
}

TEST_CASE("primitive part clears content and fixes the leading sign") {
  XYRing r;
  Polynomial p = (r.X() * r.C(-4, 6) + r.C(2, 3)) ;
  Polynomial prim = p.primitive_part();
  CHECK(prim == r.X() - r.C(1));
}
