#ifndef QH_POLY_HPP
#define QH_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qh/rational.hpp"
#include "qh/ring.hpp"

namespace qh {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in descending ring order with no zero coefficients; values
// are immutable in spirit (all operations return new polynomials) and safe to
// share across threads.
class Polynomial {
 public:
  Polynomial() : ring_(nullptr) {}
  explicit Polynomial(const PolyRing* ring) : ring_(ring) {}

  static Polynomial zero(const PolyRing* ring) { return Polynomial(ring); }
  static Polynomial constant(const PolyRing* ring, Rational c);
  static Polynomial variable(const PolyRing* ring, VarId v);
  static Polynomial term(const PolyRing* ring, Monomial m, Rational c);
  static Polynomial from_terms(const PolyRing* ring, std::vector<Term> terms);

  const PolyRing* ring() const { return ring_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one()); }
  std::size_t term_count() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }

  const Term& leading_term() const;  // under the ring order; throws on zero
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial::one()); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(int e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Exact substitution of rational values; unbound variables survive.
  Polynomial specialize(const std::map<VarId, Rational>& bindings) const;
  // Replace variables by polynomials (used for linear elimination).
  Polynomial substitute(const std::map<VarId, Polynomial>& bindings) const;

  // Maximum weighted total degree over terms; the zero polynomial has none.
  long weighted_degree() const;

  // Degree in the plain total-degree sense (weights ignored).
  long total_degree() const;

  std::vector<VarId> variables() const;

  // Content-free copy: integer coprime coefficients, positive leading one.
  Polynomial primitive_part() const;
  Polynomial monic() const;

  // Canonical text rendering: descending ring order, coefficients a/b,
  // ^ for powers, multiplication implicit between symbols.
  std::string str() const;
  static Polynomial parse(const PolyRing* ring, const std::string& text);

  // Deterministic total order for canonical containers.
  static int cmp(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();  // sort desc, merge, drop zeros

  const PolyRing* ring_;
  std::vector<Term> t_;
};

}  // namespace qh

#endif
