#ifndef QH_GROEBNER_HPP
#define QH_GROEBNER_HPP

#include <stdexcept>
#include <vector>

#include "qh/poly.hpp"

namespace qh {

struct Ideal {
  const PolyRing* ring = nullptr;
  std::vector<Polynomial> generators;
};

struct BuchbergerOptions {
  long step_budget = 10'000'000;  // single-term reduction steps
};

// Resource limit hit; never a wrong result.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(long steps)
      : std::runtime_error("Groebner step budget exceeded after " + std::to_string(steps) +
                           " reduction steps"),
        steps(steps) {}
  long steps;
};

struct GroebnerBasis {
  const PolyRing* ring = nullptr;
  MonomialOrder order;
  std::vector<Polynomial> elements;  // reduced, monic, sorted by leading term
  long reduction_steps = 0;
};

// Reduced Groebner basis; deterministic for a fixed input (normal selection
// strategy: minimal lcm degree, ties by pair index).
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerOptions& opts = {});
GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts = {});

// Remainder of multivariate division by G (unique for fixed G and order).
// With `quotients`, fills one cofactor per basis element so that
// p = sum quotients[i] * G.elements[i] + remainder.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G,
                       std::vector<Polynomial>* quotients = nullptr);

// Post-hoc check that every S-polynomial of basis pairs reduces to zero.
bool buchberger_criterion(const GroebnerBasis& G);

struct HilbertData {
  std::vector<long> affine_hilbert;   // #standard monomials of degree <= d
  std::vector<Rational> hilbert_poly;  // coefficients in powers of d
  int dimension = 0;                   // -1 for the unit ideal
  long degree = 0;
};

// Dimension and degree of the ideal via the staircase of leading terms.
// Requires a degree-compatible order (degrevlex with weight-1 variables).
// `ambient_vars` overrides the ambient variable count (defaults to the whole
// ring), for analyses restricted to a subset of variables.
HilbertData hilbert_analysis(const GroebnerBasis& G);
HilbertData hilbert_analysis(const GroebnerBasis& G, std::size_t ambient_var_count);

struct ZeroDimSolve {
  bool rational = false;  // true when all points were enumerated exactly
  long degree = 0;
  std::vector<std::map<VarId, Rational>> points;
};

// Points of a zero-dimensional ideal: direct read-off at degree one,
// triangular enumeration with rational root extraction otherwise; reports
// NonRational (rational = false) when enumeration is not possible.
ZeroDimSolve solve_zero_dim(const GroebnerBasis& G);

}  // namespace qh

#endif
