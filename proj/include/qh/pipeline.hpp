#ifndef QH_PIPELINE_HPP
#define QH_PIPELINE_HPP

#include <map>
#include <string>
#include <vector>

#include "qh/groebner.hpp"
#include "qh/quantum.hpp"

namespace qh {

struct GeomEntry {
  InvariantSymbol sym;
  Rational value;
  bool standard = false;  // the fiber-class relation I(F_j|phi_j) = -1
  std::string key;
};

struct GeometricRelationSet {
  std::vector<GeomEntry> entries;
  std::vector<Polynomial> polys;  // degree-1 generators x_i - value in the x ring
};

// Descriptor geometric relations as linear cuts; rejects symbols that do not
// normalize into the essential set.
GeometricRelationSet build_geometric(const QContext& ctx);

enum class SolveStatus { Unique, Underdetermined, Inconsistent, Ambiguous };

std::string solve_status_name(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::Underdetermined;
  std::map<VarId, Rational> values;  // x-ring variable -> value (Unique only)
  int residual_dimension = 0;
  long residual_degree = 0;
  long reduction_steps = 0;
};

// Solve J_A + J_G: linear elimination first, Buchberger on the residual.
// Unique solutions are certified zero-dimensional of degree one.
SolveOutcome solve_system(const QContext& ctx, const GeometricRelationSet& jg,
                          const BuchbergerOptions& opts = {});

struct AnalysisResult {
  bool completed = false;
  int dimension = 0;
  long degree = 0;
  long reduction_steps = 0;
};

// Dimension and degree of the associativity ideal alone. Budget overruns
// are reported, never mistaken for results.
AnalysisResult analyze_associativity(const QContext& ctx, const BuchbergerOptions& opts = {},
                                     OrderKind order = OrderKind::DegRevLex);

struct QuantumPresentation {
  GenRing gen;
  std::vector<Polynomial> classical;  // f_i^C
  std::vector<Polynomial> quantum;    // f_i^Q
  std::vector<Polynomial> relations;  // f_i^C - f_i^Q
  std::vector<Polynomial> basis_rep;  // per ring basis class: quantization table
};

// Quantized presentation: relations restricting to the classical ones at
// q = 0 and vanishing identically under the quantum product.
QuantumPresentation quantize_presentation(const QContext& ctx,
                                          const std::map<VarId, Rational>& x_values);

// Quantum-product evaluation of a generator/q polynomial with the invariant
// unknowns bound to x_values and the q's kept formal.
QuantumElement evaluate_presentation_poly(const QContext& ctx,
                                          const std::map<VarId, Rational>& x_values,
                                          const QuantumPresentation& pres, const Polynomial& p);

struct VerifyReport {
  bool ideal_equal = false;      // required tier
  bool syntactic_equal = false;  // informative tier
  std::vector<bool> expected_in_computed;
  std::vector<bool> computed_in_expected;
  std::vector<bool> syntactic_match;
};

VerifyReport verify_against_expected(const QuantumPresentation& pres,
                                     const std::vector<Polynomial>& expected);

}  // namespace qh

#endif
