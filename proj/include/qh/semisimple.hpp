#ifndef QH_SEMISIMPLE_HPP
#define QH_SEMISIMPLE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qh/groebner.hpp"
#include "qh/linalg.hpp"
#include "qh/pipeline.hpp"

namespace qh {

// A presentation to specialize: generators, q parameters and relations in one
// ring. Wraps a QuantumPresentation or a presentation file.
struct PresentationInput {
  const PolyRing* ring = nullptr;
  std::vector<VarId> gen_vars;
  std::vector<VarId> q_vars;
  std::vector<Polynomial> relations;
};

PresentationInput presentation_input(const QuantumPresentation& p);

// Finite-dimensional commutative algebra: standard-monomial basis of the
// quotient at a fixed q-point, with multiplication matrices per generator.
struct ArtinianAlgebra {
  GroebnerBasis gb;
  std::vector<VarId> gen_vars;
  std::vector<Monomial> basis;   // standard monomials, ascending
  std::vector<RatMat> gen_mult;  // one matrix per generator variable
  int dimension = 0;
};

// Quotient algebra at a q-specialization (all values nonzero). Throws if the
// specialized ideal is not zero-dimensional.
ArtinianAlgebra specialize_algebra(const PresentationInput& p,
                                   const std::map<VarId, Rational>& q_values);

struct SemisimpleCertificate {
  bool semisimple = false;
  Rational gram_det;  // trace-form determinant; nonzero iff semisimple
};

// Trace bilinear form criterion: in characteristic zero the form is
// nondegenerate exactly when the algebra is reduced.
SemisimpleCertificate is_semisimple(const ArtinianAlgebra& a);

// Minimal polynomial of multiplication by sum_i form[i] * generator_i,
// monic, constant term first. Used by the independent radical probe.
std::vector<Rational> minimal_polynomial(const ArtinianAlgebra& a, const RatVec& form);
bool squarefree_univariate(const std::vector<Rational>& poly);

enum class SemisimpleVerdict { Semisimple, Inconclusive };

struct TrialRecord {
  std::map<VarId, Rational> q_point;
  int dimension = 0;
  Rational gram_det;
  bool semisimple = false;
  bool degenerate = false;  // specialization failed after retries
};

struct GenericSemisimplicity {
  SemisimpleVerdict verdict = SemisimpleVerdict::Inconclusive;
  std::vector<TrialRecord> trials;
};

// Seeded random nonzero q-points; a single semisimple sample proves generic
// semisimplicity (openness), failures are only inconclusive. Trials run
// independently (OpenMP when available) and the verdict is a pure fold.
GenericSemisimplicity generic_semisimplicity(const PresentationInput& p, int trials,
                                             std::uint64_t seed,
                                             ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace qh

#endif
