#ifndef QH_QUANTUM_HPP
#define QH_QUANTUM_HPP

#include <array>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "qh/gwsymbols.hpp"
#include "qh/poly.hpp"

namespace qh {

enum class ExecutionPolicy { Serial, Parallel };

// Element of H^*(X)[q;x]: one coefficient polynomial per basis class, over
// the expansion ring (q variables plus invariant unknowns).
struct QuantumElement {
  std::vector<Polynomial> comp;

  bool is_zero() const {
    for (const auto& p : comp)
      if (!p.is_zero()) return false;
    return true;
  }
  friend bool operator==(const QuantumElement& a, const QuantumElement& b) {
    return a.comp == b.comp;
  }
};

struct AssocGenerator {
  Polynomial poly;        // in the x ring, primitive, degree <= 2 in the x's
  int i = 0, j = 0, k = 0;  // divisor triple (1-based)
  int basis_index = 0;       // coefficient of this basis class
  CurveClass q_class;        // the q-monomial it multiplies
};

struct AssociativityIdeal {
  std::vector<AssocGenerator> generators;
};

// One computation session for a threefold: cohomology, lattice, symbolic
// quantum multiplication table over the candidate invariant unknowns, the
// essential set, and the associativity ideal. Immutable once built.
class QContext {
 public:
  explicit QContext(const ThreefoldDescriptor& d,
                    ExecutionPolicy policy = ExecutionPolicy::Parallel);

  const ThreefoldDescriptor& descriptor() const { return desc_; }
  const CohomologyRing& ring() const { return ring_; }
  const CurveClassLattice& lattice() const { return lat_; }
  const EssentialSet& essential() const { return essential_; }
  const AssociativityIdeal& assoc_ideal() const { return assoc_; }

  const PolyRing* exp_ring() const { return exp_ring_.get(); }
  PolyRing* x_ring() const { return x_ring_.get(); }
  const std::vector<VarId>& q_vars() const { return q_vars_; }
  const std::vector<VarId>& x_vars() const { return x_vars_; }
  const std::vector<CurveClass>& classes() const { return classes_; }

  // x-ring variable of an essential symbol position.
  VarId x_var(int pos) const { return x_vars_.at(pos); }
  // Expansion-ring variable of a candidate symbol key (-1 if absent).
  VarId candidate_var(const std::string& key) const;
  const std::vector<VarId>& candidate_vars() const { return cand_vars_; }

  Monomial q_monomial(const CurveClass& c) const;

  const QuantumElement& table(int i, int j) const { return table_.at(i).at(j); }

  // Quantum product, bilinear over the expansion-ring coefficients.
  QuantumElement qmul(const QuantumElement& a, const QuantumElement& b) const;
  QuantumElement basis_element(int basis_index) const;
  QuantumElement basis_element(int basis_index, const Polynomial& coeff) const;

  // Specialized copy of the multiplication table with the invariant unknowns
  // substituted (coefficients become polynomials in the q's alone).
  std::vector<std::vector<QuantumElement>> specialized_table(
      const std::map<VarId, Rational>& x_values_exp_ring) const;

  // Translate x-ring solution values to expansion-ring bindings.
  std::map<VarId, Rational> to_expansion_bindings(const std::map<VarId, Rational>& x_values) const;

  // Divisor triples 1 <= i <= j <= k <= p with at least two distinct entries.
  static std::vector<std::array<int, 3>> nondiagonal_triples(int p);

 private:
  friend struct QContextBuilder;

  ThreefoldDescriptor desc_;
  CohomologyRing ring_;
  CurveClassLattice lat_;
  std::unique_ptr<PolyRing> exp_ring_;
  std::vector<VarId> q_vars_;
  std::vector<CurveClass> classes_;
  std::vector<InvariantSymbol> candidates_;
  std::vector<VarId> cand_vars_;
  std::map<std::string, int> cand_index_;
  std::vector<std::vector<QuantumElement>> table_;
  EssentialSet essential_;
  std::unique_ptr<PolyRing> x_ring_;
  std::vector<VarId> x_vars_;
  std::map<VarId, VarId> cand_to_x_;
  AssociativityIdeal assoc_;
};

// Raw expansion of every nondiagonal divisor triple (the coefficients of
// P(i,j,k) by basis class and q-monomial), before symbol filtering. Pure in
// the context; the Parallel policy fans triples out across OpenMP threads
// and the result is identical to the Serial reference by construction.
struct TripleCoefficient {
  int i, j, k;
  int basis_index;
  CurveClass q_class;
  Polynomial coeff;  // in the expansion ring, x-part only
};

struct TripleExpansionSet {
  std::vector<TripleCoefficient> coeffs;  // coefficients of the differences
  std::set<VarId> involved;               // unknowns of either association order
};

std::vector<TripleCoefficient> expand_triples(const QContext& ctx, ExecutionPolicy policy);
TripleExpansionSet expand_triples_full(const QContext& ctx, ExecutionPolicy policy);

}  // namespace qh

#endif
