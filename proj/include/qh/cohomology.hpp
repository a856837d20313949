#ifndef QH_COHOMOLOGY_HPP
#define QH_COHOMOLOGY_HPP

#include <memory>
#include <string>
#include <vector>

#include "qh/poly.hpp"
#include "qh/rational.hpp"
#include "qh/ring.hpp"

namespace qh {

enum class Ambient { P3, Q3 };

std::string ambient_name(Ambient a);

struct CurveSpec {
  int index = 1;  // 1-based, matches E1/F1/phi1 naming
  int degree = 1;
  int genus = 0;
};

// Raw geometric relation as written in a descriptor file:
// I(<class over L0,F1,F2> | <insertions>) = value.
struct RawGeomRelation {
  std::vector<int> geo_class;            // coords over (L0, F1[, F2])
  std::vector<std::string> insertions;   // tokens from {pt, rho, phi1, phi2}
  Rational value;
};

// Declarative input for one blow-up threefold.
struct ThreefoldDescriptor {
  std::string name;
  Ambient ambient = Ambient::P3;
  std::vector<CurveSpec> curves;               // 1 or 2, disjoint, genus 0
  std::vector<std::vector<int>> effective_basis;  // row i: beta_i over (L0,F1[,F2])
  std::vector<RawGeomRelation> geometric_relations;

  int b2() const { return static_cast<int>(curves.size()) + 1; }
};

// H_2 lattice of the blow-up with the geometric basis {L0, F1[, F2]} and the
// descriptor's effective basis {beta_0..beta_{p-1}}.
class CurveClassLattice {
 public:
  int rank() const { return rank_; }
  // beta in effective coords paired against the j-th divisor (divisor order
  // matches CohomologyRing::divisors()).
  long pair_divisor(const std::vector<int>& eff, int divisor_pos) const;
  long minus_k_degree(const std::vector<int>& eff) const;
  long minus_k_basis(int i) const { return minus_k_eff_.at(i); }

  // Change of coordinates; eff_from_geo throws if the result is not integral.
  std::vector<int> geo_from_eff(const std::vector<int>& eff) const;
  std::vector<int> eff_from_geo(const std::vector<int>& geo) const;

  std::string class_str_geo(const std::vector<int>& geo) const;

 private:
  friend struct BlowupBuilder;
  int rank_ = 0;
  int curve_count_ = 0;
  // pair_geo_[g][d]: geometric basis class g against divisor d.
  std::vector<std::vector<long>> pair_geo_;
  std::vector<std::vector<int>> basis_geo_;   // effective basis rows, geo coords
  std::vector<std::vector<int>> inv_basis_;   // geo -> eff (unimodular inverse)
  std::vector<long> minus_k_eff_;
};

// Even cohomology of the blow-up with its finite graded basis and exact cup
// table. Immutable after build; safe to share across threads.
class CohomologyRing {
 public:
  int basis_size() const { return static_cast<int>(names_.size()); }
  const std::string& basis_name(int i) const { return names_.at(i); }
  int codim(int i) const { return codim_.at(i); }
  int b2() const { return static_cast<int>(divisors_.size()); }

  const std::vector<int>& divisors() const { return divisors_; }  // [E1(,E2),H]
  int unit_index() const { return 0; }
  int rho_index() const { return rho_; }
  int phi_index(int curve_pos) const { return phi_.at(curve_pos); }
  int point_index() const { return pt_; }
  int h_index() const { return h_; }

  // Cup product of basis classes, expanded over the basis.
  const std::vector<Rational>& cup(int i, int j) const { return cup_.at(i).at(j); }
  std::vector<Rational> cup_expand(const std::vector<Rational>& a,
                                   const std::vector<Rational>& b) const;

  // Poincare-dual basis: \hat T_i = dual_sign(i) * T_{dual_index(i)}.
  int dual_index(int i) const { return dual_idx_.at(i); }
  const Rational& dual_sign(int i) const { return dual_sign_.at(i); }

  // -K as a combination of divisor classes (divisor order).
  const std::vector<long>& anticanonical() const { return minus_k_; }

  const std::vector<int>& betti() const { return betti_; }  // b0,b2,b4,b6

  // Exhaustive internal checks: graded commutativity, associativity of the
  // cup table, Poincare pairing diagonality. Throws on violation.
  void validate() const;

 private:
  friend struct BlowupBuilder;
  friend CohomologyRing ambient_ring(Ambient a);
  std::vector<std::string> names_;
  std::vector<int> codim_;
  std::vector<int> divisors_;
  int rho_ = -1, pt_ = -1, h_ = -1;
  std::vector<int> phi_;
  std::vector<std::vector<std::vector<Rational>>> cup_;
  std::vector<int> dual_idx_;
  std::vector<Rational> dual_sign_;
  std::vector<long> minus_k_;
  std::vector<int> betti_;
};

struct BlowupData {
  CohomologyRing ring;
  CurveClassLattice lattice;
};

// Cohomology of the blow-up along the descriptor's curves (one or two smooth
// disjoint rational curves in P3 or Q3). Rejects descriptors outside that
// family.
BlowupData build_blowup_ring(const ThreefoldDescriptor& d);

// -K of the blow-up as divisor coefficients: 4H - sum E_j (P3), 3H - sum E_j (Q3).
std::vector<long> anticanonical(const ThreefoldDescriptor& d);

// Polynomial ring C[E(,E2),H,q0..q_{p-1}] for presentations; q_i carries
// weight -K.beta_i.
struct GenRing {
  std::unique_ptr<PolyRing> ring;
  std::vector<VarId> gen_vars;  // divisor order of the CohomologyRing
  std::vector<VarId> q_vars;
};

GenRing make_gen_ring(const CohomologyRing& r, const CurveClassLattice& lat);

// Generators of the kernel of C[divisors] -> H^*: for b2 = 2 the cubic EH^2
// and one quadratic, for b2 = 3 three quadratics, ordered as the presentation
// convention expects (mixed relation first). Errors if the divisor classes
// fail to generate.
std::vector<Polynomial> classical_relations(const CohomologyRing& r, const GenRing& g);

// Evaluate a polynomial in the divisor generators (q's must not occur) under
// the cup table; returns the basis expansion.
std::vector<Rational> cup_evaluate(const CohomologyRing& r, const GenRing& g,
                                   const Polynomial& p);

int hodge_length(const CohomologyRing& r);

// Plain ambient space ring (no curves); used for sanity checks such as P3.
CohomologyRing ambient_ring(Ambient a);

}  // namespace qh

#endif
