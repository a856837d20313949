#ifndef QH_GWSYMBOLS_HPP
#define QH_GWSYMBOLS_HPP

#include <map>
#include <string>
#include <vector>

#include "qh/cohomology.hpp"

namespace qh {

// Effective curve class: nonnegative coordinates over the effective basis.
struct CurveClass {
  std::vector<int> coords;

  bool is_zero() const {
    for (int c : coords)
      if (c) return false;
    return true;
  }
  friend bool operator==(const CurveClass& a, const CurveClass& b) { return a.coords == b.coords; }
  friend bool operator<(const CurveClass& a, const CurveClass& b) {
    long sa = 0, sb = 0;
    for (int c : a.coords) sa += c;
    for (int c : b.coords) sb += c;
    if (sa != sb) return sa < sb;
    return a.coords < b.coords;  // graded-lex
  }
};

// Canonical name of a Gromov-Witten invariant: curve class plus a multiset of
// basis classes of complex codimension >= 2 (divisors are peeled off by the
// Divisor axiom before a symbol is formed).
struct InvariantSymbol {
  CurveClass cls;
  std::vector<int> insertions;  // basis indices, sorted ascending

  friend bool operator==(const InvariantSymbol& a, const InvariantSymbol& b) {
    return a.cls == b.cls && a.insertions == b.insertions;
  }
  friend bool operator<(const InvariantSymbol& a, const InvariantSymbol& b) {
    if (!(a.cls == b.cls)) return a.cls < b.cls;
    return a.insertions < b.insertions;
  }
};

std::string symbol_key(const CohomologyRing& r, const CurveClassLattice& lat,
                       const InvariantSymbol& s);

// All nonzero nonnegative effective-basis combinations with
// 1 <= -K.beta <= bound, in graded-lex order on coordinates.
std::vector<CurveClass> enumerate_classes(const CurveClassLattice& lat, long bound);

struct NormalizeResult {
  enum class Kind { Zero, Essential, Known };
  Kind kind = Kind::Zero;
  Rational factor = 1;   // divisor-peeling factor (valid for Essential)
  InvariantSymbol sym;   // valid for Essential
  Rational known = 0;    // valid for Known (beta = 0: classical cup number)
};

// Divisor and Grading axioms: peel codim-1 insertions, kill fundamental-class
// insertions (beta != 0) and grading mismatches, canonicalize the rest.
// Insertions are basis indices of the ring (any codimension on input).
NormalizeResult normalize(const CohomologyRing& r, const CurveClassLattice& lat,
                          const CurveClass& beta, std::vector<int> insertions);

// The essential unknowns x_1..x_N in their canonical order.
struct EssentialSet {
  std::vector<InvariantSymbol> symbols;         // position i <-> x_{i+1}
  std::map<std::string, int> index_by_key;      // canonical key -> position

  int size() const { return static_cast<int>(symbols.size()); }
  int find(const std::string& key) const {
    auto it = index_by_key.find(key);
    return it == index_by_key.end() ? -1 : it->second;
  }
};

// essential_set(ctx) lives in quantum.hpp: identifying which candidate
// symbols actually occur requires expanding the associativity products.

}  // namespace qh

#endif
