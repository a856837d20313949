#include "qh/gwsymbols.hpp"

#include <algorithm>
#include <stdexcept>

namespace qh {

std::string symbol_key(const CohomologyRing& r, const CurveClassLattice& lat,
                       const InvariantSymbol& s) {
  std::string key = "I(" + lat.class_str_geo(lat.geo_from_eff(s.cls.coords)) + "|";
  for (std::size_t i = 0; i < s.insertions.size(); ++i) {
    if (i) key += ",";
    key += r.basis_name(s.insertions[i]);
  }
  return key + ")";
}

std::vector<CurveClass> enumerate_classes(const CurveClassLattice& lat, long bound) {
  std::vector<CurveClass> out;
  if (bound < 1) return out;
  const int rank = lat.rank();
  std::vector<int> coords(rank, 0);
  // -K is positive on every basis class, so coordinates are bounded by the
  // budget; enumerate the box and filter.
  std::vector<long> caps(rank);
  for (int i = 0; i < rank; ++i) caps[i] = bound / lat.minus_k_basis(i);
  std::vector<int> cur(rank, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == rank) {
      CurveClass c{cur};
      if (c.is_zero()) return;
      long mk = lat.minus_k_degree(cur);
      if (mk >= 1 && mk <= bound) out.push_back(std::move(c));
      return;
    }
    for (int v = 0; v <= caps[pos]; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
    cur[pos] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

NormalizeResult normalize(const CohomologyRing& r, const CurveClassLattice& lat,
                          const CurveClass& beta, std::vector<int> insertions) {
  for (int idx : insertions)
    if (idx < 0 || idx >= r.basis_size())
      throw std::invalid_argument("normalize: insertion is not a basis class");

  NormalizeResult res;
  if (beta.is_zero()) {
    // Classical case: the degree-zero part of the cup product.
    std::vector<Rational> acc(r.basis_size(), 0);
    acc[r.unit_index()] = 1;
    for (int idx : insertions) {
      std::vector<Rational> e(r.basis_size(), 0);
      e[idx] = 1;
      acc = r.cup_expand(acc, e);
    }
    res.kind = NormalizeResult::Kind::Known;
    res.known = acc[r.point_index()];
    return res;
  }

  Rational factor = 1;
  std::vector<int> kept;
  for (int idx : insertions) {
    int cd = r.codim(idx);
    if (cd == 0) {
      res.kind = NormalizeResult::Kind::Zero;  // fundamental class, beta != 0
      return res;
    }
    if (cd == 1) {
      int pos = -1;
      for (std::size_t p = 0; p < r.divisors().size(); ++p)
        if (r.divisors()[p] == idx) pos = static_cast<int>(p);
      factor *= Rational(lat.pair_divisor(beta.coords, pos));
    } else {
      kept.push_back(idx);
    }
  }
  // Grading axiom: sum of codimensions must equal -K.beta + n.
  long total = 0;
  for (int idx : kept) total += r.codim(idx);
  if (total != lat.minus_k_degree(beta.coords) + static_cast<long>(kept.size())) {
    res.kind = NormalizeResult::Kind::Zero;
    return res;
  }
  if (factor.is_zero()) {
    res.kind = NormalizeResult::Kind::Zero;
    return res;
  }
  std::sort(kept.begin(), kept.end());
  res.kind = NormalizeResult::Kind::Essential;
  res.factor = factor;
  res.sym = InvariantSymbol{beta, std::move(kept)};
  return res;
}

}  // namespace qh
