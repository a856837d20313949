#include "qh/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "qh/linalg.hpp"

namespace qh {

std::string ambient_name(Ambient a) { return a == Ambient::P3 ? "P3" : "Q3"; }

namespace {

void check_descriptor(const ThreefoldDescriptor& d) {
  if (d.curves.empty() || d.curves.size() > 2)
    throw std::invalid_argument("descriptor '" + d.name + "': need one or two blown-up curves");
  for (const auto& c : d.curves) {
    if (c.genus != 0)
      throw std::invalid_argument("descriptor '" + d.name + "': only genus-zero curves are supported");
    if (c.degree < 1) throw std::invalid_argument("descriptor '" + d.name + "': curve degree must be positive");
  }
  std::size_t rank = d.curves.size() + 1;
  if (d.effective_basis.size() != rank)
    throw std::invalid_argument("descriptor '" + d.name + "': effective basis must have rank " +
                                std::to_string(rank));
  for (const auto& row : d.effective_basis)
    if (row.size() != rank)
      throw std::invalid_argument("descriptor '" + d.name + "': effective basis rows must have " +
                                  std::to_string(rank) + " coordinates");
}

// Exact inverse of a small integer matrix with |det| = 1.
std::vector<std::vector<int>> unimodular_inverse(const std::vector<std::vector<int>>& m,
                                                 const std::string& what) {
  std::size_t n = m.size();
  RatMat a(n, RatVec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  auto pivots = rref(a);
  if (pivots.size() != n || pivots.back() >= static_cast<int>(n))
    throw std::invalid_argument(what + ": basis is singular (non-unimodular)");
  std::vector<std::vector<int>> inv(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = a[i][n + j];
      if (!x.is_integer()) throw std::invalid_argument(what + ": basis is not unimodular");
      inv[i][j] = static_cast<int>(mpz_get_si(x.num().get_mpz_t()));
    }
  return inv;
}

}  // namespace

struct BlowupBuilder {
  static BlowupData build(const ThreefoldDescriptor& d) {
    check_descriptor(d);
    BlowupData out;
    build_ring(d, out.ring);
    build_lattice(d, out.ring, out.lattice);
    out.ring.validate();
    return out;
  }

  static void build_ring(const ThreefoldDescriptor& d, CohomologyRing& r) {
    const int nc = static_cast<int>(d.curves.size());
    const bool p3 = d.ambient == Ambient::P3;
    const long hh = p3 ? 1 : 2;  // H^2 = hh * rho

    r.names_.push_back("1");
    r.codim_.push_back(0);
    for (int j = 0; j < nc; ++j) {
      r.names_.push_back(nc == 1 ? "E" : "E" + std::to_string(j + 1));
      r.codim_.push_back(1);
      r.divisors_.push_back(static_cast<int>(r.names_.size()) - 1);
    }
    r.names_.push_back("H");
    r.codim_.push_back(1);
    r.h_ = static_cast<int>(r.names_.size()) - 1;
    r.divisors_.push_back(r.h_);
    r.names_.push_back("rho");
    r.codim_.push_back(2);
    r.rho_ = static_cast<int>(r.names_.size()) - 1;
    for (int j = 0; j < nc; ++j) {
      r.names_.push_back(nc == 1 ? "phi" : "phi" + std::to_string(j + 1));
      r.codim_.push_back(2);
      r.phi_.push_back(static_cast<int>(r.names_.size()) - 1);
    }
    r.names_.push_back("pt");
    r.codim_.push_back(3);
    r.pt_ = static_cast<int>(r.names_.size()) - 1;

    const int n = r.basis_size();
    r.cup_.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0)));
    auto set = [&](int i, int j, std::vector<std::pair<int, Rational>> expansion) {
      std::vector<Rational> v(n, 0);
      for (auto& [k, c] : expansion) v[k] = c;
      r.cup_[i][j] = v;
      r.cup_[j][i] = std::move(v);
    };

    for (int i = 0; i < n; ++i) set(0, i, {{i, 1}});

    for (int j = 0; j < nc; ++j) {
      const int ej = r.divisors_[j];
      const long dj = d.curves[j].degree;
      // c1 of the normal bundle of a rational curve: -2 - K_X.C.
      const long c1 = -2 + (p3 ? 4 : 3) * dj;
      set(ej, ej, {{r.rho_, Rational(-dj)}, {r.phi_[j], Rational(c1)}});
      set(ej, r.h_, {{r.phi_[j], Rational(dj)}});
      set(ej, r.rho_, {});
      set(ej, r.pt_, {});
      for (int k = 0; k < nc; ++k) {
        set(ej, r.phi_[k], j == k ? std::vector<std::pair<int, Rational>>{{r.pt_, -1}}
                                  : std::vector<std::pair<int, Rational>>{});
        if (k > j) set(ej, r.divisors_[k], {});
      }
    }
    set(r.h_, r.h_, {{r.rho_, Rational(hh)}});
    set(r.h_, r.rho_, {{r.pt_, 1}});
    for (int j = 0; j < nc; ++j) set(r.h_, r.phi_[j], {});
    set(r.h_, r.pt_, {});
    set(r.rho_, r.rho_, {});
    for (int j = 0; j < nc; ++j) {
      set(r.rho_, r.phi_[j], {});
      for (int k = j; k < nc; ++k) set(r.phi_[j], r.phi_[k], {});
      set(r.phi_[j], r.pt_, {});
    }
    set(r.rho_, r.pt_, {});
    set(r.pt_, r.pt_, {});

    r.dual_idx_.assign(n, -1);
    r.dual_sign_.assign(n, Rational(1));
    r.dual_idx_[0] = r.pt_;
    r.dual_idx_[r.pt_] = 0;
    r.dual_idx_[r.h_] = r.rho_;
    r.dual_idx_[r.rho_] = r.h_;
    for (int j = 0; j < nc; ++j) {
      r.dual_idx_[r.divisors_[j]] = r.phi_[j];
      r.dual_sign_[r.divisors_[j]] = -1;
      r.dual_idx_[r.phi_[j]] = r.divisors_[j];
      r.dual_sign_[r.phi_[j]] = -1;
    }

    r.minus_k_.assign(r.divisors_.size(), -1);
    r.minus_k_.back() = p3 ? 4 : 3;

    r.betti_ = {1, nc + 1, nc + 1, 1};
  }

  static void build_lattice(const ThreefoldDescriptor& d, const CohomologyRing& r,
                            CurveClassLattice& lat) {
    const int nc = static_cast<int>(d.curves.size());
    lat.rank_ = nc + 1;
    lat.curve_count_ = nc;
    // Geometric basis order (L0, F1[, F2]) against divisors (E1[, E2], H).
    lat.pair_geo_.assign(lat.rank_, std::vector<long>(r.divisors().size(), 0));
    lat.pair_geo_[0].back() = 1;                      // L0.H = 1
    for (int j = 0; j < nc; ++j) lat.pair_geo_[j + 1][j] = -1;  // Fj.Ej = -1
    lat.basis_geo_ = d.effective_basis;
    lat.inv_basis_ = unimodular_inverse(lat.basis_geo_, "descriptor '" + d.name + "'");
    lat.minus_k_eff_.resize(lat.rank_);
    for (int i = 0; i < lat.rank_; ++i) {
      std::vector<int> eff(lat.rank_, 0);
      eff[i] = 1;
      long mk = 0;
      for (std::size_t pos = 0; pos < r.divisors().size(); ++pos)
        mk += r.anticanonical()[pos] * lat.pair_divisor(eff, static_cast<int>(pos));
      lat.minus_k_eff_[i] = mk;
      if (mk <= 0)
        throw std::invalid_argument("descriptor '" + d.name +
                                    "': effective basis class with nonpositive anticanonical degree");
    }
  }
};

long CurveClassLattice::pair_divisor(const std::vector<int>& eff, int divisor_pos) const {
  auto geo = geo_from_eff(eff);
  long s = 0;
  for (int g = 0; g < rank_; ++g) s += static_cast<long>(geo[g]) * pair_geo_[g][divisor_pos];
  return s;
}

long CurveClassLattice::minus_k_degree(const std::vector<int>& eff) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) s += static_cast<long>(eff.at(i)) * minus_k_eff_[i];
  return s;
}

std::vector<int> CurveClassLattice::geo_from_eff(const std::vector<int>& eff) const {
  std::vector<int> geo(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int g = 0; g < rank_; ++g) geo[g] += eff.at(i) * basis_geo_[i][g];
  return geo;
}

std::vector<int> CurveClassLattice::eff_from_geo(const std::vector<int>& geo) const {
  std::vector<int> eff(rank_, 0);
  for (int g = 0; g < rank_; ++g)
    for (int i = 0; i < rank_; ++i) eff[i] += geo.at(g) * inv_basis_[g][i];
  return eff;
}

std::string CurveClassLattice::class_str_geo(const std::vector<int>& geo) const {
  static const char* kNames[] = {"L0", "F1", "F2"};
  std::string s;
  for (int g = 0; g < rank_; ++g) {
    int c = geo.at(g);
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? "+" : "-";
    else if (c < 0) s += "-";
    int a = std::abs(c);
    if (a != 1) s += std::to_string(a) + "*";
    s += kNames[g];
  }
  return s.empty() ? "0" : s;
}

std::vector<Rational> CohomologyRing::cup_expand(const std::vector<Rational>& a,
                                                 const std::vector<Rational>& b) const {
  const int n = basis_size();
  std::vector<Rational> out(n, 0);
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Rational f = a[i] * b[j];
      const auto& e = cup_[i][j];
      for (int k = 0; k < n; ++k)
        if (!e[k].is_zero()) out[k] += f * e[k];
    }
  }
  return out;
}

void CohomologyRing::validate() const {
  const int n = basis_size();
  // Grading: cup lands in the right codimension (or vanishes above top).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!cup_[i][j][k].is_zero() && codim_[k] != codim_[i] + codim_[j])
          throw std::logic_error("cup table violates the grading");
  // Associativity, checked exhaustively on basis triples.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<Rational> ei(n, 0), ek(n, 0);
        ei[i] = 1;
        ek[k] = 1;
        auto left = cup_expand(cup_[i][j], ek);
        auto right = cup_expand(ei, cup_[j][k]);
        if (left != right) throw std::logic_error("cup table is not associative");
      }
  // Poincare pairing is the identity on (T_i, \hat T_j).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& e = cup_[i][dual_idx_[j]];
      Rational top = e[pt_] * dual_sign_[j];
      if (top != Rational(i == j ? 1 : 0))
        throw std::logic_error("Poincare dual basis does not pair diagonally");
    }
}

BlowupData build_blowup_ring(const ThreefoldDescriptor& d) { return BlowupBuilder::build(d); }

std::vector<long> anticanonical(const ThreefoldDescriptor& d) {
  check_descriptor(d);
  std::vector<long> v(d.curves.size() + 1, -1);
  v.back() = d.ambient == Ambient::P3 ? 4 : 3;
  return v;
}

GenRing make_gen_ring(const CohomologyRing& r, const CurveClassLattice& lat) {
  GenRing g;
  g.ring = std::make_unique<PolyRing>();
  for (int idx : r.divisors()) g.gen_vars.push_back(g.ring->add_var(r.basis_name(idx), 1));
  for (int i = 0; i < lat.rank(); ++i)
    g.q_vars.push_back(g.ring->add_var("q" + std::to_string(i), lat.minus_k_basis(i)));
  return g;
}

namespace {

// Degree-k monomials in the divisor generators, descending canonical order.
std::vector<Monomial> divisor_monomials(const GenRing& g, int k) {
  const auto& vars = g.gen_vars;
  std::vector<int> exp(vars.size(), 0);
  // Enumerate all compositions of k.
  std::vector<Monomial> acc;
  auto rec = [&](auto&& self, std::size_t pos, int rem) -> void {
    if (pos + 1 == exp.size()) {
      exp[pos] = rem;
      std::vector<std::pair<VarId, int>> e;
      for (std::size_t i = 0; i < exp.size(); ++i)
        if (exp[i]) e.emplace_back(vars[i], exp[i]);
      acc.push_back(Monomial(std::move(e)));
      return;
    }
    for (int v = rem; v >= 0; --v) {
      exp[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, k);
  std::sort(acc.begin(), acc.end(), [&](const Monomial& a, const Monomial& b) {
    return g.ring->compare(a, b) > 0;
  });
  return acc;
}

std::vector<Rational> cup_eval_monomial(const CohomologyRing& r, const GenRing& g,
                                        const Monomial& m) {
  const int n = r.basis_size();
  std::vector<Rational> acc(n, 0);
  acc[r.unit_index()] = 1;
  for (const auto& [v, e] : m.exponents()) {
    int pos = -1;
    for (std::size_t i = 0; i < g.gen_vars.size(); ++i)
      if (g.gen_vars[i] == v) pos = static_cast<int>(i);
    if (pos < 0) throw std::invalid_argument("cup_evaluate: polynomial contains non-divisor variables");
    std::vector<Rational> div(n, 0);
    div[r.divisors()[pos]] = 1;
    for (int k = 0; k < e; ++k) acc = r.cup_expand(acc, div);
  }
  return acc;
}

}  // namespace

std::vector<Rational> cup_evaluate(const CohomologyRing& r, const GenRing& g,
                                   const Polynomial& p) {
  std::vector<Rational> acc(r.basis_size(), 0);
  for (const auto& t : p.terms()) {
    auto v = cup_eval_monomial(r, g, t.mono);
    for (int k = 0; k < r.basis_size(); ++k)
      if (!v[k].is_zero()) acc[k] += t.coeff * v[k];
  }
  return acc;
}

std::vector<Polynomial> classical_relations(const CohomologyRing& r, const GenRing& g) {
  auto kernel_of_degree = [&](int k, std::vector<Monomial>& monos) {
    monos = divisor_monomials(g, k);
    std::vector<int> classes;
    for (int i = 0; i < r.basis_size(); ++i)
      if (r.codim(i) == k) classes.push_back(i);
    RatMat m(monos.size(), RatVec(classes.size(), 0));
    for (std::size_t i = 0; i < monos.size(); ++i) {
      auto v = cup_eval_monomial(r, g, monos[i]);
      for (std::size_t j = 0; j < classes.size(); ++j) m[i][j] = v[classes[j]];
    }
    if (rank(m) != static_cast<int>(classes.size()))
      throw std::runtime_error("classical_relations: divisor classes do not generate H^*");
    return left_kernel(m);
  };

  auto to_poly = [&](const std::vector<Monomial>& monos, const RatVec& row) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (!row[i].is_zero()) ts.push_back({monos[i], row[i]});
    return Polynomial::from_terms(g.ring.get(), std::move(ts));
  };

  std::vector<Monomial> monos2;
  RatMat k2 = kernel_of_degree(2, monos2);

  std::vector<Polynomial> rels;
  if (r.b2() == 2) {
    if (k2.size() != 1)
      throw std::runtime_error("classical_relations: unexpected quadratic kernel dimension");
    // Cubic relation: E H^2 vanishes in every one-curve blow-up.
    Monomial ehh = Monomial::var(g.gen_vars[0]) * Monomial::var(g.gen_vars[1], 2);
    Polynomial f1 = Polynomial::term(g.ring.get(), ehh, 1);
    auto v = cup_evaluate(r, g, f1);
    for (const auto& c : v)
      if (!c.is_zero()) throw std::runtime_error("classical_relations: EH^2 fails to vanish");
    rels.push_back(std::move(f1));
    rels.push_back(to_poly(monos2, k2[0]));
  } else {
    if (k2.size() != 3)
      throw std::runtime_error("classical_relations: unexpected quadratic kernel dimension");
    // Presentation convention: the mixed relation E1E2 first, then the pure
    // E1 and E2 quadratics (the order used throughout the reports).
    std::vector<Polynomial> rows;
    for (const auto& kr : k2) rows.push_back(to_poly(monos2, kr));
    auto lead_var = [&](const Polynomial& p) { return p.leading_term().mono; };
    Monomial e1e2 = Monomial::var(g.gen_vars[0]) * Monomial::var(g.gen_vars[1]);
    Monomial e1sq = Monomial::var(g.gen_vars[0], 2);
    Monomial e2sq = Monomial::var(g.gen_vars[1], 2);
    std::vector<Polynomial> ordered(3);
    for (auto& p : rows) {
      if (lead_var(p) == e1e2) ordered[0] = p;
      else if (lead_var(p) == e1sq) ordered[1] = p;
      else if (lead_var(p) == e2sq) ordered[2] = p;
      else throw std::runtime_error("classical_relations: unexpected quadratic kernel shape");
    }
    rels = std::move(ordered);
  }
  // Degree-3 generation sanity: the kernel there must be spanned by products
  // of the emitted relations with linear forms (plus the cubic for b2 = 2).
  std::vector<Monomial> monos3;
  RatMat k3 = kernel_of_degree(3, monos3);
  std::size_t expected = r.b2() == 2 ? 3 : 9;
  if (k3.size() != expected)
    throw std::runtime_error("classical_relations: unexpected cubic kernel dimension");
  return rels;
}

int hodge_length(const CohomologyRing& r) {
  int s = 0;
  for (int b : r.betti()) s += b;
  return s;
}

CohomologyRing ambient_ring(Ambient a) {
  CohomologyRing r;
  r.names_ = {"1", "H", "rho", "pt"};
  r.codim_ = {0, 1, 2, 3};
  r.divisors_ = {1};
  r.h_ = 1;
  r.rho_ = 2;
  r.pt_ = 3;
  const long hh = a == Ambient::P3 ? 1 : 2;
  const int n = 4;
  r.cup_.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0)));
  auto set = [&](int i, int j, std::vector<std::pair<int, Rational>> expansion) {
    std::vector<Rational> v(n, 0);
    for (auto& [k, c] : expansion) v[k] = c;
    r.cup_[i][j] = v;
    r.cup_[j][i] = std::move(v);
  };
  for (int i = 0; i < n; ++i) set(0, i, {{i, 1}});
  set(1, 1, {{2, Rational(hh)}});
  set(1, 2, {{3, 1}});
  set(1, 3, {});
  set(2, 2, {});
  set(2, 3, {});
  set(3, 3, {});
  r.dual_idx_ = {3, 2, 1, 0};
  r.dual_sign_ = {1, 1, 1, 1};
  r.minus_k_ = {a == Ambient::P3 ? 4 : 3};
  r.betti_ = {1, 1, 1, 1};
  r.validate();
  return r;
}

}  // namespace qh
