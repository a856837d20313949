#include "qh/semisimple.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qh {

PresentationInput presentation_input(const QuantumPresentation& p) {
  PresentationInput in;
  in.ring = p.gen.ring.get();
  in.gen_vars = p.gen.gen_vars;
  in.q_vars = p.gen.q_vars;
  in.relations = p.relations;
  return in;
}

namespace {

// Standard monomials of the staircase, ascending; empty when infinite.
std::vector<Monomial> standard_monomials(const PresentationInput& p, const GroebnerBasis& gb) {
  std::vector<Monomial> lts;
  for (const auto& g : gb.elements) lts.push_back(g.leading_term().mono);
  for (VarId v : p.gen_vars) {
    bool pure = false;
    for (const auto& m : lts) {
      bool only_v = !m.is_one();
      for (const auto& [mv, e] : m.exponents()) only_v = only_v && mv == v;
      if (only_v) pure = true;
    }
    if (!pure) return {};
  }
  auto reducible = [&](const Monomial& m) {
    for (const auto& l : lts)
      if (m.divisible_by(l)) return true;
    return false;
  };
  std::vector<Monomial> out, queue = {Monomial::one()};
  while (!queue.empty()) {
    Monomial m = queue.back();
    queue.pop_back();
    bool known = false;
    for (const auto& s : out)
      if (s == m) known = true;
    if (known || reducible(m)) continue;
    out.push_back(m);
    for (VarId v : p.gen_vars) queue.push_back(m * Monomial::var(v));
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return p.ring->compare(a, b) < 0;
  });
  return out;
}

RatVec coords_of(const std::vector<Monomial>& basis, const Polynomial& poly) {
  RatVec v(basis.size(), 0);
  for (const auto& t : poly.terms()) {
    bool hit = false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == t.mono) {
        v[i] = t.coeff;
        hit = true;
        break;
      }
    if (!hit) throw std::logic_error("specialize_algebra: normal form left the standard basis");
  }
  return v;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  std::size_t n = a.size();
  RatMat c(n, RatVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace

ArtinianAlgebra specialize_algebra(const PresentationInput& p,
                                   const std::map<VarId, Rational>& q_values) {
  for (VarId q : p.q_vars) {
    auto it = q_values.find(q);
    if (it == q_values.end() || it->second.is_zero())
      throw std::invalid_argument("specialize_algebra: every q must be bound to a nonzero value");
  }
  Ideal ideal{p.ring, {}};
  for (const auto& r : p.relations) ideal.generators.push_back(r.specialize(q_values));
  MonomialOrder ord{OrderKind::DegRevLex, p.gen_vars, 0};
  ArtinianAlgebra alg;
  alg.gen_vars = p.gen_vars;
  alg.gb = buchberger(ideal, ord);
  alg.basis = standard_monomials(p, alg.gb);
  if (alg.basis.empty())
    throw std::invalid_argument("specialize_algebra: specialized ideal is not zero-dimensional");
  alg.dimension = static_cast<int>(alg.basis.size());

  for (VarId v : p.gen_vars) {
    RatMat m(alg.basis.size(), RatVec(alg.basis.size(), 0));
    for (std::size_t j = 0; j < alg.basis.size(); ++j) {
      Polynomial prod = Polynomial::term(p.ring, alg.basis[j] * Monomial::var(v), 1);
      RatVec col = coords_of(alg.basis, normal_form(prod, alg.gb));
      for (std::size_t i = 0; i < alg.basis.size(); ++i) m[i][j] = col[i];
    }
    alg.gen_mult.push_back(std::move(m));
  }

  for (std::size_t a = 0; a < alg.gen_mult.size(); ++a)
    for (std::size_t b = a + 1; b < alg.gen_mult.size(); ++b)
      if (mat_mul(alg.gen_mult[a], alg.gen_mult[b]) != mat_mul(alg.gen_mult[b], alg.gen_mult[a]))
        throw std::logic_error("specialize_algebra: multiplication matrices do not commute");
  return alg;
}

SemisimpleCertificate is_semisimple(const ArtinianAlgebra& a) {
  const std::size_t n = a.basis.size();
  const PolyRing* ring = a.gb.ring;
  // trace(L_{b_s}) for each basis element.
  RatVec tr(n, 0);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial prod = Polynomial::term(ring, a.basis[s] * a.basis[j], 1);
      tr[s] += coords_of(a.basis, normal_form(prod, a.gb))[j];
    }
  // Gram matrix of the trace form: G_uv = trace(L_{b_u b_v}).
  RatMat gram(n, RatVec(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v) {
      Polynomial prod = Polynomial::term(ring, a.basis[u] * a.basis[v], 1);
      RatVec c = coords_of(a.basis, normal_form(prod, a.gb));
      Rational g = 0;
      for (std::size_t s = 0; s < n; ++s)
        if (!c[s].is_zero()) g += c[s] * tr[s];
      gram[u][v] = g;
      gram[v][u] = g;
    }
  SemisimpleCertificate cert;
  cert.gram_det = determinant(gram);
  cert.semisimple = !cert.gram_det.is_zero();
  return cert;
}

namespace {

std::vector<Rational> trim_poly(std::vector<Rational> p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

std::vector<Rational> poly_derivative(const std::vector<Rational>& p) {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  return trim_poly(std::move(d));
}

std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a = trim_poly(std::move(a));
  }
  return a;
}

}  // namespace

std::vector<Rational> minimal_polynomial(const ArtinianAlgebra& a, const RatVec& form) {
  if (form.size() != a.gen_vars.size())
    throw std::invalid_argument("minimal_polynomial: one coefficient per generator required");
  const PolyRing* ring = a.gb.ring;
  Polynomial f = Polynomial::zero(ring);
  for (std::size_t i = 0; i < form.size(); ++i)
    f += Polynomial::variable(ring, a.gen_vars[i]).scaled(form[i]);

  std::vector<RatVec> krylov;
  Polynomial cur = Polynomial::constant(ring, 1);
  krylov.push_back(coords_of(a.basis, cur));
  for (std::size_t k = 1; k <= a.basis.size(); ++k) {
    cur = normal_form(cur * f, a.gb);
    RatVec v = coords_of(a.basis, cur);
    RatMat m(krylov.begin(), krylov.end());
    auto dep = solve_left(m, v);
    if (dep) {
      std::vector<Rational> mp(k + 1, 0);
      mp[k] = 1;
      for (std::size_t i = 0; i < k; ++i) mp[i] = -(*dep)[i];
      return mp;
    }
    krylov.push_back(std::move(v));
  }
  throw std::logic_error("minimal_polynomial: no dependence found (not finite-dimensional?)");
}

bool squarefree_univariate(const std::vector<Rational>& poly) {
  std::vector<Rational> a = trim_poly(poly);
  if (a.size() <= 1) return true;
  std::vector<Rational> b = poly_derivative(a);
  // Euclid: gcd(a, a') constant <=> squarefree.
  while (!b.empty()) {
    auto r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

GenericSemisimplicity generic_semisimplicity(const PresentationInput& p, int trials,
                                             std::uint64_t seed, ExecutionPolicy policy) {
  if (trials < 1) throw std::invalid_argument("generic_semisimplicity: trials must be >= 1");
  GenericSemisimplicity out;
  out.trials.resize(trials);

  auto run_trial = [&](int t) {
    TrialRecord rec;
    std::mt19937_64 rng(seed + 1000003ULL * static_cast<std::uint64_t>(t));
    // Modulo mapping keeps the draw deterministic across platforms.
    auto draw = [&]() { return static_cast<long>(1 + rng() % 1000); };
    for (int attempt = 0; attempt < 10; ++attempt) {
      std::map<VarId, Rational> q;
      for (VarId v : p.q_vars) q[v] = Rational(draw(), draw());
      try {
        ArtinianAlgebra alg = specialize_algebra(p, q);
        auto cert = is_semisimple(alg);
        rec.q_point = std::move(q);
        rec.dimension = alg.dimension;
        rec.gram_det = cert.gram_det;
        rec.semisimple = cert.semisimple;
        rec.degenerate = false;
        out.trials[t] = std::move(rec);
        return;
      } catch (const std::invalid_argument&) {
        rec.degenerate = true;  // degenerate specialization: redraw
      }
    }
    out.trials[t] = std::move(rec);
  };

  if (policy == ExecutionPolicy::Parallel) {
#ifdef QH_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int t = 0; t < trials; ++t) run_trial(t);
  } else {
    for (int t = 0; t < trials; ++t) run_trial(t);
  }

  for (const auto& rec : out.trials)
    if (rec.semisimple) out.verdict = SemisimpleVerdict::Semisimple;
  return out;
}

}  // namespace qh
