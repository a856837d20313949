#include "qh/pipeline.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qh/linalg.hpp"

namespace qh {

namespace {

int insertion_index(const CohomologyRing& r, const std::string& token) {
  if (token == "pt") return r.point_index();
  if (token == "rho") return r.rho_index();
  if (token == "phi1") return r.phi_index(0);
  if (token == "phi2") {
    if (r.b2() < 3) throw std::invalid_argument("geometric relation mentions phi2 on a one-curve blow-up");
    return r.phi_index(1);
  }
  throw std::invalid_argument("unknown insertion token '" + token + "'");
}

}  // namespace

GeometricRelationSet build_geometric(const QContext& ctx) {
  const auto& r = ctx.ring();
  const auto& lat = ctx.lattice();
  GeometricRelationSet out;
  for (const auto& raw : ctx.descriptor().geometric_relations) {
    auto eff = lat.eff_from_geo(raw.geo_class);
    for (int c : eff)
      if (c < 0)
        throw std::invalid_argument("geometric relation class " + lat.class_str_geo(raw.geo_class) +
                                    " is not a nonnegative combination of the effective basis");
    std::vector<int> ins;
    for (const auto& tok : raw.insertions) ins.push_back(insertion_index(r, tok));
    auto nr = normalize(r, lat, CurveClass{eff}, ins);
    if (nr.kind != NormalizeResult::Kind::Essential)
      throw std::invalid_argument("geometric relation " + lat.class_str_geo(raw.geo_class) +
                                  " is grading-inconsistent (the symbol denotes zero)");
    std::string key = symbol_key(r, lat, nr.sym);
    int pos = ctx.essential().find(key);
    if (pos < 0)
      throw std::invalid_argument("geometric relation symbol " + key +
                                  " is not essential: it never occurs in the associativity system");
    GeomEntry e;
    e.sym = nr.sym;
    e.value = raw.value;
    e.key = key;
    // The standard blow-up relation: one fiber class against its own phi.
    e.standard = false;
    if (nr.sym.insertions.size() == 1 && raw.value == Rational(-1)) {
      for (int j = 0; j + 1 < lat.rank(); ++j) {
        std::vector<int> fiber(lat.rank(), 0);
        // Fiber classes are the effective basis elements equal to F_j.
        auto geo = lat.geo_from_eff(nr.sym.cls.coords);
        std::vector<int> fj(lat.rank(), 0);
        fj[j + 1] = 1;
        if (geo == fj && nr.sym.insertions[0] == r.phi_index(j)) e.standard = true;
      }
    }
    Polynomial p = Polynomial::variable(ctx.x_ring(), ctx.x_var(pos)) -
                   Polynomial::constant(ctx.x_ring(), e.value);
    out.entries.push_back(std::move(e));
    out.polys.push_back(std::move(p));
  }
  return out;
}

std::string solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unique: return "unique";
    case SolveStatus::Underdetermined: return "underdetermined";
    case SolveStatus::Inconsistent: return "inconsistent";
    case SolveStatus::Ambiguous: return "ambiguous";
  }
  return "?";
}

SolveOutcome solve_system(const QContext& ctx, const GeometricRelationSet& jg,
                          const BuchbergerOptions& opts) {
  SolveOutcome out;
  std::vector<Polynomial> gens = jg.polys;
  for (const auto& g : ctx.assoc_ideal().generators) gens.push_back(g.poly);

  // Linear elimination: substitute affine-linear generators until exhausted.
  std::vector<std::pair<VarId, Polynomial>> elim;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Polynomial& p = gens[g];
      if (p.is_zero()) continue;
      if (p.is_constant()) {
        out.status = SolveStatus::Inconsistent;
        return out;
      }
      if (p.total_degree() != 1) continue;
      VarId v = -1;
      Rational c;
      for (const auto& t : p.terms())
        if (!t.mono.is_one()) {
          VarId tv = t.mono.exponents()[0].first;
          if (v == -1 || tv < v) {
            v = tv;
            c = t.coeff;
          }
        }
      Polynomial expr = (Polynomial::variable(ctx.x_ring(), v).scaled(c) - p).scaled(c.inverse());
      elim.emplace_back(v, expr);
      std::map<VarId, Polynomial> bind{{v, expr}};
      for (auto& h : gens) h = h.substitute(bind);
      progress = true;
      break;
    }
  }

  std::vector<Polynomial> residual;
  std::set<VarId> residual_vars;
  for (auto& g : gens)
    if (!g.is_zero()) {
      for (VarId v : g.variables()) residual_vars.insert(v);
      residual.push_back(g.primitive_part());
    }

  const long total_vars = static_cast<long>(ctx.x_vars().size());
  const long free_vars = total_vars - static_cast<long>(elim.size());

  std::map<VarId, Rational> point;
  if (!residual.empty()) {
    Ideal ideal{ctx.x_ring(), residual};
    GroebnerBasis gb = buchberger(ideal, MonomialOrder{OrderKind::DegRevLex, {}, 0}, opts);
    out.reduction_steps = gb.reduction_steps;
    if (gb.elements.size() == 1 && gb.elements[0].is_constant()) {
      out.status = SolveStatus::Inconsistent;
      return out;
    }
    // Ambient for the residual: everything not eliminated (unseen variables
    // are genuinely free coordinates of the residual variety).
    HilbertData h = hilbert_analysis(gb, static_cast<std::size_t>(free_vars));
    if (h.dimension > 0) {
      out.status = SolveStatus::Underdetermined;
      out.residual_dimension = h.dimension;
      out.residual_degree = h.degree;
      return out;
    }
    if (h.degree != 1) {
      out.status = SolveStatus::Ambiguous;
      out.residual_degree = h.degree;
      out.residual_dimension = 0;
      return out;
    }
    // Degree one: the reduced basis is {v - c}; read the point directly.
    for (const auto& g : gb.elements) {
      auto vars = g.variables();
      if (g.term_count() > 2 || vars.size() != 1 ||
          g.leading_term().mono != Monomial::var(vars[0]))
        throw std::logic_error("solve_system: degree-one ideal without a readable point");
      point[vars[0]] = -g.constant_term();
    }
    // Variables absent from the residual generators but not eliminated would
    // be free; degree one plus full elimination coverage rules that out.
    if (static_cast<long>(residual_vars.size()) < free_vars) {
      out.status = SolveStatus::Underdetermined;
      out.residual_dimension = static_cast<int>(free_vars - residual_vars.size());
      return out;
    }
  } else if (free_vars > 0) {
    out.status = SolveStatus::Underdetermined;
    out.residual_dimension = static_cast<int>(free_vars);
    return out;
  }

  // Back-substitute the elimination stack.
  for (auto it = elim.rbegin(); it != elim.rend(); ++it) {
    Polynomial v = it->second.specialize(point);
    if (!v.is_constant())
      throw std::logic_error("solve_system: unresolved variable after back-substitution");
    point[it->first] = v.constant_term();
  }

  // Exactness: the point kills every generator of J_A and J_G.
  for (const auto& g : ctx.assoc_ideal().generators)
    if (!g.poly.specialize(point).is_zero())
      throw std::logic_error("solve_system: solution fails an associativity generator");
  for (const auto& g : jg.polys)
    if (!g.specialize(point).is_zero())
      throw std::logic_error("solve_system: solution fails a geometric relation");

  out.status = SolveStatus::Unique;
  out.values = std::move(point);
  out.residual_dimension = 0;
  out.residual_degree = 1;
  return out;
}

AnalysisResult analyze_associativity(const QContext& ctx, const BuchbergerOptions& opts,
                                     OrderKind order) {
  AnalysisResult res;
  Ideal ideal{ctx.x_ring(), {}};
  for (const auto& g : ctx.assoc_ideal().generators) ideal.generators.push_back(g.poly);
  try {
    GroebnerBasis gb = buchberger(ideal, MonomialOrder{order, {}, 0}, opts);
    res.reduction_steps = gb.reduction_steps;
    HilbertData h = hilbert_analysis(gb);
    res.dimension = h.dimension;
    res.degree = h.degree;
    res.completed = true;
  } catch (const BudgetExceeded& e) {
    res.reduction_steps = e.steps;
    res.completed = false;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Quantization.

namespace {

// q-monomial translation between the expansion ring and the generator ring.
Polynomial q_poly_to_gen(const QContext& ctx, const GenRing& gen, const Polynomial& p) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    std::vector<std::pair<VarId, int>> e;
    for (const auto& [v, ex] : t.mono.exponents()) {
      bool mapped = false;
      for (std::size_t qi = 0; qi < ctx.q_vars().size(); ++qi)
        if (ctx.q_vars()[qi] == v) {
          e.emplace_back(gen.q_vars[qi], ex);
          mapped = true;
        }
      if (!mapped) throw std::logic_error("quantize: non-q variable survived specialization");
    }
    ts.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(gen.ring.get(), std::move(ts));
}

struct Evaluator {
  const QContext& ctx;
  const GenRing& gen;
  const std::vector<std::vector<QuantumElement>>& table;

  QuantumElement qmul(const QuantumElement& a, const QuantumElement& b) const {
    const int n = ctx.ring().basis_size();
    QuantumElement out;
    out.comp.assign(n, Polynomial::zero(ctx.exp_ring()));
    for (int i = 0; i < n; ++i) {
      if (a.comp[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b.comp[j].is_zero()) continue;
        Polynomial scalar = a.comp[i] * b.comp[j];
        const QuantumElement& t = table[i][j];
        for (int k = 0; k < n; ++k)
          if (!t.comp[k].is_zero()) out.comp[k] += scalar * t.comp[k];
      }
    }
    return out;
  }

  // Evaluate a generator/q polynomial, divisor factors multiplied left to
  // right in divisor order (well defined; the solved product is associative).
  QuantumElement eval(const Polynomial& p) const {
    const int n = ctx.ring().basis_size();
    QuantumElement acc;
    acc.comp.assign(n, Polynomial::zero(ctx.exp_ring()));
    for (const auto& t : p.terms()) {
      std::vector<std::pair<VarId, int>> qpart;
      QuantumElement cur;
      // q-part of the monomial becomes a scalar coefficient.
      for (std::size_t qi = 0; qi < gen.q_vars.size(); ++qi) {
        int e = t.mono.degree_in(gen.q_vars[qi]);
        if (e) qpart.emplace_back(ctx.q_vars()[qi], e);
      }
      cur = QuantumElement();
      cur.comp.assign(n, Polynomial::zero(ctx.exp_ring()));
      cur.comp[ctx.ring().unit_index()] =
          Polynomial::term(ctx.exp_ring(), Monomial(std::move(qpart)), t.coeff);
      for (std::size_t d = 0; d < gen.gen_vars.size(); ++d) {
        int e = t.mono.degree_in(gen.gen_vars[d]);
        for (int rep = 0; rep < e; ++rep) {
          QuantumElement div;
          div.comp.assign(n, Polynomial::zero(ctx.exp_ring()));
          div.comp[ctx.ring().divisors()[d]] = Polynomial::constant(ctx.exp_ring(), 1);
          cur = qmul(cur, div);
        }
      }
      for (int k = 0; k < n; ++k) acc.comp[k] += cur.comp[k];
    }
    return acc;
  }
};

}  // namespace

QuantumPresentation quantize_presentation(const QContext& ctx,
                                          const std::map<VarId, Rational>& x_values) {
  const auto& r = ctx.ring();
  QuantumPresentation pres;
  pres.gen = make_gen_ring(r, ctx.lattice());
  pres.classical = classical_relations(r, pres.gen);

  auto table = ctx.specialized_table(ctx.to_expansion_bindings(x_values));
  Evaluator ev{ctx, pres.gen, table};

  // Quantization table, by increasing complex degree. Degrees 0 and 1 are the
  // generators themselves; higher degrees move the q-corrections across using
  // already-built lower entries (every correction carries positive q-weight).
  const int n = r.basis_size();
  pres.basis_rep.assign(n, Polynomial::zero(pres.gen.ring.get()));
  pres.basis_rep[r.unit_index()] = Polynomial::constant(pres.gen.ring.get(), 1);
  for (std::size_t d = 0; d < pres.gen.gen_vars.size(); ++d)
    pres.basis_rep[r.divisors()[d]] = Polynomial::variable(pres.gen.ring.get(), pres.gen.gen_vars[d]);

  auto rewrite_corrections = [&](const QuantumElement& e, int target) {
    // e.comp[target] must be 1; every other component is a correction.
    Polynomial result = Polynomial::zero(pres.gen.ring.get());
    for (int k = 0; k < n; ++k) {
      if (k == target) continue;
      if (e.comp[k].is_zero()) continue;
      result += q_poly_to_gen(ctx, pres.gen, e.comp[k]) * pres.basis_rep[k];
    }
    return result;
  };

  for (int codim = 2; codim <= 3; ++codim) {
    // Classical representative: minimal monomial combination that cup-evaluates
    // to the class (earlier pivots prefer H-heavy monomials).
    std::vector<int> classes;
    for (int i = 0; i < n; ++i)
      if (r.codim(i) == codim) classes.push_back(i);
    // Monomials of this degree, ascending order.
    std::vector<Monomial> monos;
    {
      std::vector<int> exps(pres.gen.gen_vars.size(), 0);
      auto rec = [&](auto&& self, std::size_t pos, int rem) -> void {
        if (pos + 1 == exps.size()) {
          exps[pos] = rem;
          std::vector<std::pair<VarId, int>> e;
          for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i]) e.emplace_back(pres.gen.gen_vars[i], exps[i]);
          monos.push_back(Monomial(std::move(e)));
          return;
        }
        for (int v = 0; v <= rem; ++v) {
          exps[pos] = v;
          self(self, pos + 1, rem - v);
        }
      };
      rec(rec, 0, codim);
      std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) {
        return pres.gen.ring->compare(a, b) < 0;
      });
    }
    RatMat m(monos.size(), RatVec(classes.size(), 0));
    for (std::size_t i = 0; i < monos.size(); ++i) {
      auto v = cup_evaluate(r, pres.gen, Polynomial::term(pres.gen.ring.get(), monos[i], 1));
      for (std::size_t j = 0; j < classes.size(); ++j) m[i][j] = v[classes[j]];
    }
    for (std::size_t j = 0; j < classes.size(); ++j) {
      RatVec rhs(classes.size(), 0);
      rhs[j] = 1;
      auto sol = solve_left(m, rhs);
      if (!sol) throw std::runtime_error("quantize: divisors do not generate the cohomology");
      Polynomial rep = Polynomial::zero(pres.gen.ring.get());
      for (std::size_t i = 0; i < monos.size(); ++i)
        if (!(*sol)[i].is_zero())
          rep += Polynomial::term(pres.gen.ring.get(), monos[i], (*sol)[i]);
      QuantumElement e = ev.eval(rep);
      pres.basis_rep[classes[j]] = rep - rewrite_corrections(e, classes[j]);
      // The table entry is exact: evaluating it gives the pure class.
      QuantumElement check = ev.eval(pres.basis_rep[classes[j]]);
      for (int k = 0; k < n; ++k) {
        Polynomial want = k == classes[j] ? Polynomial::constant(ctx.exp_ring(), 1)
                                          : Polynomial::zero(ctx.exp_ring());
        if (!(check.comp[k] == want))
          throw std::logic_error("quantize: quantization table entry failed verification");
      }
    }
  }

  // Quantize each classical relation: f^Q rewrites the q-corrections of the
  // quantum evaluation of f^C through the table.
  for (const auto& fc : pres.classical) {
    QuantumElement e = ev.eval(fc);
    Polynomial fq = Polynomial::zero(pres.gen.ring.get());
    for (int k = 0; k < n; ++k) {
      if (e.comp[k].is_zero()) continue;
      if (!e.comp[k].coefficient(Monomial::one()).is_zero())
        throw std::logic_error("quantize: classical relation has a q-free correction");
      fq += q_poly_to_gen(ctx, pres.gen, e.comp[k]) * pres.basis_rep[k];
    }
    pres.quantum.push_back(fq);
    pres.relations.push_back(fc - fq);
  }
  return pres;
}

QuantumElement evaluate_presentation_poly(const QContext& ctx,
                                          const std::map<VarId, Rational>& x_values,
                                          const QuantumPresentation& pres, const Polynomial& p) {
  auto table = ctx.specialized_table(ctx.to_expansion_bindings(x_values));
  Evaluator ev{ctx, pres.gen, table};
  return ev.eval(p);
}

VerifyReport verify_against_expected(const QuantumPresentation& pres,
                                     const std::vector<Polynomial>& expected) {
  VerifyReport rep;
  Ideal computed{pres.gen.ring.get(), pres.relations};
  Ideal wanted{pres.gen.ring.get(), expected};
  GroebnerBasis gb_c = buchberger(computed);
  GroebnerBasis gb_w = buchberger(wanted);
  rep.ideal_equal = true;
  for (const auto& e : expected) {
    bool z = normal_form(e, gb_c).is_zero();
    rep.expected_in_computed.push_back(z);
    rep.ideal_equal = rep.ideal_equal && z;
  }
  for (const auto& c : pres.relations) {
    bool z = normal_form(c, gb_w).is_zero();
    rep.computed_in_expected.push_back(z);
    rep.ideal_equal = rep.ideal_equal && z;
  }
  rep.syntactic_equal = expected.size() == pres.relations.size();
  for (std::size_t i = 0; i < std::min(expected.size(), pres.relations.size()); ++i) {
    bool same = expected[i] == pres.relations[i];
    rep.syntactic_match.push_back(same);
    rep.syntactic_equal = rep.syntactic_equal && same;
  }
  return rep;
}

}  // namespace qh
