#include "qh/quantum.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace qh {

namespace {

constexpr long kClassBound = 6;  // 2 * dim X; grading kills everything beyond

}  // namespace

struct QContextBuilder {
  static void build(QContext& ctx, ExecutionPolicy policy) {
    auto data = build_blowup_ring(ctx.desc_);
    ctx.ring_ = std::move(data.ring);
    ctx.lat_ = std::move(data.lattice);
    ctx.classes_ = enumerate_classes(ctx.lat_, kClassBound);

    enumerate_candidates(ctx);
    make_expansion_ring(ctx);
    build_table(ctx);
    validate_table_grading(ctx);

    auto raw = expand_triples_full(ctx, policy);
    build_essential(ctx, raw.involved);
    build_ideal(ctx, raw.coeffs);
  }

  // Grading-consistent candidate symbols with insertions of codim >= 2 and
  // n <= 3, ordered by (-K.beta, class coordinates, insertion profile).
  static void enumerate_candidates(QContext& ctx) {
    const auto& r = ctx.ring_;
    std::vector<int> deep;  // codim >= 2 basis classes
    for (int i = 0; i < r.basis_size(); ++i)
      if (r.codim(i) >= 2) deep.push_back(i);

    std::vector<std::pair<std::array<long, 1>, InvariantSymbol>> keyed;
    for (const auto& beta : ctx.classes_) {
      long mk = ctx.lat_.minus_k_degree(beta.coords);
      std::vector<int> ins;
      auto rec = [&](auto&& self, std::size_t start, int n, long codim_sum) -> void {
        if (n > 0 && codim_sum == mk + n)
          keyed.push_back({{mk}, InvariantSymbol{beta, ins}});
        if (n == 3) return;
        for (std::size_t d = start; d < deep.size(); ++d) {
          ins.push_back(deep[d]);
          self(self, d, n + 1, codim_sum + r.codim(deep[d]));
          ins.pop_back();
        }
      };
      rec(rec, 0, 0, 0);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      if (a.first[0] != b.first[0]) return a.first[0] < b.first[0];
      if (!(a.second.cls == b.second.cls)) return a.second.cls.coords < b.second.cls.coords;
      return a.second.insertions < b.second.insertions;
    });
    for (auto& [key, sym] : keyed) {
      std::string k = symbol_key(ctx.ring_, ctx.lat_, sym);
      ctx.cand_index_[k] = static_cast<int>(ctx.candidates_.size());
      ctx.candidates_.push_back(std::move(sym));
    }
  }

  static void make_expansion_ring(QContext& ctx) {
    ctx.exp_ring_ = std::make_unique<PolyRing>();
    for (int i = 0; i < ctx.lat_.rank(); ++i)
      ctx.q_vars_.push_back(
          ctx.exp_ring_->add_var("q" + std::to_string(i), ctx.lat_.minus_k_basis(i)));
    for (const auto& sym : ctx.candidates_)
      ctx.cand_vars_.push_back(ctx.exp_ring_->add_var(symbol_key(ctx.ring_, ctx.lat_, sym)));
  }

  static void build_table(QContext& ctx) {
    const auto& r = ctx.ring_;
    const int n = r.basis_size();
    const PolyRing* R = ctx.exp_ring_.get();
    ctx.table_.assign(n, std::vector<QuantumElement>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        QuantumElement e;
        e.comp.assign(n, Polynomial::zero(R));
        for (int k = 0; k < n; ++k)
          if (!r.cup(i, j)[k].is_zero())
            e.comp[k] = Polynomial::constant(R, r.cup(i, j)[k]);
        for (const auto& beta : ctx.classes_) {
          Monomial qm = ctx.q_monomial(beta);
          for (int l = 0; l < n; ++l) {
            auto nr = normalize(r, ctx.lat_, beta, {i, j, l});
            if (nr.kind != NormalizeResult::Kind::Essential) continue;
            auto it = ctx.cand_index_.find(symbol_key(r, ctx.lat_, nr.sym));
            if (it == ctx.cand_index_.end())
              throw std::logic_error("quantum table produced an unregistered symbol");
            Monomial mono = qm * Monomial::var(ctx.cand_vars_[it->second]);
            int dual = r.dual_index(l);
            e.comp[dual] += Polynomial::term(R, std::move(mono), nr.factor * r.dual_sign(l));
          }
        }
        ctx.table_[i][j] = e;
        ctx.table_[j][i] = std::move(e);
      }
  }

  static void validate_table_grading(const QContext& ctx) {
    const auto& r = ctx.ring_;
    for (int i = 0; i < r.basis_size(); ++i)
      for (int j = 0; j < r.basis_size(); ++j) {
        const auto& e = ctx.table_[i][j];
        for (int l = 0; l < r.basis_size(); ++l)
          for (const auto& t : e.comp[l].terms()) {
            long qw = 0;
            for (const auto& [v, ex] : t.mono.exponents())
              for (std::size_t qi = 0; qi < ctx.q_vars_.size(); ++qi)
                if (ctx.q_vars_[qi] == v) qw += ex * ctx.lat_.minus_k_basis(static_cast<int>(qi));
            if (qw + r.codim(l) != r.codim(i) + r.codim(j))
              throw std::logic_error("quantum table violates the grading");
          }
      }
  }

  static void build_essential(QContext& ctx, const std::set<VarId>& occurring) {
    ctx.x_ring_ = std::make_unique<PolyRing>();
    for (std::size_t c = 0; c < ctx.candidates_.size(); ++c) {
      if (!occurring.count(ctx.cand_vars_[c])) continue;
      int pos = ctx.essential_.size();
      ctx.essential_.symbols.push_back(ctx.candidates_[c]);
      ctx.essential_.index_by_key[symbol_key(ctx.ring_, ctx.lat_, ctx.candidates_[c])] = pos;
      ctx.x_vars_.push_back(ctx.x_ring_->add_var("x" + std::to_string(pos + 1), 1));
      ctx.cand_to_x_[ctx.cand_vars_[c]] = ctx.x_vars_.back();
    }
  }

  static Polynomial remap_to_x(const QContext& ctx, const Polynomial& p) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      std::vector<std::pair<VarId, int>> e;
      for (const auto& [v, ex] : t.mono.exponents()) e.emplace_back(ctx.cand_to_x_.at(v), ex);
      ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(ctx.x_ring_.get(), std::move(ts));
  }

  static void build_ideal(QContext& ctx, const std::vector<TripleCoefficient>& raw) {
    auto cmp = [](const Polynomial& a, const Polynomial& b) { return Polynomial::cmp(a, b) < 0; };
    std::set<Polynomial, decltype(cmp)> seen(cmp);
    for (const auto& tc : raw) {
      Polynomial g = remap_to_x(ctx, tc.coeff).primitive_part();
      if (g.is_zero()) continue;
      if (g.total_degree() > 2)
        throw std::logic_error("associativity generator of unexpected degree");
      if (!seen.insert(g).second) continue;
      ctx.assoc_.generators.push_back({std::move(g), tc.i, tc.j, tc.k, tc.basis_index, tc.q_class});
    }
    std::sort(ctx.assoc_.generators.begin(), ctx.assoc_.generators.end(),
              [](const AssocGenerator& a, const AssocGenerator& b) {
                return Polynomial::cmp(a.poly, b.poly) < 0;
              });
  }
};

QContext::QContext(const ThreefoldDescriptor& d, ExecutionPolicy policy) : desc_(d) {
  QContextBuilder::build(*this, policy);
}

VarId QContext::candidate_var(const std::string& key) const {
  auto it = cand_index_.find(key);
  return it == cand_index_.end() ? -1 : cand_vars_.at(it->second);
}

Monomial QContext::q_monomial(const CurveClass& c) const {
  std::vector<std::pair<VarId, int>> e;
  for (std::size_t i = 0; i < q_vars_.size(); ++i)
    if (c.coords.at(i)) e.emplace_back(q_vars_[i], c.coords[i]);
  return Monomial(std::move(e));
}

QuantumElement QContext::basis_element(int basis_index) const {
  return basis_element(basis_index, Polynomial::constant(exp_ring_.get(), 1));
}

QuantumElement QContext::basis_element(int basis_index, const Polynomial& coeff) const {
  QuantumElement e;
  e.comp.assign(ring_.basis_size(), Polynomial::zero(exp_ring_.get()));
  e.comp.at(basis_index) = coeff;
  return e;
}

QuantumElement QContext::qmul(const QuantumElement& a, const QuantumElement& b) const {
  const int n = ring_.basis_size();
  QuantumElement out;
  out.comp.assign(n, Polynomial::zero(exp_ring_.get()));
  for (int i = 0; i < n; ++i) {
    if (a.comp[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b.comp[j].is_zero()) continue;
      Polynomial scalar = a.comp[i] * b.comp[j];
      const QuantumElement& t = table_[i][j];
      for (int k = 0; k < n; ++k)
        if (!t.comp[k].is_zero()) out.comp[k] += scalar * t.comp[k];
    }
  }
  return out;
}

std::vector<std::vector<QuantumElement>> QContext::specialized_table(
    const std::map<VarId, Rational>& x_values) const {
  const int n = ring_.basis_size();
  std::vector<std::vector<QuantumElement>> out(n, std::vector<QuantumElement>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QuantumElement e;
      e.comp.reserve(n);
      for (const auto& p : table_[i][j].comp) e.comp.push_back(p.specialize(x_values));
      out[i][j] = std::move(e);
    }
  return out;
}

std::map<VarId, Rational> QContext::to_expansion_bindings(
    const std::map<VarId, Rational>& x_values) const {
  std::map<VarId, Rational> out;
  for (const auto& [cand, x] : cand_to_x_) {
    auto it = x_values.find(x);
    if (it != x_values.end()) out[cand] = it->second;
  }
  return out;
}

std::vector<std::array<int, 3>> QContext::nondiagonal_triples(int p) {
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= p; ++i)
    for (int j = i; j <= p; ++j)
      for (int k = j; k <= p; ++k)
        if (!(i == j && j == k)) out.push_back({i, j, k});
  return out;
}

namespace {

struct TripleResult {
  std::vector<TripleCoefficient> coeffs;
  std::vector<VarId> involved;  // invariant unknowns seen in either order
};

TripleResult expand_one_triple(const QContext& ctx, int i, int j, int k) {
  const auto& divisors = ctx.ring().divisors();
  int di = divisors.at(i - 1), dj = divisors.at(j - 1), dk = divisors.at(k - 1);
  QuantumElement left = ctx.qmul(ctx.table(di, dj), ctx.basis_element(dk));
  QuantumElement right = ctx.qmul(ctx.basis_element(di), ctx.table(dj, dk));

  TripleResult out;
  const auto& qv = ctx.q_vars();
  auto is_q = [&](VarId v) { return std::find(qv.begin(), qv.end(), v) != qv.end(); };
  // Essential unknowns are those the two association orders involve, whether
  // or not they survive the cancellation in the difference.
  std::set<VarId> seen;
  for (const QuantumElement* e : {&left, &right})
    for (const auto& p : e->comp)
      for (VarId v : p.variables())
        if (!is_q(v)) seen.insert(v);
  out.involved.assign(seen.begin(), seen.end());

  for (int l = 0; l < ctx.ring().basis_size(); ++l) {
    Polynomial diff = left.comp[l] - right.comp[l];
    if (diff.is_zero()) continue;
    // Split by q-monomial; the residual x-part is one generator each.
    auto mono_cmp = [](const Monomial& a, const Monomial& b) {
      return Monomial::cmp_struct(a, b) < 0;
    };
    std::map<Monomial, std::vector<Term>, decltype(mono_cmp)> parts(mono_cmp);
    for (const auto& t : diff.terms()) {
      std::vector<std::pair<VarId, int>> qpart, xpart;
      for (const auto& [v, e] : t.mono.exponents())
        (is_q(v) ? qpart : xpart).emplace_back(v, e);
      parts[Monomial(std::move(qpart))].push_back({Monomial(std::move(xpart)), t.coeff});
    }
    for (auto& [qm, ts] : parts) {
      Polynomial g = Polynomial::from_terms(ctx.exp_ring(), std::move(ts));
      if (g.is_zero()) continue;
      CurveClass cls;
      cls.coords.assign(qv.size(), 0);
      for (std::size_t qi = 0; qi < qv.size(); ++qi) cls.coords[qi] = qm.degree_in(qv[qi]);
      out.coeffs.push_back({i, j, k, l, std::move(cls), std::move(g)});
    }
  }
  return out;
}

}  // namespace

TripleExpansionSet expand_triples_full(const QContext& ctx, ExecutionPolicy policy) {
  auto triples = QContext::nondiagonal_triples(ctx.ring().b2());
  std::vector<TripleResult> per(triples.size());
  if (policy == ExecutionPolicy::Parallel) {
#ifdef QH_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t t = 0; t < triples.size(); ++t)
      per[t] = expand_one_triple(ctx, triples[t][0], triples[t][1], triples[t][2]);
  } else {
    for (std::size_t t = 0; t < triples.size(); ++t)
      per[t] = expand_one_triple(ctx, triples[t][0], triples[t][1], triples[t][2]);
  }
  TripleExpansionSet out;
  for (auto& v : per) {
    for (auto& tc : v.coeffs) out.coeffs.push_back(std::move(tc));
    out.involved.insert(v.involved.begin(), v.involved.end());
  }
  return out;
}

std::vector<TripleCoefficient> expand_triples(const QContext& ctx, ExecutionPolicy policy) {
  return expand_triples_full(ctx, policy).coeffs;
}

}  // namespace qh
