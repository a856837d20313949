#include "qh/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace qh {

namespace {

// ---------------------------------------------------------------------------
// Dense packed representation, exponents in priority order.

struct GMono {
  std::vector<int> e;
  long wdeg = 0;   // total weighted degree
  long bdeg = 0;   // weighted degree of the leading block (Block order only)
};

struct GPoly {
  std::vector<std::pair<GMono, Rational>> t;  // sorted descending
  bool is_zero() const { return t.empty(); }
};

struct Packer {
  const PolyRing* ring;
  OrderKind kind;
  std::size_t block;
  std::vector<VarId> vars;   // priority order
  std::vector<long> w;

  Packer(const PolyRing* r, const MonomialOrder& ord) : ring(r), kind(ord.kind), block(ord.block_size) {
    if (ord.priority.empty()) {
      vars.resize(r->var_count());
      for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = static_cast<VarId>(i);
    } else {
      vars = ord.priority;
    }
    w.reserve(vars.size());
    for (VarId v : vars) w.push_back(r->weight(v));
  }

  GMono pack(const Monomial& m) const {
    GMono g;
    g.e.assign(vars.size(), 0);
    long covered = 0;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      g.e[k] = m.degree_in(vars[k]);
      covered += g.e[k];
    }
    if (covered != m.total_degree())
      throw std::invalid_argument("groebner: monomial uses variables outside the order's priority");
    for (std::size_t k = 0; k < vars.size(); ++k) {
      g.wdeg += w[k] * g.e[k];
      if (k < block) g.bdeg += w[k] * g.e[k];
    }
    return g;
  }

  Monomial unpack(const GMono& g) const {
    std::vector<std::pair<VarId, int>> e;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (g.e[k]) e.emplace_back(vars[k], g.e[k]);
    return Monomial(std::move(e));
  }

  int cmp(const GMono& a, const GMono& b) const {
    switch (kind) {
      case OrderKind::Lex: {
        for (std::size_t k = 0; k < a.e.size(); ++k)
          if (a.e[k] != b.e[k]) return a.e[k] > b.e[k] ? 1 : -1;
        return 0;
      }
      case OrderKind::DegRevLex: {
        if (a.wdeg != b.wdeg) return a.wdeg > b.wdeg ? 1 : -1;
        for (std::size_t k = a.e.size(); k-- > 0;)
          if (a.e[k] != b.e[k]) return a.e[k] < b.e[k] ? 1 : -1;
        return 0;
      }
      case OrderKind::Block: {
        if (a.bdeg != b.bdeg) return a.bdeg > b.bdeg ? 1 : -1;
        std::size_t s = std::min(block, a.e.size());
        for (std::size_t k = s; k-- > 0;)
          if (a.e[k] != b.e[k]) return a.e[k] < b.e[k] ? 1 : -1;
        long ta = a.wdeg - a.bdeg, tb = b.wdeg - b.bdeg;
        if (ta != tb) return ta > tb ? 1 : -1;
        for (std::size_t k = a.e.size(); k-- > s;)
          if (a.e[k] != b.e[k]) return a.e[k] < b.e[k] ? 1 : -1;
        return 0;
      }
    }
    return 0;
  }

  GPoly pack_poly(const Polynomial& p) const {
    GPoly g;
    g.t.reserve(p.term_count());
    for (const auto& t : p.terms()) g.t.emplace_back(pack(t.mono), t.coeff);
    std::sort(g.t.begin(), g.t.end(),
              [&](const auto& x, const auto& y) { return cmp(x.first, y.first) > 0; });
    return g;
  }

  Polynomial unpack_poly(const GPoly& g) const {
    std::vector<Term> ts;
    ts.reserve(g.t.size());
    for (const auto& [m, c] : g.t) ts.push_back({unpack(m), c});
    return Polynomial::from_terms(ring, std::move(ts));
  }
};

bool mono_divides(const GMono& a, const GMono& b) {  // a | b
  for (std::size_t k = 0; k < a.e.size(); ++k)
    if (a.e[k] > b.e[k]) return false;
  return true;
}

GMono mono_mul(const GMono& a, const GMono& b) {
  GMono r = a;
  for (std::size_t k = 0; k < a.e.size(); ++k) r.e[k] += b.e[k];
  r.wdeg += b.wdeg;
  r.bdeg += b.bdeg;
  return r;
}

GMono mono_div(const GMono& a, const GMono& b) {  // a / b, assumes divisibility
  GMono r = a;
  for (std::size_t k = 0; k < a.e.size(); ++k) r.e[k] -= b.e[k];
  r.wdeg -= b.wdeg;
  r.bdeg -= b.bdeg;
  return r;
}

GMono mono_lcm(const GMono& a, const GMono& b, const Packer& pk) {
  GMono r;
  r.e.resize(a.e.size());
  for (std::size_t k = 0; k < a.e.size(); ++k) r.e[k] = std::max(a.e[k], b.e[k]);
  for (std::size_t k = 0; k < a.e.size(); ++k) {
    r.wdeg += pk.w[k] * r.e[k];
    if (k < pk.block) r.bdeg += pk.w[k] * r.e[k];
  }
  return r;
}

bool mono_coprime(const GMono& a, const GMono& b) {
  for (std::size_t k = 0; k < a.e.size(); ++k)
    if (a.e[k] > 0 && b.e[k] > 0) return false;
  return true;
}

// r := p - c * m * g
GPoly sub_mul(const GPoly& p, const GPoly& g, const Rational& c, const GMono& m, const Packer& pk) {
  GPoly r;
  r.t.reserve(p.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < p.t.size() || j < g.t.size()) {
    int cv;
    GMono gm;
    if (j < g.t.size()) gm = mono_mul(g.t[j].first, m);
    if (i == p.t.size())
      cv = -1;
    else if (j == g.t.size())
      cv = 1;
    else
      cv = pk.cmp(p.t[i].first, gm);
    if (cv > 0)
      r.t.push_back(p.t[i++]);
    else if (cv < 0) {
      r.t.emplace_back(std::move(gm), -(c * g.t[j].second));
      ++j;
    } else {
      Rational nc = p.t[i].second - c * g.t[j].second;
      if (!nc.is_zero()) r.t.emplace_back(p.t[i].first, std::move(nc));
      ++i, ++j;
    }
  }
  return r;
}

GPoly make_primitive(GPoly p) {
  if (p.is_zero()) return p;
  mpz_class ng = 0, dl = 1;
  for (const auto& [m, c] : p.t) {
    ng = gcd(ng, c.num());
    dl = lcm(dl, c.den());
  }
  Rational scale(dl, ng);
  if (p.t.front().second.sign() < 0) scale = -scale;
  for (auto& [m, c] : p.t) c *= scale;
  return p;
}

GPoly make_monic(GPoly p) {
  if (p.is_zero()) return p;
  Rational inv = p.t.front().second.inverse();
  for (auto& [m, c] : p.t) c *= inv;
  return p;
}

struct Reducer {
  const Packer& pk;
  long budget;
  long steps = 0;

  void charge() {
    if (++steps > budget) throw BudgetExceeded(steps);
  }

  // Full reduction: no remainder term is divisible by any basis leading term.
  GPoly reduce(GPoly p, const std::vector<GPoly>& basis, std::vector<GPoly>* quot = nullptr) {
    if (quot) quot->assign(basis.size(), GPoly{});
    GPoly rem;
    while (!p.is_zero()) {
      const auto& [ltm, ltc] = p.t.front();
      bool hit = false;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (basis[b].is_zero()) continue;
        if (!mono_divides(basis[b].t.front().first, ltm)) continue;
        charge();
        GMono m = mono_div(ltm, basis[b].t.front().first);
        Rational c = ltc / basis[b].t.front().second;
        if (quot) {
          GPoly term;
          term.t.emplace_back(m, c);
          GMono one;
          one.e.assign(pk.vars.size(), 0);
          (*quot)[b] = sub_mul((*quot)[b], term, Rational(-1), one, pk);  // += c * m
        }
        p = sub_mul(p, basis[b], c, m, pk);
        hit = true;
        break;
      }
      if (!hit) {
        rem.t.push_back(p.t.front());
        p.t.erase(p.t.begin());
      }
    }
    return rem;
  }
};

GPoly spoly(const GPoly& f, const GPoly& g, const Packer& pk) {
  GMono l = mono_lcm(f.t.front().first, g.t.front().first, pk);
  GMono mf = mono_div(l, f.t.front().first);
  GMono mg = mono_div(l, g.t.front().first);
  Rational cf = f.t.front().second.inverse();
  Rational cg = g.t.front().second.inverse();
  GPoly sf;
  sf.t.reserve(f.t.size());
  for (const auto& [m, c] : f.t) sf.t.emplace_back(mono_mul(m, mf), c * cf);
  return sub_mul(sf, g, cg, mg, pk);
}

struct Engine {
  Packer pk;
  Reducer red;
  std::vector<GPoly> basis;

  Engine(const PolyRing* ring, const MonomialOrder& ord, long budget)
      : pk(ring, ord), red{pk, budget} {}

  void run(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      basis.push_back(make_primitive(pk.pack_poly(g)));
    }
    // Pair queue keyed by (lcm degree, i, j): the normal strategy.
    std::set<std::tuple<long, int, int>> queue;
    std::set<std::pair<int, int>> treated;
    auto push_pairs = [&](int upto) {
      for (int i = 0; i < upto; ++i)
        queue.insert({mono_lcm(basis[i].t.front().first, basis[upto].t.front().first, pk).wdeg,
                      i, upto});
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    while (!queue.empty()) {
      auto [deg, i, j] = *queue.begin();
      queue.erase(queue.begin());
      treated.insert({i, j});
      const GMono& lti = basis[i].t.front().first;
      const GMono& ltj = basis[j].t.front().first;
      if (mono_coprime(lti, ltj)) continue;  // first Buchberger criterion
      GMono l = mono_lcm(lti, ltj, pk);
      bool chained = false;  // second (chain) criterion
      for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
        if (k == i || k == j) continue;
        if (!mono_divides(basis[k].t.front().first, l)) continue;
        auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
        if (treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second}))
          chained = true;
      }
      if (chained) continue;
      GPoly h = red.reduce(spoly(basis[i], basis[j], pk), basis);
      if (h.is_zero()) continue;
      basis.push_back(make_primitive(std::move(h)));
      push_pairs(static_cast<int>(basis.size()) - 1);
    }

    minimalize();
    interreduce();
  }

  void minimalize() {
    std::vector<GPoly> kept;
    // Scan by ascending leading term so redundant generators drop cleanly.
    std::sort(basis.begin(), basis.end(), [&](const GPoly& a, const GPoly& b) {
      return pk.cmp(a.t.front().first, b.t.front().first) < 0;
    });
    for (auto& g : basis) {
      bool redundant = false;
      for (const auto& h : kept)
        if (mono_divides(h.t.front().first, g.t.front().first)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(std::move(g));
    }
    basis = std::move(kept);
  }

  void interreduce() {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<GPoly> others;
      others.reserve(basis.size() - 1);
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      basis[i] = make_monic(red.reduce(std::move(basis[i]), others));
    }
    std::sort(basis.begin(), basis.end(), [&](const GPoly& a, const GPoly& b) {
      return pk.cmp(a.t.front().first, b.t.front().first) < 0;
    });
  }
};

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerOptions& opts) {
  Engine eng(ideal.ring, order, opts.step_budget);
  eng.run(ideal.generators);
  GroebnerBasis out;
  out.ring = ideal.ring;
  out.order = order;
  out.reduction_steps = eng.red.steps;
  for (const auto& g : eng.basis) out.elements.push_back(eng.pk.unpack_poly(g));
  return out;
}

GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts) {
  return buchberger(ideal, ideal.ring->order(), opts);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G,
                       std::vector<Polynomial>* quotients) {
  Packer pk(G.ring, G.order);
  Reducer red{pk, std::numeric_limits<long>::max()};
  std::vector<GPoly> basis;
  basis.reserve(G.elements.size());
  for (const auto& g : G.elements) basis.push_back(pk.pack_poly(g));
  std::vector<GPoly> quot;
  GPoly r = red.reduce(pk.pack_poly(p), basis, quotients ? &quot : nullptr);
  if (quotients) {
    quotients->clear();
    for (const auto& q : quot) quotients->push_back(pk.unpack_poly(q));
  }
  return pk.unpack_poly(r);
}

bool buchberger_criterion(const GroebnerBasis& G) {
  Packer pk(G.ring, G.order);
  Reducer red{pk, std::numeric_limits<long>::max()};
  std::vector<GPoly> basis;
  for (const auto& g : G.elements) basis.push_back(pk.pack_poly(g));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!red.reduce(spoly(basis[i], basis[j], pk), basis).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Hilbert analysis of the staircase.

namespace {

using ZPoly = std::vector<mpz_class>;  // numerator in t

ZPoly zp_one() { return {1}; }

ZPoly zp_mul_one_minus_t_pow(const ZPoly& p, long d) {
  ZPoly r(p.size() + d, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] += p[i];
    r[i + d] -= p[i];
  }
  return r;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

ZPoly zp_shift(const ZPoly& p, long d) {
  ZPoly r(p.size() + d, 0);
  for (std::size_t i = 0; i < p.size(); ++i) r[i + d] = p[i];
  return r;
}

void minimize_monos(std::vector<std::vector<int>>& gens) {
  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
    long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::vector<int>> kept;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : kept) {
      bool div = true;
      for (std::size_t k = 0; k < g.size() && div; ++k) div = h[k] <= g[k];
      if (div) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  gens = std::move(kept);
}

long mdeg(const std::vector<int>& m) {
  long d = 0;
  for (int x : m) d += x;
  return d;
}

// Numerator of the Hilbert series of R/(gens) over (1-t)^n.
ZPoly staircase_numerator(std::vector<std::vector<int>> gens) {
  minimize_monos(gens);
  if (!gens.empty() && mdeg(gens.front()) == 0) return {0};  // unit ideal
  if (gens.empty()) return zp_one();

  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) {
      for (std::size_t k = 0; k < gens[i].size(); ++k)
        if (gens[i][k] > 0 && gens[j][k] > 0) {
          coprime = false;
          break;
        }
    }
  if (coprime) {
    ZPoly r = zp_one();
    for (const auto& g : gens) r = zp_mul_one_minus_t_pow(r, mdeg(g));
    return r;
  }

  // Pivot on the variable shared by the most generators.
  std::size_t nv = gens.front().size();
  std::vector<int> freq(nv, 0);
  for (const auto& g : gens)
    for (std::size_t k = 0; k < nv; ++k)
      if (g[k] > 0) ++freq[k];
  std::size_t piv = 0;
  for (std::size_t k = 1; k < nv; ++k)
    if (freq[k] > freq[piv]) piv = k;

  std::vector<std::vector<int>> without, colon;
  for (const auto& g : gens) {
    if (g[piv] == 0) without.push_back(g);
    auto h = g;
    if (h[piv] > 0) --h[piv];
    colon.push_back(std::move(h));
  }
  ZPoly a = zp_mul_one_minus_t_pow(staircase_numerator(std::move(without)), 1);
  ZPoly b = zp_shift(staircase_numerator(std::move(colon)), 1);
  return zp_add(a, b);
}

mpz_class binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

HilbertData hilbert_analysis(const GroebnerBasis& G) {
  return hilbert_analysis(G, G.ring->var_count());
}

HilbertData hilbert_analysis(const GroebnerBasis& G, std::size_t ambient_var_count) {
  if (G.order.kind != OrderKind::DegRevLex)
    throw std::invalid_argument("hilbert_analysis: requires a degree-compatible (degrevlex) order");
  Packer pk(G.ring, G.order);
  for (long w : pk.w)
    if (w != 1) throw std::invalid_argument("hilbert_analysis: requires weight-1 variables");

  std::vector<std::vector<int>> lts;
  for (const auto& g : G.elements) lts.push_back(pk.pack(g.leading_term().mono).e);

  HilbertData out;
  ZPoly num = staircase_numerator(std::move(lts));

  // Cumulative affine values from the raw numerator over (1-t)^(n+1).
  const long n = static_cast<long>(ambient_var_count);
  long span = static_cast<long>(num.size()) + 8;
  for (long d = 0; d < span; ++d) {
    mpz_class v = 0;
    for (std::size_t i = 0; i < num.size() && static_cast<long>(i) <= d; ++i)
      v += num[i] * binom(n + d - static_cast<long>(i), n);
    if (!v.fits_slong_p()) break;
    out.affine_hilbert.push_back(mpz_get_si(v.get_mpz_t()));
  }

  // Reduce the pole at t = 1.
  auto value_at_one = [](const ZPoly& p) {
    mpz_class s = 0;
    for (const auto& c : p) s += c;
    return s;
  };
  long cancelled = 0;
  while (!num.empty() && value_at_one(num) == 0) {
    // Divide by (1 - t): synthetic division.
    ZPoly q(num.size() > 0 ? num.size() - 1 : 0, 0);
    mpz_class carry = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = num[i] + carry;
      carry = q[i];
    }
    num = std::move(q);
    ++cancelled;
  }
  if (num.empty() || (num.size() == 1 && num[0] == 0)) {
    out.dimension = -1;  // unit ideal, empty variety
    out.degree = 0;
    out.hilbert_poly.clear();
    return out;
  }
  long dim = n - cancelled;
  // A nonzero quotient has pole order >= 0; for dim < 0 something is wrong.
  if (dim < 0) throw std::logic_error("hilbert_analysis: negative pole order");
  out.dimension = static_cast<int>(dim);
  mpz_class degz = value_at_one(num);
  out.degree = mpz_get_si(degz.get_mpz_t());

  // Affine Hilbert polynomial p(d) = sum_i num[i] * C(d - i + dim, dim).
  std::vector<Rational> hp(static_cast<std::size_t>(dim) + 1, 0);
  for (std::size_t i = 0; i < num.size(); ++i) {
    // Expand C(d - i + dim, dim) = prod_{j=1..dim} (d - i + j) / dim!.
    std::vector<Rational> poly = {1};
    for (long j = 1; j <= dim; ++j) {
      std::vector<Rational> next(poly.size() + 1, 0);
      Rational shift(static_cast<long>(j) - static_cast<long>(i));
      for (std::size_t kk = 0; kk < poly.size(); ++kk) {
        next[kk] += poly[kk] * shift;
        next[kk + 1] += poly[kk];
      }
      poly = std::move(next);
    }
    mpz_class fact = 1;
    for (long j = 2; j <= dim; ++j) fact *= j;
    Rational inv_fact = Rational(mpz_class(1), fact);
    for (std::size_t kk = 0; kk < poly.size(); ++kk)
      hp[kk] += Rational(num[i]) * poly[kk] * inv_fact;
  }
  out.hilbert_poly = std::move(hp);
  return out;
}

// ---------------------------------------------------------------------------
// Zero-dimensional solving.

namespace {

std::vector<Rational> rational_roots(const Polynomial& uni, VarId v) {
  // Integer-normalize and factor out x^k.
  Polynomial p = uni.primitive_part();
  std::map<long, mpz_class> coeffs;
  long lo = std::numeric_limits<long>::max(), hi = 0;
  for (const auto& t : p.terms()) {
    long e = t.mono.degree_in(v);
    coeffs[e] = t.coeff.num();  // primitive => integer coefficients
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  std::vector<Rational> roots;
  if (lo > 0) roots.push_back(0);
  mpz_class a0 = coeffs.count(lo) ? coeffs[lo] : 0;
  mpz_class an = coeffs[hi];
  if (a0 == 0) return roots;
  auto divisors = [](const mpz_class& m) {
    std::vector<mpz_class> ds;
    mpz_class a = abs(m);
    if (a > 1000000) return ds;  // enumeration fuse; callers treat as non-rational
    for (mpz_class d = 1; d * d <= a; ++d)
      if (a % d == 0) {
        ds.push_back(d);
        if (d * d != a) ds.push_back(a / d);
      }
    return ds;
  };
  auto ds0 = divisors(a0), dsn = divisors(an);
  if (ds0.empty() || dsn.empty()) return roots;
  auto eval = [&](const Rational& x) {
    Rational acc = 0, xp = 1;
    for (long e = lo; e <= hi; ++e) {
      if (coeffs.count(e)) acc += Rational(coeffs[e]) * xp;
      xp *= x;
    }
    return acc;
  };
  for (const auto& s : ds0)
    for (const auto& t : dsn)
      for (int sign : {1, -1}) {
        Rational cand(sign * s, t);
        if (eval(cand).is_zero()) {
          if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
        }
      }
  return roots;
}

long univariate_degree_total(const Polynomial& p, VarId v) {
  long d = 0;
  for (const auto& t : p.terms()) d = std::max(d, static_cast<long>(t.mono.degree_in(v)));
  return d;
}

bool enumerate_points(const GroebnerBasis& G, std::map<VarId, Rational> partial,
                      std::vector<std::map<VarId, Rational>>& out) {
  // Specialize what we know; if everything is resolved, record the point.
  std::vector<Polynomial> live;
  for (const auto& g : G.elements) {
    Polynomial s = g.specialize(partial);
    if (s.is_zero()) continue;
    if (s.is_constant()) return true;  // inconsistent branch: no point here
    live.push_back(s);
  }
  if (live.empty()) {
    out.push_back(std::move(partial));
    return true;
  }
  // Find a univariate element.
  for (const auto& g : live) {
    auto vars = g.variables();
    if (vars.size() != 1) continue;
    VarId v = vars[0];
    auto roots = rational_roots(g, v);
    if (roots.empty()) return false;
    bool all_ok = true;
    for (const auto& r : roots) {
      auto next = partial;
      next[v] = r;
      Ideal sub{G.ring, {}};
      for (const auto& h : G.elements) sub.generators.push_back(h.specialize(next));
      GroebnerBasis gsub = buchberger(sub, G.order);
      if (!enumerate_points(gsub, next, out)) all_ok = false;
    }
    // Fewer rational roots than the degree means irrational (or multiple)
    // points somewhere along this coordinate.
    if (univariate_degree_total(g, v) != static_cast<long>(roots.size())) return false;
    return all_ok;
  }
  return false;
}

}  // namespace

ZeroDimSolve solve_zero_dim(const GroebnerBasis& G) {
  HilbertData h = hilbert_analysis(G);
  if (h.dimension > 0)
    throw std::invalid_argument("solve_zero_dim: positive-dimensional ideal");
  ZeroDimSolve out;
  if (h.dimension < 0) {
    out.rational = true;  // empty variety, zero points
    out.degree = 0;
    return out;
  }
  out.degree = h.degree;
  if (h.degree == 1) {
    std::map<VarId, Rational> pt;
    for (const auto& g : G.elements) {
      // Reduced degree-1 basis: each element is v - c.
      if (g.term_count() > 2) return out;
      const auto& lt = g.leading_term();
      auto vars = g.variables();
      if (vars.size() != 1 || lt.mono != Monomial::var(vars[0])) return out;
      pt[vars[0]] = -g.constant_term();
    }
    out.points.push_back(std::move(pt));
    out.rational = true;
    return out;
  }
  std::vector<std::map<VarId, Rational>> pts;
  if (enumerate_points(G, {}, pts) && static_cast<long>(pts.size()) == h.degree) {
    out.rational = true;
    out.points = std::move(pts);
  }
  return out;
}

}  // namespace qh
