#include "qh/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace qh {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() && b.ring() && a.ring() != b.ring())
    throw std::invalid_argument("Polynomial: mixed rings");
}

}  // namespace

Polynomial Polynomial::constant(const PolyRing* ring, Rational c) {
  return term(ring, Monomial::one(), std::move(c));
}

Polynomial Polynomial::variable(const PolyRing* ring, VarId v) {
  return term(ring, Monomial::var(v), 1);
}

Polynomial Polynomial::term(const PolyRing* ring, Monomial m, Rational c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.t_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(const PolyRing* ring, std::vector<Term> terms) {
  Polynomial p(ring);
  p.t_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(t_.begin(), t_.end(), [&](const Term& a, const Term& b) {
    return ring_->compare(a.mono, b.mono) > 0;
  });
  std::size_t w = 0;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (w > 0 && t_[w - 1].mono == t_[i].mono) {
      t_[w - 1].coeff += t_[i].coeff;
      if (t_[w - 1].coeff.is_zero()) --w;
    } else {
      if (w != i) t_[w] = std::move(t_[i]);
      ++w;
    }
  }
  t_.resize(w);
}

const Term& Polynomial::leading_term() const {
  if (t_.empty()) throw std::domain_error("Polynomial: leading term of zero");
  return t_.front();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : t_)
    if (t.mono == m) return t.coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.t_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(*this, o);
  const PolyRing* ring = ring_ ? ring_ : o.ring_;
  Polynomial r(ring);
  r.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    int c;
    if (i == t_.size())
      c = -1;
    else if (j == o.t_.size())
      c = 1;
    else
      c = ring->compare(t_[i].mono, o.t_[j].mono);
    if (c > 0)
      r.t_.push_back(t_[i++]);
    else if (c < 0)
      r.t_.push_back(o.t_[j++]);
    else {
      Rational s = t_[i].coeff + o.t_[j].coeff;
      if (!s.is_zero()) r.t_.push_back({t_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(*this, o);
  const PolyRing* ring = ring_ ? ring_ : o.ring_;
  // Accumulate under the cheap structural order, then canonicalize once.
  std::map<Monomial, Rational, bool (*)(const Monomial&, const Monomial&)> acc(
      [](const Monomial& a, const Monomial& b) { return Monomial::cmp_struct(a, b) < 0; });
  for (const auto& ta : t_)
    for (const auto& tb : o.t_) {
      Monomial m = ta.mono * tb.mono;
      Rational c = ta.coeff * tb.coeff;
      auto [it, fresh] = acc.try_emplace(std::move(m), c);
      if (!fresh) it->second += c;
    }
  Polynomial r(ring);
  r.t_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.t_.push_back({m, std::move(c)});
  std::sort(r.t_.begin(), r.t_.end(), [&](const Term& a, const Term& b) {
    return ring->compare(a.mono, b.mono) > 0;
  });
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.t_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({t.mono * m, t.coeff * c});
  // Multiplying by a fixed monomial preserves relative order.
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
  Polynomial r = constant(ring_, 1);
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].mono != b.t_[i].mono || a.t_[i].coeff != b.t_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::specialize(const std::map<VarId, Rational>& bindings) const {
  if (bindings.empty()) return *this;
  Polynomial r(ring_);
  std::vector<Term> out;
  for (const auto& t : t_) {
    Rational c = t.coeff;
    std::vector<std::pair<VarId, int>> kept;
    for (const auto& [v, e] : t.mono.exponents()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        kept.emplace_back(v, e);
      } else {
        Rational p = 1;
        for (int k = 0; k < e; ++k) p *= it->second;
        c *= p;
      }
    }
    if (!c.is_zero()) out.push_back({Monomial(std::move(kept)), std::move(c)});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& bindings) const {
  if (bindings.empty()) return *this;
  Polynomial result(ring_);
  for (const auto& t : t_) {
    std::vector<std::pair<VarId, int>> kept;
    Polynomial factor = constant(ring_, 1);
    for (const auto& [v, e] : t.mono.exponents()) {
      auto it = bindings.find(v);
      if (it == bindings.end())
        kept.emplace_back(v, e);
      else
        factor *= it->second.pow(e);
    }
    result += factor.times_term(Monomial(std::move(kept)), t.coeff);
  }
  return result;
}

long Polynomial::weighted_degree() const {
  if (t_.empty()) throw std::domain_error("Polynomial: weighted degree of zero");
  long d = ring_->weighted_degree(t_[0].mono);
  for (std::size_t i = 1; i < t_.size(); ++i)
    d = std::max(d, ring_->weighted_degree(t_[i].mono));
  return d;
}

long Polynomial::total_degree() const {
  if (t_.empty()) throw std::domain_error("Polynomial: total degree of zero");
  long d = 0;
  for (const auto& t : t_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::vector<VarId> Polynomial::variables() const {
  std::set<VarId> vs;
  for (const auto& t : t_)
    for (const auto& [v, e] : t.mono.exponents()) vs.insert(v);
  return {vs.begin(), vs.end()};
}

Polynomial Polynomial::primitive_part() const {
  if (t_.empty()) return *this;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : t_) {
    num_gcd = gcd(num_gcd, t.coeff.num());
    den_lcm = lcm(den_lcm, t.coeff.den());
  }
  Rational scale(den_lcm, num_gcd);  // num_gcd > 0 since poly is nonzero
  if (t_[0].coeff.sign() < 0) scale = -scale;
  return scaled(scale);
}

Polynomial Polynomial::monic() const {
  if (t_.empty()) return *this;
  return scaled(t_[0].coeff.inverse());
}

std::string Polynomial::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    const Term& t = t_[i];
    Rational a = t.coeff.abs();
    if (i == 0)
      s += t.coeff.sign() < 0 ? "-" : "";
    else
      s += t.coeff.sign() < 0 ? " - " : " + ";
    if (t.mono.is_one())
      s += a.str();
    else {
      if (!a.is_one()) s += a.str();
      s += ring_->monomial_str(t.mono);
    }
  }
  return s;
}

int Polynomial::cmp(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const PolyRing* ring = a.ring_ ? a.ring_ : b.ring_;
  std::size_t n = std::min(a.t_.size(), b.t_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = ring->compare(a.t_[i].mono, b.t_[i].mono)) return c;
    if (a.t_[i].coeff != b.t_[i].coeff) return a.t_[i].coeff < b.t_[i].coeff ? -1 : 1;
  }
  if (a.t_.size() != b.t_.size()) return a.t_.size() < b.t_.size() ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------------------
// Parsing of the canonical rendering (tolerates explicit '*' and whitespace).

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (isspace(static_cast<unsigned char>(s[pos])) || s[pos] == '*')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("Polynomial::parse: " + why + " at offset " +
                                std::to_string(pos) + " in '" + s + "'");
  }
  std::string integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return s.substr(start, pos - start);
  }
};

// Longest known-variable prefix at the cursor; symbols are letter runs
// optionally followed by digits, so scan the maximal candidate then shrink.
std::optional<VarId> lex_variable(Lexer& lx, const PolyRing* ring) {
  lx.skip_ws();
  std::size_t start = lx.pos, end = start;
  while (end < lx.s.size() && isalpha(static_cast<unsigned char>(lx.s[end]))) ++end;
  while (end < lx.s.size() && isdigit(static_cast<unsigned char>(lx.s[end]))) ++end;
  for (std::size_t len = end - start; len >= 1; --len) {
    std::string cand = lx.s.substr(start, len);
    if (ring->has_var(cand)) {
      lx.pos = start + len;
      return ring->var(cand);
    }
  }
  return std::nullopt;
}

}  // namespace

Polynomial Polynomial::parse(const PolyRing* ring, const std::string& text) {
  Lexer lx{text};
  Polynomial result(ring);
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++lx.pos;
    } else if (!first) {
      lx.fail("expected '+' or '-' between terms");
    }
    first = false;

    Rational coeff = sign;
    bool saw_any = false;
    if (isdigit(static_cast<unsigned char>(lx.peek()))) {
      std::string n = lx.integer();
      std::string d = "1";
      if (lx.peek() == '/') {
        ++lx.pos;
        d = lx.integer();
      }
      coeff *= Rational(mpz_class(n), mpz_class(d));
      saw_any = true;
    }
    std::vector<std::pair<VarId, int>> exps;
    while (isalpha(static_cast<unsigned char>(lx.peek()))) {
      auto v = lex_variable(lx, ring);
      if (!v) lx.fail("unknown symbol");
      int e = 1;
      if (lx.peek() == '^') {
        ++lx.pos;
        e = std::stoi(lx.integer());
      }
      exps.emplace_back(*v, e);
      saw_any = true;
    }
    if (!saw_any) lx.fail("empty term");
    result += term(ring, Monomial(std::move(exps)), std::move(coeff));
  }
  return result;
}

}  // namespace qh
