#include "qh/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace qh {

Monomial::Monomial(std::vector<std::pair<VarId, int>> exps) : e_(std::move(exps)) {
  std::sort(e_.begin(), e_.end());
  std::size_t w = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i].second < 0) throw std::invalid_argument("Monomial: negative exponent");
    if (e_[i].second == 0) continue;
    if (w > 0 && e_[w - 1].first == e_[i].first)
      e_[w - 1].second += e_[i].second;
    else
      e_[w++] = e_[i];
  }
  e_.resize(w);
}

Monomial Monomial::var(VarId v, int e) {
  Monomial m;
  if (e > 0) m.e_.emplace_back(v, e);
  return m;
}

int Monomial::degree_in(VarId v) const {
  for (const auto& [id, e] : e_)
    if (id == v) return e;
  return 0;
}

long Monomial::total_degree() const {
  long d = 0;
  for (const auto& [id, e] : e_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.reserve(e_.size() + o.e_.size());
  std::size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
      r.e_.push_back(e_[i++]);
    else if (i == e_.size() || o.e_[j].first < e_[i].first)
      r.e_.push_back(o.e_[j++]);
    else {
      r.e_.emplace_back(e_[i].first, e_[i].second + o.e_[j].second);
      ++i, ++j;
    }
  }
  return r;
}

bool Monomial::try_divide(const Monomial& o, Monomial& out) const {
  Monomial r;
  std::size_t i = 0;
  for (const auto& [id, e] : o.e_) {
    while (i < e_.size() && e_[i].first < id) r.e_.push_back(e_[i++]);
    if (i == e_.size() || e_[i].first != id || e_[i].second < e) return false;
    if (e_[i].second > e) r.e_.emplace_back(id, e_[i].second - e);
    ++i;
  }
  while (i < e_.size()) r.e_.push_back(e_[i++]);
  out = std::move(r);
  return true;
}

bool Monomial::divisible_by(const Monomial& o) const {
  Monomial unused;
  return try_divide(o, unused);
}

Monomial Monomial::lcm_with(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
      r.e_.push_back(e_[i++]);
    else if (i == e_.size() || o.e_[j].first < e_[i].first)
      r.e_.push_back(o.e_[j++]);
    else {
      r.e_.emplace_back(e_[i].first, std::max(e_[i].second, o.e_[j].second));
      ++i, ++j;
    }
  }
  return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
  std::size_t i = 0, j = 0;
  while (i < e_.size() && j < o.e_.size()) {
    if (e_[i].first < o.e_[j].first)
      ++i;
    else if (o.e_[j].first < e_[i].first)
      ++j;
    else
      return false;
  }
  return true;
}

int Monomial::cmp_struct(const Monomial& a, const Monomial& b) {
  if (a.e_ < b.e_) return -1;
  if (b.e_ < a.e_) return 1;
  return 0;
}

VarId PolyRing::add_var(const std::string& name, long weight) {
  if (name.empty()) throw std::invalid_argument("PolyRing: empty variable name");
  if (weight <= 0) throw std::invalid_argument("PolyRing: variable weight must be positive");
  if (index_.count(name)) throw std::invalid_argument("PolyRing: duplicate variable '" + name + "'");
  VarId id = static_cast<VarId>(names_.size());
  names_.push_back(name);
  weights_.push_back(weight);
  index_[name] = id;
  return id;
}

VarId PolyRing::var(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("PolyRing: unknown variable '" + name + "'");
  return it->second;
}

long PolyRing::weighted_degree(const Monomial& m) const {
  long d = 0;
  for (const auto& [id, e] : m.exponents()) d += weights_.at(id) * e;
  return d;
}

namespace {

// Positional exponents of m in priority order (most significant first).
void gather(const Monomial& m, const std::vector<VarId>& prio, std::vector<int>& out) {
  out.assign(prio.size(), 0);
  for (const auto& [id, e] : m.exponents()) {
    for (std::size_t k = 0; k < prio.size(); ++k)
      if (prio[k] == id) {
        out[k] = e;
        break;
      }
  }
}

int revlex_tail(const std::vector<int>& a, const std::vector<int>& b, std::size_t lo, std::size_t hi) {
  for (std::size_t k = hi; k-- > lo;) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;  // smaller exponent late => larger monomial
  }
  return 0;
}

}  // namespace

int PolyRing::compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) const {
  if (a == b) return 0;
  std::vector<VarId> prio = ord.priority;
  if (prio.empty()) {
    prio.resize(var_count());
    for (std::size_t i = 0; i < prio.size(); ++i) prio[i] = static_cast<VarId>(i);
  }
  std::vector<int> ea, eb;
  gather(a, prio, ea);
  gather(b, prio, eb);
  auto wdeg = [&](const std::vector<int>& e) {
    long d = 0;
    for (std::size_t k = 0; k < prio.size(); ++k) d += weights_.at(prio[k]) * e[k];
    return d;
  };
  switch (ord.kind) {
    case OrderKind::Lex: {
      for (std::size_t k = 0; k < prio.size(); ++k)
        if (ea[k] != eb[k]) return ea[k] > eb[k] ? 1 : -1;
      return 0;
    }
    case OrderKind::DegRevLex: {
      long da = wdeg(ea), db = wdeg(eb);
      if (da != db) return da > db ? 1 : -1;
      return revlex_tail(ea, eb, 0, prio.size());
    }
    case OrderKind::Block: {
      std::size_t s = std::min(ord.block_size, prio.size());
      long da = 0, db = 0;
      for (std::size_t k = 0; k < s; ++k) {
        da += weights_.at(prio[k]) * ea[k];
        db += weights_.at(prio[k]) * eb[k];
      }
      if (da != db) return da > db ? 1 : -1;
      if (int c = revlex_tail(ea, eb, 0, s)) return c;
      for (std::size_t k = s; k < prio.size(); ++k) {
        da += weights_.at(prio[k]) * ea[k];
        db += weights_.at(prio[k]) * eb[k];
      }
      if (da != db) return da > db ? 1 : -1;
      return revlex_tail(ea, eb, s, prio.size());
    }
  }
  return 0;
}

std::string PolyRing::monomial_str(const Monomial& m) const {
  if (m.is_one()) return "1";
  // Render in priority order so display matches the order's significance.
  std::vector<VarId> prio = order_.priority;
  if (prio.empty()) {
    prio.resize(var_count());
    for (std::size_t i = 0; i < prio.size(); ++i) prio[i] = static_cast<VarId>(i);
  }
  std::string s;
  for (VarId v : prio) {
    int e = m.degree_in(v);
    if (e == 0) continue;
    s += names_.at(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace qh
