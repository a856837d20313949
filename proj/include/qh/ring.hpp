#ifndef QH_RING_HPP
#define QH_RING_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qh {

using VarId = int;

enum class OrderKind { DegRevLex, Lex, Block };

// A total monomial order compatible with multiplication. DegRevLex and Block
// refine total weighted degree; priority runs most-significant-first and
// defaults to variable creation order.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  std::vector<VarId> priority;   // empty = creation order
  std::size_t block_size = 0;    // leading block length for OrderKind::Block
};

// Sparse exponent vector; zero exponents are never stored.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<VarId, int>> exps);

  static Monomial one() { return Monomial(); }
  static Monomial var(VarId v, int e = 1);

  bool is_one() const { return e_.empty(); }
  int degree_in(VarId v) const;
  long total_degree() const;
  const std::vector<std::pair<VarId, int>>& exponents() const { return e_; }

  Monomial operator*(const Monomial& o) const;
  // Quotient if o divides *this, else false.
  bool try_divide(const Monomial& o, Monomial& out) const;
  bool divisible_by(const Monomial& o) const;
  Monomial lcm_with(const Monomial& o) const;
  bool coprime_with(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  // Structural total order (variable ids, then exponents); independent of any
  // MonomialOrder. Used for canonical container keys.
  static int cmp_struct(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::pair<VarId, int>> e_;  // sorted by VarId, exps > 0
};

// Variable universe for one computation session: interned names, positive
// integer weights, and the session's display/computation order. Deterministic
// ordering always comes from the priority list, never from hash order.
class PolyRing {
 public:
  PolyRing() = default;
  PolyRing(const PolyRing&) = delete;
  PolyRing& operator=(const PolyRing&) = delete;

  VarId add_var(const std::string& name, long weight = 1);
  bool has_var(const std::string& name) const { return index_.count(name) != 0; }
  VarId var(const std::string& name) const;
  const std::string& name(VarId v) const { return names_.at(v); }
  long weight(VarId v) const { return weights_.at(v); }
  std::size_t var_count() const { return names_.size(); }

  void set_order(MonomialOrder o) { order_ = std::move(o); }
  const MonomialOrder& order() const { return order_; }

  long weighted_degree(const Monomial& m) const;
  // <0, 0, >0 as a < b, a == b, a > b under `ord` (ring weights).
  int compare(const Monomial& a, const Monomial& b) const { return compare(a, b, order_); }
  int compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) const;

  std::string monomial_str(const Monomial& m) const;

 private:
  std::vector<std::string> names_;
  std::vector<long> weights_;
  std::map<std::string, VarId> index_;
  MonomialOrder order_;
};

}  // namespace qh

#endif
