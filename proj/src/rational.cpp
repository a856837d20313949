#include "qh/rational.hpp"

#include <ostream>

namespace qh {

Rational Rational::parse(const std::string& s) {
  auto bad = [&]() { throw std::invalid_argument("Rational::parse: bad literal '" + s + "'"); };
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) bad();
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(t));
    mpz_class n(t.substr(0, slash)), d(t.substr(slash + 1));
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    bad();
  }
  return Rational();  // unreachable
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace qh
