#ifndef QH_RATIONAL_HPP
#define QH_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace qh {

// Exact rational number, always in lowest terms with positive denominator.
// A zero denominator is a construction-time error, never a runtime NaN.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  // Accepts "a", "-a", "a/b" with optional sign; rejects b == 0.
  static Rational parse(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  // "a/b", or just "a" for integers.
  std::string str() const;

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

mpz_class gcd(const mpz_class& a, const mpz_class& b);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace qh

#endif
