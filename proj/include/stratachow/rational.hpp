#pragma once
// Exact rational arithmetic backed by GMP. Always stored in lowest terms with
// a positive denominator; zero is 0/1. No rounding ever occurs.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stratachow {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  // Parses "a" or "a/b" with optional leading sign.
  static Rational from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        return Rational(mpq_class(mpz_class(s)));
      }
      mpz_class num(s.substr(0, slash));
      mpz_class den(s.substr(slash + 1));
      if (den == 0) throw std::domain_error("Rational: zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw std::domain_error("Rational: cannot parse '" + s + "'");
    }
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  // True when the denominator's prime support is within {2, 3}.
  bool denominator_smooth23() const {
    mpz_class d = v_.get_den();
    while (d % 2 == 0) d /= 2;
    while (d % 3 == 0) d /= 3;
    return d == 1;
  }

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

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  // Canonical text form: "n" or "n/d" with d > 1.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  mpq_class v_;
};

}  // namespace stratachow
