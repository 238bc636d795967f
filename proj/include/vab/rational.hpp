#ifndef VAB_RATIONAL_HPP
#define VAB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vab {

/// Arbitrary-precision rational scalar. Always canonical: lowest terms,
/// denominator > 0. Every operation below stays inside Q; there is no
/// floating-point path anywhere in the library.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p" or "p/q" with optional sign; q > 0 after canonicalization.
  static Rational parse(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
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
    if (is_zero()) throw std::domain_error("rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  /// "p" when the denominator is 1, else "p/q".
  std::string str() const;

  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

using VecQ = std::vector<Rational>;

inline VecQ zero_vec(std::size_t n) { return VecQ(n); }

inline bool is_zero(const VecQ& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void axpy(VecQ& y, const Rational& c, const VecQ& x);  // y += c*x
VecQ scaled(const VecQ& x, const Rational& c);
VecQ add(const VecQ& a, const VecQ& b);
VecQ sub(const VecQ& a, const VecQ& b);

}  // namespace vab

#endif
