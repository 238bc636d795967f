#include "vab/rational.hpp"

namespace vab {

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(text);
      return Rational(mpq_class(n));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) throw std::invalid_argument("rational: bad literal");
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("rational: bad literal '" + text + "'");
  }
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

void axpy(VecQ& y, const Rational& c, const VecQ& x) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] += c * x[i];
  }
}

VecQ scaled(const VecQ& x, const Rational& c) {
  VecQ r(x.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) r[i] = c * x[i];
  return r;
}

VecQ add(const VecQ& a, const VecQ& b) {
  VecQ r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

VecQ sub(const VecQ& a, const VecQ& b) {
  VecQ r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

}  // namespace vab
