#include "timcm/rational.hpp"

#include <stdexcept>

namespace timcm {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::string num = s;
  std::string den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw std::invalid_argument("malformed rational: " + s);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::num_long() const {
  if (!v_.get_num().fits_slong_p()) throw std::overflow_error("rational numerator exceeds long");
  return v_.get_num().get_si();
}

long Rational::den_long() const {
  if (!v_.get_den().fits_slong_p()) throw std::overflow_error("rational denominator exceeds long");
  return v_.get_den().get_si();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.zero()) throw std::domain_error("rational division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

}  // namespace timcm
