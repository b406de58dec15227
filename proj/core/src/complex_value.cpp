#include "qbif/complex_value.hpp"

#include <sstream>

namespace qbif {

Complex sqrt(const Complex& z) {
  using boost::multiprecision::sqrt;
  if (z.im() == 0) {
    if (z.re() >= 0) return Complex(sqrt(z.re()), Real(0));
    return Complex(Real(0), sqrt(-z.re()));
  }
  // w = sqrt((|z| + |re|)/2), the larger component, then derive the other.
  Real a = qbif::abs(z);
  if (z.re() >= 0) {
    Real u = sqrt((a + z.re()) / 2);
    return Complex(u, z.im() / (2 * u));
  }
  Real v = sqrt((a - z.re()) / 2);
  if (z.im() < 0) v = -v;
  return Complex(z.im() / (2 * v), v);
}

Real real_pi() {
  using boost::multiprecision::atan;
  return 4 * atan(Real(1));
}

Complex unit_phase(const Real& theta) {
  using boost::multiprecision::cos;
  using boost::multiprecision::sin;
  return Complex(cos(theta), sin(theta));
}

Complex root_of_unity(long p, long k) {
  Real theta = 2 * real_pi() * p / k;
  return unit_phase(theta);
}

std::string to_decimal_string(const Real& x) {
  // digits10 + 3 guard digits makes the decimal -> binary round trip exact.
  std::ostringstream os;
  os.precision(static_cast<std::streamsize>(PrecisionContext::active_digits10()) + 3);
  os << std::scientific << x;
  return os.str();
}

Real real_from_decimal(const std::string& s) { return Real(s); }

}  // namespace qbif
