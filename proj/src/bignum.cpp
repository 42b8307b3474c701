#include "extfam/bignum.hpp"

#include <sstream>

namespace extfam {

BigCount binomial(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigCount r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // exact: r is C(a-b+i, i) after this step
  }
  return r;
}

BigCount pow2(long long k) {
  if (k < 0) return 0;
  return BigCount(1) << static_cast<unsigned>(k);
}

std::string to_decimal(const BigCount& v) { return v.str(); }

std::string to_fraction(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

}  // namespace extfam
