#include "simplexlab/rational.hpp"

#include <stdexcept>

namespace simplexlab {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = gcd_i64(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  __int128 lhs = static_cast<__int128>(num_) * o.den_;
  __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string out = std::to_string(num_);
  if (den_ != 1) {
    out += '/';
    out += std::to_string(den_);
  }
  return out;
}

Rational operator+(Rational a, Rational b) {
  Int num = Int{a.num()} * Int{b.den()} + Int{b.num()} * Int{a.den()};
  Int den = Int{a.den()} * Int{b.den()};
  return Rational{num.to_int64(), den.to_int64()};
}

}  // namespace simplexlab
