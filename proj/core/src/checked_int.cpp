#include "simplexlab/checked_int.hpp"

#include <algorithm>

namespace simplexlab {

std::string Int::str() const {
  if (v_ == 0) return "0";
  unsigned __int128 u;
  bool neg = v_ < 0;
  if (neg) {
    u = ~static_cast<unsigned __int128>(v_) + 1;
  } else {
    u = static_cast<unsigned __int128>(v_);
  }
  std::string out;
  while (u != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(Int v) { return v.str(); }

Int floor_div(Int a, Int b) {
  Int q = a / b;
  Int r = a % b;
  if (!r.is_zero() && (r.sign() != b.sign())) q -= Int{1};
  return q;
}

Int floor_mod(Int a, Int b) {
  Int r = a % b;
  if (!r.is_zero() && (r.sign() != b.sign())) r += b;
  return r;
}

Int exact_div(Int a, Int b) {
  if ((a % b) != Int{0}) throw std::logic_error("exact_div: remainder is nonzero");
  return a / b;
}

Int gcd(Int a, Int b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t floor_mod_i64(std::int64_t a, std::int64_t b) {
  std::int64_t r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) r += b;
  return r;
}

}  // namespace simplexlab
