#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "simplexlab/checked_int.hpp"

namespace simplexlab {

// Reduced fraction with 64-bit parts; denominator always positive.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  bool is_integer() const { return den_ == 1; }
  std::string str() const;  // "0", "2", "-1/3", ...

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational operator+(Rational a, Rational b);

}  // namespace simplexlab
