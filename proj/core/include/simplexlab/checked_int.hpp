#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace simplexlab {

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// Exact signed integer with a 128-bit range. Every arithmetic operator checks
// for wraparound and throws OverflowError instead of producing a wrong value;
// there is no silent promotion or truncation anywhere in the library.
class Int {
 public:
  constexpr Int() = default;
  constexpr Int(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr Int from_raw(__int128 v) {
    Int r;
    r.v_ = v;
    return r;
  }
  constexpr __int128 raw() const { return v_; }

  friend Int operator+(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a.v_, b.v_, &r.v_)) throw OverflowError("Int: + overflow");
    return r;
  }
  friend Int operator-(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r.v_)) throw OverflowError("Int: - overflow");
    return r;
  }
  friend Int operator*(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r.v_)) throw OverflowError("Int: * overflow");
    return r;
  }
  Int operator-() const {
    Int r;
    if (__builtin_sub_overflow(__int128{0}, v_, &r.v_)) throw OverflowError("Int: negate overflow");
    return r;
  }
  // Truncating division, as in the built-in integer types.
  friend Int operator/(Int a, Int b) {
    if (b.v_ == 0) throw std::invalid_argument("Int: division by zero");
    if (a.v_ == kMin && b.v_ == -1) throw OverflowError("Int: / overflow");
    return from_raw(a.v_ / b.v_);
  }
  friend Int operator%(Int a, Int b) {
    if (b.v_ == 0) throw std::invalid_argument("Int: division by zero");
    if (a.v_ == kMin && b.v_ == -1) return Int{0};
    return from_raw(a.v_ % b.v_);
  }

  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }

  friend constexpr bool operator==(Int a, Int b) { return a.v_ == b.v_; }
  friend constexpr bool operator<(Int a, Int b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(Int a, Int b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(Int a, Int b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(Int a, Int b) { return a.v_ >= b.v_; }
  friend constexpr bool operator!=(Int a, Int b) { return a.v_ != b.v_; }

  constexpr bool is_zero() const { return v_ == 0; }
  constexpr int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  Int abs() const { return v_ < 0 ? -*this : *this; }

  std::int64_t to_int64() const {
    if (v_ < INT64_MIN || v_ > INT64_MAX) throw OverflowError("Int: value does not fit in 64 bits");
    return static_cast<std::int64_t>(v_);
  }

  std::string str() const;

 private:
  static constexpr __int128 kMin = static_cast<__int128>(1) << 127;
  __int128 v_ = 0;
};

// Quotient rounded toward negative infinity; remainder in [0, |b|).
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);
// Division known to be exact; throws std::logic_error on a nonzero remainder.
Int exact_div(Int a, Int b);
Int gcd(Int a, Int b);

std::string to_string(Int v);

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);
std::int64_t floor_mod_i64(std::int64_t a, std::int64_t b);

}  // namespace simplexlab
