#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qso {

/// Exact half-integer, stored as twice its value. Weight entries, shifted
/// weight coordinates and q-bracket arguments all live here: they are either
/// all integers or all half-odd-integers, and the arithmetic we need (sums,
/// negation, +1, doubling, total order) is closed over them.
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr HalfInt(long long n) : twice_(2 * n) {}

  static constexpr HalfInt from_twice(long long t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  /// "3", "-2", "3/2", "-1/2"
  static HalfInt parse(std::string_view text);

  constexpr long long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr long long numerator() const { return is_integer() ? twice_ / 2 : twice_; }
  constexpr int denominator() const { return is_integer() ? 1 : 2; }
  constexpr bool is_negative() const { return twice_ < 0; }
  constexpr bool is_zero() const { return twice_ == 0; }

  constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }
  constexpr HalfInt doubled() const { return from_twice(2 * twice_); }

  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  std::string str() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  constexpr HalfInt& operator+=(HalfInt b) { twice_ += b.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt b) { twice_ -= b.twice_; return *this; }

  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

private:
  long long twice_ = 0;
};

/// 1/2 as a HalfInt.
inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

}  // namespace qso
