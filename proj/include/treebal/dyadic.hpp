// Exact dyadic rationals p / 2^e.

#ifndef TREEBAL_DYADIC_HPP_
#define TREEBAL_DYADIC_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace treebal {

// Always stored in lowest terms: the numerator is odd unless the exponent
// is zero. Arithmetic throws std::overflow_error rather than wrapping.
class DyadicRational {
 public:
  constexpr DyadicRational() = default;
  DyadicRational(std::int64_t numerator, std::uint32_t exponent = 0);

  std::int64_t numerator() const { return numerator_; }
  std::uint32_t exponent() const { return exponent_; }

  bool is_integer() const { return exponent_ == 0; }
  // Largest integer not above the value.
  std::int64_t floor() const;

  // Multiplies by 2^shift; shift may be negative.
  DyadicRational scaled(int shift) const;

  DyadicRational operator-() const;
  friend DyadicRational operator+(const DyadicRational& a,
                                  const DyadicRational& b);
  friend DyadicRational operator-(const DyadicRational& a,
                                  const DyadicRational& b);

  bool operator==(const DyadicRational&) const = default;
  std::strong_ordering operator<=>(const DyadicRational& other) const;

  // "p" for integers, otherwise "p/2^e".
  std::string to_string() const;

 private:
  std::int64_t numerator_ = 0;
  std::uint32_t exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const DyadicRational& x);

DyadicRational abs(const DyadicRational& x);

// Distance from x to the nearest integer; always in [0, 1/2].
DyadicRational nearest_int_distance(const DyadicRational& x);

}  // namespace treebal

#endif  // TREEBAL_DYADIC_HPP_
