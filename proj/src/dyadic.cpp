#include "treebal/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace treebal {

namespace {

std::int64_t shift_left_checked(std::int64_t value, std::uint32_t bits) {
  if (value == 0) return 0;
  if (bits >= 63) throw std::overflow_error("dyadic: numerator overflow");
  std::int64_t out;
  if (__builtin_mul_overflow(value, std::int64_t{1} << bits, &out)) {
    throw std::overflow_error("dyadic: numerator overflow");
  }
  return out;
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("dyadic: numerator overflow");
  }
  return out;
}

}  // namespace

DyadicRational::DyadicRational(std::int64_t numerator, std::uint32_t exponent)
    : numerator_(numerator), exponent_(exponent) {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  while (exponent_ > 0 && (numerator_ & 1) == 0) {
    numerator_ /= 2;
    --exponent_;
  }
}

std::int64_t DyadicRational::floor() const {
  // Arithmetic right shift rounds toward negative infinity.
  return numerator_ >> exponent_;
}

DyadicRational DyadicRational::scaled(int shift) const {
  if (shift >= 0) {
    const auto s = static_cast<std::uint32_t>(shift);
    if (s <= exponent_) return DyadicRational(numerator_, exponent_ - s);
    return DyadicRational(shift_left_checked(numerator_, s - exponent_), 0);
  }
  return DyadicRational(numerator_,
                        exponent_ + static_cast<std::uint32_t>(-shift));
}

DyadicRational DyadicRational::operator-() const {
  if (numerator_ == INT64_MIN) throw std::overflow_error("dyadic: negation");
  return DyadicRational(-numerator_, exponent_);
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  const std::uint32_t e = std::max(a.exponent_, b.exponent_);
  return DyadicRational(
      add_checked(shift_left_checked(a.numerator_, e - a.exponent_),
                  shift_left_checked(b.numerator_, e - b.exponent_)),
      e);
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
  return a + (-b);
}

std::strong_ordering DyadicRational::operator<=>(
    const DyadicRational& other) const {
  const std::uint32_t e = std::max(exponent_, other.exponent_);
  return shift_left_checked(numerator_, e - exponent_) <=>
         shift_left_checked(other.numerator_, e - other.exponent_);
}

std::string DyadicRational::to_string() const {
  if (exponent_ == 0) return std::to_string(numerator_);
  return std::to_string(numerator_) + "/2^" + std::to_string(exponent_);
}

std::ostream& operator<<(std::ostream& os, const DyadicRational& x) {
  return os << x.to_string();
}

DyadicRational abs(const DyadicRational& x) {
  return x.numerator() < 0 ? -x : x;
}

DyadicRational nearest_int_distance(const DyadicRational& x) {
  const std::uint32_t e = x.exponent();
  if (e == 0) return DyadicRational(0);
  if (e >= 62) throw std::overflow_error("dyadic: exponent too large");
  // x = floor + frac / 2^e with 0 < frac < 2^e.
  const std::int64_t one = std::int64_t{1} << e;
  const std::int64_t frac = x.numerator() - x.floor() * one;
  return DyadicRational(std::min(frac, one - frac), e);
}

}  // namespace treebal
