#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational values used by every recursion in the library.
 *
 * ExactRational is kept in canonical form at all times: the denominator is
 * positive and coprime to the numerator, and zero is 0/1.  Two values are
 * equal exactly when their canonical forms are equal.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lowgenus {

using BigInt = mpz_class;

class ExactRational {
 public:
  ExactRational() = default;

  template <std::integral T>
  ExactRational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  ExactRational(const BigInt& value);  // NOLINT(google-explicit-constructor)

  // Throws std::domain_error when denominator is zero.
  ExactRational(const BigInt& numerator, const BigInt& denominator);

  // Accepts "p" or "p/q" with optional leading '-'; throws std::invalid_argument.
  static ExactRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // "p" when the denominator is 1, "p/q" otherwise.
  std::string to_string() const;

  ExactRational operator-() const;
  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  // Throws std::domain_error on division by zero.
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRational& value);

}  // namespace lowgenus
