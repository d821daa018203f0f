#include "lowgenus/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace lowgenus {

namespace {

bool is_decimal(std::string_view digits) {
  return !digits.empty() &&
         std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!is_decimal(digits)) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

}  // namespace

ExactRational::ExactRational(const BigInt& value) : value_(value) {}

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_.get_num() = numerator;
  value_.get_den() = denominator;
  value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_integer(text));
  const std::string_view den = text.substr(slash + 1);
  if (!is_decimal(den)) {
    throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
  }
  return ExactRational(parse_integer(text.substr(0, slash)), BigInt(std::string(den), 10));
}

std::string ExactRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

ExactRational ExactRational::operator-() const {
  ExactRational out;
  out.value_ = -value_;
  return out;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& value) {
  return os << value.to_string();
}

}  // namespace lowgenus
