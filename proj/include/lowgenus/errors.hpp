#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lowgenus {

// Base for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDegree : public Error {
 public:
  InvalidDegree(int d, int minimum)
      : Error("invalid degree " + std::to_string(d) + " (must be >= " +
              std::to_string(minimum) + ")"),
        degree_(d) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

class InvalidGenus : public Error {
 public:
  InvalidGenus(int genus, int max_genus)
      : Error("invalid genus " + std::to_string(genus) + " (must be 0.." +
              std::to_string(max_genus) + ")") {}
};

class ZeroToNegativePower : public Error {
 public:
  explicit ZeroToNegativePower(long exponent)
      : Error("0 raised to negative power " + std::to_string(exponent)) {}
};

// Externally supplied Severi counts needed by a genus-2/3 query are absent.
class MissingInput : public Error {
 public:
  explicit MissingInput(std::vector<std::string> missing)
      : Error(describe(missing)), missing_(std::move(missing)) {}
  const std::vector<std::string>& missing() const { return missing_; }

 private:
  static std::string describe(const std::vector<std::string>& missing) {
    std::string out = "missing Severi inputs:";
    for (const auto& m : missing) out += " " + m;
    return out;
  }
  std::vector<std::string> missing_;
};

class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace lowgenus
