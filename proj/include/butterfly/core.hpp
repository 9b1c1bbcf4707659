#pragma once

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace butterfly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Malformed text input; offset is the 0-based character position of the fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Argument outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exhaustive enumeration requested beyond the configured size cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An exact division or rational clearing that should have been integral was not.
class ExactnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caps on n for exhaustive streams. BUTTERFLY_MAX_N, when set, replaces all three.
struct Limits {
  std::size_t trees = 14;
  std::size_t paths = 10;
  std::size_t chains = 8;

  static Limits from_env() {
    Limits limits;
    if (const char* raw = std::getenv("BUTTERFLY_MAX_N"); raw != nullptr && *raw != '\0') {
      char* end = nullptr;
      const unsigned long long value = std::strtoull(raw, &end, 10);
      if (end != nullptr && *end == '\0') {
        limits.trees = limits.paths = limits.chains = static_cast<std::size_t>(value);
      }
    }
    return limits;
  }
};

inline void check_capacity(std::size_t n, std::size_t max_n, const char* what) {
  if (n > max_n) {
    throw CapacityError(std::string(what) + ": n = " + std::to_string(n) +
                        " exceeds the exhaustive limit " + std::to_string(max_n));
  }
}

// Integral value of q, or ExactnessError if q has a nontrivial denominator.
inline Integer to_integer_exact(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw ExactnessError("rational value " + q.str() + " is not an integer");
  }
  return boost::multiprecision::numerator(q);
}

}  // namespace butterfly
