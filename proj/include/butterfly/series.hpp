#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "butterfly/core.hpp"

namespace butterfly {

inline constexpr std::size_t kDefaultOrder = 64;

// Formal power series with exact integer coefficients, truncated below x^order.
// Binary operations truncate to the smaller order of their operands.
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t order) : coeffs_(order) {}

  Series(std::vector<Integer> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) { coeffs_.resize(order); }

  Series(std::initializer_list<long long> coeffs, std::size_t order) : coeffs_(order) {
    std::size_t i = 0;
    for (long long c : coeffs) {
      if (i == order) break;
      coeffs_[i++] = c;
    }
  }

  static Series constant(const Integer& c, std::size_t order) {
    Series s(order);
    if (order > 0) s.coeffs_[0] = c;
    return s;
  }

  // x^k
  static Series monomial(std::size_t k, std::size_t order) {
    Series s(order);
    if (k < order) s.coeffs_[k] = 1;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

  // Coefficient of x^i, i < order().
  const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
  Integer& operator[](std::size_t i) { return coeffs_.at(i); }

  Series truncated(std::size_t order) const {
    return Series(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()))), std::min(order, this->order()));
  }

  Series& operator+=(const Series& o) {
    coeffs_.resize(std::min(order(), o.order()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  Series& operator-=(const Series& o) {
    coeffs_.resize(std::min(order(), o.order()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  Series& operator*=(const Integer& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Series operator*(Series a, const Integer& c) { return a *= c; }
  friend Series operator*(const Integer& c, Series a) { return a *= c; }

  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Series out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  Series& operator*=(const Series& o) { return *this = *this * o; }

  // Multiplication by x^k.
  Series shifted(std::size_t k) const {
    Series out(order());
    for (std::size_t i = 0; i + k < order(); ++i) out.coeffs_[i + k] = coeffs_[i];
    return out;
  }

  // Every coefficient divided by c; throws ExactnessError unless all are divisible.
  Series divided_exactly(const Integer& c) const {
    if (c == 0) throw ExactnessError("division of a series by zero");
    Series out(order());
    for (std::size_t i = 0; i < order(); ++i) {
      if (coeffs_[i] % c != 0) {
        throw ExactnessError("coefficient " + std::to_string(i) + " = " + coeffs_[i].str() +
                             " is not divisible by " + c.str());
      }
      out.coeffs_[i] = coeffs_[i] / c;
    }
    return out;
  }

  Series pow(std::size_t k) const {
    Series result = constant(1, order());
    Series base = *this;
    while (k > 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return result;
  }

  // Multiplicative inverse; the constant term must be 1 or -1 for integrality.
  Series reciprocal() const {
    if (order() == 0) return *this;
    const Integer& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1) throw DomainError("reciprocal needs a unit constant term, got " + c0.str());
    Series out(order());
    out.coeffs_[0] = c0;  // 1/c0 == c0 for units
    for (std::size_t i = 1; i < order(); ++i) {
      Integer acc = 0;
      for (std::size_t j = 1; j <= i; ++j) acc += coeffs_[j] * out.coeffs_[i - j];
      out.coeffs_[i] = -acc * c0;
    }
    return out;
  }

  // this(inner(x)); inner must have zero constant term.
  Series compose(const Series& inner) const {
    if (inner.order() > 0 && inner.coeffs_[0] != 0) {
      throw DomainError("composition needs an inner series with zero constant term");
    }
    const std::size_t n = std::min(order(), inner.order());
    Series out(n);
    for (std::size_t i = n; i-- > 0;) {  // Horner
      out = out * inner.truncated(n);
      out.coeffs_[0] += coeffs_[i];
    }
    return out;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Integer> coeffs_;
};

inline Series operator/(const Series& a, const Series& b) { return a * b.reciprocal(); }

// "c0,c1,..." in decimal.
inline std::string to_string(const Series& s) {
  std::string out;
  for (std::size_t i = 0; i < s.order(); ++i) {
    if (i != 0) out += ',';
    out += s[i].str();
  }
  return out;
}

// JSON array of decimal strings.
inline nlohmann::json to_json(const Series& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : s.coefficients()) out.push_back(c.str());
  return out;
}

// ---------------------------------------------------------------------------
// Named series

namespace detail {
inline Series catalan_series(std::size_t order) {
  Series c(order);
  if (order == 0) return c;
  c[0] = 1;
  for (std::size_t n = 0; n + 1 < order; ++n) {  // c_{n+1} = sum_i c_i c_{n-i}
    Integer acc = 0;
    for (std::size_t i = 0; i <= n; ++i) acc += c[i] * c[n - i];
    c[n + 1] = acc;
  }
  return c;
}

inline Series central_binomial_series(std::size_t order) {
  Series b(order);
  Integer value = 1;
  for (std::size_t n = 0; n < order; ++n) {
    b[n] = value;  // binom(2n+2, n+1) = binom(2n, n) * (2n+1)(2n+2) / (n+1)^2
    value = value * (2 * n + 1) * (2 * n + 2) / ((n + 1) * (n + 1));
  }
  return b;
}

// Fixed point of S = 1 + xS + xS^2; iteration i fixes coefficient i.
inline Series schroder_series(std::size_t order) {
  Series s = Series::constant(1, order);
  const Series one = Series::constant(1, order);
  for (std::size_t i = 0; i < order; ++i) {
    Series next = one + s.shifted(1) + (s * s).shifted(1);
    if (next == s) break;
    s = std::move(next);
  }
  return s;
}
}  // namespace detail

inline const std::vector<std::string>& series_names() {
  static const std::vector<std::string> names = {
      "C", "B", "S", "L", "Lstar", "chains", "chains_leaf", "chains_total_alt", "chain_size_total", "Lsq",
      "one", "x", "ones", "naturals"};
  return names;
}

// C Catalan, B central binomials, S large Schroder, Lstar = B/C, L = (B-1)/2,
// chains = C/(1-2xC^2), chains_leaf = 1/(1-2xC^2), chains_total_alt = 2B/(3-B) = B/(1-L),
// chain_size_total = 4B/(3-B)^2 = B/(1-L)^2, Lsq = L^2.
// Helpers for Riordan arrays: one = 1, x = x, ones = 1/(1-x), naturals = 1/(1-x)^2.
inline Series named_series(std::string_view name, std::size_t order = kDefaultOrder) {
  if (order == 0) throw DomainError("series order must be at least 1");
  const auto one = [&] { return Series::constant(1, order); };
  const auto C = [&] { return detail::catalan_series(order); };
  const auto B = [&] { return detail::central_binomial_series(order); };
  const auto L = [&] { return (B() - one()).divided_exactly(2); };
  if (name == "C") return C();
  if (name == "B") return B();
  if (name == "S") return detail::schroder_series(order);
  if (name == "Lstar") return B() / C();
  if (name == "L") return L();
  if (name == "Lsq") return L().pow(2);
  if (name == "chains") {
    const Series c = C();
    return c / (one() - Integer(2) * (c * c).shifted(1));
  }
  if (name == "chains_leaf") {
    const Series c = C();
    return one() / (one() - Integer(2) * (c * c).shifted(1));
  }
  if (name == "chains_total_alt") return B() / (one() - L());
  if (name == "chain_size_total") return B() / (one() - L()).pow(2);
  if (name == "one") return one();
  if (name == "x") return Series::monomial(1, order);
  if (name == "ones") return one() / (one() - Series::monomial(1, order));
  if (name == "naturals") return one() / (one() - Series::monomial(1, order)).pow(2);
  throw DomainError("unknown series name '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Riordan arrays

// Infinite lower-triangular array with entry (i, j) = [x^i] g f^j.
class RiordanArray {
 public:
  RiordanArray(Series g, Series f) : g_(std::move(g)), f_(std::move(f)) {
    if (g_.order() == 0 || g_[0] == 0) throw DomainError("Riordan g needs a nonzero constant term");
    if (f_.order() < 2 || f_[0] != 0 || f_[1] == 0) {
      throw DomainError("Riordan f needs zero constant term and nonzero linear term");
    }
  }

  const Series& g() const noexcept { return g_; }
  const Series& f() const noexcept { return f_; }
  std::size_t order() const noexcept { return std::min(g_.order(), f_.order()); }

  Integer entry(std::size_t i, std::size_t j) const {
    if (i >= order()) throw DomainError("row " + std::to_string(i) + " beyond series order");
    if (j > i) return 0;
    return (g_ * f_.pow(j))[i];
  }

  // Rows 0..rows-1, each of length i + 1.
  std::vector<std::vector<Integer>> rows(std::size_t rows) const {
    if (rows > order()) throw DomainError("requested rows beyond series order");
    std::vector<std::vector<Integer>> out(rows);
    Series column = g_.truncated(rows);
    const Series f = f_.truncated(rows);
    for (std::size_t j = 0; j < rows; ++j) {
      for (std::size_t i = j; i < rows; ++i) out[i].push_back(column[i]);
      column *= f;
    }
    return out;
  }

  // Column vector a multiplied by the array, as the series g * a(f).
  Series apply(const Series& a, std::size_t order) const {
    const std::size_t n = std::min({order, this->order(), a.order()});
    return g_.truncated(n) * a.truncated(n).compose(f_.truncated(n));
  }

 private:
  Series g_;
  Series f_;
};

inline nlohmann::json to_json(const std::vector<std::vector<Integer>>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.str());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace butterfly
