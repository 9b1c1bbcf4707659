#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "butterfly/core.hpp"
#include "butterfly/series.hpp"

namespace butterfly {

inline Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

inline Integer catalan(std::size_t n) { return binomial(2 * n, n) / (n + 1); }

inline Integer central_binomial(std::size_t n) { return binomial(2 * n, n); }

// Plane trees with n edges and i leaves.
inline Integer narayana(std::size_t n, std::size_t i) {
  if (n == 0) throw DomainError("narayana(n, i) needs n >= 1");
  if (i > n) throw DomainError("narayana(n, i) needs i <= n");
  if (i == 0) return 0;
  return to_integer_exact(Rational(binomial(n, i) * binomial(n, i - 1), n));
}

// [x^n] C^k = k/(2n+k) * binom(2n+k, n); [x^0] C^0 = 1 and [x^n] C^0 = 0 otherwise.
inline Integer coeff_C_pow(std::size_t n, std::size_t k) {
  if (k == 0) return n == 0 ? 1 : 0;
  return to_integer_exact(Rational(Integer(k) * binomial(2 * n + k, n), 2 * n + k));
}

// a(n, k) = [x^n] S^k, by the Lagrange-inversion sum; a(0, k) = 1.
inline Integer a_nk(std::size_t n, std::size_t k) {
  if (k == 0) throw DomainError("a(n, k) needs k >= 1");
  if (n == 0) return 1;
  Integer sum = 0;
  Integer pow2 = 2;
  for (std::size_t i = 0; i < n; ++i) {
    sum += pow2 * binomial(n + k - 1, i) * binomial(n, i + 1);
    pow2 *= 2;
  }
  return to_integer_exact(Rational(Integer(k) * sum, n));
}

inline Integer schroder_number(std::size_t n) { return a_nk(n, 1); }

namespace detail {
inline void require_block_range(std::size_t n, std::size_t m, std::size_t k) {
  if (!(0 < k && k <= m && m <= n)) {
    throw DomainError("need 0 < k <= m <= n, got n = " + std::to_string(n) + ", m = " + std::to_string(m) +
                      ", k = " + std::to_string(k));
  }
}
}  // namespace detail

// Free Dyck paths of semilength n with m flaws in k flaw blocks.
inline Integer flaw_block_count_dyck(std::size_t n, std::size_t m, std::size_t k) {
  detail::require_block_range(n, m, k);
  const Rational below = Rational(Integer(k), 2 * m - k) * binomial(2 * m - k, m);
  const Rational above = Rational(Integer(k + 1), 2 * n - 2 * m + k + 1) * binomial(2 * n - 2 * m + k + 1, n - m);
  return to_integer_exact(below * above);
}

// Dyck paths of semilength n with k returns to the axis.
inline Integer dyck_returns_count(std::size_t n, std::size_t k) {
  if (!(0 < k && k <= n)) throw DomainError("need 0 < k <= n");
  return to_integer_exact(Rational(Integer(k), 2 * n - k) * binomial(2 * n - k, n));
}

// Total weight of free Schroder paths of semilength n with m flaws in k flaw blocks, where a
// path ending in an up step weighs 2 and any other path weighs 1.
inline Integer flaw_block_weight_schroder(std::size_t n, std::size_t m, std::size_t k) {
  detail::require_block_range(n, m, k);
  return a_nk(m - k, k) * (a_nk(n - m, k + 1) + a_nk(n - m, k));
}

// Free Schroder paths of semilength n, summed over the number i of horizontal steps.
inline Integer free_schroder_count(std::size_t n) {
  Integer total = 0;
  for (std::size_t i = 0; i <= n; ++i) total += binomial(2 * n - i, i) * binomial(2 * n - 2 * i, n - i);
  return total;
}

// Left: leaf-colored doubly rooted trees counted by leaves through Narayana numbers.
// Right: free Schroder paths counted by their number of horizontal steps.
inline std::pair<Integer, Integer> leaf_colored_drt_identity(std::size_t n) {
  if (n == 0) throw DomainError("identity check needs n >= 1");
  Integer lhs = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    lhs += Integer(2 * n + 2 - i) * (Integer(1) << (i - 1)) * narayana(n, i);
  }
  return {lhs, free_schroder_count(n)};
}

// sum_i (-1)^i (2i+1)/(2n+1) binom(2n+1, n-i); zero for every n >= 1.
inline Integer signed_block_sum_dyck(std::size_t n) {
  if (n == 0) throw DomainError("signed block sum is stated for n >= 1");
  Rational sum = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational term = Rational(Integer(2 * i + 1), 2 * n + 1) * binomial(2 * n + 1, n - i);
    sum += (i % 2 == 0) ? term : -term;
  }
  return to_integer_exact(sum);
}

// sum_i (-1)^i a(n-i, 2i+1); one for every n >= 1.
inline Integer signed_block_sum_schroder(std::size_t n) {
  if (n == 0) throw DomainError("signed block sum is stated for n >= 1");
  Integer sum = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const Integer term = a_nk(n - i, 2 * i + 1);
    sum += (i % 2 == 0) ? term : Integer(-term);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Chains

// H_n: nonempty chains over all n-edge plane trees.
inline Integer chains_count(std::size_t n) { return named_series("chains", n + 1)[n]; }

// R_n: total size of those chains.
inline Integer chains_total_size(std::size_t n) { return named_series("chain_size_total", n + 1)[n]; }

// [x^n] B ((B-1)/2)^(k-1)
inline Integer chains_of_size(std::size_t n, std::size_t k) {
  if (k == 0) throw DomainError("chain size must be at least 1");
  const Series b = named_series("B", n + 1);
  const Series l = named_series("L", n + 1);
  return (b * l.pow(k - 1))[n];
}

inline Rational average_chain_size(std::size_t n) { return Rational(chains_total_size(n), chains_count(n)); }

// Decimal rendering of q with `significant` significant digits, rounding half to even.
inline std::string format_decimal(const Rational& q, std::size_t significant = 12) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (significant == 0) throw DomainError("need at least one significant digit");
  if (q == 0) return "0";
  const bool negative = q < 0;
  const Rational a = negative ? Rational(-q) : q;
  const auto pow10 = [](long long e) {
    Rational r = 1;
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) r *= 10;
    return e < 0 ? Rational(1) / r : r;
  };
  long long e = static_cast<long long>(numerator(a).str().size()) - static_cast<long long>(denominator(a).str().size());
  while (a < pow10(e)) --e;
  while (a >= pow10(e + 1)) ++e;
  const long long sig = static_cast<long long>(significant);
  const Rational scaled = a * pow10(sig - 1 - e);
  Integer digits = numerator(scaled) / denominator(scaled);
  const Rational rem = scaled - Rational(digits);
  if (rem > Rational(1, 2) || (rem == Rational(1, 2) && digits % 2 == 1)) ++digits;
  if (Rational(digits) == pow10(sig)) {
    digits /= 10;
    ++e;
  }
  std::string s = digits.str();
  std::string out;
  if (e >= sig - 1) {
    out = s + std::string(static_cast<std::size_t>(e - (sig - 1)), '0');
  } else if (e >= 0) {
    out = s.substr(0, static_cast<std::size_t>(e + 1)) + "." + s.substr(static_cast<std::size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
  }
  return negative ? "-" + out : out;
}

struct AsymptoticReport {
  std::size_t n = 0;
  Integer chains;        // H_n
  Integer total_size;    // R_n
  Rational average;      // R_n / H_n
  Rational limit;        // (n + 9) / 6
  Rational chains_ratio; // H_n / ((1/2)(9/2)^n)
  Rational size_ratio;   // R_n / (((n + 9)/12)(9/2)^n)
};

// Ratios against H_n ~ (1/2)(9/2)^n and R_n ~ ((n+9)/12)(9/2)^n. The growth rate 9/2 is the
// reciprocal of the dominant singularity 2/9 of both series; 1/4 is the branch point of B.
inline AsymptoticReport asymptotic_report(std::size_t n) {
  if (n == 0) throw DomainError("asymptotic report needs n >= 1");
  AsymptoticReport r;
  r.n = n;
  const Series chains = named_series("chains", n + 1);
  const Series sizes = named_series("chain_size_total", n + 1);
  r.chains = chains[n];
  r.total_size = sizes[n];
  r.average = Rational(r.total_size, r.chains);
  r.limit = Rational(Integer(n + 9), 6);
  const Integer two_n = Integer(1) << n;
  Integer nine_n = 1;
  for (std::size_t i = 0; i < n; ++i) nine_n *= 9;
  r.chains_ratio = Rational(2 * r.chains * two_n, nine_n);
  r.size_ratio = Rational(12 * r.total_size * two_n, Integer(n + 9) * nine_n);
  return r;
}

}  // namespace butterfly
