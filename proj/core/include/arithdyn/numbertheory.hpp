#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arithdyn/bigint.hpp"
#include "arithdyn/multipoly.hpp"

namespace arithdyn {

/// A positive integer together with its factorization (primes ascending).
class ArithFn {
 public:
  explicit ArithFn(std::uint64_t n);

  std::uint64_t n() const { return n_; }
  const std::vector<std::pair<std::uint64_t, unsigned>>& factors() const { return factors_; }

  /// Positive divisors, ascending.
  std::vector<std::uint64_t> divisors() const;
  int moebius() const;
  std::uint64_t totient() const;
  /// The prime p if n = p^e with e >= 1.
  std::uint64_t prime_power_base() const;

 private:
  std::uint64_t n_;
  std::vector<std::pair<std::uint64_t, unsigned>> factors_;
};

int moebius(std::uint64_t n);
std::uint64_t totient(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// sum_{d | n} mu(n/d) 2^d: the number of points of exact period n for a
/// generic quadratic map, counted with multiplicity.
BigInt nu2(std::uint64_t n);
/// nu2 as a machine integer; throws DegreeOverflow if it does not fit.
std::uint32_t nu2_small(std::uint64_t n);

/// The n-th cyclotomic polynomial in the variable k. Results are memoized in a
/// process-wide cache that is safe for concurrent readers.
MultiPoly cyclotomic(std::uint64_t n);

/// C_n(x) for x in {1, -1}, from the closed forms
///   C_n(1)  = 0 (n = 1), p (n = p^e), 1 otherwise;
///   C_n(-1) = -2 (n = 1), 0 (n = 2), p (n = 2 p^e), 1 otherwise.
BigInt cyclotomic_at(std::uint64_t n, int x);

/// Exponents a(n) = (2^n - (-1)^n)/3 and b(n) = ceil(2(2^(n-1) - 1)/3) of the
/// k-powers dividing the iterates F_n and G_n of [k(X^2 + bY^2) : XY].
struct KExponents {
  BigInt a;
  BigInt b;
};
KExponents k_exponents(std::uint64_t n);

/// Moebius-weighted exponent sums over d | n:
///   s1 = sum mu(n/d)(2^d - d - 1), s2 = sum mu(n/d)(2^d - 1),
///   s3 = sum mu(n/d) 2^(d-1),      s4 = sum mu(n/d) b(d).
struct PositivitySums {
  BigInt s1;
  BigInt s2;
  BigInt s3;
  BigInt s4;

  bool all_positive() const { return s1 > 0 && s2 > 0 && s3 > 0 && s4 > 0; }
};
PositivitySums positivity_sums(std::uint64_t n);

}  // namespace arithdyn
