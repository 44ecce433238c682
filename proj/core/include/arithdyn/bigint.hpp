#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace arithdyn {

using BigInt = mpz_class;

/// Prime factorization of |n| (n != 0), primes ascending with multiplicity.
/// Trial division to 10^5, then Pollard rho on the cofactor.
std::vector<std::pair<BigInt, unsigned>> factor(const BigInt& n);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<BigInt> positive_divisors(const BigInt& n);

/// Writes n = s^2 * d with d squarefree and sign(d) = sign(n). n != 0.
struct SquarefreeSplit {
  BigInt square_root;  // s >= 1
  BigInt core;         // d, squarefree
};
SquarefreeSplit squarefree_split(const BigInt& n);

BigInt pow(const BigInt& base, unsigned long exp);

std::string to_string(const BigInt& n);

}  // namespace arithdyn
