#include "arithdyn/bigint.hpp"

#include <algorithm>
#include <map>

#include "arithdyn/errors.hpp"

namespace arithdyn {

namespace {

constexpr unsigned long kTrialLimit = 100000;

BigInt pollard_rho(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    auto step = [&](const BigInt& v) {
      BigInt r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      BigInt diff = x - y;
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_rec(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    ++out[n];
    return;
  }
  BigInt d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(BigInt(n / d), out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factor(const BigInt& n) {
  if (n == 0) throw DivisionByZero("factor: zero has no factorization");
  BigInt m = abs(n);
  std::map<BigInt, unsigned> found;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      ++found[BigInt(p)];
      m /= p;
    }
  }
  if (m != 1) {
    if (m <= BigInt(kTrialLimit) * kTrialLimit) {
      ++found[m];
    } else {
      factor_rec(m, found);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : factor(n)) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

SquarefreeSplit squarefree_split(const BigInt& n) {
  SquarefreeSplit out{1, sgn(n) < 0 ? -1 : 1};
  for (const auto& [p, e] : factor(n)) {
    out.square_root *= pow(p, e / 2);
    if (e % 2 == 1) out.core *= p;
  }
  return out;
}

BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

}  // namespace arithdyn
