#include "arithdyn/numbertheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "arithdyn/errors.hpp"

namespace arithdyn {

ArithFn::ArithFn(std::uint64_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("ArithFn: n must be positive");
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) factors_.emplace_back(p, e);
  }
  if (m > 1) factors_.emplace_back(m, 1);
}

std::vector<std::uint64_t> ArithFn::divisors() const {
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, e] : factors_) {
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int ArithFn::moebius() const {
  for (const auto& [p, e] : factors_) {
    if (e > 1) return 0;
  }
  return factors_.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t ArithFn::totient() const {
  std::uint64_t t = n_;
  for (const auto& [p, e] : factors_) t = t / p * (p - 1);
  return t;
}

std::uint64_t ArithFn::prime_power_base() const {
  return factors_.size() == 1 ? factors_.front().first : 0;
}

int moebius(std::uint64_t n) { return ArithFn(n).moebius(); }
std::uint64_t totient(std::uint64_t n) { return ArithFn(n).totient(); }
std::vector<std::uint64_t> divisors(std::uint64_t n) { return ArithFn(n).divisors(); }

namespace {

BigInt two_pow(std::uint64_t e) { return pow(BigInt(2), e); }

template <class Term>
BigInt moebius_sum(std::uint64_t n, Term term) {
  BigInt s = 0;
  for (std::uint64_t d : divisors(n)) {
    const int mu = moebius(n / d);
    if (mu != 0) s += mu * term(d);
  }
  return s;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

BigInt nu2(std::uint64_t n) {
  return moebius_sum(n, [](std::uint64_t d) { return two_pow(d); });
}

std::uint32_t nu2_small(std::uint64_t n) {
  const BigInt v = nu2(n);
  if (!v.fits_uint_p() || v > BigInt(1U << 30)) {
    throw DegreeOverflow("nu2(" + std::to_string(n) + ") exceeds machine range");
  }
  return static_cast<std::uint32_t>(v.get_ui());
}

MultiPoly cyclotomic(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
  static std::shared_mutex mutex;
  static std::map<std::uint64_t, MultiPoly> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const MultiPoly k = MultiPoly::variable("k");
  MultiPoly c = k.pow(static_cast<unsigned>(n)) - MultiPoly::constant(1);
  for (std::uint64_t d : divisors(n)) {
    if (d < n) c = div_exact(c, cyclotomic(d));
  }
  std::unique_lock lock(mutex);
  return cache.try_emplace(n, std::move(c)).first->second;
}

BigInt cyclotomic_at(std::uint64_t n, int x) {
  if (n == 0) throw std::invalid_argument("cyclotomic_at: n must be positive");
  if (x == 1) {
    if (n == 1) return 0;
    const std::uint64_t p = ArithFn(n).prime_power_base();
    return p != 0 ? BigInt(p) : BigInt(1);
  }
  if (x == -1) {
    if (n == 1) return -2;
    if (n == 2) return 0;
    if (n % 2 == 0) {
      const std::uint64_t p = ArithFn(n / 2).prime_power_base();
      if (p != 0) return p;
    }
    return 1;
  }
  throw std::invalid_argument("cyclotomic_at: x must be 1 or -1");
}

KExponents k_exponents(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("k_exponents: n must be positive");
  const BigInt sign = (n % 2 == 0) ? 1 : -1;
  BigInt a = (two_pow(n) - sign) / 3;
  BigInt b = ceil_div(BigInt(2 * (two_pow(n - 1) - 1)), BigInt(3));
  return {std::move(a), std::move(b)};
}

PositivitySums positivity_sums(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("positivity_sums: n must be at least 2");
  PositivitySums s;
  s.s1 = moebius_sum(n, [](std::uint64_t d) { return BigInt(two_pow(d) - d - 1); });
  s.s2 = moebius_sum(n, [](std::uint64_t d) { return BigInt(two_pow(d) - 1); });
  s.s3 = moebius_sum(n, [](std::uint64_t d) { return two_pow(d - 1); });
  s.s4 = moebius_sum(n, [](std::uint64_t d) { return k_exponents(d).b; });
  return s;
}

}  // namespace arithdyn
