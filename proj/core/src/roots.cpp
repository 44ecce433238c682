#include "arithdyn/roots.hpp"

#include <algorithm>
#include <set>

#include "arithdyn/errors.hpp"

namespace arithdyn {

namespace {

// s^n * f(r/s) for coefficients a[0..n].
BigInt homogeneous_value(const std::vector<BigInt>& a, const BigInt& r, const BigInt& s) {
  BigInt acc = 0;
  BigInt spow = 1;
  // Horner on the homogenized form: acc = acc*r + a_i * s^(n-i), from the top.
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = acc * r + a[i] * spow;
    spow *= s;
  }
  return acc;
}

bool divides(const BigInt& d, const BigInt& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

std::vector<BigInt> univariate_coefficients(const MultiPoly& p) {
  const MultiPoly t = p.trimmed();
  if (t.vars().size() > 1) throw std::invalid_argument("expected a univariate polynomial");
  if (t.is_zero()) return {};
  if (t.vars().empty()) return {t.constant_term()};
  std::vector<BigInt> a(t.terms().begin()->first[0] + 1, BigInt(0));
  for (const auto& [e, c] : t.terms()) a[e[0]] = c;
  return a;
}

std::vector<BigRat> rational_roots(const MultiPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("rational_roots: zero polynomial");
  std::vector<BigInt> a = univariate_coefficients(p);
  std::set<BigRat> roots;

  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) {
    roots.insert(BigRat(0));
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (a.size() <= 1) return {roots.begin(), roots.end()};

  BigInt g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (auto& c : a) c /= g;

  BigInt at_one = 0;
  BigInt at_minus_one = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    at_one += a[i];
    at_minus_one += (i % 2 == 0) ? a[i] : BigInt(-a[i]);
  }

  const auto nums = positive_divisors(a.front());
  const auto dens = positive_divisors(a.back());
  for (const auto& s : dens) {
    for (const auto& r0 : nums) {
      BigInt gcd_rs;
      mpz_gcd(gcd_rs.get_mpz_t(), r0.get_mpz_t(), s.get_mpz_t());
      if (gcd_rs != 1) continue;
      for (int sign : {1, -1}) {
        const BigInt r = sign * r0;
        // f(1) = (s - r) g(1) and f(-1) = (-s - r) g(-1) for the integral cofactor g.
        if (!divides(BigInt(s - r), at_one) || !divides(BigInt(s + r), at_minus_one)) continue;
        if (homogeneous_value(a, r, s) == 0) roots.insert(BigRat(r, s));
      }
    }
  }
  return {roots.begin(), roots.end()};
}

BigRat evaluate_univariate(const MultiPoly& p, const BigRat& x) {
  const auto a = univariate_coefficients(p);
  BigRat acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + BigRat(a[i]);
  return acc;
}

}  // namespace arithdyn
