#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "arithdyn/bigint.hpp"

namespace arithdyn {

/// Exact rational number, always in lowest terms with a positive denominator.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& num, const BigInt& den);

  /// Parses "p", "-p", "p/q". Throws ParseError on malformed input and
  /// DivisionByZero on a zero denominator.
  static BigRat parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  BigRat operator-() const;
  BigRat& operator+=(const BigRat& o);
  BigRat& operator-=(const BigRat& o);
  BigRat& operator*=(const BigRat& o);
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  BigRat pow(long exp) const;
  BigRat abs() const;
  BigRat inverse() const;

  /// "p/q", with "/q" omitted when q = 1.
  std::string to_string() const;

  const mpq_class& raw() const { return q_; }

 private:
  explicit BigRat(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

/// Non-negative rational square root if q is a square in Q.
std::optional<BigRat> rational_sqrt(const BigRat& q);

}  // namespace arithdyn
