#pragma once

#include <compare>
#include <string>

#include "arithdyn/rational.hpp"

namespace arithdyn {

/// Element a + c*sqrt(d) of Q(sqrt(d)).
///
/// Whenever c != 0, d is squarefree and different from 0 and 1. Rational
/// elements (c = 0) carry no field and combine with elements of any Q(sqrt(d));
/// their d() reports 1. Constructing with a non-squarefree d folds the square
/// part into c, and a square d collapses to a rational.
class QuadExtElem {
 public:
  QuadExtElem() = default;
  QuadExtElem(const BigRat& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExtElem(long a) : a_(a) {}           // NOLINT(google-explicit-constructor)
  QuadExtElem(const BigRat& a, const BigRat& c, const BigInt& d);

  /// sqrt(q) as an element of Q(sqrt(squarefree part of q)).
  static QuadExtElem sqrt(const BigRat& q);

  const BigRat& a() const { return a_; }
  const BigRat& c() const { return c_; }
  const BigInt& d() const { return d_; }
  bool is_rational() const { return c_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && c_.is_zero(); }

  QuadExtElem conj() const;
  /// a^2 - d c^2
  BigRat norm() const;
  QuadExtElem inv() const;

  QuadExtElem operator-() const;
  friend QuadExtElem operator+(const QuadExtElem& x, const QuadExtElem& y);
  friend QuadExtElem operator-(const QuadExtElem& x, const QuadExtElem& y);
  friend QuadExtElem operator*(const QuadExtElem& x, const QuadExtElem& y);
  friend QuadExtElem operator/(const QuadExtElem& x, const QuadExtElem& y);
  QuadExtElem& operator+=(const QuadExtElem& y) { return *this = *this + y; }
  QuadExtElem& operator-=(const QuadExtElem& y) { return *this = *this - y; }
  QuadExtElem& operator*=(const QuadExtElem& y) { return *this = *this * y; }

  friend bool operator==(const QuadExtElem& x, const QuadExtElem& y) {
    return x.a_ == y.a_ && x.c_ == y.c_ && (x.c_.is_zero() || x.d_ == y.d_);
  }
  /// Total order for use as a container key; not a field ordering.
  friend std::strong_ordering operator<=>(const QuadExtElem& x, const QuadExtElem& y);

  /// "a", "c*sqrt(d)" or "a + c*sqrt(d)".
  std::string to_string() const;

 private:
  static BigInt common_field(const QuadExtElem& x, const QuadExtElem& y);

  BigRat a_;
  BigRat c_;
  BigInt d_ = 1;
};

}  // namespace arithdyn
