#include "arithdyn/quadratic.hpp"

#include "arithdyn/errors.hpp"

namespace arithdyn {

QuadExtElem::QuadExtElem(const BigRat& a, const BigRat& c, const BigInt& d) : a_(a) {
  if (d == 0) throw std::invalid_argument("QuadExtElem: d must be nonzero");
  if (c.is_zero()) return;
  const SquarefreeSplit split = squarefree_split(d);
  const BigRat scaled = c * BigRat(split.square_root);
  if (split.core == 1) {
    a_ += scaled;
    return;
  }
  c_ = scaled;
  d_ = split.core;
}

QuadExtElem QuadExtElem::sqrt(const BigRat& q) {
  if (q.is_zero()) return {};
  // sqrt(n/m) = sqrt(n m) / m
  return QuadExtElem(BigRat(0), BigRat(1, q.den()), q.num() * q.den());
}

BigInt QuadExtElem::common_field(const QuadExtElem& x, const QuadExtElem& y) {
  if (x.is_rational()) return y.d_;
  if (y.is_rational()) return x.d_;
  if (x.d_ != y.d_) {
    throw MixedDiscriminants("Q(sqrt(" + x.d_.get_str() + ")) vs Q(sqrt(" + y.d_.get_str() + "))");
  }
  return x.d_;
}

QuadExtElem QuadExtElem::conj() const {
  QuadExtElem r = *this;
  r.c_ = -c_;
  return r;
}

BigRat QuadExtElem::norm() const { return a_ * a_ - BigRat(d_) * c_ * c_; }

QuadExtElem QuadExtElem::inv() const {
  if (is_zero()) throw DivisionByZero("QuadExtElem: inverse of zero");
  const BigRat n = norm();
  QuadExtElem r;
  r.a_ = a_ / n;
  r.c_ = -c_ / n;
  r.d_ = d_;
  return r;
}

QuadExtElem QuadExtElem::operator-() const {
  QuadExtElem r = *this;
  r.a_ = -a_;
  r.c_ = -c_;
  return r;
}

QuadExtElem operator+(const QuadExtElem& x, const QuadExtElem& y) {
  QuadExtElem r;
  r.d_ = QuadExtElem::common_field(x, y);
  r.a_ = x.a_ + y.a_;
  r.c_ = x.c_ + y.c_;
  if (r.c_.is_zero()) r.d_ = 1;
  return r;
}

QuadExtElem operator-(const QuadExtElem& x, const QuadExtElem& y) { return x + (-y); }

QuadExtElem operator*(const QuadExtElem& x, const QuadExtElem& y) {
  QuadExtElem r;
  const BigInt d = QuadExtElem::common_field(x, y);
  r.a_ = x.a_ * y.a_ + BigRat(d) * x.c_ * y.c_;
  r.c_ = x.a_ * y.c_ + x.c_ * y.a_;
  r.d_ = r.c_.is_zero() ? BigInt(1) : d;
  return r;
}

QuadExtElem operator/(const QuadExtElem& x, const QuadExtElem& y) { return x * y.inv(); }

std::strong_ordering operator<=>(const QuadExtElem& x, const QuadExtElem& y) {
  if (auto c = x.a_ <=> y.a_; c != 0) return c;
  if (auto c = x.c_ <=> y.c_; c != 0) return c;
  if (x.c_.is_zero()) return std::strong_ordering::equal;
  const int c = cmp(x.d_, y.d_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string QuadExtElem::to_string() const {
  if (is_rational()) return a_.to_string();
  const std::string root = "sqrt(" + d_.get_str() + ")";
  std::string irr;
  if (c_ == BigRat(1)) {
    irr = root;
  } else if (c_ == BigRat(-1)) {
    irr = "-" + root;
  } else {
    irr = c_.to_string() + "*" + root;
  }
  if (a_.is_zero()) return irr;
  if (c_.sign() < 0) {
    std::string pos = irr.substr(1);
    return a_.to_string() + " - " + pos;
  }
  return a_.to_string() + " + " + irr;
}

}  // namespace arithdyn
