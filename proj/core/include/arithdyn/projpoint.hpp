#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

#include "arithdyn/quadratic.hpp"
#include "arithdyn/rational.hpp"

namespace arithdyn {

/// A point of P^1 over a field whose elements are T: either the finite point
/// [z : 1] or the point at infinity [1 : 0]. Ordered with infinity first.
template <class T>
class ProjPoint {
 public:
  static ProjPoint infinity() { return ProjPoint(); }
  static ProjPoint finite(T z) { return ProjPoint(std::move(z)); }

  bool is_infinity() const { return !z_.has_value(); }
  const T& value() const {
    if (!z_) throw std::logic_error("ProjPoint: the point at infinity has no affine value");
    return *z_;
  }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend std::strong_ordering operator<=>(const ProjPoint& p, const ProjPoint& q) {
    if (p.is_infinity() || q.is_infinity()) {
      return q.is_infinity() <=> p.is_infinity();
    }
    return *p.z_ <=> *q.z_;
  }

  std::string to_string() const { return z_ ? z_->to_string() : std::string("inf"); }

 private:
  ProjPoint() = default;
  explicit ProjPoint(T z) : z_(std::move(z)) {}
  std::optional<T> z_;
};

using RatPoint = ProjPoint<BigRat>;
using QuadPoint = ProjPoint<QuadExtElem>;

/// Parses "inf" or a rational.
RatPoint parse_point(const std::string& text);

}  // namespace arithdyn
