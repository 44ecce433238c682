#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "doctest.h"

#include "arithdyn/multipoly.hpp"
#include "arithdyn/projpoint.hpp"
#include "arithdyn/quadratic.hpp"
#include "arithdyn/rational.hpp"

namespace doctest {

template <>
struct StringMaker<arithdyn::BigRat> {
  static String convert(const arithdyn::BigRat& v) { return v.to_string().c_str(); }
};
template <>
struct StringMaker<arithdyn::QuadExtElem> {
  static String convert(const arithdyn::QuadExtElem& v) { return v.to_string().c_str(); }
};
template <>
struct StringMaker<arithdyn::MultiPoly> {
  static String convert(const arithdyn::MultiPoly& v) { return v.to_string().c_str(); }
};
template <>
struct StringMaker<arithdyn::RatPoint> {
  static String convert(const arithdyn::RatPoint& v) { return v.to_string().c_str(); }
};
template <>
struct StringMaker<arithdyn::QuadPoint> {
  static String convert(const arithdyn::QuadPoint& v) { return v.to_string().c_str(); }
};

}  // namespace doctest

namespace support {

using arithdyn::BigInt;
using arithdyn::BigRat;
using arithdyn::MultiPoly;
using arithdyn::QuadExtElem;
using arithdyn::QuadPoint;
using arithdyn::RatPoint;

inline MultiPoly var(std::string_view name) { return MultiPoly::variable(name); }
inline MultiPoly cst(long c) { return MultiPoly::constant(BigInt(c)); }
inline BigRat rat(long p, long q = 1) { return BigRat(BigInt(p), BigInt(q)); }
inline RatPoint pt(long p, long q = 1) { return RatPoint::finite(rat(p, q)); }
inline RatPoint inf() { return RatPoint::infinity(); }
inline QuadExtElem sqrt_of(long n) { return QuadExtElem::sqrt(rat(n)); }

/// Deterministic generator for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  BigRat rational(long num_max, long den_max, bool nonzero = true) {
    for (;;) {
      const long p = uniform(-num_max, num_max);
      if (nonzero && p == 0) continue;
      return rat(p, uniform(1, den_max));
    }
  }

  /// Random sparse polynomial over `vars` with up to `max_terms` terms.
  MultiPoly poly(const std::vector<std::string>& vars, int max_terms, int max_exp, long coeff_max) {
    MultiPoly p(vars);
    const int terms = static_cast<int>(uniform(1, max_terms));
    for (int t = 0; t < terms; ++t) {
      MultiPoly::Exponents e(p.vars().size());
      for (auto& x : e) x = static_cast<std::uint32_t>(uniform(0, max_exp));
      long c = 0;
      while (c == 0) c = uniform(-coeff_max, coeff_max);
      p.add_term(e, BigInt(c));
    }
    return p;
  }

  QuadExtElem quad(long d, long num_max, long den_max) {
    return QuadExtElem(rational(num_max, den_max, false), rational(num_max, den_max, false), BigInt(d));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace support
