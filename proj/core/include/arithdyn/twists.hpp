#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arithdyn/projpoint.hpp"
#include "arithdyn/quadratic.hpp"

namespace arithdyn {

/// Homogeneous form sum_i coeff(i) X^i Y^(degree - i) over Q(sqrt d).
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<QuadExtElem> coeffs);
  static BinaryForm zero(unsigned degree);
  /// a X + b Y
  static BinaryForm linear(const QuadExtElem& a, const QuadExtElem& b);

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const QuadExtElem& coeff(unsigned i) const { return coeffs_.at(i); }
  const std::vector<QuadExtElem>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// Value at [x : y].
  QuadExtElem evaluate(const QuadExtElem& x, const QuadExtElem& y) const;
  /// F(a X + b Y, c X + d Y).
  BinaryForm substitute(const QuadExtElem& a, const QuadExtElem& b, const QuadExtElem& c,
                        const QuadExtElem& d) const;

  friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator*(const QuadExtElem& s, const BinaryForm& f);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

  /// Dehomogenized text in z, e.g. "z^2 + -2".
  std::string to_string() const;

 private:
  std::vector<QuadExtElem> coeffs_{QuadExtElem()};
};

/// Resultant of two binary forms (Sylvester determinant with formal degrees);
/// nonzero iff they have no common zero in P^1.
QuadExtElem resultant(const BinaryForm& f, const BinaryForm& g);

/// Invertible 2x2 matrix over Q(sqrt d) modulo scalars, acting by
/// z -> (a11 z + a12)/(a21 z + a22). Stored with its first nonzero entry
/// (row-major) scaled to 1.
class Moebius2 {
 public:
  /// Throws SingularMatrix if the determinant vanishes.
  Moebius2(const QuadExtElem& a11, const QuadExtElem& a12, const QuadExtElem& a21,
           const QuadExtElem& a22);
  static Moebius2 identity() { return {1, 0, 0, 1}; }
  /// z -> s z
  static Moebius2 scaling(const QuadExtElem& s) { return {s, 0, 0, 1}; }

  const QuadExtElem& a11() const { return e_[0]; }
  const QuadExtElem& a12() const { return e_[1]; }
  const QuadExtElem& a21() const { return e_[2]; }
  const QuadExtElem& a22() const { return e_[3]; }
  QuadExtElem det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

  Moebius2 inverse() const;
  /// Entrywise Galois conjugation sqrt(d) -> -sqrt(d).
  Moebius2 galois_conjugate() const;
  /// (g * f)(z) = g(f(z)).
  friend Moebius2 operator*(const Moebius2& g, const Moebius2& f);
  friend bool operator==(const Moebius2&, const Moebius2&) = default;

  QuadPoint apply(const QuadPoint& p) const;
  /// d of the field generated by the normalized entries; 1 if all are rational.
  BigInt field() const;

  std::string to_string() const;
  /// {"a11": {"a": "p/q", "c": "p/q", "d": int}, ...}
  std::string to_json() const;

 private:
  std::array<QuadExtElem, 4> e_;
};

/// A morphism [F : G] of P^1 with F, G forms of equal degree >= 1 and no
/// common zero.
class RationalMap1 {
 public:
  /// Throws DegenerateMap if the degrees differ, are zero, or Res(F, G) = 0.
  RationalMap1(BinaryForm F, BinaryForm G);
  /// [k X^2 + kb Y^2 : XY], i.e. z -> kz + b/z.
  static RationalMap1 family(const BigRat& k, const BigRat& b);

  const BinaryForm& F() const { return F_; }
  const BinaryForm& G() const { return G_; }
  unsigned degree() const { return F_.degree(); }

  QuadPoint apply(const QuadPoint& p) const;

  /// Equal as maps of P^1: F1 G2 = F2 G1.
  friend bool operator==(const RationalMap1& a, const RationalMap1& b);

  std::string to_string() const;

 private:
  BinaryForm F_;
  BinaryForm G_;
};

/// phi^f = f o phi o f^-1.
RationalMap1 conjugate(const RationalMap1& phi, const Moebius2& f);
bool is_automorphism(const RationalMap1& phi, const Moebius2& f);

std::optional<unsigned> exact_period(const RationalMap1& phi, const QuadPoint& p,
                                     unsigned max_period);
/// True if phi^n(P) = phi^m(P) for some max_steps >= n > m >= 0.
bool is_preperiodic(const RationalMap1& phi, const QuadPoint& p, unsigned max_steps);

struct TwistConjugator {
  Moebius2 f;
  BigInt d;         // squarefree part of b (1 when b is a square)
  unsigned degree;  // [Q(entries of f) : Q]
};

/// f(z) = sqrt(b) z, which carries z -> kz + 1/z to z -> kz + b/z.
/// Throws DegenerateMap for b = 0.
TwistConjugator twist_conjugator(const BigRat& b, const BigRat& k = BigRat(1));

struct FieldDegreeReport {
  unsigned degree = 0;
  /// Verified automorphisms of z + 1/z among {z, -z}.
  unsigned automorphism_witnesses = 0;
  /// For degree 2: f^-1 f^sigma is an automorphism, sigma the nontrivial
  /// Galois element.
  bool galois_cocycle_is_automorphism = true;

  bool passed() const {
    return degree <= automorphism_witnesses && galois_cocycle_is_automorphism;
  }
};
FieldDegreeReport field_degree_report(const BigRat& b);
bool field_degree_bound_check(const BigRat& b);

/// f(P) for each P, ascending without duplicates.
std::vector<QuadPoint> transport_points(const std::vector<QuadPoint>& points, const Moebius2& f);

}  // namespace arithdyn
