#include "arithdyn/twists.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "arithdyn/errors.hpp"

namespace arithdyn {

// ---- BinaryForm ----

BinaryForm::BinaryForm(std::vector<QuadExtElem> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back();
}

BinaryForm BinaryForm::zero(unsigned degree) {
  return BinaryForm(std::vector<QuadExtElem>(degree + 1));
}

BinaryForm BinaryForm::linear(const QuadExtElem& a, const QuadExtElem& b) {
  return BinaryForm({b, a});
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const QuadExtElem& c) { return c.is_zero(); });
}

QuadExtElem BinaryForm::evaluate(const QuadExtElem& x, const QuadExtElem& y) const {
  // Homogeneous Horner: sum_i c_i x^i y^(n-i).
  QuadExtElem acc;
  QuadExtElem ypow(1);
  std::vector<QuadExtElem> ypows(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    ypows[i] = ypow;
    ypow *= y;
  }
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i] * ypows[coeffs_.size() - 1 - i];
  }
  return acc;
}

BinaryForm BinaryForm::substitute(const QuadExtElem& a, const QuadExtElem& b,
                                  const QuadExtElem& c, const QuadExtElem& d) const {
  const BinaryForm x = linear(a, b);
  const BinaryForm y = linear(c, d);
  const unsigned n = degree();
  std::vector<BinaryForm> xp{BinaryForm({QuadExtElem(1)})};
  std::vector<BinaryForm> yp{BinaryForm({QuadExtElem(1)})};
  for (unsigned i = 0; i < n; ++i) {
    xp.push_back(xp.back() * x);
    yp.push_back(yp.back() * y);
  }
  BinaryForm out = zero(n);
  for (unsigned i = 0; i <= n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    out = out + coeffs_[i] * (xp[i] * yp[n - i]);
  }
  return out;
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) throw NotHomogeneous("BinaryForm: adding forms of different degree");
  std::vector<QuadExtElem> out(f.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeffs_[i] + g.coeffs_[i];
  return BinaryForm(std::move(out));
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) {
  return f + QuadExtElem(-1) * g;
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
  std::vector<QuadExtElem> out(f.degree() + g.degree() + 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      if (g.coeffs_[j].is_zero()) continue;
      out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
  }
  return BinaryForm(std::move(out));
}

BinaryForm operator*(const QuadExtElem& s, const BinaryForm& f) {
  std::vector<QuadExtElem> out(f.coeffs_);
  for (auto& c : out) c = s * c;
  return BinaryForm(std::move(out));
}

std::string BinaryForm::to_string() const {
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    std::string term = coeffs_[i].to_string();
    if (!coeffs_[i].is_rational()) term = "(" + term + ")";
    if (i > 0) {
      const std::string mono = i == 1 ? "z" : "z^" + std::to_string(i);
      term = coeffs_[i] == QuadExtElem(1) ? mono : term + "*" + mono;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

QuadExtElem resultant(const BinaryForm& f, const BinaryForm& g) {
  const unsigned m = f.degree();
  const unsigned n = g.degree();
  const unsigned size = m + n;
  if (size == 0) return QuadExtElem(1);
  // Sylvester rows: n shifts of f, m shifts of g, coefficients by descending X power.
  std::vector<std::vector<QuadExtElem>> mat(size, std::vector<QuadExtElem>(size));
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned i = 0; i <= m; ++i) mat[r][r + i] = f.coeff(m - i);
  }
  for (unsigned r = 0; r < m; ++r) {
    for (unsigned i = 0; i <= n; ++i) mat[n + r][r + i] = g.coeff(n - i);
  }
  QuadExtElem det(1);
  for (unsigned col = 0; col < size; ++col) {
    unsigned pivot = col;
    while (pivot < size && mat[pivot][col].is_zero()) ++pivot;
    if (pivot == size) return QuadExtElem();
    if (pivot != col) {
      std::swap(mat[pivot], mat[col]);
      det = -det;
    }
    det *= mat[col][col];
    const QuadExtElem inv = mat[col][col].inv();
    for (unsigned r = col + 1; r < size; ++r) {
      if (mat[r][col].is_zero()) continue;
      const QuadExtElem factor = mat[r][col] * inv;
      for (unsigned c = col; c < size; ++c) mat[r][c] -= factor * mat[col][c];
    }
  }
  return det;
}

// ---- Moebius2 ----

Moebius2::Moebius2(const QuadExtElem& a11, const QuadExtElem& a12, const QuadExtElem& a21,
                   const QuadExtElem& a22)
    : e_{a11, a12, a21, a22} {
  if (det().is_zero()) throw SingularMatrix("Moebius2: determinant is zero");
  const auto lead = std::find_if(e_.begin(), e_.end(), [](const QuadExtElem& x) { return !x.is_zero(); });
  const QuadExtElem inv = lead->inv();
  for (auto& x : e_) x = x * inv;
}

Moebius2 Moebius2::inverse() const { return {e_[3], -e_[1], -e_[2], e_[0]}; }

Moebius2 Moebius2::galois_conjugate() const {
  return {e_[0].conj(), e_[1].conj(), e_[2].conj(), e_[3].conj()};
}

Moebius2 operator*(const Moebius2& g, const Moebius2& f) {
  return {g.e_[0] * f.e_[0] + g.e_[1] * f.e_[2], g.e_[0] * f.e_[1] + g.e_[1] * f.e_[3],
          g.e_[2] * f.e_[0] + g.e_[3] * f.e_[2], g.e_[2] * f.e_[1] + g.e_[3] * f.e_[3]};
}

QuadPoint Moebius2::apply(const QuadPoint& p) const {
  if (p.is_infinity()) {
    if (e_[2].is_zero()) return QuadPoint::infinity();
    return QuadPoint::finite(e_[0] / e_[2]);
  }
  const QuadExtElem& z = p.value();
  const QuadExtElem den = e_[2] * z + e_[3];
  if (den.is_zero()) return QuadPoint::infinity();
  return QuadPoint::finite((e_[0] * z + e_[1]) / den);
}

BigInt Moebius2::field() const {
  for (const auto& x : e_) {
    if (!x.is_rational()) return x.d();
  }
  return 1;
}

std::string Moebius2::to_string() const {
  return "[[" + e_[0].to_string() + ", " + e_[1].to_string() + "], [" + e_[2].to_string() + ", " +
         e_[3].to_string() + "]]";
}

namespace {

std::string elem_json(const QuadExtElem& x) {
  return "{\"a\": \"" + x.a().to_string() + "\", \"c\": \"" + x.c().to_string() + "\", \"d\": " +
         (x.is_rational() ? std::string("1") : x.d().get_str()) + "}";
}

}  // namespace

std::string Moebius2::to_json() const {
  return "{\"a11\": " + elem_json(e_[0]) + ", \"a12\": " + elem_json(e_[1]) +
         ", \"a21\": " + elem_json(e_[2]) + ", \"a22\": " + elem_json(e_[3]) + "}";
}

// ---- RationalMap1 ----

RationalMap1::RationalMap1(BinaryForm F, BinaryForm G) : F_(std::move(F)), G_(std::move(G)) {
  if (F_.degree() != G_.degree()) throw DegenerateMap("RationalMap1: F and G differ in degree");
  if (F_.degree() == 0) throw DegenerateMap("RationalMap1: constant map");
  if (resultant(F_, G_).is_zero()) throw DegenerateMap("RationalMap1: F and G share a zero");
}

RationalMap1 RationalMap1::family(const BigRat& k, const BigRat& b) {
  if (k.is_zero() || b.is_zero()) throw DegenerateMap("family map requires k, b nonzero");
  return {BinaryForm({k * b, 0, k}), BinaryForm({0, 1, 0})};
}

QuadPoint RationalMap1::apply(const QuadPoint& p) const {
  QuadExtElem f;
  QuadExtElem g;
  if (p.is_infinity()) {
    f = F_.coeff(F_.degree());
    g = G_.coeff(G_.degree());
  } else {
    f = F_.evaluate(p.value(), 1);
    g = G_.evaluate(p.value(), 1);
  }
  if (g.is_zero()) return QuadPoint::infinity();
  return QuadPoint::finite(f / g);
}

bool operator==(const RationalMap1& a, const RationalMap1& b) {
  if (a.degree() != b.degree()) return false;
  return (a.F_ * b.G_ - b.F_ * a.G_).is_zero();
}

std::string RationalMap1::to_string() const {
  return "(" + F_.to_string() + ")/(" + G_.to_string() + ")";
}

RationalMap1 conjugate(const RationalMap1& phi, const Moebius2& f) {
  // f^-1 up to scalars is the adjugate [[a22, -a12], [-a21, a11]].
  const Moebius2 g = f.inverse();
  const BinaryForm F1 = phi.F().substitute(g.a11(), g.a12(), g.a21(), g.a22());
  const BinaryForm G1 = phi.G().substitute(g.a11(), g.a12(), g.a21(), g.a22());
  BinaryForm F2 = f.a11() * F1 + f.a12() * G1;
  BinaryForm G2 = f.a21() * F1 + f.a22() * G1;
  // Scale so the first nonzero coefficient of F (highest X power), else G, is 1.
  QuadExtElem lead;
  for (unsigned i = F2.degree() + 1; i-- > 0 && lead.is_zero();) lead = F2.coeff(i);
  for (unsigned i = G2.degree() + 1; i-- > 0 && lead.is_zero();) lead = G2.coeff(i);
  const QuadExtElem inv = lead.inv();
  return {inv * F2, inv * G2};
}

bool is_automorphism(const RationalMap1& phi, const Moebius2& f) {
  return conjugate(phi, f) == phi;
}

std::optional<unsigned> exact_period(const RationalMap1& phi, const QuadPoint& p,
                                     unsigned max_period) {
  QuadPoint q = p;
  for (unsigned n = 1; n <= max_period; ++n) {
    q = phi.apply(q);
    if (q == p) return n;
  }
  return std::nullopt;
}

bool is_preperiodic(const RationalMap1& phi, const QuadPoint& p, unsigned max_steps) {
  std::set<QuadPoint> seen{p};
  QuadPoint q = p;
  for (unsigned n = 0; n < max_steps; ++n) {
    q = phi.apply(q);
    if (!seen.insert(q).second) return true;
  }
  return false;
}

TwistConjugator twist_conjugator(const BigRat& b, const BigRat& k) {
  if (b.is_zero()) throw DegenerateMap("twist requires b != 0");
  const QuadExtElem root = QuadExtElem::sqrt(b);
  TwistConjugator out{Moebius2::scaling(root), root.is_rational() ? BigInt(1) : root.d(),
                      root.is_rational() ? 1u : 2u};
  if (!(conjugate(RationalMap1::family(k, BigRat(1)), out.f) == RationalMap1::family(k, b))) {
    throw std::logic_error("twist_conjugator: conjugation check failed");
  }
  return out;
}

FieldDegreeReport field_degree_report(const BigRat& b) {
  const RationalMap1 phi = RationalMap1::family(BigRat(1), BigRat(1));
  FieldDegreeReport report;
  const TwistConjugator t = twist_conjugator(b);
  report.degree = t.degree;
  for (const Moebius2& w : {Moebius2::identity(), Moebius2::scaling(-1)}) {
    if (is_automorphism(phi, w)) ++report.automorphism_witnesses;
  }
  if (t.degree == 2) {
    report.galois_cocycle_is_automorphism =
        is_automorphism(phi, t.f.inverse() * t.f.galois_conjugate());
  }
  return report;
}

bool field_degree_bound_check(const BigRat& b) { return field_degree_report(b).passed(); }

std::vector<QuadPoint> transport_points(const std::vector<QuadPoint>& points, const Moebius2& f) {
  std::set<QuadPoint> out;
  for (const auto& p : points) out.insert(f.apply(p));
  return {out.begin(), out.end()};
}

}  // namespace arithdyn
