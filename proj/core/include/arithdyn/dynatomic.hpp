#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arithdyn/multipoly.hpp"
#include "arithdyn/numbertheory.hpp"
#include "arithdyn/rational.hpp"

namespace arithdyn {

/// A concrete parameter value, or std::nullopt for a symbolic one.
using Param = std::optional<BigRat>;

/// The family [X:Y] -> [k(X^2 + bY^2) : XY], i.e. z -> kz + b/z.
///
/// Internally the map is held as an integral representative
/// [A X^2 + B Y^2 : C XY]. With symbolic parameters this is exactly
/// A = k, B = kb, C = 1; rational parameters are cleared of denominators,
/// which rescales F and G by the same constant and leaves every root alone.
class MapFamily {
 public:
  /// Throws DegenerateMap if a concrete k or b is zero.
  MapFamily(Param k, Param b);
  static MapFamily symbolic() { return {std::nullopt, std::nullopt}; }

  const Param& k() const { return k_; }
  const Param& b() const { return b_; }
  bool k_symbolic() const { return !k_.has_value(); }
  bool b_symbolic() const { return !b_.has_value(); }

  const MultiPoly& coeff_x2() const { return a_; }
  const MultiPoly& coeff_y2() const { return bb_; }
  const MultiPoly& coeff_xy() const { return c_; }

  /// "k=sym, b=-2" style description.
  std::string describe() const;

 private:
  Param k_;
  Param b_;
  MultiPoly a_;
  MultiPoly bb_;
  MultiPoly c_;
};

/// Iteration caps: 2^n may not exceed the budget. The symbolic budget applies
/// when k is symbolic.
struct Limits {
  std::uint64_t symbolic_degree_budget = 1U << 7;
  std::uint64_t concrete_degree_budget = 1U << 10;

  /// Limits with the symbolic budget taken from DYNA_TERM_BUDGET when set.
  static Limits from_environment();
};

struct IteratePair {
  MultiPoly F;
  MultiPoly G;
};

struct DynatomicResult {
  unsigned n = 0;
  MultiPoly Fn;
  MultiPoly Gn;
  MultiPoly Phi_n;
  MultiPoly PhiStar_n;
  MultiPoly psi_n;
  std::uint32_t nu2 = 0;
  /// Coefficient of z^nu2 in PhiStar_n(z, 1), possibly zero.
  MultiPoly lead;
  /// Constant term of PhiStar_n(z, 1).
  MultiPoly constant;
};

struct LeadConst {
  MultiPoly lead;
  MultiPoly constant;
};

/// Caches iterates, period polynomials and dynatomic polynomials of one map.
/// Not thread-safe; use one engine per thread.
class DynatomicEngine {
 public:
  explicit DynatomicEngine(MapFamily family, Limits limits = {});

  const MapFamily& family() const { return family_; }

  /// (F_n, G_n) from F_1 = A X^2 + B Y^2, G_1 = C XY and
  /// F_n = A F_{n-1}^2 + B G_{n-1}^2, G_n = C F_{n-1} G_{n-1}.
  const IteratePair& iterate(unsigned n);
  /// Y F_n - X G_n.
  const MultiPoly& period(unsigned n);
  /// prod_{d | n} period(d)^mu(n/d), via one exact division.
  const MultiPoly& dynatomic(unsigned n);
  /// PhiStar_n(z, 1) with z^2 replaced by w.
  MultiPoly psi(unsigned n);
  LeadConst lead_const(unsigned n);
  DynatomicResult result(unsigned n);

 private:
  void check_budget(unsigned n) const;

  MapFamily family_;
  Limits limits_;
  std::vector<IteratePair> iterates_;
  std::map<unsigned, MultiPoly> periods_;
  std::map<unsigned, MultiPoly> dynatomics_;
};

IteratePair iterate_pair(const MapFamily& fam, unsigned n, const Limits& limits = {});
MultiPoly period_poly(const MapFamily& fam, unsigned n, const Limits& limits = {});
DynatomicResult dynatomic_poly(const MapFamily& fam, unsigned n, const Limits& limits = {});
MultiPoly psi_poly(const MapFamily& fam, unsigned n, const Limits& limits = {});
LeadConst lead_const(const MapFamily& fam, unsigned n, const Limits& limits = {});

/// Emits PhiStar_n in the polynomial JSON form extended with
/// "n", "nu2", "lead" and "const".
std::string dynatomic_to_json(const DynatomicResult& r);

// ---------------------------------------------------------------------------
// Checks of the structural facts about PhiStar_n for this family.

/// Content and extreme coefficients of PhiStar_n (symbolic k and b, n >= 2).
struct ContentReport {
  unsigned n = 0;
  std::uint32_t nu2 = 0;
  MultiPoly x_coeff;         // coefficient of X^nu2
  MultiPoly y_coeff;         // coefficient of Y^nu2
  std::uint32_t x_k_power = 0;  // e with x_coeff = k^e C_n(k)
  bool x_is_k_power_times_cyclotomic = false;
  std::uint32_t y_k_power = 0;
  std::uint32_t y_b_power = 0;
  bool y_is_k_b_monomial = false;
  std::uint32_t k_valuation = 0;
  /// Exponents predicted by the Moebius sums s1, s2, s3.
  BigInt predicted_x_k_power;
  BigInt predicted_y_k_power;
  BigInt predicted_y_b_power;

  bool clause_lead() const { return x_is_k_power_times_cyclotomic && x_k_power >= 1; }
  bool clause_trail() const { return y_is_k_b_monomial && y_k_power >= 1 && y_b_power >= 1; }
  bool clause_content() const { return k_valuation >= 1; }
  bool matches_prediction() const;
  bool passed() const { return clause_lead() && clause_trail() && clause_content(); }
};
ContentReport verify_content(DynatomicEngine& engine, unsigned n);
ContentReport verify_content(unsigned n, const Limits& limits = {});

/// Every term of PhiStar_n is c_i X^(2i) Y^(nu2-2i) b^((nu2-2i)/2). Needs
/// symbolic b; k may be symbolic or concrete.
bool verify_monomial_shape(DynatomicEngine& engine, unsigned n);
bool verify_monomial_shape(unsigned n, const Limits& limits = {});

struct KFactorReport {
  unsigned n = 0;
  std::uint32_t f_valuation = 0;
  std::uint32_t g_valuation = 0;
  BigInt a;  // predicted lower bound for f_valuation
  BigInt b;  // predicted lower bound for g_valuation

  bool passed() const { return BigInt(f_valuation) >= a && BigInt(g_valuation) >= b; }
};
KFactorReport verify_k_factorization(DynatomicEngine& engine, unsigned n);
KFactorReport verify_k_factorization(unsigned n, const Limits& limits = {});

/// Lead and constant coefficient of PhiStar_n(z, 1) for k in {1, -1}, b symbolic.
struct LeadConstCheck {
  int k = 1;
  unsigned n = 0;
  BigInt lead;                  // coefficient of z^nu2 (may be 0)
  BigInt const_coeff;           // c = const_coeff * b^const_b_power
  std::uint32_t const_b_power = 0;
  bool const_is_b_monomial = false;
  /// Values allowed by the case table: k = 1 -> {p if n = p^e, 0 if n = 1, 1};
  /// k = -1 -> {+-p if n = 2p^e, -2 if n = 1, +-1}.
  std::vector<BigInt> table_values;
  /// +-C_n(k) as a polynomial evaluation, independent of the case table.
  BigInt cyclotomic_value;

  bool lead_in_table() const;
  bool lead_matches_cyclotomic() const;
  /// c is +-b^e (k = -1) or b^e (k = 1) with e >= 0.
  bool const_ok() const;
};
LeadConstCheck verify_lead_const(DynatomicEngine& engine, unsigned n);

/// Rational roots of psi_n(w, 1) at k = 1 against the candidate set
/// {+-1} u {+-1/p if n = p^e}.
struct RootBoundReport {
  unsigned n = 0;
  std::set<BigRat> candidates;
  std::vector<BigRat> roots;

  bool roots_within_candidates() const;
};
RootBoundReport root_bound_check(DynatomicEngine& engine_k1, unsigned n);
RootBoundReport root_bound_check(unsigned n, const Limits& limits = {});

}  // namespace arithdyn
