#include "arithdyn/dynatomic.hpp"

#include <cstdlib>

#include <json.hpp>

#include "arithdyn/errors.hpp"
#include "arithdyn/roots.hpp"

namespace arithdyn {

namespace {

MultiPoly X() { return MultiPoly::variable("X"); }
MultiPoly Y() { return MultiPoly::variable("Y"); }
MultiPoly C(const BigInt& c) { return MultiPoly::constant(c); }

std::string param_text(const Param& p) { return p ? p->to_string() : std::string("sym"); }

nlohmann::ordered_json value_json(const MultiPoly& p) {
  const MultiPoly t = p.trimmed();
  if (t.vars().empty()) return t.constant_term().get_str();
  return nlohmann::ordered_json::parse(poly_to_json(t));
}

}  // namespace

MapFamily::MapFamily(Param k, Param b) : k_(std::move(k)), b_(std::move(b)) {
  if (k_ && k_->is_zero()) throw DegenerateMap("k = 0 does not give a degree 2 map");
  if (b_ && b_->is_zero()) throw DegenerateMap("b = 0 does not give a degree 2 map");
  const MultiPoly kv = MultiPoly::variable("k");
  const MultiPoly bv = MultiPoly::variable("b");
  // F = k (X^2 + b Y^2), G = XY, with denominators of k and b cleared.
  const MultiPoly k_num = k_ ? C(k_->num()) : kv;
  const BigInt k_den = k_ ? k_->den() : BigInt(1);
  const MultiPoly b_num = b_ ? C(b_->num()) : bv;
  const BigInt b_den = b_ ? b_->den() : BigInt(1);
  a_ = k_num * C(b_den);
  bb_ = k_num * b_num;
  c_ = C(k_den * b_den);
}

std::string MapFamily::describe() const { return "k=" + param_text(k_) + ", b=" + param_text(b_); }

Limits Limits::from_environment() {
  Limits l;
  if (const char* env = std::getenv("DYNA_TERM_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) l.symbolic_degree_budget = v;
  }
  return l;
}

DynatomicEngine::DynatomicEngine(MapFamily family, Limits limits)
    : family_(std::move(family)), limits_(limits) {}

void DynatomicEngine::check_budget(unsigned n) const {
  if (n == 0) throw std::invalid_argument("period must be at least 1");
  const std::uint64_t budget = family_.k_symbolic() ? limits_.symbolic_degree_budget
                                                    : limits_.concrete_degree_budget;
  if (n >= 63 || (std::uint64_t{1} << n) > budget) {
    throw DegreeOverflow("2^" + std::to_string(n) + " exceeds degree budget " +
                         std::to_string(budget) + " (" + family_.describe() + ")");
  }
}

const IteratePair& DynatomicEngine::iterate(unsigned n) {
  check_budget(n);
  if (iterates_.empty()) {
    iterates_.push_back({family_.coeff_x2() * X().pow(2) + family_.coeff_y2() * Y().pow(2),
                         family_.coeff_xy() * X() * Y()});
  }
  while (iterates_.size() < n) {
    const IteratePair& prev = iterates_.back();
    IteratePair next;
    next.F = family_.coeff_x2() * (prev.F * prev.F) + family_.coeff_y2() * (prev.G * prev.G);
    next.G = family_.coeff_xy() * (prev.F * prev.G);
    iterates_.push_back(std::move(next));
  }
  return iterates_[n - 1];
}

const MultiPoly& DynatomicEngine::period(unsigned n) {
  if (auto it = periods_.find(n); it != periods_.end()) return it->second;
  const IteratePair& it = iterate(n);
  return periods_.emplace(n, Y() * it.F - X() * it.G).first->second;
}

const MultiPoly& DynatomicEngine::dynatomic(unsigned n) {
  if (auto it = dynatomics_.find(n); it != dynatomics_.end()) return it->second;
  check_budget(n);
  MultiPoly num = C(1);
  MultiPoly den = C(1);
  for (std::uint64_t d : divisors(n)) {
    const int mu = moebius(n / d);
    if (mu == 1) num = num * period(static_cast<unsigned>(d));
    if (mu == -1) den = den * period(static_cast<unsigned>(d));
  }
  return dynatomics_.emplace(n, div_exact(num, den)).first->second;
}

MultiPoly DynatomicEngine::psi(unsigned n) {
  return substitute_power(dehomogenize(dynatomic(n)), "z", "w", 2);
}

LeadConst DynatomicEngine::lead_const(unsigned n) {
  const MultiPoly dehom = dehomogenize(dynatomic(n));
  return {dehom.coefficient("z", nu2_small(n)), dehom.coefficient("z", 0)};
}

DynatomicResult DynatomicEngine::result(unsigned n) {
  DynatomicResult r;
  r.n = n;
  const IteratePair& it = iterate(n);
  r.Fn = it.F;
  r.Gn = it.G;
  r.Phi_n = period(n);
  r.PhiStar_n = dynatomic(n);
  r.psi_n = psi(n);
  r.nu2 = nu2_small(n);
  LeadConst lc = lead_const(n);
  r.lead = std::move(lc.lead);
  r.constant = std::move(lc.constant);
  return r;
}

IteratePair iterate_pair(const MapFamily& fam, unsigned n, const Limits& limits) {
  return DynatomicEngine(fam, limits).iterate(n);
}

MultiPoly period_poly(const MapFamily& fam, unsigned n, const Limits& limits) {
  return DynatomicEngine(fam, limits).period(n);
}

DynatomicResult dynatomic_poly(const MapFamily& fam, unsigned n, const Limits& limits) {
  return DynatomicEngine(fam, limits).result(n);
}

MultiPoly psi_poly(const MapFamily& fam, unsigned n, const Limits& limits) {
  return DynatomicEngine(fam, limits).psi(n);
}

LeadConst lead_const(const MapFamily& fam, unsigned n, const Limits& limits) {
  return DynatomicEngine(fam, limits).lead_const(n);
}

std::string dynatomic_to_json(const DynatomicResult& r) {
  auto j = nlohmann::ordered_json::parse(poly_to_json(r.PhiStar_n));
  j["n"] = r.n;
  j["nu2"] = r.nu2;
  j["lead"] = value_json(r.lead);
  j["const"] = value_json(r.constant);
  return j.dump();
}

// ---------------------------------------------------------------------------

bool ContentReport::matches_prediction() const {
  return BigInt(x_k_power) == predicted_x_k_power && BigInt(y_k_power) == predicted_y_k_power &&
         BigInt(y_b_power) == predicted_y_b_power;
}

ContentReport verify_content(DynatomicEngine& engine, unsigned n) {
  if (n < 2) throw std::invalid_argument("verify_content: n must be at least 2");
  if (!engine.family().k_symbolic() || !engine.family().b_symbolic()) {
    throw std::invalid_argument("verify_content: needs symbolic k and b");
  }
  ContentReport r;
  r.n = n;
  r.nu2 = nu2_small(n);
  const MultiPoly& phi = engine.dynatomic(n);

  r.x_coeff = phi.coefficient("X", r.nu2).trimmed();
  if (!r.x_coeff.is_zero() && r.x_coeff.vars().size() <= 1 && r.x_coeff.index_of("Y") < 0 &&
      r.x_coeff.index_of("b") < 0) {
    r.x_k_power = var_valuation(r.x_coeff, "k");
    try {
      const MultiPoly rest =
          div_exact(r.x_coeff, MultiPoly::variable("k").pow(r.x_k_power));
      r.x_is_k_power_times_cyclotomic = rest == cyclotomic(n);
    } catch (const NonExactDivision&) {
      r.x_is_k_power_times_cyclotomic = false;
    }
  }

  r.y_coeff = phi.coefficient("Y", r.nu2).trimmed();
  if (r.y_coeff.size() == 1 && r.y_coeff.terms().begin()->second == 1 &&
      r.y_coeff.index_of("X") < 0) {
    r.y_is_k_b_monomial = true;
    r.y_k_power = r.y_coeff.degree("k");
    r.y_b_power = r.y_coeff.degree("b");
  }

  r.k_valuation = var_valuation(phi, "k");

  const PositivitySums s = positivity_sums(n);
  r.predicted_x_k_power = s.s1;
  r.predicted_y_k_power = s.s2;
  r.predicted_y_b_power = s.s3;
  return r;
}

ContentReport verify_content(unsigned n, const Limits& limits) {
  DynatomicEngine engine(MapFamily::symbolic(), limits);
  return verify_content(engine, n);
}

bool verify_monomial_shape(DynatomicEngine& engine, unsigned n) {
  if (n < 2) throw std::invalid_argument("verify_monomial_shape: n must be at least 2");
  if (!engine.family().b_symbolic()) {
    throw std::invalid_argument("verify_monomial_shape: needs symbolic b");
  }
  const std::uint32_t nu = nu2_small(n);
  const MultiPoly& phi = engine.dynatomic(n);
  const int ix = phi.index_of("X");
  const int iy = phi.index_of("Y");
  const int ib = phi.index_of("b");
  for (const auto& [e, c] : phi.terms()) {
    const std::uint32_t x = ix < 0 ? 0 : e[ix];
    const std::uint32_t y = iy < 0 ? 0 : e[iy];
    const std::uint32_t bexp = ib < 0 ? 0 : e[ib];
    if (x % 2 != 0 || x + y != nu || 2 * bexp != nu - x) return false;
  }
  return true;
}

bool verify_monomial_shape(unsigned n, const Limits& limits) {
  DynatomicEngine engine(MapFamily::symbolic(), limits);
  return verify_monomial_shape(engine, n);
}

KFactorReport verify_k_factorization(DynatomicEngine& engine, unsigned n) {
  if (!engine.family().k_symbolic()) {
    throw std::invalid_argument("verify_k_factorization: needs symbolic k");
  }
  const IteratePair& it = engine.iterate(n);
  const KExponents ab = k_exponents(n);
  return {n, var_valuation(it.F, "k"), var_valuation(it.G, "k"), ab.a, ab.b};
}

KFactorReport verify_k_factorization(unsigned n, const Limits& limits) {
  DynatomicEngine engine(MapFamily::symbolic(), limits);
  return verify_k_factorization(engine, n);
}

bool LeadConstCheck::lead_in_table() const {
  return std::find(table_values.begin(), table_values.end(), lead) != table_values.end();
}

bool LeadConstCheck::lead_matches_cyclotomic() const {
  return k == 1 ? lead == cyclotomic_value : abs(lead) == abs(cyclotomic_value);
}

bool LeadConstCheck::const_ok() const {
  if (!const_is_b_monomial) return false;
  return k == 1 ? const_coeff == 1 : abs(const_coeff) == 1;
}

LeadConstCheck verify_lead_const(DynatomicEngine& engine, unsigned n) {
  const MapFamily& fam = engine.family();
  if (!fam.k() || !fam.b_symbolic() || (*fam.k() != BigRat(1) && *fam.k() != BigRat(-1))) {
    throw std::invalid_argument("verify_lead_const: needs k = +-1 and symbolic b");
  }
  LeadConstCheck r;
  r.k = *fam.k() == BigRat(1) ? 1 : -1;
  r.n = n;
  const LeadConst lc = engine.lead_const(n);
  const MultiPoly lead = lc.lead.trimmed();
  if (!lead.vars().empty()) throw std::logic_error("lead coefficient depends on b");
  r.lead = lead.constant_term();

  const MultiPoly c = lc.constant.trimmed();
  if (c.size() == 1 && (c.vars().empty() || (c.vars().size() == 1 && c.vars()[0] == "b"))) {
    r.const_is_b_monomial = true;
    r.const_coeff = c.terms().begin()->second;
    r.const_b_power = c.degree("b");
  }

  const ArithFn arith(n);
  if (r.k == 1) {
    if (n == 1) {
      r.table_values = {0};
    } else if (const auto p = arith.prime_power_base(); p != 0) {
      r.table_values = {BigInt(p)};
    } else {
      r.table_values = {1};
    }
  } else {
    const std::uint64_t half_base = n % 2 == 0 && n > 2 ? ArithFn(n / 2).prime_power_base() : 0;
    if (n == 1) {
      r.table_values = {-2};
    } else if (half_base != 0) {
      r.table_values = {BigInt(half_base), BigInt(-static_cast<long>(half_base))};
    } else {
      r.table_values = {1, -1};
    }
  }
  r.cyclotomic_value = evaluate(cyclotomic(n), {{"k", BigRat(r.k)}}).value().num();
  return r;
}

bool RootBoundReport::roots_within_candidates() const {
  for (const auto& r : roots) {
    if (candidates.count(r) == 0) return false;
  }
  return true;
}

RootBoundReport root_bound_check(DynatomicEngine& engine_k1, unsigned n) {
  const MapFamily& fam = engine_k1.family();
  if (!fam.k() || *fam.k() != BigRat(1) || !fam.b_symbolic()) {
    throw std::invalid_argument("root_bound_check: needs k = 1 and symbolic b");
  }
  if (n < 2) throw std::invalid_argument("root_bound_check: n must be at least 2");
  RootBoundReport r;
  r.n = n;
  r.candidates = {BigRat(1), BigRat(-1)};
  if (const auto p = ArithFn(n).prime_power_base(); p != 0) {
    r.candidates.insert(BigRat(1, p));
    r.candidates.insert(BigRat(-1, p));
  }
  const MultiPoly psi_at_one = evaluate_integer(engine_k1.psi(n), {{"b", BigInt(1)}});
  r.roots = rational_roots(psi_at_one);
  return r;
}

RootBoundReport root_bound_check(unsigned n, const Limits& limits) {
  DynatomicEngine engine(MapFamily(BigRat(1), std::nullopt), limits);
  return root_bound_check(engine, n);
}

}  // namespace arithdyn
