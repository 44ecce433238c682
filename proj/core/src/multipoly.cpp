#include "arithdyn/multipoly.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

#include "arithdyn/errors.hpp"

namespace arithdyn {

namespace {

constexpr std::array<std::string_view, 6> kVarOrder{"X", "Y", "z", "w", "k", "b"};

int var_rank(std::string_view v) {
  for (std::size_t i = 0; i < kVarOrder.size(); ++i) {
    if (kVarOrder[i] == v) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown polynomial variable '" + std::string(v) + "'");
}

std::vector<std::string> canonical_vars(std::vector<std::string> vars) {
  for (const auto& v : vars) var_rank(v);
  std::sort(vars.begin(), vars.end(),
            [](const std::string& a, const std::string& b) { return var_rank(a) < var_rank(b); });
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
    throw std::invalid_argument("duplicate polynomial variable");
  }
  return vars;
}

std::vector<std::string> union_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> all = a;
  for (const auto& v : b) {
    if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  }
  return canonical_vars(std::move(all));
}

void accumulate(MultiPoly::TermMap& terms, const MultiPoly::Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(canonical_vars(std::move(vars))) {}

MultiPoly MultiPoly::constant(const BigInt& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(Exponents{}, c);
  return p;
}

MultiPoly MultiPoly::variable(std::string_view name) {
  MultiPoly p({std::string(name)});
  p.terms_.emplace(Exponents{1}, BigInt(1));
  return p;
}

MultiPoly MultiPoly::monomial(const BigInt& c, const std::map<std::string, std::uint32_t>& powers) {
  std::vector<std::string> vars;
  for (const auto& [v, e] : powers) vars.push_back(v);
  MultiPoly p(std::move(vars));
  Exponents exps(p.vars_.size());
  for (std::size_t i = 0; i < p.vars_.size(); ++i) exps[i] = powers.at(p.vars_[i]);
  p.add_term(exps, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

BigInt MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? BigInt(0) : it->second;
}

int MultiPoly::index_of(std::string_view var) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == var) return static_cast<int>(i);
  }
  return -1;
}

std::uint32_t MultiPoly::degree(std::string_view var) const {
  const int i = index_of(var);
  if (i < 0) return 0;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

MultiPoly MultiPoly::coefficient(std::string_view var, std::uint32_t e) const {
  const int i = index_of(var);
  std::vector<std::string> rest;
  for (const auto& v : vars_) {
    if (v != var) rest.push_back(v);
  }
  MultiPoly out(rest);
  for (const auto& [exps, c] : terms_) {
    const std::uint32_t here = i < 0 ? 0 : exps[i];
    if (here != e) continue;
    Exponents r;
    r.reserve(rest.size());
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (static_cast<int>(j) != i) r.push_back(exps[j]);
    }
    out.terms_.emplace(std::move(r), c);
  }
  return out;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  MultiPoly out(vars);
  if (out.vars_ == vars_) {
    out.terms_ = terms_;
    return out;
  }
  std::vector<int> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    where[i] = out.index_of(vars_[i]);
    if (where[i] < 0) throw std::invalid_argument("with_vars: target lacks variable " + vars_[i]);
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(out.vars_.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly MultiPoly::trimmed() const {
  std::vector<std::string> used;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const bool any = std::any_of(terms_.begin(), terms_.end(),
                                 [i](const auto& t) { return t.first[i] != 0; });
    if (any) {
      used.push_back(vars_[i]);
      keep.push_back(i);
    }
  }
  MultiPoly out(used);
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    ne.reserve(keep.size());
    for (std::size_t i : keep) ne.push_back(e[i]);
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

void MultiPoly::add_term(const Exponents& exps, const BigInt& c) {
  if (exps.size() != vars_.size()) throw std::invalid_argument("add_term: exponent arity mismatch");
  accumulate(terms_, exps, c);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (vars_ != o.vars_) {
    const auto vars = union_vars(vars_, o.vars_);
    *this = with_vars(vars);
    return *this += o.with_vars(vars);
  }
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const auto vars = union_vars(a.vars_, b.vars_);
  const MultiPoly A = a.vars_ == vars ? a : a.with_vars(vars);
  const MultiPoly B = b.vars_ == vars ? b : b.with_vars(vars);
  MultiPoly r(vars);
  MultiPoly::Exponents e(vars.size());
  for (const auto& [ea, ca] : A.terms_) {
    for (const auto& [eb, cb] : B.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = r.terms_.try_emplace(e);
      mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  std::erase_if(r.terms_, [](const auto& t) { return t.second == 0; });
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = MultiPoly::constant(1).with_vars(vars_);
  MultiPoly base = *this;
  while (e > 0) {
    if ((e & 1U) != 0) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  const auto vars = union_vars(a.vars_, b.vars_);
  return a.with_vars(vars).terms_ == b.with_vars(vars).terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << mono;
    } else {
      out << mag.get_str() << "*" << mono;
    }
  }
  return out.str();
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  throw std::invalid_argument("poly_arith: unknown op");
}

MultiPoly div_exact(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw DivisionByZero("div_exact: zero divisor");
  const auto vars = union_vars(num.vars_, den.vars_);
  MultiPoly rem = num.with_vars(vars);
  const MultiPoly d = den.with_vars(vars);
  MultiPoly quot(vars);

  const auto& [lead_e, lead_c] = *d.terms_.begin();
  MultiPoly::Exponents qe(vars.size());
  MultiPoly::Exponents te(vars.size());
  BigInt qc;
  while (!rem.terms_.empty()) {
    const auto& [re, rc] = *rem.terms_.begin();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (re[i] < lead_e[i]) {
        throw NonExactDivision("div_exact: lead monomial not divisible");
      }
      qe[i] = re[i] - lead_e[i];
    }
    if (mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()) == 0) {
      throw NonExactDivision("div_exact: lead coefficient not divisible over Z");
    }
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
    quot.terms_.emplace(qe, qc);
    for (const auto& [de, dc] : d.terms_) {
      for (std::size_t i = 0; i < vars.size(); ++i) te[i] = qe[i] + de[i];
      auto [it, inserted] = rem.terms_.try_emplace(te);
      mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), dc.get_mpz_t());
      if (it->second == 0) rem.terms_.erase(it);
    }
  }
  return quot;
}

BigRat ScaledPoly::value() const {
  if (!numerator.is_constant()) throw std::logic_error("ScaledPoly::value: not constant");
  return BigRat(numerator.constant_term(), denominator);
}

ScaledPoly evaluate(const MultiPoly& p, const std::map<std::string, BigRat>& bindings) {
  std::vector<std::string> rest;
  std::vector<int> bound_at(p.vars().size(), -1);
  std::vector<BigRat> values;
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto it = bindings.find(p.vars()[i]);
    if (it == bindings.end()) {
      rest.push_back(p.vars()[i]);
    } else {
      bound_at[i] = static_cast<int>(values.size());
      values.push_back(it->second);
    }
  }
  std::map<MultiPoly::Exponents, BigRat, std::greater<>> acc;
  std::vector<std::map<std::uint32_t, BigRat>> power_cache(values.size());
  auto power = [&](int slot, std::uint32_t e) -> const BigRat& {
    auto& cache = power_cache[slot];
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, values[slot].pow(e)).first;
    return it->second;
  };
  for (const auto& [e, c] : p.terms()) {
    BigRat v(c);
    MultiPoly::Exponents re;
    re.reserve(rest.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (bound_at[i] < 0) {
        re.push_back(e[i]);
      } else if (e[i] != 0) {
        v *= power(bound_at[i], e[i]);
      }
    }
    if (v.is_zero()) continue;
    auto [it, inserted] = acc.try_emplace(std::move(re), v);
    if (!inserted) it->second += v;
  }
  BigInt den = 1;
  for (const auto& [e, v] : acc) {
    const BigInt d = v.den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  ScaledPoly out{MultiPoly(rest), den};
  for (const auto& [e, v] : acc) {
    if (v.is_zero()) continue;
    out.numerator.add_term(e, v.num() * (den / v.den()));
  }
  return out;
}

MultiPoly evaluate_integer(const MultiPoly& p, const std::map<std::string, BigInt>& bindings) {
  std::map<std::string, BigRat> rat;
  for (const auto& [v, x] : bindings) rat.emplace(v, BigRat(x));
  ScaledPoly s = evaluate(p, rat);
  return s.numerator;
}

bool is_homogeneous(const MultiPoly& p, std::string_view x, std::string_view y) {
  const int ix = p.index_of(x);
  const int iy = p.index_of(y);
  bool have = false;
  std::uint32_t deg = 0;
  for (const auto& [e, c] : p.terms()) {
    const std::uint32_t d = (ix < 0 ? 0 : e[ix]) + (iy < 0 ? 0 : e[iy]);
    if (have && d != deg) return false;
    have = true;
    deg = d;
  }
  return true;
}

MultiPoly dehomogenize(const MultiPoly& p, std::string_view x, std::string_view y,
                       std::string_view z) {
  if (!is_homogeneous(p, x, y)) throw NotHomogeneous("dehomogenize: mixed total degree");
  const int ix = p.index_of(x);
  const int iy = p.index_of(y);
  std::vector<std::string> vars{std::string(z)};
  for (const auto& v : p.vars()) {
    if (v != x && v != y) vars.push_back(v);
  }
  MultiPoly out(vars);
  const int iz = out.index_of(z);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly::Exponents ne(out.vars().size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) == ix) {
        ne[iz] = e[i];
      } else if (static_cast<int>(i) != iy) {
        ne[out.index_of(p.vars()[i])] = e[i];
      }
    }
    out.add_term(ne, c);
  }
  return out;
}

std::uint32_t var_valuation(const MultiPoly& p, std::string_view v) {
  if (p.is_zero()) throw ZeroPolynomial("var_valuation: zero polynomial");
  const int i = p.index_of(v);
  if (i < 0) return 0;
  std::uint32_t m = UINT32_MAX;
  for (const auto& [e, c] : p.terms()) m = std::min(m, e[i]);
  return m;
}

BigInt content(const MultiPoly& p) {
  BigInt g = 0;
  for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

MultiPoly substitute_power(const MultiPoly& p, std::string_view from, std::string_view to,
                           std::uint32_t divisor) {
  const int i = p.index_of(from);
  if (i < 0) return p;
  std::vector<std::string> vars;
  for (const auto& v : p.vars()) vars.push_back(v == from ? std::string(to) : v);
  MultiPoly out(vars);
  for (const auto& [e, c] : p.terms()) {
    if (e[i] % divisor != 0) {
      throw OddExponent("substitute_power: exponent " + std::to_string(e[i]) + " of " +
                        std::string(from) + " not divisible by " + std::to_string(divisor));
    }
    MultiPoly::Exponents ne(out.vars().size());
    for (std::size_t j = 0; j < e.size(); ++j) {
      const std::uint32_t val = static_cast<int>(j) == i ? e[j] / divisor : e[j];
      ne[out.index_of(vars[j])] = val;
    }
    out.add_term(ne, c);
  }
  return out;
}

std::string poly_to_json(const MultiPoly& p) {
  nlohmann::ordered_json j;
  j["vars"] = p.vars();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["coeff"] = c.get_str();
    t["exps"] = e;
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

MultiPoly poly_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("polynomial JSON: ") + ex.what());
  }
  try {
    const auto vars = j.at("vars").get<std::vector<std::string>>();
    MultiPoly out(vars);
    std::vector<int> where(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) where[i] = out.index_of(vars[i]);
    for (const auto& t : j.at("terms")) {
      const auto exps = t.at("exps").get<std::vector<std::uint32_t>>();
      if (exps.size() != vars.size()) throw ParseError("polynomial JSON: exponent arity mismatch");
      MultiPoly::Exponents ne(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) ne[where[i]] = exps[i];
      BigInt c;
      if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) {
        throw ParseError("polynomial JSON: bad coefficient");
      }
      out.add_term(ne, c);
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("polynomial JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("polynomial JSON: ") + ex.what());
  }
}

}  // namespace arithdyn
