#include "arithdyn/rational.hpp"

#include <cctype>

#include "arithdyn/errors.hpp"

namespace arithdyn {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (std::isdigit(static_cast<unsigned char>(ch)) == 0) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigRat::BigRat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("BigRat: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) throw ParseError("not a rational: '" + std::string(text) + "'");
    return BigRat(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  return BigRat(parse_integer(num), parse_integer(den));
}

BigRat BigRat::operator-() const { return BigRat(mpq_class(-q_)); }

BigRat& BigRat::operator+=(const BigRat& o) {
  q_ += o.q_;
  return *this;
}

BigRat& BigRat::operator-=(const BigRat& o) {
  q_ -= o.q_;
  return *this;
}

BigRat& BigRat::operator*=(const BigRat& o) {
  q_ *= o.q_;
  return *this;
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw DivisionByZero("BigRat: division by zero");
  q_ /= o.q_;
  return *this;
}

BigRat BigRat::pow(long exp) const {
  if (exp < 0) return inverse().pow(-exp);
  BigInt n = arithdyn::pow(num(), static_cast<unsigned long>(exp));
  BigInt d = arithdyn::pow(den(), static_cast<unsigned long>(exp));
  return BigRat(n, d);
}

BigRat BigRat::abs() const { return sign() < 0 ? -*this : *this; }

BigRat BigRat::inverse() const {
  if (is_zero()) throw DivisionByZero("BigRat: inverse of zero");
  return BigRat(den(), num());
}

std::string BigRat::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::optional<BigRat> rational_sqrt(const BigRat& q) {
  if (q.sign() < 0) return std::nullopt;
  const BigInt n = q.num();
  const BigInt d = q.den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return BigRat(rn, rd);
}

}  // namespace arithdyn
