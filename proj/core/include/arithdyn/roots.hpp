#pragma once

#include <vector>

#include "arithdyn/multipoly.hpp"
#include "arithdyn/rational.hpp"

namespace arithdyn {

/// Dense coefficients a[0..n] of a univariate polynomial (a[i] multiplies x^i).
/// Throws std::invalid_argument if p involves more than one variable.
std::vector<BigInt> univariate_coefficients(const MultiPoly& p);

/// All rational roots of a univariate integer polynomial, ascending, without
/// multiplicity. Candidates are +-r/s with r | constant term and s | lead
/// coefficient of the primitive part; a zero constant term contributes the
/// root 0 and is factored out first. Throws ZeroPolynomial.
std::vector<BigRat> rational_roots(const MultiPoly& p);

/// p(x) for univariate p.
BigRat evaluate_univariate(const MultiPoly& p, const BigRat& x);

}  // namespace arithdyn
