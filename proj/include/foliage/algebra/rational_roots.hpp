#pragma once

#include <gmpxx.h>

#include <vector>

namespace foliage {

// Prime factorization of |n| > 0 as (prime, exponent) pairs, ascending.
std::vector<std::pair<mpz_class, int>> factor_integer(const mpz_class& n);

// All positive divisors of |n| > 0, ascending.
std::vector<mpz_class> positive_divisors(const mpz_class& n);

// Distinct rational roots, ascending. Coefficients low to high; the zero
// polynomial has no roots by convention.
std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs);

}  // namespace foliage
