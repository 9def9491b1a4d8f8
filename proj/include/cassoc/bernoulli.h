#pragma once

#include "cassoc/rational.h"

#include <vector>

namespace cassoc {

// B_n from x/(e^x-1), so B_1 = -1/2
Rational bernoulli(int n);

enum class BernoulliIdentity
{
	a,
	b,
	c
};

// the three finite sums in B_1..B_m that every m >= 1 satisfies
bool check_bernoulli_identity(int m, BernoulliIdentity variant);

// C_mn from the two-term recursion seeded by C_1n = B_n
Rational ext_bernoulli_recursive(int m, int n);

// C_mn = sum_{k<m} binom(m,k) B_{n+k}
Rational ext_bernoulli_closed(int m, int n);

// the mirrored table, C'_11 = 1/2 and C'_1n = B_n otherwise
Rational ext_bernoulli_prime(int m, int n);

// gamma_k with 2x/(e^x - e^-x) = sum gamma_k x^{2k}, for 2k <= N
std::vector<Rational> gamma_coefficients(int N);

} // namespace cassoc
