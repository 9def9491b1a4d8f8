#pragma once

#include "cassoc/hexagon.h"
#include "cassoc/theta.h"

namespace cassoc {

using ThetaSeries = BiSeries<ThetaPoly>;

// t_{2n} = zeta(2n)/(2n (pi i)^{2n}) from the Bernoulli numbers
Rational theta_even(int n);

// t_n: numeric for even n, the formal symbol for odd n
ThetaPoly theta_value(int n);

struct DrinfeldSeries
{
	UniSeries<ThetaPoly> S;
	ThetaSeries s; // S(lambda) + S(mu) - S(lambda+mu)
	ThetaSeries f; // 1 + lambda mu f = exp(s)
};

// all three to the order needed for f to order N
DrinfeldSeries drinfeld_series(int N);
ThetaSeries drinfeld_f(int N);

// exp(-2 Even S(rho)) = (e^rho - e^-rho)/(2 rho) to order N
bool verify_even_S_identity(int N);

// odd part of s, -sum t_{2n+1} ((lambda+mu)^{2n+1} - lambda^{2n+1} - mu^{2n+1})
ThetaSeries theta_series(int N);

// sqrt of sinhc(lambda+mu) / (sinhc(lambda) sinhc(mu)), the factor exp(Even s)
Series even_exp_factor(int N);

// h and htilde of f^D read off from cosh and sinh of theta_series, to the
// orders of extract_h and extract_htilde
std::pair<ThetaSeries, ThetaSeries> drinfeld_h_pair(int N);

// parameters of f^D in the associator polynomial basis, f^D to order N
ParamSet<ThetaPoly> solve_betas_in_theta(int N);

} // namespace cassoc
