#pragma once

#include "cassoc/cbh.h"
#include "cassoc/theta.h"

#include <map>
#include <utility>
#include <vector>

namespace cassoc {

using Index2 = std::pair<int, int>;

// alpha_kl for k+l <= N-2, the coefficients of phi = sum alpha_kl [a^k b^l ab]
template <class R> struct AlphaTable
{
	int N = 2;
	std::map<Index2, R> alpha;

	static AlphaTable from_series(BiSeries<R> const &f)
	{
		AlphaTable t;
		t.N = f.order() + 2;
		for (int d = 0; d <= f.order(); ++d)
			for (int k = 0; k <= d; ++k)
				t.alpha[{k, d - k}] = f.at(k, d - k);
		return t;
	}
	BiSeries<R> to_series() const
	{
		BiSeries<R> f(N - 2);
		for (auto const &[kl, x] : alpha)
			if (kl.first + kl.second <= N - 2)
				f.at(kl.first, kl.second) = x;
		return f;
	}
	bool is_symmetric() const { return to_series().is_symmetric(); }
};

// Free parameters of the general solution. beta(n,0) is the spine
// 2w/(e^w - e^-w) and may only be given with that value; beta_tilde
// runs over n >= 0, 0 <= k <= n/3.
template <class R> struct ParamSet
{
	std::map<Index2, R> beta;
	std::map<Index2, R> beta_tilde;
};

// g = lambda f / (e^lambda - 1)
template <class R> BiSeries<R> g_from_f(BiSeries<R> const &f);

// G + C T with G, T built from g, g(mu,rho), g(rho,lambda), rho = -lambda-mu
template <class R> BiSeries<R> residual_39(BiSeries<R> const &f);

// f + e^mu f(mu,rho) + e^-lambda f(lambda,rho) - (E(mu) - E(-lambda))/(lambda+mu)
// with E(x) = (e^x - 1)/x
template <class R> BiSeries<R> residual_15b(BiSeries<R> const &f);

// even residual on 1 + lambda mu f (known to order f.order()+3) and odd residual
template <class R> std::pair<BiSeries<R>, BiSeries<R>> split_residuals(BiSeries<R> const &f);

// alpha_{2k,0} for 2k <= N
std::vector<Rational> extreme_coefficients(int N);

// f(lambda,-lambda) = 1/lambda^2 - 2/(lambda (e^lambda - e^-lambda))
UniSeries<Rational> diagonal_series(int N);

// homogeneous polynomial, coefficient k is that of lambda^k mu^{n-k}
struct AssociatorPolynomial
{
	int degree = 0;
	std::vector<Rational> coeffs;

	Series to_series() const;
};

// number of parameters of the general associator polynomial of degree n
int associator_parameter_count(int n);

// degree 2m: sum_k p_k (lambda mu (lambda+mu))^{2k} w^{2m-6k}
// degree 2m+1: sum_k p_k (lambda mu (lambda+mu))^{2k+1} w^{2m-6k-2}
AssociatorPolynomial associator_polynomial(int n, std::vector<Rational> const &params);
bool is_associator_polynomial(AssociatorPolynomial const &p);

// (lambda mu (lambda+mu))^{2k} (lambda^2 + lambda mu + mu^2)^{n-3k} to order M
Series basis_series(int n, int k, int M);

template <class R> BiSeries<R> h_from_params(ParamSet<R> const &p, int M);
template <class R> BiSeries<R> htilde_from_params(ParamSet<R> const &p, int M);

// the general solution of the hexagon to order N
template <class R> BiSeries<R> build_f(ParamSet<R> const &p, int N);

// h with 1 + lambda mu Even f = sinhc(lambda+mu) h, to order N+2
template <class R> BiSeries<R> extract_h(BiSeries<R> const &f);
// htilde with Odd f = (lambda+mu) sinhc(lambda+mu) htilde, to order N-1
template <class R> BiSeries<R> extract_htilde(BiSeries<R> const &f);

// coordinates of an even symmetric series in the basis_series family;
// throws when some degree part is not in their span
template <class R> std::map<Index2, R> decompose(BiSeries<R> const &h);

// inverse of build_f; throws unless f is a hexagon solution
template <class R> ParamSet<R> params_from_f(BiSeries<R> const &f);

Series family_I(int N);
Series family_II(int N);
Series family_III(int N);

enum class SolveMode
{
	full, // all symmetric alpha
	even  // alpha of odd degree fixed to zero
};

// dimension of the new solutions at f-degree d
int census(int d, SolveMode mode);

struct DegreeReport
{
	int degree = 0;  // total degree k+l of the unknowns
	int unknowns = 0;
	int dimension = 0;
	int expected = 0;
	// solution directions as full coefficient lists of lambda^k mu^{d-k}
	std::vector<std::vector<Rational>> kernel;
};

struct SolveReport
{
	Series f{-1};
	std::vector<DegreeReport> degrees;

	bool census_matches() const;
};

// degree by degree solution of the hexagon for f to order N; free
// directions are fixed by zeroing the coefficients of smallest k
SolveReport solve_degreewise(int N, SolveMode mode);

// exp(psi(c,a)) exp(psi(b,c)) exp(psi(a,b)) = exp(a+b+c) in the three
// generator model up to Lie degree N
bool model_hexagon_check(Series const &f, int N);

} // namespace cassoc
