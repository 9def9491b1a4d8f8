#include "cassoc/zeta.h"

#include "cassoc/bernoulli.h"

#include <stdexcept>

namespace cassoc {

namespace {

Series sinhc_at(Rational const &a, Rational const &b, int n)
{
	return compose_linear(sinhc_series(n), a, b);
}

} // namespace

Rational theta_even(int n)
{
	if (n < 1)
		throw std::invalid_argument("theta_even needs n >= 1");
	return -pow(Rational(2), 2 * n) * bernoulli(2 * n) / (Rational(2) * factorial(2 * n) * Rational(2 * n));
}

ThetaPoly theta_value(int n)
{
	if (n < 2)
		throw std::invalid_argument("theta index below 2");
	return n % 2 ? ThetaPoly::theta(n) : ThetaPoly(theta_even(n / 2));
}

DrinfeldSeries drinfeld_series(int N)
{
	if (N < 0)
		throw std::invalid_argument("negative order");
	int M = N + 2;
	DrinfeldSeries d;
	d.S = UniSeries<ThetaPoly>(M);
	for (int n = 2; n <= M; ++n)
		d.S[n] = theta_value(n);
	d.s = compose_linear(d.S, 1, 0) + compose_linear(d.S, 0, 1) - compose_linear(d.S, 1, 1);
	ThetaSeries e = exp(d.s);
	e.at(0, 0) = e.at(0, 0) - ThetaPoly(1);
	try
	{
		d.f = e.divide_monomial(1, 1);
	}
	catch (SeriesError const &)
	{
		throw std::logic_error("exp(s) - 1 not divisible by lambda mu");
	}
	return d;
}

ThetaSeries drinfeld_f(int N) { return drinfeld_series(N).f; }

bool verify_even_S_identity(int N)
{
	UniSeries<Rational> even(N);
	for (int n = 1; 2 * n <= N; ++n)
		even[2 * n] = theta_even(n) * Rational(-2);
	Series lhs = exp(compose_linear(even, 1, 0));
	return lhs == sinhc_at(1, 0, N);
}

ThetaSeries theta_series(int N)
{
	ThetaSeries t(N);
	for (int m = 3; m <= N; m += 2)
	{
		auto p = detail::linear_powers(1, 1, m).back();
		p.front() -= 1;
		p.back() -= 1;
		ThetaPoly c = -ThetaPoly::theta(m);
		for (int i = 0; i <= m; ++i)
			if (!p[i].is_zero())
				t.at(i, m - i) = t.at(i, m - i) + c * p[i];
	}
	return t;
}

Series even_exp_factor(int N)
{
	Series q = sinhc_at(1, 1, N) * (sinhc_at(1, 0, N) * sinhc_at(0, 1, N)).inverse();
	return sqrt(q);
}

std::pair<ThetaSeries, ThetaSeries> drinfeld_h_pair(int N)
{
	int M = N + 2;
	ThetaSeries th = theta_series(M);
	Series p = sinhc_at(1, 1, M) * sinhc_at(1, 0, M) * sinhc_at(0, 1, M);
	ThetaSeries ip = sqrt(p).inverse().cast<ThetaPoly>();
	ThetaSeries h = cosh(th) * ip;
	ThetaSeries ht = (sinh(th) * ip).divide_monomial(1, 1).divide_linear(1, 1);
	return {h, ht.truncated(std::max(N - 1, -1))};
}

ParamSet<ThetaPoly> solve_betas_in_theta(int N)
{
	auto [h, ht] = drinfeld_h_pair(N);
	auto gam = gamma_coefficients(N + 2);
	ParamSet<ThetaPoly> p;
	for (auto &[nk, x] : decompose(h))
	{
		if (nk.second > 0)
			p.beta[nk] = x;
		else if (!(x == ThetaPoly(gam[nk.first])))
			throw std::domain_error("boundary condition violated at degree " + std::to_string(2 * nk.first));
	}
	p.beta_tilde = decompose(ht);
	return p;
}

} // namespace cassoc
