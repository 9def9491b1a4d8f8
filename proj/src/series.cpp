#include "cassoc/series.h"

#include "cassoc/bernoulli.h"

namespace cassoc {

UniSeries<Rational> exp_series(int N) { return exp_scaled(N, 1); }

UniSeries<Rational> exp_scaled(int N, Rational const &c)
{
	UniSeries<Rational> u(N);
	Rational t = 1;
	for (int k = 0; k <= N; ++k)
	{
		u[k] = t;
		t = t * c / Rational(k + 1);
	}
	return u;
}

UniSeries<Rational> log1p_series(int N)
{
	UniSeries<Rational> u(N);
	for (int k = 1; k <= N; ++k)
		u[k] = Rational(k % 2 ? 1 : -1, k);
	return u;
}

UniSeries<Rational> sqrt1p_series(int N)
{
	// binom(1/2, k)
	UniSeries<Rational> u(N);
	Rational c = 1;
	for (int k = 0; k <= N; ++k)
	{
		u[k] = c;
		c = c * (Rational(1, 2) - Rational(k)) / Rational(k + 1);
	}
	return u;
}

UniSeries<Rational> cosh_series(int N)
{
	UniSeries<Rational> u(N);
	for (int k = 0; k <= N; k += 2)
		u[k] = unit_inverse(factorial(k));
	return u;
}

UniSeries<Rational> sinh_series(int N)
{
	UniSeries<Rational> u(N);
	for (int k = 1; k <= N; k += 2)
		u[k] = unit_inverse(factorial(k));
	return u;
}

UniSeries<Rational> x_over_expm1(int N)
{
	UniSeries<Rational> u(N);
	for (int k = 0; k <= N; ++k)
		u[k] = bernoulli(k) / factorial(k);
	return u;
}

UniSeries<Rational> expm1_over_x(int N)
{
	UniSeries<Rational> u(N);
	for (int k = 0; k <= N; ++k)
		u[k] = unit_inverse(factorial(k + 1));
	return u;
}

UniSeries<Rational> two_x_over_sinh2x(int N)
{
	UniSeries<Rational> u(N);
	auto g = gamma_coefficients(N);
	for (size_t k = 0; k < g.size(); ++k)
		u[2 * k] = g[k];
	return u;
}

UniSeries<Rational> sinhc_series(int N)
{
	UniSeries<Rational> u(N);
	for (int k = 0; k <= N; k += 2)
		u[k] = unit_inverse(factorial(k + 1));
	return u;
}

BiSeries<Rational> sinh_factor_bivariate(int N) { return compose_linear(sinhc_series(N), 1, 1); }

BiSeries<Rational> c_generating_closed(int N)
{
	// numerator known to order N+2, then divide by lambda mu
	int M = N + 2;
	auto em1 = compose_linear(exp_series(M), 0, 1) - BiSeries<Rational>::constant(1, M);
	auto a = compose_linear(x_over_expm1(M), 1, 1);
	auto b = compose_linear(x_over_expm1(M), 0, 1);
	return (em1 * (a - b)).divide_monomial(1, 1);
}

BiSeries<Rational> c_generating_from_table(int N)
{
	BiSeries<Rational> s(N);
	for (int d = 0; d <= N; ++d)
		for (int k = 0; k <= d; ++k)
		{
			int n = k + 1, m = d - k + 1;
			s.at(k, d - k) = ext_bernoulli_recursive(m, n) / (factorial(m) * factorial(n));
		}
	return s;
}

std::variant<UniSeries<Rational>, BiSeries<Rational>> standard_series(StandardSeries name, int N)
{
	switch (name)
	{
	case StandardSeries::x_over_expm1:
		return x_over_expm1(N);
	case StandardSeries::expm1_over_x:
		return expm1_over_x(N);
	case StandardSeries::two_x_over_sinh2x:
		return two_x_over_sinh2x(N);
	case StandardSeries::sinh_factor_bivariate:
		return sinh_factor_bivariate(N);
	case StandardSeries::c_generating_closed:
		return c_generating_closed(N);
	}
	throw SeriesError("unknown series");
}

} // namespace cassoc
