#include "cassoc/hexagon.h"

#include "cassoc/bernoulli.h"
#include "cassoc/linalg.h"

#include <stdexcept>
#include <string>

namespace cassoc {

namespace {

template <class R> BiSeries<R> lift(Series const &s) { return s.template cast<R>(); }

// s lambda^i mu^j, known i+j orders further
template <class R> BiSeries<R> shift(BiSeries<R> const &s, int i, int j)
{
	BiSeries<R> r(s.order() + i + j);
	for (int d = 0; d <= s.order(); ++d)
		for (int k = 0; k <= d; ++k)
			r.at(k + i, d - k + j) = s.at(k, d - k);
	return r;
}

template <class R> BiSeries<R> times_lambda_plus_mu(BiSeries<R> const &s) { return shift(s, 1, 0) + shift(s, 0, 1); }

Series exp_linear(Rational const &a, Rational const &b, int n)
{
	return compose_linear(exp_series(std::max(n, 0)), a, b).truncated(n);
}

// sinhc(lambda + mu)
Series sinhc_sum(int n) { return compose_linear(sinhc_series(std::max(n, 0)), 1, 1).truncated(n); }

Series power(Series const &s, int e, int n)
{
	Series r = Series::constant(1, n);
	for (int i = 0; i < e; ++i)
		r = r * s;
	return r;
}

// lambda^2 + lambda mu + mu^2 and lambda mu (lambda + mu)
Series omega2(int n)
{
	Series w(n);
	if (n >= 2)
	{
		w.at(2, 0) = 1;
		w.at(1, 1) = 1;
		w.at(0, 2) = 1;
	}
	return w;
}

Series cubic(int n)
{
	Series c(n);
	if (n >= 3)
	{
		c.at(2, 1) = 1;
		c.at(1, 2) = 1;
	}
	return c;
}

template <class R> BiSeries<R> scaled(Series const &s, R const &x)
{
	return s.transform([&](Rational const &c) { return R(c) * x; });
}

} // namespace

template <class R> BiSeries<R> g_from_f(BiSeries<R> const &f)
{
	int n = f.order();
	if (n < 0)
		return f;
	return lift<R>(compose_linear(x_over_expm1(n), 1, 0)) * f;
}

template <class R> BiSeries<R> residual_39(BiSeries<R> const &f)
{
	int n = f.order();
	if (n < 0)
		return f;
	BiSeries<R> g = g_from_f(f);
	BiSeries<R> g_mr = g.substitute(0, 1, -1, -1);
	BiSeries<R> g_rl = g.substitute(-1, -1, 1, 0);
	BiSeries<R> G = g + g_mr + g_rl;
	BiSeries<R> T = BiSeries<R>::constant(R(1), n) + shift(g_mr, 1, 0) - shift(g, 0, 1);
	return G + lift<R>(c_generating_closed(n)) * T;
}

template <class R> BiSeries<R> residual_15b(BiSeries<R> const &f)
{
	int n = f.order();
	if (n < 0)
		return f;
	BiSeries<R> lhs = f + lift<R>(exp_linear(0, 1, n)) * f.substitute(0, 1, -1, -1) +
	                  lift<R>(exp_linear(-1, 0, n)) * f.substitute(1, 0, -1, -1);
	auto E = expm1_over_x(n + 1);
	Series rhs = (compose_linear(E, 0, 1) - compose_linear(E, -1, 0)).divide_linear(1, 1);
	return lhs - lift<R>(rhs);
}

template <class R> std::pair<BiSeries<R>, BiSeries<R>> split_residuals(BiSeries<R> const &f)
{
	if (!f.is_symmetric())
		throw std::invalid_argument("asymmetric input");
	int n = f.order();
	BiSeries<R> ft = BiSeries<R>::constant(R(1), n + 2) + shift(f, 1, 1);
	BiSeries<R> E = ft.even_part();
	BiSeries<R> ra = times_lambda_plus_mu(E) - shift(lift<R>(exp_linear(0, 1, n + 2)) * E.substitute(0, 1, -1, -1), 1, 0) -
	                 shift(lift<R>(exp_linear(-1, 0, n + 2)) * E.substitute(1, 0, -1, -1), 0, 1);
	BiSeries<R> O = f.odd_part();
	BiSeries<R> rb = O + lift<R>(exp_linear(0, 1, n)) * O.substitute(0, 1, -1, -1) +
	                 lift<R>(exp_linear(-1, 0, n)) * O.substitute(1, 0, -1, -1);
	return {ra, rb};
}

std::vector<Rational> extreme_coefficients(int N)
{
	std::vector<Rational> out;
	for (int k = 0; 2 * k <= N; ++k)
		out.push_back(pow(Rational(2), 2 * k + 1) * bernoulli(2 * k + 2) / factorial(2 * k + 2));
	return out;
}

UniSeries<Rational> diagonal_series(int N)
{
	auto gam = two_x_over_sinh2x(N + 2);
	UniSeries<Rational> r(N);
	for (int k = 0; k <= N; ++k)
		r[k] = -gam[k + 2];
	return r;
}

Series AssociatorPolynomial::to_series() const
{
	Series s(degree);
	for (int k = 0; k <= degree; ++k)
		s.at(k, degree - k) = coeffs[k];
	return s;
}

int associator_parameter_count(int n)
{
	if (n < 0)
		return 0;
	int m = n / 2;
	if (n % 2 == 0)
		return m / 3 + 1;
	return m == 0 ? 0 : (m - 1) / 3 + 1;
}

Series basis_series(int n, int k, int M)
{
	return power(cubic(M), 2 * k, M) * power(omega2(M), n - 3 * k, M);
}

AssociatorPolynomial associator_polynomial(int n, std::vector<Rational> const &params)
{
	int count = associator_parameter_count(n);
	if (static_cast<int>(params.size()) != count)
		throw std::invalid_argument("degree " + std::to_string(n) + " takes " + std::to_string(count) + " parameters");
	Series s(n);
	int m = n / 2;
	for (int k = 0; k < count; ++k)
	{
		Series b = n % 2 == 0 ? basis_series(m, k, n) : power(cubic(n), 2 * k + 1, n) * power(omega2(n), m - 3 * k - 1, n);
		s += b * params[k];
	}
	return {n, s.degree_part(n)};
}

bool is_associator_polynomial(AssociatorPolynomial const &p)
{
	if (static_cast<int>(p.coeffs.size()) != p.degree + 1)
		return false;
	Series s = p.to_series();
	return s == s.swapped() && s == s.substitute(1, 0, -1, -1);
}

template <class R> BiSeries<R> h_from_params(ParamSet<R> const &p, int M)
{
	auto gam = gamma_coefficients(std::max(M, 0));
	BiSeries<R> h(M);
	for (int n = 0; 2 * n <= M; ++n)
		h += lift<R>(basis_series(n, 0, M) * gam[n]);
	for (auto const &[nk, x] : p.beta)
	{
		auto [n, k] = nk;
		if (n < 0 || k < 0 || 3 * k > n)
			throw std::invalid_argument("beta index out of range");
		if (k == 0)
		{
			if (2 * n <= M && !detail::zero(x - R(gam[n])))
				throw std::invalid_argument("beta(" + std::to_string(n) + ",0) is fixed by the boundary condition");
			continue;
		}
		if (2 * n <= M)
			h += scaled(basis_series(n, k, M), x);
	}
	return h;
}

template <class R> BiSeries<R> htilde_from_params(ParamSet<R> const &p, int M)
{
	BiSeries<R> h(M);
	for (auto const &[nk, x] : p.beta_tilde)
	{
		auto [n, k] = nk;
		if (n < 0 || k < 0 || 3 * k > n)
			throw std::invalid_argument("beta_tilde index out of range");
		if (2 * n <= M)
			h += scaled(basis_series(n, k, M), x);
	}
	return h;
}

template <class R> BiSeries<R> build_f(ParamSet<R> const &p, int N)
{
	BiSeries<R> sh = lift<R>(sinhc_sum(N + 2)) * h_from_params(p, N + 2);
	BiSeries<R> even = (sh - BiSeries<R>::constant(R(1), N + 2)).divide_monomial(1, 1);
	if (N < 1)
		return even;
	BiSeries<R> odd = times_lambda_plus_mu(lift<R>(sinhc_sum(N - 1)) * htilde_from_params(p, N - 1));
	return even + odd;
}

template <class R> BiSeries<R> extract_h(BiSeries<R> const &f)
{
	int n = f.order() + 2;
	BiSeries<R> ft = BiSeries<R>::constant(R(1), n) + shift(f.even_part(), 1, 1);
	return lift<R>(sinhc_sum(n).inverse()) * ft;
}

template <class R> BiSeries<R> extract_htilde(BiSeries<R> const &f)
{
	int n = f.order() - 1;
	if (n < 0)
		return BiSeries<R>(-1);
	return lift<R>(sinhc_sum(n).inverse()) * f.odd_part().divide_linear(1, 1);
}

template <class R> std::map<Index2, R> decompose(BiSeries<R> const &h)
{
	std::map<Index2, R> out;
	for (int d = 0; d <= h.order(); ++d)
	{
		auto part = h.degree_part(d);
		if (d % 2)
		{
			for (auto const &x : part)
				if (!detail::zero(x))
					throw std::domain_error("residual outside span");
			continue;
		}
		int n = d / 2, K = n / 3 + 1;
		Matrix m(d + 1, K);
		for (int k = 0; k < K; ++k)
		{
			auto b = basis_series(n, k, d).degree_part(d);
			for (int i = 0; i <= d; ++i)
				m(i, k) = b[i];
		}
		auto x = solve<R>(m, part);
		if (!x)
			throw std::domain_error("residual outside span");
		for (int k = 0; k < K; ++k)
			out[{n, k}] = (*x)[k];
	}
	return out;
}

template <class R> ParamSet<R> params_from_f(BiSeries<R> const &f)
{
	ParamSet<R> p;
	auto gam = gamma_coefficients(f.order() + 2);
	for (auto &[nk, x] : decompose(extract_h(f)))
	{
		if (nk.second > 0)
			p.beta[nk] = x;
		else if (!detail::zero(x - R(gam[nk.first])))
			throw std::domain_error("boundary condition violated at degree " + std::to_string(2 * nk.first));
	}
	p.beta_tilde = decompose(extract_htilde(f));
	return p;
}

Series family_I(int N) { return build_f(ParamSet<Rational>{}, N); }

Series family_II(int N)
{
	int M = N + 2;
	auto gam = two_x_over_sinh2x(M);
	Series s = compose_linear(gam, 1, 0) + compose_linear(gam, 0, 1) - Series::constant(1, M);
	return ((sinhc_sum(M) * s - Series::constant(1, M)) / Rational(2)).divide_monomial(1, 1);
}

Series family_III(int N)
{
	int M = N + 2;
	Series x(M);
	for (int n = 1; 2 * n <= M; ++n)
	{
		Rational c = pow(Rational(2), 2 * n) * bernoulli(2 * n) / (Rational(4 * n) * factorial(2 * n));
		auto p = detail::linear_powers(1, 1, 2 * n).back();
		p.front() -= 1;
		p.back() -= 1;
		for (int i = 0; i <= 2 * n; ++i)
			x.at(i, 2 * n - i) += c * p[i];
	}
	return (exp(x) - Series::constant(1, M)).divide_monomial(1, 1);
}

int census(int d, SolveMode mode)
{
	if (d < 0)
		return 0;
	int m = d / 2;
	if (d % 2 == 0)
		return (m + 1) / 3;
	return mode == SolveMode::even ? 0 : 1 + m / 3;
}

bool SolveReport::census_matches() const
{
	for (auto const &r : degrees)
		if (r.dimension != r.expected)
			return false;
	return true;
}

namespace {

// symmetric unknowns alpha_{j,d-j}, j = 0..d/2, as unit perturbations
Series unit(Series s, int d, int j)
{
	s.at(j, d - j) = 1;
	s.at(d - j, j) = 1;
	return s;
}

} // namespace

SolveReport solve_degreewise(int N, SolveMode mode)
{
	bool even = mode == SolveMode::even;
	Series W(N + 2);
	SolveReport rep;
	for (int d = 0; d <= N; ++d)
	{
		DegreeReport dr;
		dr.degree = d;
		dr.expected = census(d, mode);
		if (even && d % 2)
		{
			rep.degrees.push_back(dr);
			continue;
		}
		// the degree d+1 equations also constrain alpha of degree d; in
		// full mode the degree d+1 unknowns are eliminated first
		int top = d + 1;
		Series base = W.truncated(top);
		Series r0 = residual_15b(base);
		int u = d / 2 + 1;
		int v = even ? 0 : (d + 1) / 2 + 1;
		dr.unknowns = u;
		std::vector<Series> cols;
		for (int c = 0; c < v; ++c)
			cols.push_back(residual_15b(unit(base, d + 1, c)) - r0);
		// unknown alpha_{j,d-j} sits in column v + u-1-j so that free
		// columns land on the smallest k
		for (int c = 0; c < u; ++c)
			cols.push_back(residual_15b(unit(base, d, u - 1 - c)) - r0);
		int rows = (d + 1) + (d + 2), width = u + v;
		Matrix m(rows, width + 1);
		int i = 0;
		for (int deg = d; deg <= top; ++deg)
			for (int k = 0; k <= deg; ++k, ++i)
			{
				for (int c = 0; c < width; ++c)
					m(i, c) = cols[c].at(k, deg - k);
				m(i, width) = -r0.at(k, deg - k);
			}
		auto piv = rref(m);
		Matrix a(rows, u);
		std::vector<Rational> b(rows);
		for (size_t r = 0; r < piv.size(); ++r)
		{
			if (piv[r] == width)
				throw std::runtime_error("inconsistent system at degree " + std::to_string(d));
			if (piv[r] < v)
				continue;
			for (int c = 0; c < u; ++c)
				a(static_cast<int>(r), c) = m(static_cast<int>(r), v + c);
			b[r] = m(static_cast<int>(r), width);
		}
		auto x = solve<Rational>(a, b);
		if (!x)
			throw std::runtime_error("inconsistent system at degree " + std::to_string(d));
		for (int c = 0; c < u; ++c)
		{
			int j = u - 1 - c;
			W.at(j, d - j) = (*x)[c];
			W.at(d - j, j) = (*x)[c];
		}
		for (auto const &z : nullspace(a))
		{
			std::vector<Rational> poly(d + 1);
			for (int c = 0; c < u; ++c)
			{
				int j = u - 1 - c;
				poly[j] = z[c];
				poly[d - j] = z[c];
			}
			dr.kernel.push_back(std::move(poly));
		}
		dr.dimension = static_cast<int>(dr.kernel.size());
		rep.degrees.push_back(dr);
	}
	rep.f = W.truncated(N);
	return rep;
}

bool model_hexagon_check(Series const &f, int N)
{
	if (f.order() < N - 2)
		throw std::invalid_argument("series known only to order " + std::to_string(f.order()));
	Series g = g_from_f(f.truncated(N - 2));
	L3Elem ab{1, 0, 0, g};
	L3Elem bc{0, 1, 0, g.substitute(0, 1, -1, -1)};
	L3Elem ca{0, 0, 1, g.substitute(-1, -1, 1, 0)};
	L3Elem lhs = hausdorff_in_L3(hausdorff_in_L3(ca, bc, N), ab, N);
	return lhs == L3Elem{1, 1, 1, Series(N - 2)};
}

#define CASSOC_HEXAGON(R)                                                                                               \
	template BiSeries<R> g_from_f(BiSeries<R> const &);                                                                 \
	template BiSeries<R> residual_39(BiSeries<R> const &);                                                              \
	template BiSeries<R> residual_15b(BiSeries<R> const &);                                                             \
	template std::pair<BiSeries<R>, BiSeries<R>> split_residuals(BiSeries<R> const &);                                  \
	template BiSeries<R> h_from_params(ParamSet<R> const &, int);                                                       \
	template BiSeries<R> htilde_from_params(ParamSet<R> const &, int);                                                  \
	template BiSeries<R> build_f(ParamSet<R> const &, int);                                                             \
	template BiSeries<R> extract_h(BiSeries<R> const &);                                                                \
	template BiSeries<R> extract_htilde(BiSeries<R> const &);                                                           \
	template std::map<Index2, R> decompose(BiSeries<R> const &);                                                        \
	template ParamSet<R> params_from_f(BiSeries<R> const &);

CASSOC_HEXAGON(Rational)
CASSOC_HEXAGON(ThetaPoly)

} // namespace cassoc
