#pragma once

#include "cassoc/rational.h"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cassoc {

// Coefficient rings provide +, -, *, unary -, multiplication and division by
// a Rational, construction from int and Rational, is_zero() and
// unit_inverse(). Rational and ThetaPoly are the two in use.

namespace detail {

// unqualified so that argument-dependent lookup finds the ring's is_zero
template <class T> bool zero(T const &x) { return is_zero(x); }

} // namespace detail

struct SeriesError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

template <class R> class UniSeries
{
	int order_;
	std::vector<R> c_;

	void check(int k) const
	{
		if (k < 0 || k > order_)
			throw std::out_of_range("coefficient x^" + std::to_string(k) + " beyond truncation order " + std::to_string(order_));
	}

  public:
	explicit UniSeries(int order = 0) : order_(order), c_(order + 1, R(0)) {}

	int order() const { return order_; }
	R const &operator[](int k) const
	{
		check(k);
		return c_[k];
	}
	R &operator[](int k)
	{
		check(k);
		return c_[k];
	}

	UniSeries truncated(int m) const
	{
		if (m > order_)
			throw SeriesError("cannot extend a truncated series");
		UniSeries r(m);
		for (int k = 0; k <= m; ++k)
			r.c_[k] = c_[k];
		return r;
	}

	bool is_zero() const
	{
		for (auto const &x : c_)
			if (!detail::zero(x))
				return false;
		return true;
	}

	UniSeries &operator+=(UniSeries const &o)
	{
		*this = truncated(std::min(order_, o.order_));
		for (int k = 0; k <= order_; ++k)
			c_[k] = c_[k] + o.c_[k];
		return *this;
	}
	UniSeries &operator-=(UniSeries const &o)
	{
		*this = truncated(std::min(order_, o.order_));
		for (int k = 0; k <= order_; ++k)
			c_[k] = c_[k] - o.c_[k];
		return *this;
	}
	friend UniSeries operator+(UniSeries a, UniSeries const &b) { return a += b; }
	friend UniSeries operator-(UniSeries a, UniSeries const &b) { return a -= b; }
	friend UniSeries operator-(UniSeries a)
	{
		for (auto &x : a.c_)
			x = -x;
		return a;
	}
	friend UniSeries operator*(UniSeries const &a, UniSeries const &b)
	{
		UniSeries r(std::min(a.order_, b.order_));
		for (int i = 0; i <= r.order_; ++i)
		{
			if (detail::zero(a.c_[i]))
				continue;
			for (int j = 0; i + j <= r.order_; ++j)
				r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
		}
		return r;
	}
	friend UniSeries operator*(UniSeries a, Rational const &s)
	{
		for (auto &x : a.c_)
			x = x * s;
		return a;
	}

	friend bool operator==(UniSeries const &a, UniSeries const &b)
	{
		if (a.order_ != b.order_)
			return false;
		for (int k = 0; k <= a.order_; ++k)
			if (!detail::zero(a.c_[k] - b.c_[k]))
				return false;
		return true;
	}
};

// dense triangular storage, index d(d+1)/2 + k for the coefficient of
// lambda^k mu^l with d = k + l
template <class R> class BiSeries
{
	int order_;
	std::vector<R> c_;

	static size_t idx(int k, int l)
	{
		int d = k + l;
		return static_cast<size_t>(d) * (d + 1) / 2 + k;
	}
	void check(int k, int l) const
	{
		if (k < 0 || l < 0 || k + l > order_)
			throw std::out_of_range("coefficient (" + std::to_string(k) + "," + std::to_string(l) + ") beyond truncation order " + std::to_string(order_));
	}

  public:
	// order -1 is the series about which nothing is known
	explicit BiSeries(int order = 0) : order_(order), c_(order < 0 ? 0 : idx(0, order + 1), R(0))
	{
		if (order < -1)
			throw SeriesError("negative truncation order");
	}

	static BiSeries constant(R const &c, int order)
	{
		BiSeries s(order);
		if (order >= 0)
			s.c_[0] = c;
		return s;
	}
	static BiSeries monomial(int k, int l, R const &c, int order)
	{
		BiSeries s(order);
		if (k + l <= order)
			s.at(k, l) = c;
		return s;
	}
	// a lambda + b mu
	static BiSeries linear(Rational const &a, Rational const &b, int order)
	{
		BiSeries s(order);
		if (order >= 1)
		{
			s.at(1, 0) = R(a);
			s.at(0, 1) = R(b);
		}
		return s;
	}

	int order() const { return order_; }
	R const &at(int k, int l) const
	{
		check(k, l);
		return c_[idx(k, l)];
	}
	R &at(int k, int l)
	{
		check(k, l);
		return c_[idx(k, l)];
	}

	BiSeries truncated(int m) const
	{
		if (m > order_)
			throw SeriesError("cannot extend a truncated series");
		BiSeries r(m);
		for (size_t i = 0; i < r.c_.size(); ++i)
			r.c_[i] = c_[i];
		return r;
	}

	// coefficients of lambda^k mu^{d-k}, k = 0..d
	std::vector<R> degree_part(int d) const
	{
		std::vector<R> v;
		for (int k = 0; k <= d; ++k)
			v.push_back(at(k, d - k));
		return v;
	}

	bool is_zero() const
	{
		for (auto const &x : c_)
			if (!detail::zero(x))
				return false;
		return true;
	}

	bool is_symmetric() const
	{
		for (int d = 0; d <= order_; ++d)
			for (int k = 0; 2 * k < d; ++k)
				if (!detail::zero(at(k, d - k) - at(d - k, k)))
					return false;
		return true;
	}

	template <class F> auto transform(F f) const
	{
		using S = decltype(f(c_[0]));
		BiSeries<S> r(order_);
		for (int d = 0; d <= order_; ++d)
			for (int k = 0; k <= d; ++k)
				r.at(k, d - k) = f(at(k, d - k));
		return r;
	}
	template <class S> BiSeries<S> cast() const
	{
		return transform([](R const &x) { return S(x); });
	}

	BiSeries &operator+=(BiSeries const &o)
	{
		if (o.order_ < order_)
			*this = truncated(o.order_);
		for (size_t i = 0; i < c_.size(); ++i)
			c_[i] = c_[i] + o.c_[i];
		return *this;
	}
	BiSeries &operator-=(BiSeries const &o)
	{
		if (o.order_ < order_)
			*this = truncated(o.order_);
		for (size_t i = 0; i < c_.size(); ++i)
			c_[i] = c_[i] - o.c_[i];
		return *this;
	}
	friend BiSeries operator+(BiSeries a, BiSeries const &b) { return a += b; }
	friend BiSeries operator-(BiSeries a, BiSeries const &b) { return a -= b; }
	friend BiSeries operator-(BiSeries a)
	{
		for (auto &x : a.c_)
			x = -x;
		return a;
	}

	friend BiSeries operator*(BiSeries const &a, BiSeries const &b)
	{
		int n = std::min(a.order_, b.order_);
		BiSeries r(n);
		for (int d1 = 0; d1 <= n; ++d1)
			for (int k1 = 0; k1 <= d1; ++k1)
			{
				auto const &x = a.c_[idx(k1, d1 - k1)];
				if (detail::zero(x))
					continue;
				for (int d2 = 0; d1 + d2 <= n; ++d2)
					for (int k2 = 0; k2 <= d2; ++k2)
					{
						auto const &y = b.c_[idx(k2, d2 - k2)];
						if (detail::zero(y))
							continue;
						auto &z = r.c_[idx(k1 + k2, d1 - k1 + d2 - k2)];
						z = z + x * y;
					}
			}
		return r;
	}
	friend BiSeries operator*(BiSeries a, Rational const &s)
	{
		for (auto &x : a.c_)
			x = x * s;
		return a;
	}
	friend BiSeries operator*(Rational const &s, BiSeries a) { return a * s; }
	friend BiSeries operator/(BiSeries a, Rational const &s) { return a * unit_inverse(s); }

	// equal orders and coefficients
	friend bool operator==(BiSeries const &a, BiSeries const &b)
	{
		if (a.order_ != b.order_)
			return false;
		for (size_t i = 0; i < a.c_.size(); ++i)
			if (!detail::zero(a.c_[i] - b.c_[i]))
				return false;
		return true;
	}

	// t(lambda,mu) = s(a lambda + b mu, c lambda + d mu)
	BiSeries substitute(Rational const &a, Rational const &b, Rational const &c, Rational const &d) const;

	BiSeries swapped() const { return substitute(0, 1, 1, 0); }
	BiSeries even_part() const { return parity_part(0); }
	BiSeries odd_part() const { return parity_part(1); }

	// exact division by lambda^i mu^j, by a lambda + b mu, or by a series that
	// is a unit or a single linear form or monomial
	BiSeries divide_monomial(int i, int j) const;
	BiSeries divide_linear(Rational const &a, Rational const &b) const;
	BiSeries divide_exact(BiSeries const &d) const;
	BiSeries inverse() const;

  private:
	BiSeries parity_part(int parity) const
	{
		BiSeries r(order_);
		for (int d = parity; d <= order_; d += 2)
			for (int k = 0; k <= d; ++k)
				r.at(k, d - k) = at(k, d - k);
		return r;
	}
};

namespace detail {

// coefficients of (a lambda + b mu)^n, entry i for lambda^i mu^{n-i}
inline std::vector<std::vector<Rational>> linear_powers(Rational const &a, Rational const &b, int n)
{
	std::vector<std::vector<Rational>> p{{Rational(1)}};
	for (int e = 1; e <= n; ++e)
	{
		auto const &q = p.back();
		std::vector<Rational> r(e + 1);
		for (int i = 0; i < e; ++i)
		{
			r[i] += b * q[i];
			r[i + 1] += a * q[i];
		}
		p.push_back(std::move(r));
	}
	return p;
}

} // namespace detail

template <class R>
BiSeries<R> BiSeries<R>::substitute(Rational const &a, Rational const &b, Rational const &c, Rational const &d) const
{
	int n = order_;
	BiSeries r(n);
	if (n < 0)
		return r;
	auto P = detail::linear_powers(a, b, n);
	auto Q = detail::linear_powers(c, d, n);
	std::vector<Rational> prod;
	for (int deg = 0; deg <= n; ++deg)
		for (int k = 0; k <= deg; ++k)
		{
			int l = deg - k;
			auto const &x = at(k, l);
			if (detail::zero(x))
				continue;
			prod.assign(deg + 1, Rational(0));
			for (int i = 0; i <= k; ++i)
			{
				if (P[k][i].is_zero())
					continue;
				for (int j = 0; j <= l; ++j)
					if (!Q[l][j].is_zero())
						prod[i + j] += P[k][i] * Q[l][j];
			}
			for (int i = 0; i <= deg; ++i)
				if (!prod[i].is_zero())
					r.at(i, deg - i) = r.at(i, deg - i) + x * prod[i];
		}
	return r;
}

template <class R> BiSeries<R> BiSeries<R>::divide_monomial(int i, int j) const
{
	BiSeries r(order_ - i - j);
	for (int deg = 0; deg <= order_; ++deg)
		for (int k = 0; k <= deg; ++k)
		{
			int l = deg - k;
			auto const &x = at(k, l);
			if (k < i || l < j)
			{
				if (!detail::zero(x))
					throw SeriesError("not divisible");
				continue;
			}
			r.at(k - i, l - j) = x;
		}
	return r;
}

template <class R> BiSeries<R> BiSeries<R>::divide_linear(Rational const &a, Rational const &b) const
{
	if (a.is_zero() && b.is_zero())
		throw SeriesError("division by zero linear form");
	BiSeries q(order_ - 1);
	if (order_ >= 0 && !detail::zero(at(0, 0)))
		throw SeriesError("not divisible");
	for (int deg = 1; deg <= order_; ++deg)
	{
		// (a lambda + b mu) q_{deg-1} = s_deg, read off from the mu^deg end
		if (!b.is_zero())
		{
			Rational bi = unit_inverse(b);
			for (int k = 0; k < deg; ++k)
			{
				R v = at(k, deg - k);
				if (k > 0)
					v = v - q.at(k - 1, deg - k) * a;
				q.at(k, deg - 1 - k) = v * bi;
			}
			if (!detail::zero(at(deg, 0) - q.at(deg - 1, 0) * a))
				throw SeriesError("not divisible");
		}
		else
		{
			Rational ai = unit_inverse(a);
			for (int k = 1; k <= deg; ++k)
				q.at(k - 1, deg - k) = at(k, deg - k) * ai;
			if (!detail::zero(at(0, deg)))
				throw SeriesError("not divisible");
		}
	}
	return q;
}

template <class R> BiSeries<R> BiSeries<R>::inverse() const
{
	if (order_ < 0)
		return *this;
	R c0 = at(0, 0);
	auto ci = unit_inverse(c0);
	// s = c0 (1 + t), 1/s = c0^{-1} sum (-t)^k
	BiSeries t = *this * BiSeries::constant(ci, order_);
	t.at(0, 0) = R(0);
	BiSeries sum = BiSeries::constant(R(1), order_);
	BiSeries pw = sum;
	for (int k = 1; k <= order_; ++k)
	{
		pw = pw * t;
		if (k % 2)
			sum -= pw;
		else
			sum += pw;
	}
	return sum * BiSeries::constant(ci, order_);
}

template <class R> BiSeries<R> BiSeries<R>::divide_exact(BiSeries const &d) const
{
	if (d.order_ >= 0 && !detail::zero(d.at(0, 0)))
	{
		int n = std::min(order_, d.order_);
		return truncated(n) * d.truncated(n).inverse();
	}
	// a single monomial or a linear form, known exactly up to its order
	std::vector<std::pair<int, int>> support;
	for (int deg = 0; deg <= d.order_; ++deg)
		for (int k = 0; k <= deg; ++k)
			if (!detail::zero(d.at(k, deg - k)))
				support.emplace_back(k, deg - k);
	if (support.empty())
		throw SeriesError("division by zero series");
	if (support.size() == 1)
	{
		auto [i, j] = support[0];
		R c = d.at(i, j);
		return divide_monomial(i, j) * BiSeries::constant(unit_inverse(c), order_ - i - j);
	}
	if (support.size() == 2 && support[0].first + support[0].second == 1 && support[1].first + support[1].second == 1)
	{
		if constexpr (std::is_same_v<R, Rational>)
			return divide_linear(d.at(1, 0), d.at(0, 1));
		else
		{
			auto a = d.at(1, 0), b = d.at(0, 1);
			if (a.is_constant() && b.is_constant())
				return divide_linear(a.constant_term(), b.constant_term());
		}
	}
	throw SeriesError("not divisible");
}

// u(a lambda + b mu)
template <class R> BiSeries<R> compose_linear(UniSeries<R> const &u, Rational const &a, Rational const &b)
{
	int n = u.order();
	BiSeries<R> r(n);
	auto P = detail::linear_powers(a, b, n);
	for (int k = 0; k <= n; ++k)
	{
		if (detail::zero(u[k]))
			continue;
		for (int i = 0; i <= k; ++i)
			if (!P[k][i].is_zero())
				r.at(i, k - i) = r.at(i, k - i) + u[k] * P[k][i];
	}
	return r;
}

// sum u_k x^k for x without constant term
template <class R> BiSeries<R> compose(UniSeries<Rational> const &u, BiSeries<R> const &x)
{
	if (x.order() >= 0 && !detail::zero(x.at(0, 0)))
		throw SeriesError("inner series has a constant term");
	int n = std::min(u.order(), x.order());
	BiSeries<R> xs = x.truncated(n);
	BiSeries<R> r = BiSeries<R>::constant(R(u[0]), n);
	BiSeries<R> pw = BiSeries<R>::constant(R(1), n);
	for (int k = 1; k <= n; ++k)
	{
		pw = pw * xs;
		if (!u[k].is_zero())
			r += pw * u[k];
	}
	return r;
}

// elementary univariate series over the rationals
UniSeries<Rational> exp_series(int N);
UniSeries<Rational> log1p_series(int N);
UniSeries<Rational> sqrt1p_series(int N);
UniSeries<Rational> cosh_series(int N);
UniSeries<Rational> sinh_series(int N);

template <class R> BiSeries<R> exp(BiSeries<R> const &s)
{
	if (s.order() >= 0 && !detail::zero(s.at(0, 0)))
		throw SeriesError("non-unit constant term");
	return compose(exp_series(s.order()), s);
}

template <class R> BiSeries<R> log(BiSeries<R> const &s)
{
	if (s.order() >= 0 && !detail::zero(s.at(0, 0) - R(1)))
		throw SeriesError("non-unit constant term");
	BiSeries<R> t = s;
	if (t.order() >= 0)
		t.at(0, 0) = R(0);
	return compose(log1p_series(s.order()), t);
}

template <class R> BiSeries<R> sqrt(BiSeries<R> const &s)
{
	if (s.order() >= 0 && !detail::zero(s.at(0, 0) - R(1)))
		throw SeriesError("non-unit constant term");
	BiSeries<R> t = s;
	if (t.order() >= 0)
		t.at(0, 0) = R(0);
	return compose(sqrt1p_series(s.order()), t);
}

template <class R> BiSeries<R> cosh(BiSeries<R> const &s) { return compose(cosh_series(s.order()), s); }
template <class R> BiSeries<R> sinh(BiSeries<R> const &s) { return compose(sinh_series(s.order()), s); }

// named series of the text
UniSeries<Rational> x_over_expm1(int N);       // x/(e^x - 1)
UniSeries<Rational> expm1_over_x(int N);       // (e^x - 1)/x
UniSeries<Rational> two_x_over_sinh2x(int N);  // 2x/(e^x - e^-x)
UniSeries<Rational> sinhc_series(int N);       // (e^x - e^-x)/(2x)
UniSeries<Rational> exp_scaled(int N, Rational const &c); // e^{cx}

// (e^{l+m} - e^{-l-m}) / (2(l+m))
BiSeries<Rational> sinh_factor_bivariate(int N);

// (e^m - 1)/(l m) ((l+m)/(e^{l+m}-1) - m/(e^m-1))
BiSeries<Rational> c_generating_closed(int N);

// sum C_mn/(m! n!) lambda^{n-1} mu^{m-1} from the recursive table
BiSeries<Rational> c_generating_from_table(int N);

enum class StandardSeries
{
	x_over_expm1,
	expm1_over_x,
	two_x_over_sinh2x,
	sinh_factor_bivariate,
	c_generating_closed
};

std::variant<UniSeries<Rational>, BiSeries<Rational>> standard_series(StandardSeries name, int N);

} // namespace cassoc
