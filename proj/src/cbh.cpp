#include "cassoc/cbh.h"

#include "cassoc/bernoulli.h"

namespace cassoc {

namespace {

// (a lambda + b mu) s, known to min(order(s)+1, cap)
Series times_linear(Series const &s, Rational const &a, Rational const &b, int cap)
{
	int n = std::min(s.order() + 1, cap);
	Series r(n);
	for (int d = 1; d <= n; ++d)
		for (int k = 0; k <= d; ++k)
		{
			int l = d - k;
			Rational v = 0;
			if (k > 0)
				v += a * s.at(k - 1, l);
			if (l > 0)
				v += b * s.at(k, l - 1);
			r.at(k, l) = v;
		}
	return r;
}

Series d_lambda(Series const &s)
{
	Series r(std::max(s.order() - 1, -1));
	for (int d = 0; d <= r.order(); ++d)
		for (int k = 0; k <= d; ++k)
			r.at(k, d - k) = s.at(k + 1, d - k) * Rational(k + 1);
	return r;
}

Series d_mu(Series const &s)
{
	Series r(std::max(s.order() - 1, -1));
	for (int d = 0; d <= r.order(); ++d)
		for (int k = 0; k <= d; ++k)
			r.at(k, d - k) = s.at(k, d - k + 1) * Rational(d - k + 1);
	return r;
}

Series cap(Series const &s, int n) { return s.order() > n ? s.truncated(n) : s; }

} // namespace

Meta2 bracket(Meta2 const &x, Meta2 const &y)
{
	int n = std::min(x.comm.order(), y.comm.order());
	Series c = Series::constant(x.q * y.p - x.p * y.q, n);
	c += times_linear(y.comm, x.q, x.p, n);
	c -= times_linear(x.comm, y.q, y.p, n);
	return {0, 0, c};
}

Meta2 derivation(Meta2 const &x, Meta2 const &dq, Meta2 const &dp)
{
	int n = std::min({x.comm.order(), dq.comm.order(), dp.comm.order()});
	Meta2 r = dq * x.q + dp * x.p;
	r.comm = cap(r.comm, n);
	// kappa [Q,P] = [DQ, P] + [Q, DP]
	Meta2 Pm{1, 0, Series(n)}, Qm{0, 1, Series(n)};
	Series kappa = (bracket(dq, Pm) + bracket(Qm, dp)).comm;
	auto const &phi = x.comm;
	Series dc = times_linear(d_lambda(phi), dq.q, dq.p, n) + times_linear(d_mu(phi), dp.q, dp.p, n);
	if (n >= 0)
		dc += cap(phi, n) * cap(kappa, n);
	r.comm += cap(dc, n);
	return r;
}

Meta2 compressed_cbh(int N)
{
	return {1, 1, c_generating_from_table(N - 2)};
}

Meta2 classical_cbh_in_model(int N)
{
	int n = N - 2;
	Meta2 Q = Meta2::Q(N), P = Meta2::P(N);
	// H_1 = P + sum B_k/k! [Q^k P], and [Q^k P] = lambda^{k-1} [QP]
	Series c1(n);
	for (int k = 1; k - 1 <= n; ++k)
		c1.at(k - 1, 0) = bernoulli(k) / factorial(k);
	Meta2 H1{1, 0, c1};
	Meta2 zero{0, 0, Series(n)};
	Meta2 H = Q + H1, Hm = H1;
	for (int m = 2; m <= N; ++m)
	{
		Hm = derivation(Hm, H1, zero) * Rational(1, m);
		H = H + Hm;
	}
	return H;
}

Meta2 mirrored_cbh(int N)
{
	int n = N - 2;
	// [P^{n-1} Q^{m-1} P Q] = -lambda^{m-1} mu^{n-1} [QP]
	Series c(n);
	for (int d = 0; d <= n; ++d)
		for (int k = 0; k <= d; ++k)
		{
			int m = k + 1, nn = d - k + 1;
			c.at(k, d - k) = -ext_bernoulli_prime(m, nn) / (factorial(m) * factorial(nn));
		}
	return {1, 1, c};
}

Meta2 hausdorff_in_model(Meta2 const &x, Meta2 const &y, int N)
{
	int n = N - 2;
	// P = x, Q = y: ad_y acts as lambda', ad_x as mu'
	Series C = c_generating_closed(n).substitute(y.q, y.p, x.q, x.p);
	Meta2 r = x + y;
	r.comm = cap(r.comm, n);
	r.comm += C * cap(bracket(y, x).comm, n);
	return r;
}

NCPoly2::NCPoly2(int order) : order_(order)
{
	for (int len = 0; len <= order; ++len)
		c_.emplace_back(size_t(1) << len, Rational(0));
}

NCPoly2 NCPoly2::letter(int which, int order)
{
	NCPoly2 x(order);
	if (order >= 1)
		x.c_[1][which] = 1;
	return x;
}

NCPoly2 NCPoly2::one(int order)
{
	NCPoly2 x(order);
	x.c_[0][0] = 1;
	return x;
}

NCPoly2 operator+(NCPoly2 a, NCPoly2 const &b)
{
	for (int len = 0; len <= a.order_; ++len)
		for (size_t w = 0; w < a.c_[len].size(); ++w)
			a.c_[len][w] += b.c_[len][w];
	return a;
}

NCPoly2 operator-(NCPoly2 a, NCPoly2 const &b) { return a + b * Rational(-1); }

NCPoly2 operator*(NCPoly2 a, Rational const &s)
{
	for (auto &v : a.c_)
		for (auto &x : v)
			x *= s;
	return a;
}

NCPoly2 operator*(NCPoly2 const &a, NCPoly2 const &b)
{
	NCPoly2 r(std::min(a.order_, b.order_));
	for (int la = 0; la <= r.order_; ++la)
		for (size_t u = 0; u < a.c_[la].size(); ++u)
		{
			if (a.c_[la][u].is_zero())
				continue;
			for (int lb = 0; la + lb <= r.order_; ++lb)
				for (size_t v = 0; v < b.c_[lb].size(); ++v)
					if (!b.c_[lb][v].is_zero())
						r.c_[la + lb][(u << lb) | v] += a.c_[la][u] * b.c_[lb][v];
		}
	return r;
}

NCPoly2 exp(NCPoly2 const &x)
{
	NCPoly2 r = NCPoly2::one(x.order()), pw = r;
	for (int k = 1; k <= x.order(); ++k)
	{
		pw = pw * x * Rational(1, k);
		r = r + pw;
	}
	return r;
}

NCPoly2 log(NCPoly2 const &x)
{
	NCPoly2 t = x - NCPoly2::one(x.order());
	NCPoly2 r(x.order()), pw = NCPoly2::one(x.order());
	for (int k = 1; k <= x.order(); ++k)
	{
		pw = pw * t;
		r = r + pw * Rational(k % 2 ? 1 : -1, k);
	}
	return r;
}

Meta2 associative_log_oracle(int N)
{
	auto P = NCPoly2::letter(0, N), Q = NCPoly2::letter(1, N);
	NCPoly2 H = log(exp(P) * exp(Q));
	Meta2 gens[2] = {Meta2::P(N), Meta2::Q(N)};
	Meta2 r{0, 0, Series(N - 2)};
	for (int len = 1; len <= N; ++len)
		for (unsigned w = 0; w < (1u << len); ++w)
		{
			auto const &c = H.at(len, w);
			if (c.is_zero())
				continue;
			// [[...[x1,x2],...],xn]
			Meta2 y = gens[(w >> (len - 1)) & 1];
			for (int i = len - 2; i >= 0; --i)
				y = bracket(y, gens[(w >> i) & 1]);
			r = r + y * (c / Rational(len));
		}
	return r;
}

L3Elem L3Elem::gen(int which, int N)
{
	L3Elem x{0, 0, 0, Series(N - 2)};
	(which == 0 ? x.a : which == 1 ? x.b : x.c) = 1;
	return x;
}

L3Elem bracket(L3Elem const &x, L3Elem const &y)
{
	int n = std::min(x.comm.order(), y.comm.order());
	Rational lin = x.a * y.b - x.b * y.a + x.b * y.c - x.c * y.b + x.c * y.a - x.a * y.c;
	// ad_c = -lambda - mu
	Series c = Series::constant(lin, n);
	c += times_linear(y.comm, x.a - x.c, x.b - x.c, n);
	c -= times_linear(x.comm, y.a - y.c, y.b - y.c, n);
	return {0, 0, 0, c};
}

L3Elem hausdorff_in_L3(L3Elem const &x, L3Elem const &y, int N)
{
	int n = N - 2;
	Series C = c_generating_closed(n).substitute(y.a - y.c, y.b - y.c, x.a - x.c, x.b - x.c);
	L3Elem r = x + y;
	r.comm = cap(r.comm, n);
	r.comm += C * cap(bracket(y, x).comm, n);
	return r;
}

} // namespace cassoc
