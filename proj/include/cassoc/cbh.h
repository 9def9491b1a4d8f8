#pragma once

#include "cassoc/series.h"

#include <vector>

namespace cassoc {

using Series = BiSeries<Rational>;

// Element of the metabelian quotient of the free Lie algebra on P, Q.
// comm(k,l) multiplies ad_Q^k ad_P^l [Q,P] = [Q^k P^l Q P], so lambda
// stands for ad_Q and mu for ad_P. Truncated at Lie degree comm.order()+2.
struct Meta2
{
	Rational p, q;
	Series comm{-1};

	Meta2() = default;
	Meta2(Rational p_, Rational q_, Series c) : p(std::move(p_)), q(std::move(q_)), comm(std::move(c)) {}

	static Meta2 P(int N) { return {1, 0, Series(N - 2)}; }
	static Meta2 Q(int N) { return {0, 1, Series(N - 2)}; }

	int lie_order() const { return comm.order() + 2; }

	friend Meta2 operator+(Meta2 const &x, Meta2 const &y) { return {x.p + y.p, x.q + y.q, x.comm + y.comm}; }
	friend Meta2 operator-(Meta2 const &x, Meta2 const &y) { return {x.p - y.p, x.q - y.q, x.comm - y.comm}; }
	friend Meta2 operator*(Meta2 const &x, Rational const &s) { return {x.p * s, x.q * s, x.comm * s}; }
	friend bool operator==(Meta2 const &x, Meta2 const &y) { return x.p == y.p && x.q == y.q && x.comm == y.comm; }
};

Meta2 bracket(Meta2 const &x, Meta2 const &y);

// D(x) for the derivation fixed by D(Q) = dq, D(P) = dp
Meta2 derivation(Meta2 const &x, Meta2 const &dq, Meta2 const &dp);

// log(exp P exp Q) = P + Q + sum C_mn/(m!n!) [Q^{n-1} P^{m-1} Q P]
Meta2 compressed_cbh(int N);

// sum of H_m with H_m = (1/m) D(H_{m-1}), D(Q) = H_1, D(P) = 0
Meta2 classical_cbh_in_model(int N);

// the same rebuilt in the basis [P^{n-1} Q^{m-1} P Q] with the primed table
Meta2 mirrored_cbh(int N);

// log(exp x exp y) for arbitrary x, y of the model
Meta2 hausdorff_in_model(Meta2 const &x, Meta2 const &y, int N);

// truncated free associative algebra on P = letter 0, Q = letter 1;
// words of length n are stored as n-bit integers, first letter highest
class NCPoly2
{
	int order_;
	std::vector<std::vector<Rational>> c_;

  public:
	explicit NCPoly2(int order);

	static NCPoly2 letter(int which, int order);
	static NCPoly2 one(int order);

	int order() const { return order_; }
	Rational const &at(int len, unsigned word) const { return c_[len][word]; }
	Rational &at(int len, unsigned word) { return c_[len][word]; }

	friend NCPoly2 operator+(NCPoly2 a, NCPoly2 const &b);
	friend NCPoly2 operator-(NCPoly2 a, NCPoly2 const &b);
	friend NCPoly2 operator*(NCPoly2 const &a, NCPoly2 const &b);
	friend NCPoly2 operator*(NCPoly2 a, Rational const &s);
};

NCPoly2 exp(NCPoly2 const &x);
NCPoly2 log(NCPoly2 const &x);

// log(exp P exp Q) computed with words, projected by left bracketing
Meta2 associative_log_oracle(int N);

// The model with generators a, b, c where a+b+c is central and
// [a,b] = [b,c] = [c,a]; lambda, mu act as ad_a, ad_b on comm * [a,b].
struct L3Elem
{
	Rational a, b, c;
	Series comm{-1};

	L3Elem() = default;
	L3Elem(Rational a_, Rational b_, Rational c_, Series s) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), comm(std::move(s)) {}

	static L3Elem gen(int which, int N);

	int lie_order() const { return comm.order() + 2; }

	friend L3Elem operator+(L3Elem const &x, L3Elem const &y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.comm + y.comm}; }
	friend L3Elem operator-(L3Elem const &x, L3Elem const &y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.comm - y.comm}; }
	friend L3Elem operator*(L3Elem const &x, Rational const &s) { return {x.a * s, x.b * s, x.c * s, x.comm * s}; }
	friend bool operator==(L3Elem const &x, L3Elem const &y) { return x.a == y.a && x.b == y.b && x.c == y.c && x.comm == y.comm; }
};

L3Elem bracket(L3Elem const &x, L3Elem const &y);

// log(exp x exp y)
L3Elem hausdorff_in_L3(L3Elem const &x, L3Elem const &y, int N);

} // namespace cassoc
