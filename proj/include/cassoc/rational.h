#pragma once

#include <compare>
#include <gmpxx.h>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cassoc {

// exact rational, always in lowest terms with positive denominator
class Rational
{
	mpq_class v_;

  public:
	Rational() = default;
	Rational(int n) : v_(n) {}
	Rational(long n) : v_(n) {}
	Rational(long long n) : v_(mpz_class(std::to_string(n))) {}
	Rational(long p, long q);
	explicit Rational(mpz_class const &n) : v_(n) {}
	explicit Rational(mpq_class v);

	static Rational parse(std::string_view s);

	mpq_class const &raw() const { return v_; }
	mpz_class num() const { return v_.get_num(); }
	mpz_class den() const { return v_.get_den(); }

	bool is_zero() const { return sgn(v_) == 0; }
	bool is_integer() const { return v_.get_den() == 1; }
	int sign() const { return sgn(v_); }

	// "p/q", or "p" when the denominator is 1
	std::string str() const;
	std::string latex() const;

	Rational &operator+=(Rational const &o)
	{
		v_ += o.v_;
		return *this;
	}
	Rational &operator-=(Rational const &o)
	{
		v_ -= o.v_;
		return *this;
	}
	Rational &operator*=(Rational const &o)
	{
		v_ *= o.v_;
		return *this;
	}
	Rational &operator/=(Rational const &o);

	friend Rational operator+(Rational a, Rational const &b) { return a += b; }
	friend Rational operator-(Rational a, Rational const &b) { return a -= b; }
	friend Rational operator*(Rational a, Rational const &b) { return a *= b; }
	friend Rational operator/(Rational a, Rational const &b) { return a /= b; }
	friend Rational operator-(Rational const &a) { return Rational(mpq_class(-a.v_)); }

	friend bool operator==(Rational const &a, Rational const &b) { return cmp(a.v_, b.v_) == 0; }
	friend std::strong_ordering operator<=>(Rational const &a, Rational const &b)
	{
		int c = cmp(a.v_, b.v_);
		return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
	}

	friend std::ostream &operator<<(std::ostream &os, Rational const &r) { return os << r.str(); }
};

inline bool is_zero(Rational const &r) { return r.is_zero(); }
inline std::string to_string(Rational const &r) { return r.str(); }

// inverse of a unit of the coefficient ring
Rational unit_inverse(Rational const &r);

Rational pow(Rational const &r, int e);
Rational factorial(int n);
Rational binomial(int n, int k);

} // namespace cassoc
