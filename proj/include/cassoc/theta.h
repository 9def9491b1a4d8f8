#pragma once

#include "cassoc/rational.h"

#include <map>
#include <string>
#include <vector>

namespace cassoc {

// Polynomial over the rationals in commuting symbols t3, t5, t7, ...
// standing for the odd normalized zeta values. Exponent vector entry i
// is the power of t_{2i+3}; trailing zeros are trimmed.
class ThetaPoly
{
  public:
	using Monomial = std::vector<int>;

	struct MonomialLess
	{
		bool operator()(Monomial const &a, Monomial const &b) const;
	};

  private:
	std::map<Monomial, Rational, MonomialLess> terms_;

	void add_term(Monomial m, Rational const &c);

  public:
	ThetaPoly() = default;
	ThetaPoly(int c) : ThetaPoly(Rational(c)) {}
	ThetaPoly(Rational const &c);

	// the symbol t_n for odd n >= 3
	static ThetaPoly theta(int n);
	static ThetaPoly term(Monomial m, Rational const &c);

	static int weight(Monomial const &m);

	auto const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	Rational constant_term() const;
	// largest weight of a monomial, -1 for zero
	int max_weight() const;
	// every monomial has weight congruent to p mod 2
	bool weights_have_parity(int p) const;

	// evaluate the given odd symbols; symbols beyond vals.size() stay formal
	ThetaPoly substitute(std::vector<Rational> const &vals) const;

	// e.g. "9/2*t3^2 - 8/15120"
	std::string str() const;
	std::string latex() const;

	ThetaPoly &operator+=(ThetaPoly const &o);
	ThetaPoly &operator-=(ThetaPoly const &o);
	ThetaPoly &operator*=(Rational const &s);

	friend ThetaPoly operator+(ThetaPoly a, ThetaPoly const &b) { return a += b; }
	friend ThetaPoly operator-(ThetaPoly a, ThetaPoly const &b) { return a -= b; }
	friend ThetaPoly operator-(ThetaPoly a) { return a *= Rational(-1); }
	friend ThetaPoly operator*(ThetaPoly const &a, ThetaPoly const &b);
	friend ThetaPoly operator*(ThetaPoly a, Rational const &s) { return a *= s; }
	friend ThetaPoly operator*(Rational const &s, ThetaPoly a) { return a *= s; }
	friend ThetaPoly operator/(ThetaPoly a, Rational const &s) { return a *= unit_inverse(s); }

	friend bool operator==(ThetaPoly const &a, ThetaPoly const &b) { return a.terms_ == b.terms_; }
};

inline bool is_zero(ThetaPoly const &p) { return p.is_zero(); }
inline std::string to_string(ThetaPoly const &p) { return p.str(); }

// only nonzero constants are units
ThetaPoly unit_inverse(ThetaPoly const &p);

} // namespace cassoc
