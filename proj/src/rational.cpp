#include "cassoc/rational.h"

#include <cctype>

namespace cassoc {

Rational::Rational(long p, long q)
{
	if (q == 0)
		throw std::domain_error("rational with zero denominator");
	v_ = mpq_class(p, q);
	v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v))
{
	if (v_.get_den() == 0)
		throw std::domain_error("rational with zero denominator");
	v_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s)
{
	size_t i = 0;
	if (i < s.size() && (s[i] == '-' || s[i] == '+'))
		++i;
	if (i == s.size())
		return false;
	for (; i < s.size(); ++i)
		if (!std::isdigit(static_cast<unsigned char>(s[i])))
			return false;
	return true;
}

mpz_class parse_integer(std::string_view s)
{
	if (!valid_integer(s))
		throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
	if (s[0] == '+')
		s.remove_prefix(1);
	return mpz_class(std::string(s), 10);
}

} // namespace

Rational Rational::parse(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	auto slash = s.find('/');
	if (slash == std::string_view::npos)
		return Rational(parse_integer(s));
	mpz_class p = parse_integer(s.substr(0, slash));
	auto qs = s.substr(slash + 1);
	if (!qs.empty() && (qs[0] == '-' || qs[0] == '+'))
		throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
	mpz_class q = parse_integer(qs);
	if (q == 0)
		throw std::domain_error("rational with zero denominator");
	return Rational(mpq_class(p, q));
}

std::string Rational::str() const
{
	if (v_.get_den() == 1)
		return v_.get_num().get_str();
	return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::latex() const
{
	if (v_.get_den() == 1)
		return v_.get_num().get_str();
	std::string s = sgn(v_) < 0 ? "-" : "";
	mpz_class p = abs(v_.get_num());
	return s + "\\frac{" + p.get_str() + "}{" + v_.get_den().get_str() + "}";
}

Rational &Rational::operator/=(Rational const &o)
{
	if (o.is_zero())
		throw std::domain_error("division by zero");
	v_ /= o.v_;
	return *this;
}

Rational unit_inverse(Rational const &r)
{
	if (r.is_zero())
		throw std::domain_error("zero is not a unit");
	return Rational(1) / r;
}

Rational pow(Rational const &r, int e)
{
	if (e < 0)
		return pow(unit_inverse(r), -e);
	mpz_class p, q;
	mpz_pow_ui(p.get_mpz_t(), r.raw().get_num_mpz_t(), e);
	mpz_pow_ui(q.get_mpz_t(), r.raw().get_den_mpz_t(), e);
	return Rational(mpq_class(p, q));
}

Rational factorial(int n)
{
	if (n < 0)
		throw std::domain_error("negative factorial");
	mpz_class f;
	mpz_fac_ui(f.get_mpz_t(), n);
	return Rational(f);
}

Rational binomial(int n, int k)
{
	if (k < 0 || n < 0 || k > n)
		return Rational(0);
	mpz_class b;
	mpz_bin_uiui(b.get_mpz_t(), n, k);
	return Rational(b);
}

} // namespace cassoc
