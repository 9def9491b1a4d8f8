#include "cassoc/theta.h"

#include <stdexcept>

namespace cassoc {

int ThetaPoly::weight(Monomial const &m)
{
	int w = 0;
	for (size_t i = 0; i < m.size(); ++i)
		w += m[i] * static_cast<int>(2 * i + 3);
	return w;
}

// graded by weight, then by the exponent vectors read from the highest symbol down
bool ThetaPoly::MonomialLess::operator()(Monomial const &a, Monomial const &b) const
{
	int wa = weight(a), wb = weight(b);
	if (wa != wb)
		return wa > wb;
	if (a.size() != b.size())
		return a.size() > b.size();
	for (size_t i = a.size(); i-- > 0;)
		if (a[i] != b[i])
			return a[i] > b[i];
	return false;
}

ThetaPoly::ThetaPoly(Rational const &c)
{
	if (!c.is_zero())
		terms_.emplace(Monomial{}, c);
}

void ThetaPoly::add_term(Monomial m, Rational const &c)
{
	if (c.is_zero())
		return;
	while (!m.empty() && m.back() == 0)
		m.pop_back();
	auto [it, fresh] = terms_.try_emplace(std::move(m), c);
	if (fresh)
		return;
	it->second += c;
	if (it->second.is_zero())
		terms_.erase(it);
}

ThetaPoly ThetaPoly::theta(int n)
{
	if (n < 3 || n % 2 == 0)
		throw std::invalid_argument("formal symbols are t_n for odd n >= 3");
	Monomial m((n - 3) / 2 + 1, 0);
	m.back() = 1;
	return term(m, 1);
}

ThetaPoly ThetaPoly::term(Monomial m, Rational const &c)
{
	ThetaPoly p;
	p.add_term(std::move(m), c);
	return p;
}

bool ThetaPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational ThetaPoly::constant_term() const
{
	auto it = terms_.find(Monomial{});
	return it == terms_.end() ? Rational(0) : it->second;
}

int ThetaPoly::max_weight() const
{
	int w = -1;
	for (auto const &[m, c] : terms_)
		w = std::max(w, weight(m));
	return w;
}

bool ThetaPoly::weights_have_parity(int p) const
{
	for (auto const &[m, c] : terms_)
		if ((weight(m) - p) % 2)
			return false;
	return true;
}

ThetaPoly ThetaPoly::substitute(std::vector<Rational> const &vals) const
{
	ThetaPoly r;
	for (auto const &[m, c] : terms_)
	{
		Monomial rest = m;
		Rational v = c;
		for (size_t i = 0; i < m.size() && i < vals.size(); ++i)
		{
			v *= pow(vals[i], m[i]);
			rest[i] = 0;
		}
		r.add_term(std::move(rest), v);
	}
	return r;
}

namespace {

template <class F> std::string render(ThetaPoly const &p, F coeff, char const *sym, char const *times, bool braces)
{
	if (p.is_zero())
		return "0";
	std::string s;
	bool first = true;
	for (auto const &[m, c] : p.terms())
	{
		Rational a = c;
		if (!first)
		{
			s += a.sign() < 0 ? " - " : " + ";
			if (a.sign() < 0)
				a = -a;
		}
		first = false;
		std::string mono;
		for (size_t i = 0; i < m.size(); ++i)
		{
			if (m[i] == 0)
				continue;
			if (!mono.empty())
				mono += times;
			mono += std::string(sym) + (braces ? "{" + std::to_string(2 * i + 3) + "}" : std::to_string(2 * i + 3));
			if (m[i] > 1)
				mono += braces ? "^{" + std::to_string(m[i]) + "}" : "^" + std::to_string(m[i]);
		}
		if (mono.empty())
			s += coeff(a);
		else if (a == Rational(1))
			s += mono;
		else if (a == Rational(-1))
			s += "-" + mono;
		else
			s += coeff(a) + times + mono;
	}
	return s;
}

} // namespace

std::string ThetaPoly::str() const
{
	return render(*this, [](Rational const &r) { return r.str(); }, "t", "*", false);
}

std::string ThetaPoly::latex() const
{
	return render(*this, [](Rational const &r) { return r.latex(); }, "\\theta_", " ", true);
}

ThetaPoly &ThetaPoly::operator+=(ThetaPoly const &o)
{
	for (auto const &[m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

ThetaPoly &ThetaPoly::operator-=(ThetaPoly const &o)
{
	for (auto const &[m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

ThetaPoly &ThetaPoly::operator*=(Rational const &s)
{
	if (s.is_zero())
	{
		terms_.clear();
		return *this;
	}
	for (auto &[m, c] : terms_)
		c *= s;
	return *this;
}

ThetaPoly operator*(ThetaPoly const &a, ThetaPoly const &b)
{
	ThetaPoly r;
	for (auto const &[ma, ca] : a.terms_)
		for (auto const &[mb, cb] : b.terms_)
		{
			ThetaPoly::Monomial m(std::max(ma.size(), mb.size()), 0);
			for (size_t i = 0; i < ma.size(); ++i)
				m[i] += ma[i];
			for (size_t i = 0; i < mb.size(); ++i)
				m[i] += mb[i];
			r.add_term(std::move(m), ca * cb);
		}
	return r;
}

ThetaPoly unit_inverse(ThetaPoly const &p)
{
	if (!p.is_constant() || p.is_zero())
		throw std::domain_error("theta polynomial is not a unit");
	return ThetaPoly(unit_inverse(p.constant_term()));
}

} // namespace cassoc
