#include "cassoc/pentagon.h"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace cassoc {

namespace {

constexpr std::uint64_t one_of(int s) { return std::uint64_t(1) << (8 * (7 - s)); }

int min_var(std::uint64_t m)
{
	for (int s = 0; s < 8; ++s)
		if ((m >> (8 * (7 - s))) & 0xff)
			return s;
	return 8;
}

void add_to(std::map<CommKey, Rational> &m, CommKey const &k, Rational const &c)
{
	if (c.is_zero())
		return;
	auto [it, fresh] = m.try_emplace(k, c);
	if (!fresh)
	{
		it->second += c;
		if (it->second.is_zero())
			m.erase(it);
	}
}

char const *names = "abcdev";

} // namespace

LinComb letter_comb(int letters, int s)
{
	LinComb u(letters);
	u.at(s) = 1;
	return u;
}

LinComb operator+(LinComb a, LinComb const &b)
{
	for (size_t i = 0; i < a.size(); ++i)
		a[i] += b[i];
	return a;
}

LinComb operator-(LinComb a, LinComb const &b)
{
	for (size_t i = 0; i < a.size(); ++i)
		a[i] -= b[i];
	return a;
}

LinComb operator*(LinComb a, Rational const &s)
{
	for (auto &x : a)
		x *= s;
	return a;
}

int CommKey::degree() const
{
	int d = 2;
	for (int s = 0; s < 8; ++s)
		d += exponent(s);
	return d;
}

int CommKey::exponent(int s) const { return static_cast<int>((mono >> (8 * (7 - s))) & 0xff); }

MetaElem MetaElem::from_linear(LinComb const &u)
{
	MetaElem x(static_cast<int>(u.size()));
	x.linear_ = u;
	return x;
}

void MetaElem::add_comm(int i, int j, std::uint64_t mono, Rational const &c)
{
	if (i == j || c.is_zero())
		return;
	if (i < j)
	{
		add_comm(j, i, mono, -c);
		return;
	}
	int p = min_var(mono);
	if (p >= j)
	{
		add_to(comm_, {i, j, mono}, c);
		return;
	}
	// X_p g_ij = -X_i g_jp + X_j g_ip, both already normal
	std::uint64_t rest = mono - one_of(p);
	add_to(comm_, {j, p, rest + one_of(i)}, -c);
	add_to(comm_, {i, p, rest + one_of(j)}, c);
}

bool MetaElem::is_zero() const
{
	for (auto const &x : linear_)
		if (!x.is_zero())
			return false;
	return comm_.empty();
}

MetaElem MetaElem::degree_part(int n) const
{
	MetaElem r(letters_);
	if (n == 1)
		r.linear_ = linear_;
	for (auto const &[k, c] : comm_)
		if (k.degree() == n)
			r.comm_.emplace(k, c);
	return r;
}

int MetaElem::max_degree() const
{
	int d = 0;
	for (auto const &x : linear_)
		if (!x.is_zero())
			d = 1;
	for (auto const &[k, c] : comm_)
		d = std::max(d, k.degree());
	return d;
}

MetaElem &MetaElem::operator+=(MetaElem const &o)
{
	for (int s = 0; s < letters_; ++s)
		linear_[s] += o.linear_[s];
	for (auto const &[k, c] : o.comm_)
		add_to(comm_, k, c);
	return *this;
}

MetaElem &MetaElem::operator-=(MetaElem const &o)
{
	for (int s = 0; s < letters_; ++s)
		linear_[s] -= o.linear_[s];
	for (auto const &[k, c] : o.comm_)
		add_to(comm_, k, -c);
	return *this;
}

MetaElem operator*(MetaElem a, Rational const &s)
{
	if (s.is_zero())
		return MetaElem(a.letters_);
	for (auto &x : a.linear_)
		x *= s;
	for (auto &[k, c] : a.comm_)
		c *= s;
	return a;
}

std::string MetaElem::str() const
{
	std::ostringstream os;
	bool first = true;
	auto sep = [&](Rational const &c) {
		if (!first)
			os << (c < Rational(0) ? " - " : " + ");
		else if (c < Rational(0))
			os << "-";
		first = false;
	};
	for (int s = 0; s < letters_; ++s)
		if (!linear_[s].is_zero())
		{
			sep(linear_[s]);
			Rational a = linear_[s] < Rational(0) ? -linear_[s] : linear_[s];
			if (a != Rational(1))
				os << a.str() << "*";
			os << names[s];
		}
	for (auto const &[k, c] : comm_)
	{
		sep(c);
		Rational a = c < Rational(0) ? -c : c;
		if (a != Rational(1))
			os << a.str() << "*";
		os << "[";
		for (int s = 0; s < letters_; ++s)
			for (int e = 0; e < k.exponent(s); ++e)
				os << names[s];
		os << names[k.i] << names[k.j] << "]";
	}
	if (first)
		os << "0";
	return os.str();
}

MetaElem bracket(MetaElem const &x, MetaElem const &y)
{
	int r = x.letters();
	MetaElem out(r);
	auto const &xl = x.linear(), &yl = y.linear();
	for (int s = 0; s < r; ++s)
	{
		if (xl[s].is_zero())
			continue;
		for (int t = 0; t < r; ++t)
			if (!yl[t].is_zero())
				out.add_comm(s, t, 0, xl[s] * yl[t]);
		for (auto const &[k, c] : y.comm())
			out.add_comm(k.i, k.j, k.mono + one_of(s), xl[s] * c);
	}
	for (int t = 0; t < r; ++t)
	{
		if (yl[t].is_zero())
			continue;
		for (auto const &[k, c] : x.comm())
			out.add_comm(k.i, k.j, k.mono + one_of(t), -(yl[t] * c));
	}
	return out;
}

MetaElem ad(LinComb const &u, MetaElem const &x) { return bracket(MetaElem::from_linear(u), x); }

MetaElem long_commutator(std::vector<LinComb> const &word)
{
	if (word.size() < 2)
		throw std::invalid_argument("a long commutator needs at least two letters");
	MetaElem x = MetaElem::from_linear(word.back());
	for (size_t i = word.size() - 1; i-- > 0;)
		x = ad(word[i], x);
	return x;
}

MetaElem prefixed(std::vector<LinComb> const &word, MetaElem const &x)
{
	MetaElem r = x;
	for (size_t i = word.size(); i-- > 0;)
		r = ad(word[i], r);
	return r;
}

std::vector<MetaElem> quadratic_relations(QuotientVariant v)
{
	int r = v == QuotientVariant::L3bar ? 3 : 6;
	auto g = [&](int i, int j) {
		MetaElem m(r);
		m.add_comm(i, j, 0, 1);
		return m;
	};
	std::vector<MetaElem> rel;
	auto triple = [&](int p, int q, int s, int t, int y, int z) {
		rel.push_back(g(p, q) - g(s, t));
		rel.push_back(g(s, t) - g(y, z));
	};
	triple(la, lb, lb, lc, lc, la);
	if (r == 3)
		return rel;
	rel.push_back(g(la, le));
	rel.push_back(g(lb, lv));
	rel.push_back(g(lc, ld));
	triple(la, ld, ld, lv, lv, la);
	triple(lb, le, le, ld, ld, lb);
	triple(lc, le, le, lv, lv, lc);
	return rel;
}

namespace {

// monomials of total degree n in variables lo..r-1
void monomials(int lo, int r, int n, std::uint64_t acc, std::vector<std::uint64_t> &out)
{
	if (n == 0)
	{
		out.push_back(acc);
		return;
	}
	if (lo >= r)
		return;
	for (int e = n; e >= 0; --e)
		monomials(lo + 1, r, n - e, acc + one_of(lo) * static_cast<std::uint64_t>(e), out);
}

SparseRow to_row(MetaElem const &x, std::map<CommKey, int> const &column, int n)
{
	SparseRow row;
	for (auto const &[k, c] : x.comm())
	{
		if (k.degree() != n)
			continue;
		row.emplace_back(column.at(k), c);
	}
	return row;
}

} // namespace

QuotientReducer::QuotientReducer(QuotientVariant v, int N)
    : variant_(v), letters_(v == QuotientVariant::L3bar ? 3 : 6), N_(N), levels_(std::max(N + 1, 2))
{
	auto rel = quadratic_relations(v);
	for (int n = 2; n <= N; ++n)
	{
		Level &L = levels_[n];
		for (int i = 0; i < letters_; ++i)
			for (int j = 0; j < i; ++j)
			{
				std::vector<std::uint64_t> ms;
				monomials(j, letters_, n - 2, 0, ms);
				std::sort(ms.begin(), ms.end());
				for (auto m : ms)
					L.keys.push_back({i, j, m});
			}
		std::sort(L.keys.begin(), L.keys.end());
		for (size_t c = 0; c < L.keys.size(); ++c)
			L.column.emplace(L.keys[c], static_cast<int>(c));
		L.basis = EchelonBasis(static_cast<int>(L.keys.size()));
		std::vector<std::uint64_t> ms;
		monomials(0, letters_, n - 2, 0, ms);
		for (auto const &r : rel)
			for (auto m : ms)
			{
				MetaElem x(letters_);
				for (auto const &[k, c] : r.comm())
					x.add_comm(k.i, k.j, k.mono + m, c);
				L.basis.add(to_row(x, L.column, n));
			}
	}
}

int QuotientReducer::free_dimension(int n) const
{
	if (n == 1)
		return letters_;
	if (n < 1 || n > N_)
		throw std::out_of_range("degree exceeds reducer bound");
	return static_cast<int>(levels_[n].keys.size());
}

int QuotientReducer::dimension(int n) const
{
	if (n == 1)
		return letters_;
	return free_dimension(n) - levels_.at(n).basis.rank();
}

SparseRow QuotientReducer::reduce(MetaElem const &x, int n) const
{
	if (n > N_ || n < 1)
		throw std::out_of_range("degree exceeds reducer bound");
	if (n == 1)
	{
		SparseRow r;
		for (int s = 0; s < letters_; ++s)
			if (!x.linear()[s].is_zero())
				r.emplace_back(s, x.linear()[s]);
		return r;
	}
	auto const &L = levels_[n];
	return L.basis.reduce(to_row(x, L.column, n));
}

bool QuotientReducer::is_zero(MetaElem const &x) const
{
	int top = x.max_degree();
	for (int n = 1; n <= top; ++n)
		if (!reduce(x, n).empty())
			return false;
	return true;
}

MetaElem QuotientReducer::lift(SparseRow const &coords, int n) const
{
	MetaElem x(letters_);
	if (n == 1)
	{
		for (auto const &[c, v] : coords)
			x += MetaElem::letter(letters_, c) * v;
		return x;
	}
	if (n > N_ || n < 1)
		throw std::out_of_range("degree exceeds reducer bound");
	for (auto const &[c, v] : coords)
	{
		auto const &k = levels_[n].keys.at(c);
		x.add_comm(k.i, k.j, k.mono, v);
	}
	return x;
}

MetaElem phi_bar_eval(Series const &f, LinComb const &u, LinComb const &w, int N)
{
	int r = static_cast<int>(u.size());
	MetaElem out(r);
	int top = std::min(N - 2, f.order());
	if (top < 0)
		return out;
	// column l holds ad_w^l [u,w]; each row applies ad_u once more
	MetaElem base = bracket(MetaElem::from_linear(u), MetaElem::from_linear(w));
	std::vector<MetaElem> col{base};
	for (int l = 1; l <= top; ++l)
		col.push_back(ad(w, col.back()));
	for (int l = 0; l <= top; ++l)
	{
		MetaElem e = col[l];
		for (int k = 0; k + l <= top; ++k)
		{
			out += e * f.at(k, l);
			if (k + l < top)
				e = ad(u, e);
		}
	}
	return out;
}

bool PentagonResidual::is_zero() const
{
	for (auto const &r : by_degree)
		if (!r.empty())
			return false;
	return true;
}

int PentagonResidual::norm(int n) const { return static_cast<int>(by_degree.at(n).size()); }

PentagonResidual pentagon_residual(Series const &f, QuotientReducer const &q)
{
	if (q.variant() != QuotientVariant::L4bar)
		throw std::invalid_argument("the pentagon lives in the four strand quotient");
	int N = q.bound();
	auto L = [](int s) { return letter_comb(6, s); };
	MetaElem lhs = phi_bar_eval(f, L(lb), L(le), N) + phi_bar_eval(f, L(la) + L(lc), L(ld) + L(le), N) + phi_bar_eval(f, L(la), L(lb), N);
	MetaElem rhs = phi_bar_eval(f, L(la), L(lb) + L(ld), N) + phi_bar_eval(f, L(lb) + L(lc), L(le), N);
	MetaElem diff = lhs - rhs;
	PentagonResidual res;
	res.by_degree.resize(N + 1);
	for (int n = 2; n <= N; ++n)
		res.by_degree[n] = q.reduce(diff, n);
	return res;
}

PentagonResidual pentagon_residual(Series const &f, int N)
{
	return pentagon_residual(f, QuotientReducer(QuotientVariant::L4bar, N));
}

std::vector<DimensionRow> dimension_report(int N, QuotientVariant v)
{
	QuotientReducer q(v, N);
	std::vector<DimensionRow> out;
	for (int n = 1; n <= N; ++n)
	{
		DimensionRow row{n, q.free_dimension(n), q.dimension(n), 0};
		if (v == QuotientVariant::L3bar)
			row.expected = n == 1 ? 3 : n - 1;
		else
			row.expected = n == 1 ? 6 : 5 * (n - 1);
		out.push_back(row);
	}
	return out;
}

namespace {

struct Suite
{
	QuotientReducer q;
	std::vector<IdentityResult> results;

	LinComb L(int s) const { return letter_comb(6, s); }
	MetaElem g(int s, int t) const { return bracket(MetaElem::letter(6, s), MetaElem::letter(6, t)); }
	static std::vector<LinComb> rep(LinComb const &u, int k) { return std::vector<LinComb>(k, u); }
	static std::vector<LinComb> cat(std::vector<LinComb> a, std::vector<LinComb> const &b)
	{
		a.insert(a.end(), b.begin(), b.end());
		return a;
	}
	// [u^k w^l base]
	MetaElem pw(LinComb const &u, int k, LinComb const &w, int l, MetaElem const &base) const
	{
		return prefixed(cat(rep(u, k), rep(w, l)), base);
	}
	void check(std::string name, int k, int l, MetaElem const &zero)
	{
		results.push_back({std::move(name), k, l, q.is_zero(zero)});
	}
};

} // namespace

std::vector<IdentityResult> quotient_identity_suite(int kmax)
{
	Suite S{QuotientReducer(QuotientVariant::L4bar, 2 * kmax + 4), {}};
	LinComb a = S.L(la), b = S.L(lb), c = S.L(lc), d = S.L(ld), e = S.L(le), v = S.L(lv);
	LinComb mde = (d + e) * Rational(-1), me = e * Rational(-1), de = d + e;
	MetaElem x = S.g(la, lb), y = S.g(la, ld), z = S.g(lb, le), u = S.g(lc, le);

	// degree two and three relations
	S.check("[a+b+c,x] = 0", 0, 0, ad(a + b + c, x));
	S.check("[a+d+v,y] = 0", 0, 0, ad(a + d + v, y));
	S.check("[b+e+d,z] = 0", 0, 0, ad(b + e + d, z));
	S.check("[c+e+v,u] = 0", 0, 0, ad(c + e + v, u));
	S.check("[da]+[ea]+[va] = 0", 0, 0, S.g(ld, la) + S.g(le, la) + S.g(lv, la));
	S.check("[db]+[eb]+[vb] = 0", 0, 0, S.g(ld, lb) + S.g(le, lb) + S.g(lv, lb));
	S.check("[dx]+[ex]+[vx] = 0", 0, 0, ad(d, x) + ad(e, x) + ad(v, x));
	S.check("[dx] = -[cy]", 0, 0, ad(d, x) + ad(c, y));
	S.check("[dx] = -[cz]", 0, 0, ad(d, x) + ad(c, z));
	S.check("[dx] = [du]", 0, 0, ad(d, x) - ad(d, u));
	S.check("[ex] = -[ey]", 0, 0, ad(e, x) + ad(e, y));
	S.check("[ex] = -[az]", 0, 0, ad(e, x) + ad(a, z));
	S.check("[ex] = [au]", 0, 0, ad(e, x) - ad(a, u));
	S.check("[vx] = -[by]", 0, 0, ad(v, x) + ad(b, y));
	S.check("[vx] = -[vz]", 0, 0, ad(v, x) + ad(v, z));
	S.check("[vx] = [bu]", 0, 0, ad(v, x) - ad(b, u));

	// degree three is spanned by ten commutators
	{
		std::vector<MetaElem> span{ad(a, x), ad(b, x), ad(a, y), ad(d, y), ad(b, z), ad(e, z), ad(c, u), ad(e, u), ad(d, x), ad(e, x)};
		EchelonBasis eb(S.q.free_dimension(3));
		for (auto const &m : span)
		{
			auto row = S.q.reduce(m, 3);
			eb.add(row);
		}
		S.results.push_back({"degree 3 spanned by [ax],[bx],[ay],[dy],[bz],[ez],[cu],[eu],[dx],[ex]", 0, 0, eb.rank() == S.q.dimension(3)});
	}

	// prefix letters commute
	{
		std::vector<LinComb> letters{a, b, c, d, e, v};
		bool ok = true;
		for (int s = 0; s < 6; ++s)
			for (int t = 0; t < 6; ++t)
				for (int p = 0; p < 6; ++p)
					for (int r = 0; r < 6; ++r)
					{
						MetaElem w = S.g(p, r);
						ok = ok && S.q.is_zero(prefixed({letters[s], letters[t]}, w) - prefixed({letters[t], letters[s]}, w));
					}
		S.results.push_back({"[s s' w] = [s' s w]", 0, 0, ok});
	}

	for (int k = 0; k <= kmax; ++k)
		for (int l = 0; l <= kmax; ++l)
		{
			if (k + l >= 1)
			{
				S.check("[a d^k e^l x] = [e d^k e^l x]", k, l, S.pw(d, k, e, l, ad(a, x)) - S.pw(d, k, e, l, ad(e, x)));
				S.check("[b d^k e^l x] = [(-d-e) d^k e^l x]", k, l, S.pw(d, k, e, l, ad(b, x)) - S.pw(d, k, e, l, ad(mde, x)));
				S.check("[c d^k e^l x] = [d d^k e^l x]", k, l, S.pw(d, k, e, l, ad(c, x)) - S.pw(d, k, e, l, ad(d, x)));
			}
			if (l >= 1)
			{
				S.check("[b^k d^l x] = [(-d-e)^k d^l x]", k, l, S.pw(b, k, d, l, x) - S.pw(mde, k, d, l, x));
				S.check("[d^k b^l y] = -[d^k (-d-e)^l x]", k, l, S.pw(d, k, b, l, y) + S.pw(d, k, mde, l, x));
				S.check("[b^k c^l z] = [(-d-e)^k d^l x]", k, l, S.pw(b, k, c, l, z) - S.pw(mde, k, d, l, x));
				S.check("[c^k b^l u] = [d^k (-d-e)^l x]", k, l, S.pw(c, k, b, l, u) - S.pw(d, k, mde, l, x));
				S.check("[b^k c^l z] = -[(-d-e)^k d^l x]", k, l, S.pw(b, k, c, l, z) + S.pw(mde, k, d, l, x));
				S.check("[d^k e^l y] = -[d^k e^l x]", k, l, S.pw(d, k, e, l, y) + S.pw(d, k, e, l, x));
				S.check("[e^k d^l u] = [e^k d^l x]", k, l, S.pw(e, k, d, l, u) - S.pw(e, k, d, l, x));
				S.check("[a^k c^l y] = -[e^k d^l x]", k, l, S.pw(a, k, c, l, y) + S.pw(e, k, d, l, x));
				S.check("[c^k a^l u] = [d^k e^l x]", k, l, S.pw(c, k, a, l, u) - S.pw(d, k, e, l, x));
			}
			S.check("[a^k (b+d)^l a (b+d)] = [a^k b^l x]+[a^k d^l y]+[e^k d^l x]-[e^k (-d-e)^l x]", k, l,
			        long_commutator(S.cat(S.cat(S.rep(a, k), S.rep(b + d, l)), {a, b + d})) -
			            (S.pw(a, k, b, l, x) + S.pw(a, k, d, l, y) + S.pw(e, k, d, l, x) - S.pw(e, k, mde, l, x)));
			S.check("[(b+c)^k e^l (b+c) e] = [b^k e^l z]+[c^k e^l u]-[d^k e^l x]+[(-d-e)^k e^l x]", k, l,
			        long_commutator(S.cat(S.cat(S.rep(b + c, k), S.rep(e, l)), {b + c, e})) -
			            (S.pw(b, k, e, l, z) + S.pw(c, k, e, l, u) - S.pw(d, k, e, l, x) + S.pw(mde, k, e, l, x)));
			S.check("[(a+c)^k (d+e)^l (a+c)(d+e)] = [a^k d^l y]+[c^k e^l u]+[e^k d^l x]-[d^k e^l x]", k, l,
			        long_commutator(S.cat(S.cat(S.rep(a + c, k), S.rep(de, l)), {a + c, de})) -
			            (S.pw(a, k, d, l, y) + S.pw(c, k, e, l, u) + S.pw(e, k, d, l, x) - S.pw(d, k, e, l, x)));
		}

	for (int k = 0; k <= kmax; ++k)
	{
		S.check("[(b+d)^k x] = [b^k x]-[(-d-e)^k x]+[(-e)^k x]", k, 0, S.pw(b + d, k, b, 0, x) - (S.pw(b, k, b, 0, x) - S.pw(mde, k, b, 0, x) + S.pw(me, k, b, 0, x)));
		S.check("[(b+d)^k y] = [d^k y]+[d^k x]-[(-e)^k x]", k, 0, S.pw(b + d, k, b, 0, y) - (S.pw(d, k, b, 0, y) + S.pw(d, k, b, 0, x) - S.pw(me, k, b, 0, x)));
		S.check("[(b+c)^k z] = [b^k z]+[(-d-e)^k x]-[(-e)^k x]", k, 0, S.pw(b + c, k, b, 0, z) - (S.pw(b, k, b, 0, z) + S.pw(mde, k, b, 0, x) - S.pw(me, k, b, 0, x)));
		S.check("[(b+c)^k u] = [c^k u]-[d^k x]+[(-e)^k x]", k, 0, S.pw(b + c, k, b, 0, u) - (S.pw(c, k, b, 0, u) - S.pw(d, k, b, 0, x) + S.pw(me, k, b, 0, x)));
		S.check("[(d+e)^k y] = [d^k y]+[d^k x]-[(d+e)^k x]", k, 0, S.pw(de, k, b, 0, y) - (S.pw(d, k, b, 0, y) + S.pw(d, k, b, 0, x) - S.pw(de, k, b, 0, x)));
		S.check("[(d+e)^k u] = [e^k u]-[e^k x]+[(d+e)^k x]", k, 0, S.pw(de, k, b, 0, u) - (S.pw(e, k, b, 0, u) - S.pw(e, k, b, 0, x) + S.pw(de, k, b, 0, x)));
		S.check("[(a+c)^k y] = [a^k y]+[e^k x]-[(d+e)^k x]", k, 0, S.pw(a + c, k, b, 0, y) - (S.pw(a, k, b, 0, y) + S.pw(e, k, b, 0, x) - S.pw(de, k, b, 0, x)));
		S.check("[(a+c)^k u] = [c^k u]-[d^k x]+[(d+e)^k x]", k, 0, S.pw(a + c, k, b, 0, u) - (S.pw(c, k, b, 0, u) - S.pw(d, k, b, 0, x) + S.pw(de, k, b, 0, x)));
	}
	return S.results;
}

} // namespace cassoc
