#include "cassoc/bernoulli.h"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cassoc {

namespace {

std::mutex table_mutex;

std::vector<Rational> &bernoulli_table()
{
	static std::vector<Rational> t{Rational(1)};
	return t;
}

// rows[m-1][n-1] = C_mn, both tables filled up to a common weight m+n <= w
struct ExtTable
{
	int weight = 1;
	std::vector<std::vector<Rational>> rows;
};

ExtTable ext_table, prime_table;

Rational bernoulli_locked(int n)
{
	auto &t = bernoulli_table();
	while (static_cast<int>(t.size()) <= n)
	{
		int m = static_cast<int>(t.size());
		// sum_{k=0}^{m} binom(m+1,k) B_k = 0
		Rational s = 0;
		for (int k = 0; k < m; ++k)
			s += binomial(m + 1, k) * t[k];
		t.push_back(-s / Rational(m + 1));
	}
	return t[n];
}

// C_{m+1,n} = n/(n+1) C_{m,n+1} - 1/(n+1) sum_k binom(n+1,k) c1(k) C_{m,n-k+1}
void grow(ExtTable &tab, int w, bool primed)
{
	if (w <= tab.weight)
		return;
	auto c1 = [&](int k) { return primed && k == 1 ? Rational(1, 2) : bernoulli_locked(k); };
	tab.rows.resize(w - 1);
	for (int m = 1; m < w; ++m)
	{
		auto &row = tab.rows[m - 1];
		int want = w - m;
		for (int n = static_cast<int>(row.size()) + 1; n <= want; ++n)
		{
			if (m == 1)
			{
				row.push_back(c1(n));
				continue;
			}
			auto const &prev = tab.rows[m - 2];
			Rational s = Rational(n, n + 1) * prev[n];
			for (int k = 1; k <= n; ++k)
				s -= binomial(n + 1, k) * c1(k) * prev[n - k] / Rational(n + 1);
			row.push_back(s);
		}
	}
	tab.weight = w;
}

Rational lookup(ExtTable &tab, int m, int n, bool primed)
{
	if (m < 1 || n < 1)
		throw std::out_of_range("extended Bernoulli indices start at 1");
	std::lock_guard lock(table_mutex);
	grow(tab, m + n, primed);
	return tab.rows[m - 1][n - 1];
}

} // namespace

Rational bernoulli(int n)
{
	if (n < 0)
		throw std::out_of_range("negative Bernoulli index");
	std::lock_guard lock(table_mutex);
	return bernoulli_locked(n);
}

bool check_bernoulli_identity(int m, BernoulliIdentity variant)
{
	if (m < 1)
		return false;
	Rational s = 0;
	switch (variant)
	{
	case BernoulliIdentity::a:
		for (int n = 1; n <= m; ++n)
			s += binomial(m + 1, n) * bernoulli(n);
		return s == Rational(-1);
	case BernoulliIdentity::b:
		for (int k = 1; 2 * k <= m; ++k)
			s += binomial(m + 1, 2 * k) * bernoulli(2 * k);
		return s == Rational(m - 1, 2);
	case BernoulliIdentity::c:
		for (int n = 1; n <= m; ++n)
			s += (n % 2 ? -1 : 1) * binomial(m + 1, n) * bernoulli(n);
		return s == Rational(m);
	}
	return false;
}

Rational ext_bernoulli_recursive(int m, int n) { return lookup(ext_table, m, n, false); }

Rational ext_bernoulli_prime(int m, int n) { return lookup(prime_table, m, n, true); }

Rational ext_bernoulli_closed(int m, int n)
{
	if (m < 1 || n < 1)
		throw std::out_of_range("extended Bernoulli indices start at 1");
	Rational s = 0;
	for (int k = 0; k < m; ++k)
		s += binomial(m, k) * bernoulli(n + k);
	return s;
}

std::vector<Rational> gamma_coefficients(int N)
{
	// sum_{k=0}^{n} gamma_{n-k} / (2k+1)! = 0 for n >= 1
	std::vector<Rational> g{Rational(1)};
	for (int n = 1; 2 * n <= N; ++n)
	{
		Rational s = 0;
		for (int k = 1; k <= n; ++k)
			s += g[n - k] / factorial(2 * k + 1);
		g.push_back(-s);
	}
	return g;
}

} // namespace cassoc
