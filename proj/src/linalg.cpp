#include "cassoc/linalg.h"

#include <map>

namespace cassoc {

std::vector<int> rref(Matrix &m)
{
	int r = m.rows(), c = m.cols();
	std::vector<int> pivots;
	int row = 0;
	for (int col = 0; col < c && row < r; ++col)
	{
		int p = row;
		while (p < r && m(p, col).is_zero())
			++p;
		if (p == r)
			continue;
		if (p != row)
			for (int j = 0; j < c; ++j)
				std::swap(m(p, j), m(row, j));
		Rational inv = unit_inverse(m(row, col));
		for (int j = col; j < c; ++j)
			m(row, j) *= inv;
		for (int i = 0; i < r; ++i)
		{
			if (i == row || m(i, col).is_zero())
				continue;
			Rational f = m(i, col);
			for (int j = col; j < c; ++j)
				m(i, j) -= f * m(row, j);
		}
		pivots.push_back(col);
		++row;
	}
	return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Rational>> nullspace(Matrix m)
{
	auto pivots = rref(m);
	int c = m.cols();
	std::vector<bool> is_pivot(c, false);
	for (int p : pivots)
		is_pivot[p] = true;
	std::vector<std::vector<Rational>> basis;
	for (int f = 0; f < c; ++f)
	{
		if (is_pivot[f])
			continue;
		std::vector<Rational> v(c);
		v[f] = 1;
		for (size_t i = 0; i < pivots.size(); ++i)
			v[pivots[i]] = -m(static_cast<int>(i), f);
		basis.push_back(std::move(v));
	}
	return basis;
}

SparseRow EchelonBasis::reduce(SparseRow const &v) const
{
	std::map<int, Rational> acc;
	for (auto const &[c, x] : v)
		if (!x.is_zero())
			acc[c] += x;
	auto it = acc.begin();
	while (it != acc.end())
	{
		if (it->second.is_zero())
		{
			it = acc.erase(it);
			continue;
		}
		int col = it->first;
		int p = pivot_of_[col];
		if (p < 0)
		{
			++it;
			continue;
		}
		Rational f = it->second;
		for (auto const &[c, x] : rows_[p])
		{
			auto &e = acc[c];
			e -= f * x;
		}
		it = acc.lower_bound(col);
	}
	SparseRow out;
	out.reserve(acc.size());
	for (auto &[c, x] : acc)
		if (!x.is_zero())
			out.emplace_back(c, std::move(x));
	return out;
}

bool EchelonBasis::add(SparseRow const &v)
{
	SparseRow r = reduce(v);
	if (r.empty())
		return false;
	Rational inv = unit_inverse(r.front().second);
	for (auto &e : r)
		e.second *= inv;
	pivot_of_[r.front().first] = static_cast<int>(rows_.size());
	rows_.push_back(std::move(r));
	return true;
}

} // namespace cassoc
