#pragma once

#include "cassoc/rational.h"

#include <optional>
#include <utility>
#include <vector>

namespace cassoc {

// dense rational matrix, row major
class Matrix
{
	int rows_ = 0, cols_ = 0;
	std::vector<Rational> a_;

  public:
	Matrix() = default;
	Matrix(int r, int c) : rows_(r), cols_(c), a_(static_cast<size_t>(r) * c) {}

	int rows() const { return rows_; }
	int cols() const { return cols_; }
	Rational &operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
	Rational const &operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
};

// reduced row echelon form in place, returns pivot columns
std::vector<int> rref(Matrix &m);

int rank(Matrix m);

// basis of {x : m x = 0}, one vector per free column (free entry = 1)
std::vector<std::vector<Rational>> nullspace(Matrix m);

// Solve m x = b where b lives in any module over the rationals.
// Free unknowns are set to zero; nullopt when inconsistent.
template <class R> std::optional<std::vector<R>> solve(Matrix m, std::vector<R> b)
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
		{
			for (int j = 0; j < c; ++j)
				std::swap(m(p, j), m(row, j));
			std::swap(b[p], b[row]);
		}
		Rational inv = unit_inverse(m(row, col));
		for (int j = col; j < c; ++j)
			m(row, j) *= inv;
		b[row] = b[row] * inv;
		for (int i = 0; i < r; ++i)
		{
			if (i == row || m(i, col).is_zero())
				continue;
			Rational f = m(i, col);
			for (int j = col; j < c; ++j)
				m(i, j) -= f * m(row, j);
			b[i] = b[i] - b[row] * f;
		}
		pivots.push_back(col);
		++row;
	}
	for (int i = row; i < r; ++i)
		if (!is_zero(b[i]))
			return std::nullopt;
	std::vector<R> x(c);
	for (int i = 0; i < row; ++i)
		x[pivots[i]] = b[i];
	return x;
}

using SparseRow = std::vector<std::pair<int, Rational>>;

// Incremental echelon basis of sparse rows; the pivot of a row is its
// smallest column and every stored row is normalized to pivot entry 1.
// Stored rows are reduced against earlier pivots only, which is enough
// for a membership test and for a unique remainder on non-pivot columns
// once the remainder is fully reduced.
class EchelonBasis
{
	std::vector<int> pivot_of_; // column -> stored row, or -1
	std::vector<SparseRow> rows_;

  public:
	explicit EchelonBasis(int columns) : pivot_of_(columns, -1) {}

	int columns() const { return static_cast<int>(pivot_of_.size()); }
	int rank() const { return static_cast<int>(rows_.size()); }
	bool is_pivot(int col) const { return pivot_of_[col] >= 0; }

	// remainder of v against the basis, free of pivot columns
	SparseRow reduce(SparseRow const &v) const;

	// true when v enlarged the span
	bool add(SparseRow const &v);
};

} // namespace cassoc
