#pragma once

#include "cassoc/hexagon.h"
#include "cassoc/linalg.h"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cassoc {

// letters of the four strand alphabet and of its three letter part
enum Letter : int
{
	la = 0, // t12
	lb = 1, // t23
	lc = 2, // t13
	ld = 3, // t24
	le = 4, // t34
	lv = 5  // t14
};

using LinComb = std::vector<Rational>;

LinComb letter_comb(int letters, int s);
LinComb operator+(LinComb a, LinComb const &b);
LinComb operator-(LinComb a, LinComb const &b);
LinComb operator*(LinComb a, Rational const &s);

// commutator part: prefix monomial X^m times g_ij = [x_i, x_j] with i > j
// and every variable of m at least j, the classical basis of the free
// metabelian Lie algebra. Exponent of variable s sits in byte 7-s.
struct CommKey
{
	int i = 0, j = 0;
	std::uint64_t mono = 0;

	int degree() const;
	int exponent(int s) const;
	auto operator<=>(CommKey const &) const = default;
};

class MetaElem
{
	int letters_;
	std::vector<Rational> linear_;
	std::map<CommKey, Rational> comm_;

  public:
	explicit MetaElem(int letters = 6) : letters_(letters), linear_(letters) {}

	static MetaElem from_linear(LinComb const &u);
	static MetaElem letter(int letters, int s) { return from_linear(letter_comb(letters, s)); }

	int letters() const { return letters_; }
	std::vector<Rational> const &linear() const { return linear_; }
	auto const &comm() const { return comm_; }

	// adds c X^m [x_i, x_j] for any i, j, straightening into normal form
	void add_comm(int i, int j, std::uint64_t mono, Rational const &c);

	bool is_zero() const;
	// the part of Lie degree n
	MetaElem degree_part(int n) const;
	int max_degree() const;

	MetaElem &operator+=(MetaElem const &o);
	MetaElem &operator-=(MetaElem const &o);
	friend MetaElem operator+(MetaElem a, MetaElem const &b) { return a += b; }
	friend MetaElem operator-(MetaElem a, MetaElem const &b) { return a -= b; }
	friend MetaElem operator*(MetaElem a, Rational const &s);
	friend bool operator==(MetaElem const &a, MetaElem const &b) { return a.linear_ == b.linear_ && a.comm_ == b.comm_; }

	std::string str() const;
};

MetaElem bracket(MetaElem const &x, MetaElem const &y);

// [u, x] for a linear element u
MetaElem ad(LinComb const &u, MetaElem const &x);

// [w_1 w_2 ... w_k] = [w_1, [w_2, [..., w_k]]], k >= 2
MetaElem long_commutator(std::vector<LinComb> const &word);

// [w_1 ... w_k x] = ad_{w_1} ... ad_{w_k} x
MetaElem prefixed(std::vector<LinComb> const &word, MetaElem const &x);

enum class QuotientVariant
{
	L3bar, // a, b, c with [a,b] = [b,c] = [c,a]
	L4bar  // the six letters with the eleven quadratic relations
};

// linear combinations of brackets of letters that vanish in the quotient
std::vector<MetaElem> quadratic_relations(QuotientVariant v);

// Exact quotient of the free metabelian algebra by the ideal of the
// quadratic relations, degree by degree up to N.
class QuotientReducer
{
	QuotientVariant variant_;
	int letters_, N_;
	struct Level
	{
		std::vector<CommKey> keys;
		std::map<CommKey, int> column;
		EchelonBasis basis{0};
	};
	std::vector<Level> levels_; // index = Lie degree, 2..N

  public:
	QuotientReducer(QuotientVariant v, int N);

	int bound() const { return N_; }
	int letters() const { return letters_; }
	QuotientVariant variant() const { return variant_; }

	// dimension of the free metabelian part and of the quotient at degree n
	int free_dimension(int n) const;
	int dimension(int n) const;

	// canonical coordinates of the degree n part, on the non-pivot columns
	SparseRow reduce(MetaElem const &x, int n) const;
	bool is_zero(MetaElem const &x) const;

	// the element with the given canonical coordinates
	MetaElem lift(SparseRow const &coords, int n) const;
};

// sum of alpha_kl [u^k w^l u w] for k+l <= N-2
MetaElem phi_bar_eval(Series const &f, LinComb const &u, LinComb const &w, int N);

struct PentagonResidual
{
	std::vector<SparseRow> by_degree; // index = Lie degree
	bool is_zero() const;
	// number of nonzero canonical coordinates at degree n
	int norm(int n) const;
};

// phi(b,e) + phi(a+c,d+e) + phi(a,b) - phi(a,b+d) - phi(b+c,e) in the quotient
PentagonResidual pentagon_residual(Series const &f, QuotientReducer const &q);
PentagonResidual pentagon_residual(Series const &f, int N);

struct DimensionRow
{
	int degree = 0;
	int free_dimension = 0;
	int dimension = 0;
	int expected = 0; // model value for L3bar, spanning bound for L4bar
};

std::vector<DimensionRow> dimension_report(int N, QuotientVariant v);

struct IdentityResult
{
	std::string name;
	int k = 0, l = 0;
	bool holds = false;
};

// the identities of the four strand quotient, each for all 0 <= k,l <= kmax
// within their ranges; evaluated by a reducer of bound kmax+l+4
std::vector<IdentityResult> quotient_identity_suite(int kmax);

} // namespace cassoc
