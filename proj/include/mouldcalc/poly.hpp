#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mouldcalc/rational.hpp"

namespace mould {

// One totally ordered variable universe.  The x/u/v spelling is a display
// affair: the paper renames x_i to u_i or v_i depending on which row of a
// bimould carries the variables, the arithmetic below never distinguishes.
struct VarId {
	int32_t index = 1; // >= 1

	friend auto operator<=>(const VarId &, const VarId &) = default;
};

std::string var_name(VarId v, char family);

// Integer linear combination of variables; no zero coefficients stored,
// the empty map is the zero form.
class LinForm {
public:
	LinForm() = default;
	static LinForm var(int32_t index) { return LinForm({{index, 1}}); }
	explicit LinForm(std::vector<std::pair<int32_t, int64_t>> terms);

	bool is_zero() const { return terms_.empty(); }
	// Nonzero iff the form is a single variable with coefficient one.
	const int32_t *single_variable() const;
	const std::vector<std::pair<int32_t, int64_t>> &terms() const { return terms_; }

	LinForm &operator+=(const LinForm &o);
	LinForm &operator-=(const LinForm &o);
	friend LinForm operator+(LinForm a, const LinForm &b) { return a += b; }
	friend LinForm operator-(LinForm a, const LinForm &b) { return a -= b; }
	friend auto operator<=>(const LinForm &, const LinForm &) = default;

	std::string str(char family = 'v') const;

private:
	std::vector<std::pair<int32_t, int64_t>> terms_; // sorted by variable
};

LinForm parse_linform(const std::string &text);

// Exponent vector: sorted (variable, exponent) pairs, exponents > 0.
using Monomial = std::vector<std::pair<int32_t, int32_t>>;

int total_degree(const Monomial &m);
// Graded lexicographic: first by total degree, then by exponents of x1, x2, ...
std::strong_ordering graded_lex(const Monomial &a, const Monomial &b);

// Sparse multivariate polynomial over Q.  Terms are kept sorted in
// descending graded-lex order with nonzero coefficients.
class Poly {
public:
	struct Term {
		Monomial mono;
		Rational coeff;
		bool operator==(const Term &) const = default;
	};

	Poly() = default;
	explicit Poly(Rational constant);
	static Poly variable(int32_t index);
	static Poly from_linform(const LinForm &f);
	// Terms in any order, possibly with duplicates or zeros; normalizes.
	static Poly from_terms(std::vector<Term> terms);

	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	bool is_one() const;
	const std::vector<Term> &terms() const { return terms_; }
	const Term &leading() const { return terms_.front(); }
	int degree() const { return terms_.empty() ? -1 : total_degree(terms_.front().mono); }
	int degree_in(int32_t var) const;
	int32_t max_variable() const; // 0 when constant
	std::vector<int32_t> variables() const;

	Poly operator-() const;
	Poly &operator+=(const Poly &o);
	Poly &operator-=(const Poly &o);
	friend Poly operator+(Poly a, const Poly &b) { return a += b; }
	friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
	friend Poly operator*(const Poly &a, const Poly &b);
	Poly &operator*=(const Poly &o) { return *this = *this * o; }
	Poly &operator*=(const Rational &c);
	friend bool operator==(const Poly &, const Poly &) = default;

	// Exact division; throws Error if d does not divide *this.
	Poly divide_exact(const Poly &d) const;

	Rational eval(const std::map<int32_t, Rational> &point) const;
	// x_i -> linear form; every variable present must be mapped.
	Poly subst(const std::map<int32_t, LinForm> &map) const;
	// x_i -> x_{i+offset}
	Poly shift_vars(int32_t offset) const;
	Poly rename_vars(const std::map<int32_t, int32_t> &perm) const;

	// gcd of coefficient numerators over lcm of denominators, signed so that
	// dividing by it leaves an integer-primitive poly with positive leading
	// coefficient.
	Rational content_signed() const;

	std::string str(char family = 'x') const;

private:
	std::vector<Term> terms_;
	void normalize();
};

Poly gcd(const Poly &a, const Poly &b);

} // namespace mould
