#pragma once

#include <map>
#include <string>

#include "mouldcalc/poly.hpp"

namespace mould {

// Rational function num/den in canonical form: num and den coprime, den
// integer-primitive with positive graded-lex leading coefficient.  Equality
// of values is therefore structural equality.
class RatFun {
public:
	RatFun() : num_(), den_(Rational(1)) {}
	RatFun(Rational constant) : num_(Poly(std::move(constant))), den_(Rational(1)) {}
	explicit RatFun(Poly num) : num_(std::move(num)), den_(Rational(1)) {}
	RatFun(Poly num, Poly den);
	static RatFun variable(int32_t index) { return RatFun(Poly::variable(index)); }
	static RatFun from_linform(const LinForm &f) { return RatFun(Poly::from_linform(f)); }

	const Poly &num() const { return num_; }
	const Poly &den() const { return den_; }
	bool is_zero() const { return num_.is_zero(); }
	bool is_one() const { return num_.is_one() && den_.is_one(); }
	bool is_polynomial() const { return den_.is_one(); }
	int32_t max_variable() const;

	RatFun operator-() const;
	friend RatFun operator+(const RatFun &a, const RatFun &b);
	friend RatFun operator-(const RatFun &a, const RatFun &b);
	friend RatFun operator*(const RatFun &a, const RatFun &b);
	friend RatFun operator/(const RatFun &a, const RatFun &b); // throws DivisionByZero
	RatFun &operator+=(const RatFun &o) { return *this = *this + o; }
	RatFun &operator-=(const RatFun &o) { return *this = *this - o; }
	RatFun &operator*=(const RatFun &o) { return *this = *this * o; }
	RatFun &operator/=(const RatFun &o) { return *this = *this / o; }
	RatFun inverse() const;
	bool operator==(const RatFun &) const = default;
	// Arbitrary total order, for use as container key.
	std::strong_ordering operator<=>(const RatFun &o) const;

	// Throws PoleAtSubstitution when the substituted denominator vanishes
	// identically, Error when a variable of *this is missing from map.
	RatFun subst(const std::map<int32_t, LinForm> &map) const;
	RatFun shift_vars(int32_t offset) const;
	RatFun rename_vars(const std::map<int32_t, int32_t> &perm) const;

	std::string str(char family = 'x') const;

private:
	Poly num_, den_;
};

enum class ZeroTest { canonical, probabilistic };

// Canonical strategy is exact.  Probabilistic evaluates at random rationals,
// retrying on accidental poles of the denominator.
bool rf_is_zero(const RatFun &f, ZeroTest strategy, int trials = 8, Rng *rng = nullptr);

RatFun parse_ratfun(const std::string &text);

} // namespace mould
