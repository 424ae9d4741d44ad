#include "mouldcalc/ratfun.hpp"

#include <cctype>
#include <sstream>

#include "mouldcalc/errors.hpp"

namespace mould {

namespace {

// Reduce by the gcd and rescale so den is integer-primitive with positive
// leading coefficient.
void canonicalize(Poly &num, Poly &den)
{
	if (den.is_zero())
		throw DivisionByZero("rational function with zero denominator");
	if (num.is_zero()) {
		den = Poly(Rational(1));
		return;
	}
	Poly g = gcd(num, den);
	if (!g.is_one()) {
		num = num.divide_exact(g);
		den = den.divide_exact(g);
	}
	Rational c = den.content_signed();
	if (c != 1) {
		den *= Rational(1) / c;
		num *= Rational(1) / c;
	}
}

} // namespace

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
	canonicalize(num_, den_);
}

int32_t RatFun::max_variable() const
{
	return std::max(num_.max_variable(), den_.max_variable());
}

RatFun RatFun::operator-() const
{
	RatFun r = *this;
	r.num_ = -r.num_;
	return r;
}

RatFun operator+(const RatFun &a, const RatFun &b)
{
	if (a.is_zero())
		return b;
	if (b.is_zero())
		return a;
	if (a.den_ == b.den_)
		return RatFun(a.num_ + b.num_, a.den_);
	Poly g = gcd(a.den_, b.den_);
	if (g.is_one())
		return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
	Poly da = a.den_.divide_exact(g), db = b.den_.divide_exact(g);
	return RatFun(a.num_ * db + b.num_ * da, da * b.den_);
}

RatFun operator-(const RatFun &a, const RatFun &b)
{
	return a + (-b);
}

RatFun operator*(const RatFun &a, const RatFun &b)
{
	if (a.is_zero() || b.is_zero())
		return RatFun();
	Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
	Poly n = a.num_.divide_exact(g1) * b.num_.divide_exact(g2);
	Poly d = a.den_.divide_exact(g2) * b.den_.divide_exact(g1);
	return RatFun(std::move(n), std::move(d));
}

RatFun RatFun::inverse() const
{
	if (is_zero())
		throw DivisionByZero("inverse of zero rational function");
	return RatFun(den_, num_);
}

RatFun operator/(const RatFun &a, const RatFun &b)
{
	if (b.is_zero())
		throw DivisionByZero("rational function division by zero");
	return a * b.inverse();
}

std::strong_ordering RatFun::operator<=>(const RatFun &o) const
{
	auto cmp_poly = [](const Poly &x, const Poly &y) -> std::strong_ordering {
		const auto &a = x.terms();
		const auto &b = y.terms();
		if (a.size() != b.size())
			return a.size() <=> b.size();
		for (size_t i = 0; i < a.size(); ++i) {
			if (auto c = graded_lex(a[i].mono, b[i].mono); c != std::strong_ordering::equal)
				return c;
			if (int s = cmp(a[i].coeff, b[i].coeff); s != 0)
				return s <=> 0;
		}
		return std::strong_ordering::equal;
	};
	if (auto c = cmp_poly(num_, o.num_); c != std::strong_ordering::equal)
		return c;
	return cmp_poly(den_, o.den_);
}

RatFun RatFun::subst(const std::map<int32_t, LinForm> &map) const
{
	Poly d = den_.subst(map);
	if (d.is_zero())
		throw PoleAtSubstitution();
	return RatFun(num_.subst(map), std::move(d));
}

RatFun RatFun::shift_vars(int32_t offset) const
{
	RatFun r = *this;
	r.num_ = r.num_.shift_vars(offset);
	r.den_ = r.den_.shift_vars(offset);
	return r;
}

RatFun RatFun::rename_vars(const std::map<int32_t, int32_t> &perm) const
{
	RatFun r = *this;
	r.num_ = r.num_.rename_vars(perm);
	r.den_ = r.den_.rename_vars(perm);
	// injective renames keep num/den coprime and den primitive; leading sign
	// can flip under a permutation, so re-run the cheap rescale
	Rational c = r.den_.content_signed();
	if (c != 1) {
		r.den_ *= Rational(1) / c;
		r.num_ *= Rational(1) / c;
	}
	return r;
}

bool rf_is_zero(const RatFun &f, ZeroTest strategy, int trials, Rng *rng)
{
	if (strategy == ZeroTest::canonical)
		return f.is_zero();
	Rng local(0xdecafbadULL);
	Rng &r = rng ? *rng : local;
	auto vars = f.num().variables();
	for (auto v : f.den().variables())
		vars.push_back(v);
	std::sort(vars.begin(), vars.end());
	vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
	for (int t = 0; t < trials; ++t) {
		for (int attempt = 0;; ++attempt) {
			std::map<int32_t, Rational> point;
			for (auto v : vars)
				point[v] = random_rational(r, 1000 + 100 * attempt);
			if (f.den().eval(point) == 0)
				continue; // accidental pole, retry
			if (f.num().eval(point) != 0)
				return false;
			break;
		}
	}
	return true;
}

std::string RatFun::str(char family) const
{
	std::string n = num_.str(family);
	if (den_.is_one())
		return n;
	const auto &dt = den_.terms();
	bool atom = dt.size() == 1 && dt[0].coeff == 1 && dt[0].mono.size() == 1 &&
	            dt[0].mono[0].second == 1;
	if (atom)
		return n + "/" + den_.str(family);
	return n + "/(" + den_.str(family) + ")";
}

// --- parsing ---

namespace {

struct Parser {
	const std::string &s;
	size_t i = 0;

	explicit Parser(const std::string &text) : s(text) {}

	void skip()
	{
		while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
			++i;
	}
	bool eat(char c)
	{
		skip();
		if (i < s.size() && s[i] == c) {
			++i;
			return true;
		}
		return false;
	}
	[[noreturn]] void fail(const std::string &msg)
	{
		throw ParseError(msg + " at offset " + std::to_string(i) + " in '" + s + "'");
	}

	Int integer()
	{
		skip();
		size_t start = i;
		while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
			++i;
		if (start == i)
			fail("expected integer");
		return Int(s.substr(start, i - start));
	}

	// coefficient := int [ '/' int ]   (the '/' branch only when digits follow)
	Rational coefficient()
	{
		Int n = integer();
		skip();
		if (i < s.size() && s[i] == '/' && i + 1 < s.size() &&
		    std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
			++i;
			Int d = integer();
			Rational q(n, d);
			q.canonicalize();
			return q;
		}
		return Rational(n);
	}

	bool at_variable()
	{
		skip();
		return i + 1 < s.size() && (s[i] == 'x' || s[i] == 'u' || s[i] == 'v') &&
		       std::isdigit(static_cast<unsigned char>(s[i + 1]));
	}

	std::pair<int32_t, int32_t> var_power()
	{
		++i; // family letter
		int32_t idx = 0;
		while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
			idx = idx * 10 + (s[i++] - '0');
		int32_t exp = 1;
		if (eat('^'))
			exp = int32_t(integer().get_si());
		return {idx, exp};
	}

	// factor := coefficient | variable['^'int] | '(' sum ')' ['^'int]
	Poly term()
	{
		Poly p{Rational(1)};
		bool any = false;
		for (;;) {
			skip();
			if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
				p *= coefficient();
			} else if (at_variable()) {
				auto [v, e] = var_power();
				Poly f = Poly::variable(v);
				for (int k = 1; k < e; ++k)
					f = f * Poly::variable(v);
				p = p * f;
			} else if (i < s.size() && s[i] == '(') {
				++i;
				Poly q = sum();
				if (!eat(')'))
					fail("expected ')'");
				int e = 1;
				if (eat('^'))
					e = int(integer().get_si());
				Poly f{Rational(1)};
				for (int k = 0; k < e; ++k)
					f = f * q;
				p = p * f;
			} else {
				break;
			}
			any = true;
			skip();
			if (eat('*'))
				continue;
			if (i < s.size() && (s[i] == '(' || at_variable()))
				continue;
			break;
		}
		if (!any)
			fail("expected term");
		return p;
	}

	Poly sum()
	{
		Poly p;
		bool first = true;
		for (;;) {
			skip();
			int sign = 1;
			bool saw_sign = false;
			while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
				if (s[i] == '-')
					sign = -sign;
				saw_sign = true;
				++i;
				skip();
			}
			if (!first && !saw_sign)
				break;
			Poly t = term();
			if (sign < 0)
				t = -t;
			p += t;
			first = false;
			skip();
			if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
				break;
		}
		return p;
	}
};

} // namespace

RatFun parse_ratfun(const std::string &text)
{
	// top-level '/' followed by '(' or a variable letter splits num from den
	int depth = 0;
	size_t split = std::string::npos;
	for (size_t k = 0; k < text.size(); ++k) {
		if (text[k] == '(')
			++depth;
		else if (text[k] == ')')
			--depth;
		else if (text[k] == '/' && depth == 0 && k + 1 < text.size()) {
			char c = text[k + 1];
			if (c == '(' || c == 'x' || c == 'u' || c == 'v')
				split = k;
		}
	}
	std::string num_text = split == std::string::npos ? text : text.substr(0, split);
	Parser np(num_text);
	Poly num = np.sum();
	np.skip();
	if (np.i != num_text.size())
		np.fail("trailing characters in numerator");
	if (split == std::string::npos)
		return RatFun(std::move(num));
	std::string den_text = text.substr(split + 1);
	Parser dp(den_text);
	Poly den = dp.sum();
	dp.skip();
	if (dp.i != den_text.size())
		dp.fail("trailing characters in denominator");
	return RatFun(std::move(num), std::move(den));
}

} // namespace mould
