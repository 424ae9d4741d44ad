#include "mouldcalc/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "mouldcalc/errors.hpp"

namespace mould {

std::string var_name(VarId v, char family)
{
	return std::string(1, family) + std::to_string(v.index);
}

LinForm::LinForm(std::vector<std::pair<int32_t, int64_t>> terms) : terms_(std::move(terms))
{
	std::sort(terms_.begin(), terms_.end());
	size_t out = 0;
	for (size_t i = 0; i < terms_.size();) {
		int64_t c = 0;
		size_t j = i;
		while (j < terms_.size() && terms_[j].first == terms_[i].first)
			c += terms_[j++].second;
		if (c != 0)
			terms_[out++] = {terms_[i].first, c};
		i = j;
	}
	terms_.resize(out);
}

const int32_t *LinForm::single_variable() const
{
	if (terms_.size() == 1 && terms_[0].second == 1)
		return &terms_[0].first;
	return nullptr;
}

LinForm &LinForm::operator+=(const LinForm &o)
{
	auto merged = terms_;
	merged.insert(merged.end(), o.terms_.begin(), o.terms_.end());
	*this = LinForm(std::move(merged));
	return *this;
}

LinForm &LinForm::operator-=(const LinForm &o)
{
	auto merged = terms_;
	for (auto [v, c] : o.terms_)
		merged.emplace_back(v, -c);
	*this = LinForm(std::move(merged));
	return *this;
}

std::string LinForm::str(char family) const
{
	if (terms_.empty())
		return "0";
	std::ostringstream out;
	bool first = true;
	for (auto [v, c] : terms_) {
		if (c < 0)
			out << '-';
		else if (!first)
			out << '+';
		if (c != 1 && c != -1)
			out << (c < 0 ? -c : c) << '*';
		out << var_name({v}, family);
		first = false;
	}
	return out.str();
}

LinForm parse_linform(const std::string &text)
{
	std::vector<std::pair<int32_t, int64_t>> terms;
	size_t i = 0;
	auto skip_ws = [&] {
		while (i < text.size() && text[i] == ' ')
			++i;
	};
	skip_ws();
	if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size())
		return LinForm{};
	while (i < text.size()) {
		skip_ws();
		int64_t sign = 1;
		while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
			if (text[i] == '-')
				sign = -sign;
			++i;
			skip_ws();
		}
		if (i >= text.size())
			throw ParseError("dangling sign in linear form: " + text);
		int64_t coeff = 1;
		if (std::isdigit(text[i])) {
			coeff = 0;
			while (i < text.size() && std::isdigit(text[i]))
				coeff = coeff * 10 + (text[i++] - '0');
			if (i < text.size() && text[i] == '*')
				++i;
		}
		skip_ws();
		if (i >= text.size() || (text[i] != 'x' && text[i] != 'u' && text[i] != 'v'))
			throw ParseError("expected variable in linear form: " + text);
		++i;
		if (i >= text.size() || !std::isdigit(text[i]))
			throw ParseError("expected variable index in linear form: " + text);
		int32_t idx = 0;
		while (i < text.size() && std::isdigit(text[i]))
			idx = idx * 10 + (text[i++] - '0');
		terms.emplace_back(idx, sign * coeff);
		skip_ws();
	}
	return LinForm(std::move(terms));
}

int total_degree(const Monomial &m)
{
	int d = 0;
	for (auto [v, e] : m)
		d += e;
	return d;
}

std::strong_ordering graded_lex(const Monomial &a, const Monomial &b)
{
	if (int da = total_degree(a), db = total_degree(b); da != db)
		return da <=> db;
	size_t i = 0, j = 0;
	while (i < a.size() || j < b.size()) {
		int32_t va = i < a.size() ? a[i].first : INT32_MAX;
		int32_t vb = j < b.size() ? b[j].first : INT32_MAX;
		if (va < vb)
			return std::strong_ordering::greater; // a has the earlier variable
		if (vb < va)
			return std::strong_ordering::less;
		if (a[i].second != b[j].second)
			return a[i].second <=> b[j].second;
		++i, ++j;
	}
	return std::strong_ordering::equal;
}

static bool term_before(const Poly::Term &s, const Poly::Term &t)
{
	return graded_lex(s.mono, t.mono) == std::strong_ordering::greater;
}

Poly::Poly(Rational constant)
{
	if (constant != 0)
		terms_.push_back({{}, std::move(constant)});
}

Poly Poly::variable(int32_t index)
{
	Poly p;
	p.terms_.push_back({{{index, 1}}, Rational(1)});
	return p;
}

Poly Poly::from_linform(const LinForm &f)
{
	std::vector<Term> terms;
	for (auto [v, c] : f.terms())
		terms.push_back({{{v, 1}}, rat(c)});
	return from_terms(std::move(terms));
}

Poly Poly::from_terms(std::vector<Term> terms)
{
	Poly p;
	p.terms_ = std::move(terms);
	p.normalize();
	return p;
}

void Poly::normalize()
{
	std::sort(terms_.begin(), terms_.end(), term_before);
	size_t out = 0;
	for (size_t i = 0; i < terms_.size();) {
		Rational c = terms_[i].coeff;
		size_t j = i + 1;
		while (j < terms_.size() && terms_[j].mono == terms_[i].mono)
			c += terms_[j++].coeff;
		if (c != 0)
			terms_[out++] = {std::move(terms_[i].mono), std::move(c)};
		i = j;
	}
	terms_.resize(out);
}

bool Poly::is_constant() const
{
	return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty());
}

bool Poly::is_one() const
{
	return terms_.size() == 1 && terms_[0].mono.empty() && terms_[0].coeff == 1;
}

int Poly::degree_in(int32_t var) const
{
	int d = 0;
	for (const auto &t : terms_)
		for (auto [v, e] : t.mono)
			if (v == var)
				d = std::max(d, int(e));
	return d;
}

int32_t Poly::max_variable() const
{
	int32_t m = 0;
	for (const auto &t : terms_)
		if (!t.mono.empty())
			m = std::max(m, t.mono.back().first);
	return m;
}

std::vector<int32_t> Poly::variables() const
{
	std::vector<int32_t> vars;
	for (const auto &t : terms_)
		for (auto [v, e] : t.mono)
			vars.push_back(v);
	std::sort(vars.begin(), vars.end());
	vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
	return vars;
}

Poly Poly::operator-() const
{
	Poly p = *this;
	for (auto &t : p.terms_)
		t.coeff = -t.coeff;
	return p;
}

Poly &Poly::operator+=(const Poly &o)
{
	std::vector<Term> merged;
	merged.reserve(terms_.size() + o.terms_.size());
	size_t i = 0, j = 0;
	while (i < terms_.size() || j < o.terms_.size()) {
		if (j == o.terms_.size() || (i < terms_.size() && term_before(terms_[i], o.terms_[j]))) {
			merged.push_back(std::move(terms_[i++]));
		} else if (i == terms_.size() || term_before(o.terms_[j], terms_[i])) {
			merged.push_back(o.terms_[j++]);
		} else {
			Rational c = terms_[i].coeff + o.terms_[j].coeff;
			if (c != 0)
				merged.push_back({std::move(terms_[i].mono), std::move(c)});
			++i, ++j;
		}
	}
	terms_ = std::move(merged);
	return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
	return *this += -o;
}

static Monomial mono_mul(const Monomial &a, const Monomial &b)
{
	Monomial m;
	m.reserve(a.size() + b.size());
	size_t i = 0, j = 0;
	while (i < a.size() || j < b.size()) {
		if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
			m.push_back(a[i++]);
		else if (i == a.size() || b[j].first < a[i].first)
			m.push_back(b[j++]);
		else {
			m.emplace_back(a[i].first, a[i].second + b[j].second);
			++i, ++j;
		}
	}
	return m;
}

Poly operator*(const Poly &a, const Poly &b)
{
	if (a.is_zero() || b.is_zero())
		return {};
	std::map<Monomial, Rational, decltype([](const Monomial &x, const Monomial &y) {
		        return graded_lex(x, y) == std::strong_ordering::greater;
	        })>
	    acc;
	for (const auto &s : a.terms())
		for (const auto &t : b.terms()) {
			Rational c = s.coeff * t.coeff;
			auto [it, fresh] = acc.emplace(mono_mul(s.mono, t.mono), c);
			if (!fresh)
				it->second += c;
		}
	std::vector<Poly::Term> terms;
	terms.reserve(acc.size());
	for (auto &[m, c] : acc)
		if (c != 0)
			terms.push_back({m, std::move(c)});
	Poly p;
	return Poly::from_terms(std::move(terms));
}

Poly &Poly::operator*=(const Rational &c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto &t : terms_)
		t.coeff *= c;
	return *this;
}

static bool mono_divides(const Monomial &d, const Monomial &m, Monomial &quot)
{
	quot.clear();
	size_t i = 0;
	for (auto [v, e] : m) {
		if (i < d.size() && d[i].first == v) {
			if (d[i].second > e)
				return false;
			if (d[i].second < e)
				quot.emplace_back(v, e - d[i].second);
			++i;
		} else {
			quot.emplace_back(v, e);
		}
	}
	return i == d.size();
}

Poly Poly::divide_exact(const Poly &d) const
{
	if (d.is_zero())
		throw DivisionByZero("polynomial division by zero");
	Poly rem = *this;
	std::vector<Term> quot_terms;
	Monomial q;
	while (!rem.is_zero()) {
		const Term &lead = rem.leading();
		if (!mono_divides(d.leading().mono, lead.mono, q))
			throw Error("polynomial division is not exact");
		Rational c = lead.coeff / d.leading().coeff;
		Poly piece;
		piece.terms_.push_back({q, c});
		quot_terms.push_back({q, c});
		rem -= piece * d;
	}
	return from_terms(std::move(quot_terms));
}

Rational Poly::eval(const std::map<int32_t, Rational> &point) const
{
	Rational total = 0;
	for (const auto &t : terms_) {
		Rational v = t.coeff;
		for (auto [var, e] : t.mono) {
			auto it = point.find(var);
			if (it == point.end())
				throw Error("variable x" + std::to_string(var) + " not in evaluation point");
			for (int k = 0; k < e; ++k)
				v *= it->second;
		}
		total += v;
	}
	return total;
}

Poly Poly::subst(const std::map<int32_t, LinForm> &map) const
{
	std::map<int32_t, std::vector<Poly>> powers; // var -> [1, f, f^2, ...]
	Poly result;
	for (const auto &t : terms_) {
		Poly piece(t.coeff);
		for (auto [var, e] : t.mono) {
			auto it = map.find(var);
			if (it == map.end())
				throw Error("variable x" + std::to_string(var) + " not in substitution domain");
			auto &pw = powers[var];
			if (pw.empty())
				pw.push_back(Poly(Rational(1)));
			while (int(pw.size()) <= e)
				pw.push_back(pw.back() * Poly::from_linform(it->second));
			piece = piece * pw[e];
		}
		result += piece;
	}
	return result;
}

Poly Poly::shift_vars(int32_t offset) const
{
	Poly p = *this;
	for (auto &t : p.terms_)
		for (auto &[v, e] : t.mono)
			v += offset;
	return p; // uniform shifts preserve both monomial order and term order
}

Poly Poly::rename_vars(const std::map<int32_t, int32_t> &perm) const
{
	std::vector<Term> terms;
	terms.reserve(terms_.size());
	for (const auto &t : terms_) {
		Monomial m;
		for (auto [v, e] : t.mono) {
			auto it = perm.find(v);
			m.emplace_back(it == perm.end() ? v : it->second, e);
		}
		std::sort(m.begin(), m.end());
		terms.push_back({std::move(m), t.coeff});
	}
	return from_terms(std::move(terms));
}

Rational Poly::content_signed() const
{
	if (is_zero())
		return 1;
	Int g = 0, l = 1;
	for (const auto &t : terms_) {
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num().get_mpz_t());
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den().get_mpz_t());
	}
	Rational c(g, l);
	c.canonicalize();
	if (leading().coeff < 0)
		c = -c;
	return c;
}

std::string Poly::str(char family) const
{
	if (terms_.empty())
		return "0";
	std::ostringstream out;
	bool first = true;
	for (const auto &t : terms_) {
		Rational c = t.coeff;
		if (c < 0) {
			out << '-';
			c = -c;
		} else if (!first) {
			out << '+';
		}
		bool want_coeff = (c != 1) || t.mono.empty();
		if (want_coeff)
			out << to_string(c);
		bool want_star = want_coeff;
		for (auto [v, e] : t.mono) {
			if (want_star)
				out << '*';
			out << var_name({v}, family);
			if (e > 1)
				out << '^' << e;
			want_star = true;
		}
		first = false;
	}
	return out.str();
}

// --- multivariate gcd: content/primitive-part recursion + subresultant PRS ---

namespace {

// View of a poly as univariate in `var` with Poly coefficients.
std::vector<Poly> coeffs_in(const Poly &p, int32_t var)
{
	std::vector<Poly> cs(p.degree_in(var) + 1);
	for (const auto &t : p.terms()) {
		int e = 0;
		Monomial rest;
		for (auto [v, k] : t.mono) {
			if (v == var)
				e = k;
			else
				rest.emplace_back(v, k);
		}
		cs[e] += Poly::from_terms({{rest, t.coeff}});
	}
	return cs;
}

Poly from_coeffs(const std::vector<Poly> &cs, int32_t var)
{
	Poly p;
	for (size_t e = 0; e < cs.size(); ++e) {
		if (cs[e].is_zero())
			continue;
		Poly xe;
		xe = Poly(Rational(1));
		if (e > 0) {
			Poly v = Poly::variable(var);
			for (size_t k = 0; k < e; ++k)
				xe = xe * v;
		}
		p += cs[e] * xe;
	}
	return p;
}

int deg(const std::vector<Poly> &cs)
{
	for (int e = int(cs.size()) - 1; e >= 0; --e)
		if (!cs[e].is_zero())
			return e;
	return -1;
}

void trim(std::vector<Poly> &cs)
{
	cs.resize(size_t(deg(cs) + 1));
}

std::vector<Poly> scale(std::vector<Poly> cs, const Poly &f)
{
	for (auto &c : cs)
		c = c * f;
	return cs;
}

// Pseudo-remainder of a by b in R[x]: lc(b)^(deg a - deg b + 1) * a mod b.
std::vector<Poly> prem(std::vector<Poly> a, const std::vector<Poly> &b)
{
	int db = deg(b);
	const Poly &lb = b[db];
	int e = deg(a) - db + 1;
	while (deg(a) >= db) {
		int da = deg(a);
		Poly la = a[da];
		a = scale(std::move(a), lb);
		for (int k = 0; k <= db; ++k)
			a[da - db + k] -= la * b[k];
		trim(a);
		--e;
	}
	for (; e > 0; --e)
		a = scale(std::move(a), lb);
	return a;
}

Poly power(const Poly &p, int e)
{
	Poly r(Rational(1));
	for (int k = 0; k < e; ++k)
		r = r * p;
	return r;
}

Poly content_of(const std::vector<Poly> &cs)
{
	Poly c;
	for (const auto &q : cs)
		c = gcd(c, q);
	return c;
}

Poly make_primitive(const Poly &p)
{
	if (p.is_zero())
		return p;
	Poly q = p;
	q *= Rational(1) / p.content_signed();
	return q;
}

} // namespace

Poly gcd(const Poly &a, const Poly &b)
{
	if (a.is_zero())
		return make_primitive(b);
	if (b.is_zero())
		return make_primitive(a);
	Poly A = make_primitive(a), B = make_primitive(b);
	if (A.is_constant() || B.is_constant())
		return Poly(Rational(1));

	auto va = A.variables(), vb = B.variables();
	std::vector<int32_t> common;
	std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
	if (common.empty())
		return Poly(Rational(1));
	int32_t var = common.front();

	auto ca = coeffs_in(A, var), cb = coeffs_in(B, var);
	Poly contA = content_of(ca), contB = content_of(cb);
	Poly cont = gcd(contA, contB);
	std::vector<Poly> P = ca, Q = cb;
	for (auto &c : P)
		c = c.is_zero() ? c : c.divide_exact(contA);
	for (auto &c : Q)
		c = c.is_zero() ? c : c.divide_exact(contB);
	if (deg(P) < deg(Q))
		std::swap(P, Q);

	// subresultant PRS
	Poly g(Rational(1)), h(Rational(1));
	for (;;) {
		int delta = deg(P) - deg(Q);
		auto R = prem(P, Q);
		if (deg(R) < 0) {
			Poly pq = from_coeffs(Q, var);
			Poly inner = content_of(coeffs_in(pq, var));
			return make_primitive(cont * pq.divide_exact(inner));
		}
		if (deg(R) == 0)
			return make_primitive(cont);
		P = std::move(Q);
		Poly divisor = g * power(h, delta);
		Q = std::move(R);
		for (auto &c : Q)
			c = c.is_zero() ? c : c.divide_exact(divisor);
		g = P[deg(P)];
		if (delta == 0) {
			// h unchanged
		} else if (delta == 1) {
			h = g;
		} else {
			h = power(g, delta).divide_exact(power(h, delta - 1));
		}
	}
}

} // namespace mould
