#include "mouldcalc/words.hpp"

#include <sstream>

namespace mould {

GammaElem sigma_product(const Word &w, const GammaSpec &spec)
{
	GammaElem p = GammaElem::identity(spec);
	for (const auto &l : w)
		p = p.mul(l.sigma, spec);
	return p;
}

LinForm form_sum(const Word &w)
{
	LinForm f;
	for (const auto &l : w)
		f += l.form;
	return f;
}

std::vector<GammaElem> sigma_vector(const Word &w)
{
	std::vector<GammaElem> v;
	v.reserve(w.size());
	for (const auto &l : w)
		v.push_back(l.sigma);
	return v;
}

std::string word_str(const Word &w, char family)
{
	std::ostringstream out;
	out << '[';
	for (size_t i = 0; i < w.size(); ++i) {
		if (i)
			out << ',';
		out << '(' << w[i].sigma.str() << '|' << w[i].form.str(family) << ')';
	}
	out << ']';
	return out.str();
}

Word parse_word(const GammaSpec &spec, const std::string &text)
{
	size_t i = 0;
	auto skip = [&] {
		while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
			++i;
	};
	skip();
	if (i >= text.size() || text[i] != '[')
		throw ParseError("word literal must start with '[': " + text);
	++i;
	Word w;
	skip();
	if (i < text.size() && text[i] == ']')
		return w;
	for (;;) {
		skip();
		if (i >= text.size() || text[i] != '(')
			throw ParseError("expected '(' in word literal: " + text);
		++i;
		size_t bar = text.find('|', i);
		if (bar == std::string::npos)
			throw ParseError("expected '|' in letter: " + text);
		GammaElem sigma = parse_gamma_elem(spec, text.substr(i, bar - i));
		i = bar + 1;
		int depth = 0;
		size_t start = i;
		while (i < text.size() && (depth > 0 || text[i] != ')')) {
			if (text[i] == '(')
				++depth;
			else if (text[i] == ')')
				--depth;
			++i;
		}
		if (i >= text.size())
			throw ParseError("unterminated letter in word literal: " + text);
		LinForm form = parse_linform(text.substr(start, i - start));
		++i;
		w.push_back({std::move(sigma), std::move(form)});
		skip();
		if (i < text.size() && text[i] == ',') {
			++i;
			continue;
		}
		break;
	}
	skip();
	if (i >= text.size() || text[i] != ']')
		throw ParseError("word literal must end with ']': " + text);
	return w;
}

FormalWordSum FormalWordSum::single(Word w, RatFun coeff)
{
	FormalWordSum s;
	if (!coeff.is_zero())
		s.terms_.emplace(std::move(w), std::move(coeff));
	return s;
}

RatFun FormalWordSum::coeff(const Word &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? RatFun() : it->second;
}

void FormalWordSum::add(const Word &w, const RatFun &c)
{
	if (c.is_zero())
		return;
	auto [it, fresh] = terms_.emplace(w, c);
	if (!fresh) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

FormalWordSum &FormalWordSum::operator+=(const FormalWordSum &o)
{
	for (const auto &[w, c] : o.terms_)
		add(w, c);
	return *this;
}

FormalWordSum &FormalWordSum::operator-=(const FormalWordSum &o)
{
	for (const auto &[w, c] : o.terms_)
		add(w, -c);
	return *this;
}

FormalWordSum FormalWordSum::scaled(const RatFun &c) const
{
	FormalWordSum s;
	if (c.is_zero())
		return s;
	for (const auto &[w, k] : terms_)
		s.terms_.emplace(w, k * c);
	return s;
}

FormalWordSum FormalWordSum::prepended(const Letter &l) const
{
	FormalWordSum s;
	for (const auto &[w, c] : terms_) {
		Word nw;
		nw.reserve(w.size() + 1);
		nw.push_back(l);
		nw.insert(nw.end(), w.begin(), w.end());
		s.terms_.emplace(std::move(nw), c);
	}
	return s;
}

FormalWordSum FormalWordSum::appended(const Letter &l) const
{
	FormalWordSum s;
	for (const auto &[w, c] : terms_) {
		Word nw = w;
		nw.push_back(l);
		s.terms_.emplace(std::move(nw), c);
	}
	return s;
}

std::string FormalWordSum::str(char family) const
{
	if (terms_.empty())
		return "0";
	std::ostringstream out;
	bool first = true;
	for (const auto &[w, c] : terms_) {
		if (!first)
			out << '\n';
		out << word_str(w, family) << " : " << c.str(family);
		first = false;
	}
	return out.str();
}

namespace {

Word suffix(const Word &w, size_t i)
{
	return Word(w.begin() + long(i), w.end());
}

} // namespace

FormalWordSum shuffle(const Word &w1, const Word &w2)
{
	size_t n1 = w1.size(), n2 = w2.size();
	std::vector<std::vector<FormalWordSum>> memo(n1 + 1, std::vector<FormalWordSum>(n2 + 1));
	std::vector<std::vector<bool>> done(n1 + 1, std::vector<bool>(n2 + 1, false));
	auto rec = [&](auto &&self, size_t i, size_t j) -> const FormalWordSum & {
		if (!done[i][j]) {
			FormalWordSum s;
			if (i == n1)
				s = FormalWordSum::single(suffix(w2, j));
			else if (j == n2)
				s = FormalWordSum::single(suffix(w1, i));
			else
				s = self(self, i + 1, j).prepended(w1[i]) +
				    self(self, i, j + 1).prepended(w2[j]);
			memo[i][j] = std::move(s);
			done[i][j] = true;
		}
		return memo[i][j];
	};
	return rec(rec, 0, 0);
}

FormalWordSum shuffle_star(const Word &w1, const Word &w2, const GammaSpec &spec)
{
	size_t n1 = w1.size(), n2 = w2.size();
	std::vector<std::vector<FormalWordSum>> memo(n1 + 1, std::vector<FormalWordSum>(n2 + 1));
	std::vector<std::vector<bool>> done(n1 + 1, std::vector<bool>(n2 + 1, false));
	auto rec = [&](auto &&self, size_t i, size_t j) -> const FormalWordSum & {
		if (!done[i][j]) {
			FormalWordSum s;
			if (i == n1) {
				s = FormalWordSum::single(suffix(w2, j));
			} else if (j == n2) {
				s = FormalWordSum::single(suffix(w1, i));
			} else if (w1[i].form == w2[j].form) {
				// equal head forms: the whole product is zero
			} else {
				s = self(self, i + 1, j).prepended(w1[i]) +
				    self(self, i, j + 1).prepended(w2[j]);
				RatFun c(Poly(Rational(1)), Poly::from_linform(w1[i].form - w2[j].form));
				GammaElem merged = w1[i].sigma.mul(w2[j].sigma, spec);
				const FormalWordSum &rest = self(self, i + 1, j + 1);
				s += rest.prepended({merged, w1[i].form}).scaled(c);
				s -= rest.prepended({merged, w2[j].form}).scaled(c);
			}
			memo[i][j] = std::move(s);
			done[i][j] = true;
		}
		return memo[i][j];
	};
	return rec(rec, 0, 0);
}

FormalWordSum shuffle(const FormalWordSum &a, const FormalWordSum &b)
{
	FormalWordSum s;
	for (const auto &[w1, c1] : a.terms())
		for (const auto &[w2, c2] : b.terms())
			s += shuffle(w1, w2).scaled(c1 * c2);
	return s;
}

FormalWordSum shuffle_star(const FormalWordSum &a, const FormalWordSum &b, const GammaSpec &spec)
{
	FormalWordSum s;
	for (const auto &[w1, c1] : a.terms())
		for (const auto &[w2, c2] : b.terms())
			s += shuffle_star(w1, w2, spec).scaled(c1 * c2);
	return s;
}

Rational sh_coeff(const Word &w1, const Word &w2, const Word &target)
{
	RatFun c = shuffle(w1, w2).coeff(target);
	if (!c.is_polynomial() || !c.num().is_constant())
		throw Error("shuffle coefficient is not a constant");
	return c.num().is_zero() ? Rational(0) : c.num().terms()[0].coeff;
}

RatFun shstar_coeff(const Word &w1, const Word &w2, const Word &target, const GammaSpec &spec)
{
	return shuffle_star(w1, w2, spec).coeff(target);
}

} // namespace mould
