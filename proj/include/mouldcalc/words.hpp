#pragma once

#include <map>
#include <string>
#include <vector>

#include "mouldcalc/gamma.hpp"
#include "mouldcalc/ratfun.hpp"

namespace mould {

// A decorated letter: group element over an integer linear form.  Which row
// carries the variables (u or v) is the owning mould's convention.
struct Letter {
	GammaElem sigma;
	LinForm form;

	auto operator<=>(const Letter &) const = default;
};

using Word = std::vector<Letter>;

// (length, letterwise) order; keeps formal sums canonical and diffable.
struct WordLess {
	bool operator()(const Word &a, const Word &b) const
	{
		if (a.size() != b.size())
			return a.size() < b.size();
		return a < b;
	}
};

GammaElem sigma_product(const Word &w, const GammaSpec &spec);
LinForm form_sum(const Word &w);
std::vector<GammaElem> sigma_vector(const Word &w);

std::string word_str(const Word &w, char family = 'v');
Word parse_word(const GammaSpec &spec, const std::string &text);

// Finite K-linear combination of words with exact coefficients; zero
// coefficients are never stored.
class FormalWordSum {
public:
	FormalWordSum() = default;
	static FormalWordSum single(Word w, RatFun coeff = RatFun(Rational(1)));

	const std::map<Word, RatFun, WordLess> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	RatFun coeff(const Word &w) const;

	void add(const Word &w, const RatFun &c);
	FormalWordSum &operator+=(const FormalWordSum &o);
	FormalWordSum &operator-=(const FormalWordSum &o);
	friend FormalWordSum operator+(FormalWordSum a, const FormalWordSum &b) { return a += b; }
	friend FormalWordSum operator-(FormalWordSum a, const FormalWordSum &b) { return a -= b; }
	FormalWordSum scaled(const RatFun &c) const;
	FormalWordSum prepended(const Letter &l) const;
	FormalWordSum appended(const Letter &l) const;
	bool operator==(const FormalWordSum &) const = default;

	std::string str(char family = 'v') const;

private:
	std::map<Word, RatFun, WordLess> terms_;
};

// Plain shuffle; integer coefficients, total mass C(|w1|+|w2|, |w1|).
FormalWordSum shuffle(const Word &w1, const Word &w2);
// Contracting shuffle of the V convention.  Heads with equal forms make the
// whole product vanish; contraction terms carry 1/(v-v') and merged sigma.
FormalWordSum shuffle_star(const Word &w1, const Word &w2, const GammaSpec &spec);

// Bilinear extensions.
FormalWordSum shuffle(const FormalWordSum &a, const FormalWordSum &b);
FormalWordSum shuffle_star(const FormalWordSum &a, const FormalWordSum &b, const GammaSpec &spec);

Rational sh_coeff(const Word &w1, const Word &w2, const Word &target);
RatFun shstar_coeff(const Word &w1, const Word &w2, const Word &target, const GammaSpec &spec);

} // namespace mould
