#include "mouldcalc/rational.hpp"

#include "mouldcalc/errors.hpp"

namespace mould {

Rational factorial(int n)
{
	Rational r = 1;
	for (int k = 2; k <= n; ++k)
		r *= k;
	return r;
}

Rational parse_rational(const std::string &text)
{
	try {
		Rational q(text);
		q.canonicalize();
		return q;
	} catch (const std::invalid_argument &) {
		throw ParseError("bad rational literal: " + text);
	}
}

std::string to_string(const Rational &q)
{
	return q.get_str();
}

Rational random_rational(Rng &rng, long bound)
{
	std::uniform_int_distribution<long> num(-bound, bound);
	std::uniform_int_distribution<long> den(1, bound);
	return rat(num(rng), den(rng));
}

} // namespace mould
