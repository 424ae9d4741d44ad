#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mouldcalc/flexion.hpp"
#include "mouldcalc/symmetry.hpp"

using namespace mould;

namespace {

const GammaSpec z2({2});
const GammaSpec triv({1});

Mould rand_ari(const MouldSpec &spec, Rng &rng)
{
	return random_mould(spec, 0, rng);
}

Word gen_word(const GammaSpec &g, std::initializer_list<uint32_t> res)
{
	Word w;
	int i = 1;
	for (auto r : res)
		w.push_back({GammaElem::from_index(g, r), LinForm::var(i++)});
	return w;
}

} // namespace

TEST_CASE("identity mould and generators")
{
	Mould I = Mould::identity({Convention::V, z2, 3});
	CHECK(I.empty_value() == 1);
	CHECK(I.cell(2, 1).is_zero());
	CHECK(I.evaluate({}) == RatFun(Rational(1)));

	Mould pic = named_mould(NamedMould::pic, z2, 3);
	CHECK(pic.cell(2, 0) == parse_ratfun("1/(x1*x2)"));

	MouldSpec spec{Convention::V, z2, 2};
	CHECK_THROWS_AS(Mould::make(spec, 0,
	                            [](int, const std::vector<GammaElem> &) {
		                            return RatFun::variable(5);
	                            }),
	                VariableEscape);

	Mould trunc = Mould::identity({Convention::V, z2, 0});
	CHECK(trunc.to_text() == "mould convention=V group=z2 depth=0 empty=1\n");
}

TEST_CASE("mu matches the depth-2 display and the unit law")
{
	Rng rng(2);
	MouldSpec spec{Convention::V, z2, 3};
	Mould m = random_mould(spec, 5, rng);
	CHECK(mu(Mould::identity(spec), m) == m);
	CHECK(mu(m, Mould::identity(spec)) == m);

	MouldSpec tspec{Convention::V, triv, 2};
	Mould a = random_mould(tspec, 2, rng), b = random_mould(tspec, 3, rng);
	RatFun lhs = mu(a, b).cell(2, 0);
	RatFun rhs = RatFun(a.empty_value()) * b.cell(2, 0) +
	             a.cell(1, 0) * b.cell(1, 0).shift_vars(1) +
	             a.cell(2, 0) * RatFun(b.empty_value());
	CHECK(lhs == rhs);
}

TEST_CASE("pic times pic at depth two")
{
	Mould pic = named_mould(NamedMould::pic, triv, 2);
	CHECK(mu(pic, pic).cell(2, 0) == parse_ratfun("3/(x1*x2)"));
}

TEST_CASE("mu is associative and mismatched specs throw")
{
	Rng rng(4);
	MouldSpec spec{Convention::V, z2, 3};
	Mould a = rand_ari(spec, rng), b = random_mould(spec, 1, rng), c = random_mould(spec, 2, rng);
	CHECK(mu(mu(a, b), c) == mu(a, mu(b, c)));
	Mould other = random_mould({Convention::V, z2, 2}, 1, rng);
	CHECK_THROWS_AS(mu(a, other), SpecMismatch);
}

TEST_CASE("bracket is antisymmetric and reduces as computed at depth two")
{
	Rng rng(6);
	MouldSpec spec{Convention::V, z2, 3};
	Mould m = rand_ari(spec, rng);
	Mould zero = Mould::zero(spec);
	CHECK(lu_bracket(m, m) == zero);
	CHECK(lu_bracket(Mould::identity(spec), m) == zero);

	// depth-1 supported moulds: [P,Q](x1,x2) = P(x1)Q(x2) - Q(x1)P(x2)
	MouldSpec tspec{Convention::V, triv, 2};
	Mould p = Mould::zero(tspec), q = Mould::zero(tspec);
	p.set_cell(1, 0, parse_ratfun("1/x1"));
	q.set_cell(1, 0, parse_ratfun("x1+2"));
	RatFun expect = parse_ratfun("1/x1") * parse_ratfun("x2+2") -
	                parse_ratfun("x1+2") * parse_ratfun("1/x2");
	CHECK(lu_bracket(p, q).cell(2, 0) == expect);
	CHECK(lu_bracket(p, q).cell(1, 0).is_zero());
}

TEST_CASE("jacobi identity on random triples")
{
	Rng rng(8);
	MouldSpec spec{Convention::V, z2, 3};
	Mould a = rand_ari(spec, rng), b = rand_ari(spec, rng), c = rand_ari(spec, rng);
	Mould total = lu_bracket(a, lu_bracket(b, c)) + lu_bracket(b, lu_bracket(c, a)) +
	              lu_bracket(c, lu_bracket(a, b));
	CHECK(total == Mould::zero(spec));
}

TEST_CASE("exp and log satisfy the small-depth formulas and round-trip")
{
	MouldSpec spec{Convention::V, z2, 3};
	CHECK(exp_times(Mould::zero(spec)) == Mould::identity(spec));
	CHECK(log_times(Mould::identity(spec)) == Mould::zero(spec));

	Rng rng(10);
	Mould a = rand_ari(spec, rng);
	Mould e = exp_times(a);
	CHECK(e.in_gari());
	for (uint64_t k = 0; k < 2; ++k)
		CHECK(e.cell(1, k) == a.cell(1, k));
	// depth 2: exp(A) = A(x1,x2) + (1/2) A(x1) A(x2)
	for (uint64_t k = 0; k < 4; ++k) {
		auto sig = sigma_vector_from_index(z2, 2, k);
		RatFun expect = a.cell(2, k) + a.cell(1, {sig[0]}) *
		                                   a.cell(1, {sig[1]}).shift_vars(1) *
		                                   RatFun(rat(1, 2));
		CHECK(e.cell(2, k) == expect);
	}
	CHECK(log_times(e) == a);

	Mould s = random_mould(spec, 1, rng);
	CHECK(exp_times(log_times(s)) == s);
	CHECK(log_times(s).cell(1, 0) == s.cell(1, 0));

	CHECK_THROWS_AS(exp_times(s), NotInARI);
	CHECK_THROWS_AS(log_times(a), NotInGARI);
}

TEST_CASE("exp of commuting sum splits as a product")
{
	Rng rng(12);
	MouldSpec spec{Convention::V, z2, 3};
	Mould m = rand_ari(spec, rng);
	Mould n = m.scaled(rat(3, 2));
	CHECK(mu(m, n) == mu(n, m));
	CHECK(exp_times(m + n) == mu(exp_times(m), exp_times(n)));
}

TEST_CASE("gari inverse is two-sided")
{
	Rng rng(14);
	MouldSpec spec{Convention::V, z2, 3};
	Mould s = random_mould(spec, 1, rng);
	Mould inv = gari_inverse(s);
	CHECK(mu(s, inv) == Mould::identity(spec));
	CHECK(mu(inv, s) == Mould::identity(spec));
}

TEST_CASE("evaluate substitutes forms into the table")
{
	Mould pic = named_mould(NamedMould::pic, z2, 3);
	Word w{{GammaElem(z2, {0}), parse_linform("v1-v2")}};
	CHECK(pic.evaluate(w) == parse_ratfun("1/(x1-x2)"));
	CHECK(pic.evaluate({}) == RatFun(Rational(1)));

	Mould paj = named_mould(NamedMould::paj, z2, 3);
	CHECK(paj.evaluate(gen_word(z2, {0, 1})) == parse_ratfun("1/(x1^2+x1*x2)"));

	CHECK_THROWS_AS(pic.evaluate(gen_word(z2, {0, 0, 0, 0})), DepthExceeded);
	Word zero_form{{GammaElem(z2, {0}), LinForm{}}};
	CHECK_THROWS_AS(pic.evaluate(zero_form), PoleAtSubstitution);
}

TEST_CASE("serialization round-trips bit-exactly")
{
	Rng rng(16);
	for (auto conv : {Convention::U, Convention::V}) {
		MouldSpec spec{conv, parse_gamma_spec("z2xz3"), 2};
		Mould m = random_mould(spec, rat(1, 3), rng);
		std::string text = m.to_text();
		Mould back = parse_mould(text);
		CHECK(back == m);
		CHECK(back.to_text() == text);
	}
	Mould pij = named_mould(NamedMould::pij, z2, 4);
	CHECK(parse_mould(pij.to_text()) == pij);
}
