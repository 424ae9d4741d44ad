#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mouldcalc/flexion.hpp"
#include "mouldcalc/symmetry.hpp"

using namespace mould;

namespace {

const GammaSpec z2({2});

Word gen_word(const GammaSpec &g, std::initializer_list<uint32_t> res, int base = 1)
{
	Word w;
	int i = base;
	for (auto r : res)
		w.push_back({GammaElem::from_index(g, r), LinForm::var(i++)});
	return w;
}

Letter rand_letter(const GammaSpec &g, Rng &rng, int vars)
{
	std::uniform_int_distribution<uint32_t> res(0, uint32_t(g.order() - 1));
	std::uniform_int_distribution<int> coeff(-2, 2);
	LinForm f;
	while (f.is_zero())
		for (int v = 1; v <= vars; ++v) {
			int c = coeff(rng);
			if (c)
				f += LinForm({{v, c}});
		}
	return {GammaElem::from_index(g, res(rng)), f};
}

} // namespace

TEST_CASE("flexions on single letters")
{
	Letter w1{GammaElem(z2, {1}), LinForm::var(1)};
	Letter w2{GammaElem(z2, {1}), LinForm::var(2)};
	// V: the absorber multiplies sigmas, forms unchanged
	Word up = upper_flex_last({w1}, {w2}, Convention::V, z2);
	CHECK(up == Word{Letter{GammaElem(z2, {0}), LinForm::var(1)}});
	// V: the block measures its forms against the absorber's last letter
	Word low = lower_flex_last({w2}, {w1}, Convention::V, z2);
	CHECK(low == Word{Letter{GammaElem(z2, {1}), parse_linform("v2-v1")}});

	Mould pic = named_mould(NamedMould::pic, z2, 2);
	CHECK(pic.evaluate(low) == parse_ratfun("1/(x2-x1)"));

	// U: the absorber adds u-sums, sigmas divide
	Word upu = upper_flex_last({w1}, {w2}, Convention::U, z2);
	CHECK(upu == Word{Letter{GammaElem(z2, {1}), parse_linform("u1+u2")}});
	Word lowu = lower_flex_first({w1}, {w2}, Convention::U, z2);
	CHECK(lowu == Word{Letter{GammaElem(z2, {0}), LinForm::var(1)}});

	CHECK(flex({w1}, {w2}, FlexMarker::upper_ul, Convention::V, z2) == up);
	CHECK(flex({w1}, {w2}, FlexMarker::lower_lr, Convention::V, z2) == low);
	CHECK_THROWS_AS(upper_flex_last({}, {w2}, Convention::V, z2), EmptyAbsorber);
	CHECK(upper_flex_last({w1}, {}, Convention::V, z2) == Word{w1});
	CHECK(lower_flex_last({}, {w1}, Convention::V, z2).empty());
}

TEST_CASE("named moulds match their closed forms")
{
	CHECK(named_mould(NamedMould::pic, z2, 2).cell(2, 0) == parse_ratfun("1/(x1*x2)"));
	CHECK(named_mould(NamedMould::poc, z2, 1).cell(1, 0) == parse_ratfun("-1/x1"));
	CHECK(named_mould(NamedMould::pij, z2, 2).cell(2, 0) == parse_ratfun("1/(x1*x2-x2^2)"));
	CHECK(named_mould(NamedMould::A, z2, 2).cell(1, 1).is_zero());
	CHECK(named_mould(NamedMould::C, z2, 3).cell(1, 0) == RatFun(Rational(1)));
	CHECK(named_mould(NamedMould::paj, z2, 1).cell(1, 0) == parse_ratfun("1/x1"));
}

TEST_CASE("pari and anti are involutions and build poc from pij")
{
	Rng rng(33);
	MouldSpec spec{Convention::V, z2, 3};
	Mould m = random_mould(spec, 1, rng);
	CHECK(pari(pari(m)) == m);
	CHECK(anti(anti(m)) == m);
	CHECK(pari(anti(named_mould(NamedMould::pij, z2, 3))) == named_mould(NamedMould::poc, z2, 3));
	CHECK(anti(pari(m)) == pari(anti(m)));
}

TEST_CASE("pic flexion identities")
{
	Mould pic = named_mould(NamedMould::pic, z2, 6);
	Rng rng(35);
	for (int t = 0; t < 25; ++t) {
		Word a{rand_letter(z2, rng, 3)}, b{rand_letter(z2, rng, 3)},
		    c{rand_letter(z2, rng, 3)};
		// upper flexion leaves pic alone
		CHECK(pic.evaluate(upper_flex_last(a, b, Convention::V, z2)) == pic.evaluate(a));
		// lower flexion of single letters is antisymmetric
		if (a[0].form != b[0].form) {
			CHECK(pic.evaluate(lower_flex_last(b, a, Convention::V, z2)) ==
			      -pic.evaluate(lower_flex_last(a, b, Convention::V, z2)));
		}
		// Fay
		auto distinct = [&](const Word &x, const Word &y) {
			return x[0].form != y[0].form;
		};
		if (distinct(a, b) && distinct(b, c) && distinct(a, c)) {
			Word bc{b[0], c[0]}, ca{c[0], a[0]}, ab{a[0], b[0]};
			RatFun fay = pic.evaluate(lower_flex_last(bc, a, Convention::V, z2)) +
			             pic.evaluate(lower_flex_last(ca, b, Convention::V, z2)) +
			             pic.evaluate(lower_flex_last(ab, c, Convention::V, z2));
			CHECK(fay.is_zero());
		}
		// decomposition: pic(w)pic(e) = pic(we)
		Word w{a[0], b[0]}, e{c[0]};
		Word we = w;
		we.push_back(c[0]);
		CHECK(pic.evaluate(w) * pic.evaluate(e) == pic.evaluate(we));
	}
}

TEST_CASE("decomposition enumeration and bijections")
{
	Word ab = gen_word(z2, {0, 1});
	auto d2 = enumerate_decompositions(ab, 2, DecompVariant::D);
	CHECK(d2.size() == 2); // (a;b) and (ab;empty)

	Word empty;
	CHECK(enumerate_decompositions(empty, 1, DecompVariant::E).size() == 1);
	CHECK(enumerate_decompositions(empty, 3, DecompVariant::E).empty());

	Rng rng(37);
	for (int len = 0; len <= 4; ++len) {
		Word w;
		for (int i = 0; i < len; ++i)
			w.push_back(rand_letter(z2, rng, 2));
		for (int t = 1; t <= 4; ++t) {
			auto all = enumerate_decompositions(w, t, DecompVariant::D);
			if (t >= 2) {
				auto big = enumerate_decompositions(w, t, DecompVariant::D,
				                                    HeadLenFilter::at_least_two);
				auto one = enumerate_decompositions(w, t, DecompVariant::D,
				                                    HeadLenFilter::exactly_one);
				CHECK(all.size() == big.size() + one.size());
				// the partition really is a partition
				for (const auto &d : big)
					CHECK(std::find(all.begin(), all.end(), d) != all.end());
				// E_t(w) = ({empty} x D_{t-1}(w)) through D_t(w)
				auto e = enumerate_decompositions(w, t, DecompVariant::E);
				auto dm1 = enumerate_decompositions(w, t - 1, DecompVariant::D);
				CHECK(e.size() == dm1.size() + all.size());
			}
			if (!w.empty() && t >= 2) {
				Word tail(w.begin() + 1, w.end());
				auto f1 = bijection_head_at_least_two(w, t);
				for (const auto &[from, to] : f1) {
					CHECK(from.parts[0].front() == w.front());
					Word joined;
					for (const auto &p : to.parts)
						joined.insert(joined.end(), p.begin(), p.end());
					CHECK(joined == tail);
				}
				CHECK(f1.size() ==
				      enumerate_decompositions(tail, t, DecompVariant::D).size());
				auto f2 = bijection_head_exactly_one(w, t);
				CHECK(f2.size() ==
				      enumerate_decompositions(tail, t - 1, DecompVariant::D).size());
				auto f3 = bijection_e_to_d(w, t);
				CHECK(f3.size() == enumerate_decompositions(w, t, DecompVariant::D).size());
				for (const auto &[from, to] : f3)
					CHECK(to.parts[0].front() == w.front());
			}
		}
	}
}

TEST_CASE("ganit depth-two display and unit behavior")
{
	Rng rng(39);
	MouldSpec spec{Convention::V, z2, 3};
	Mould b = random_mould(spec, 1, rng);
	Mould a = random_mould(spec, 0, rng);
	Mould res = ganit_apply(b, a);
	// depth 1 passes through
	CHECK(res.cell(1, 0) == a.cell(1, 0));
	CHECK(res.cell(1, 1) == a.cell(1, 1));
	// depth 2: A(w1,w2) + B(lower(w1;w2)) A(upper(w1;w2))
	for (uint64_t k = 0; k < 4; ++k) {
		auto sig = sigma_vector_from_index(z2, 2, k);
		Word w1{{sig[0], LinForm::var(1)}}, w2{{sig[1], LinForm::var(2)}};
		RatFun expect = a.cell(2, k) +
		                b.evaluate(lower_flex_last(w2, w1, Convention::V, z2)) *
		                    a.evaluate(upper_flex_last(w1, w2, Convention::V, z2));
		CHECK(res.cell(2, k) == expect);
	}
	CHECK(ganit_apply(b, Mould::identity(spec)) == Mould::identity(spec));
}

TEST_CASE("ganit(poc) inverts ganit(pic)")
{
	Rng rng(41);
	MouldSpec spec{Convention::V, z2, 4};
	Mould pic = named_mould(NamedMould::pic, z2, 4);
	Mould poc = named_mould(NamedMould::poc, z2, 4);
	Mould m = random_mould(spec, 0, rng);
	CHECK(ganit_apply(poc, ganit_apply(pic, m)) == m);
	CHECK(ganit_apply(pic, ganit_apply(poc, m)) == m);
}

TEST_CASE("g expansion matches the paper's low-depth displays")
{
	Mould pic = named_mould(NamedMould::pic, z2, 4);
	Word w1 = gen_word(z2, {1});
	CHECK(g_expand(pic, w1) == FormalWordSum::single(w1));

	Word w = gen_word(z2, {1, 1});
	FormalWordSum expect = FormalWordSum::single(w);
	Word head{w[0]}, second{w[1]};
	expect.add(upper_flex_last(head, second, Convention::V, z2),
	           pic.evaluate(lower_flex_last(second, head, Convention::V, z2)));
	CHECK(g_expand(pic, w) == expect);

	// depth 3: four terms as displayed
	Word w3 = gen_word(z2, {1, 0, 1});
	CHECK(g_expand(pic, w3).terms().size() == 4);
}

TEST_CASE("g recurrences and the equivalent equation")
{
	Mould pic = named_mould(NamedMould::pic, z2, 4);
	Mould poc = named_mould(NamedMould::poc, z2, 4);
	for (auto res : std::vector<std::vector<uint32_t>>{{0, 1}, {1, 1, 0}, {1, 0, 1, 1}}) {
		Word w;
		int i = 1;
		for (auto r : res)
			w.push_back({GammaElem::from_index(z2, r), LinForm::var(i++)});
		CHECK(verify_g_recurrence(pic, w));
		CHECK(verify_gpoc_recurrence(poc, w));
		CHECK(verify_g_equivalent_equation(pic, w));
		CHECK(verify_g_equivalent_equation(poc, w));
	}
}

TEST_CASE("g intertwines the two shuffles")
{
	Mould pic = named_mould(NamedMould::pic, z2, 4);
	Mould poc = named_mould(NamedMould::poc, z2, 4);
	for (auto [la, lb] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
		for (uint64_t ka = 0; ka < sigma_vector_count(z2, la); ++ka) {
			for (uint64_t kb = 0; kb < sigma_vector_count(z2, lb); ++kb) {
				auto sa = sigma_vector_from_index(z2, la, ka);
				auto sb = sigma_vector_from_index(z2, lb, kb);
				Word alpha, beta;
				for (int i = 0; i < la; ++i)
					alpha.push_back({sa[i], LinForm::var(i + 1)});
				for (int i = 0; i < lb; ++i)
					beta.push_back({sb[i], LinForm::var(la + i + 1)});
				CHECK(g_expand_sum(pic, shuffle_star(alpha, beta, z2)) ==
				      shuffle(g_expand(pic, alpha), g_expand(pic, beta)));
				CHECK(g_expand_sum(poc, shuffle(alpha, beta)) ==
				      shuffle_star(g_expand(poc, alpha), g_expand(poc, beta), z2));
			}
		}
	}
}

TEST_CASE("transfer formula for Sh* of ganit(pic)")
{
	Rng rng(43);
	MouldSpec spec{Convention::V, z2, 4};
	Mould pic = named_mould(NamedMould::pic, z2, 4);
	Mould m = random_mould(spec, 0, rng);
	Mould gm = ganit_apply(pic, m);
	for (auto [la, lb] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
		for (uint64_t ka = 0; ka < sigma_vector_count(z2, la); ++ka) {
			auto sa = sigma_vector_from_index(z2, la, ka);
			Word alpha, beta;
			for (int i = 0; i < la; ++i)
				alpha.push_back({sa[i], LinForm::var(i + 1)});
			auto sb = sigma_vector_from_index(z2, lb, 1 % sigma_vector_count(z2, lb));
			for (int i = 0; i < lb; ++i)
				beta.push_back({sb[i], LinForm::var(la + i + 1)});
			CHECK(shstar_entry(gm, alpha, beta) ==
			      transfer_formula_rhs(m, pic, alpha, beta));
		}
	}
}
