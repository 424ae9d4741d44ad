#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mouldcalc/flexion.hpp"
#include "mouldcalc/symmetry.hpp"

using namespace mould;

namespace {

const GammaSpec z2({2});

} // namespace

TEST_CASE("sh_map of the unit is the dimould unit")
{
	MouldSpec spec{Convention::V, z2, 3};
	Mould I = Mould::identity(spec);
	CHECK(sh_map(I) == Dimould::identity(spec));
	CHECK(shstar_map(I) == Dimould::identity(spec));
	CHECK(tensor(I, I) == Dimould::identity(spec));
}

TEST_CASE("sh_map one-sided entries reproduce the mould")
{
	Rng rng(21);
	MouldSpec spec{Convention::V, z2, 3};
	Mould m = random_mould(spec, 0, rng);
	Dimould d = sh_map(m);
	Dimould ds = shstar_map(m);
	for (int r = 1; r <= 3; ++r) {
		for (uint64_t k = 0; k < sigma_vector_count(z2, r); ++k) {
			CHECK(d.at(r, 0, k) == m.cell(r, k));
			CHECK(ds.at(r, 0, k) == m.cell(r, k));
			CHECK(d.at(0, r, k) == m.cell(r, k));
		}
	}
	// depth (1;1) entry of Sh is M(w1,w2) + M(w2,w1)
	for (uint64_t k = 0; k < 4; ++k) {
		auto sig = sigma_vector_from_index(z2, 2, k);
		RatFun expect = m.cell(2, {sig[0], sig[1]}) +
		                m.cell(2, {sig[1], sig[0]}).rename_vars({{1, 2}, {2, 1}});
		CHECK(d.at(1, 1, k) == expect);
	}
}

TEST_CASE("shstar_map of pic is rank one")
{
	Mould pic = named_mould(NamedMould::pic, z2, 4);
	Dimould d = shstar_map(pic);
	CHECK(d.at(1, 1, 0) == parse_ratfun("1/(x1*x2)"));
	CHECK(d.at(2, 1, 0) == parse_ratfun("1/(x1*x2*x3)"));
	CHECK(d == tensor(pic, pic));
}

TEST_CASE("dimould mu: unit law and tensor multiplicativity")
{
	Rng rng(23);
	MouldSpec spec{Convention::V, z2, 3};
	Mould m1 = random_mould(spec, 1, rng), m2 = random_mould(spec, 0, rng);
	Mould n1 = random_mould(spec, 2, rng), n2 = random_mould(spec, 1, rng);
	Dimould t = tensor(m1, m2);
	CHECK(dimould_mu(Dimould::identity(spec), t) == t);
	CHECK(dimould_mu(t, Dimould::identity(spec)) == t);
	CHECK(dimould_mu(tensor(m1, m2), tensor(n1, n2)) == tensor(mu(m1, n1), mu(m2, n2)));
}

TEST_CASE("sh_map and shstar_map are algebra homomorphisms")
{
	Rng rng(25);
	MouldSpec spec{Convention::V, z2, 3};
	Mould m = random_mould(spec, 1, rng), n = random_mould(spec, 3, rng);
	CHECK(sh_map(mu(m, n)) == dimould_mu(sh_map(m), sh_map(n)));
	CHECK(shstar_map(mu(m, n)) == dimould_mu(shstar_map(m), shstar_map(n)));
}

TEST_CASE("example moulds have their stated symmetries")
{
	Mould A = named_mould(NamedMould::A, z2, 4);
	CHECK(check_symmetry(A, SymmetryKind::alternal).holds);

	Mould paj = named_mould(NamedMould::paj, z2, 4);
	CHECK(check_symmetry(paj, SymmetryKind::symmetral).holds);

	Mould C = named_mould(NamedMould::C, z2, 4);
	CHECK(check_symmetry(C, SymmetryKind::alternil).holds);

	Mould pic = named_mould(NamedMould::pic, z2, 4);
	CHECK(check_symmetry(pic, SymmetryKind::symmetril).holds);

	Mould pij = named_mould(NamedMould::pij, z2, 4);
	CHECK(check_symmetry(pij, SymmetryKind::symmetral).holds);
}

TEST_CASE("pic is not symmetral, with the explicit residual")
{
	Mould pic = named_mould(NamedMould::pic, z2, 4);
	auto report = check_symmetry(pic, SymmetryKind::symmetral);
	CHECK(!report.holds);
	REQUIRE(report.witness.has_value());
	CHECK(report.witness->p == 1);
	CHECK(report.witness->q == 1);
	// Sh sum 2/(x1 x2) minus pic(v1)pic(v2) leaves 1/(x1 x2)
	CHECK(report.witness->residual == parse_ratfun("1/(x1*x2)"));
}

TEST_CASE("alternility needs the V convention")
{
	Mould A = named_mould(NamedMould::A, z2, 3);
	CHECK_THROWS_AS(check_symmetry(A, SymmetryKind::alternil), ConventionMismatch);
}

TEST_CASE("random structured moulds pass their own checks")
{
	for (auto conv : {Convention::U, Convention::V}) {
		MouldSpec spec{conv, z2, 4};
		Rng rng(27);
		Mould alt = random_structured(SymmetryKind::alternal, spec, rng);
		CHECK(check_symmetry(alt, SymmetryKind::alternal).holds);
		Mould sym = exp_times(alt);
		CHECK(check_symmetry(sym, SymmetryKind::symmetral).holds);
		Mould sym2 = random_structured(SymmetryKind::symmetral, spec, rng);
		CHECK(check_symmetry(sym2, SymmetryKind::symmetral).holds);
	}

	// depth-1 supported moulds are vacuously alternal
	MouldSpec spec{Convention::V, z2, 3};
	Mould d1 = Mould::zero(spec);
	d1.set_cell(1, 0, parse_ratfun("x1+1"));
	d1.set_cell(1, 1, parse_ratfun("2*x1"));
	CHECK(check_symmetry(d1, SymmetryKind::alternal).holds);
}

TEST_CASE("characterization and direct routes agree")
{
	MouldSpec spec{Convention::V, z2, 3};
	Rng rng(29);
	std::vector<std::pair<Mould, SymmetryKind>> cases;
	cases.emplace_back(random_structured(SymmetryKind::alternal, spec, rng),
	                   SymmetryKind::alternal);
	cases.emplace_back(random_structured(SymmetryKind::symmetral, spec, rng),
	                   SymmetryKind::symmetral);
	cases.emplace_back(named_mould(NamedMould::pic, z2, 3), SymmetryKind::symmetril);
	cases.emplace_back(named_mould(NamedMould::C, z2, 3), SymmetryKind::alternil);
	for (int t = 0; t < 6; ++t)
		cases.emplace_back(random_mould(spec, t % 2, rng),
		                   t % 2 ? SymmetryKind::symmetral : SymmetryKind::alternal);
	for (int t = 0; t < 4; ++t)
		cases.emplace_back(random_mould(spec, t % 2, rng),
		                   t % 2 ? SymmetryKind::symmetril : SymmetryKind::alternil);
	for (const auto &[m, kind] : cases)
		CHECK(check_symmetry(m, kind).holds == check_symmetry_characterization(m, kind));
}

TEST_CASE("closure under mu and bracket")
{
	MouldSpec spec{Convention::V, z2, 3};
	Rng rng(31);
	Mould a = random_structured(SymmetryKind::alternal, spec, rng);
	Mould b = random_structured(SymmetryKind::alternal, spec, rng);
	CHECK(check_symmetry(lu_bracket(a, b), SymmetryKind::alternal).holds);
	Mould s = random_structured(SymmetryKind::symmetral, spec, rng);
	Mould t = random_structured(SymmetryKind::symmetral, spec, rng);
	CHECK(check_symmetry(mu(s, t), SymmetryKind::symmetral).holds);
}

TEST_CASE("check output lines carry PASS/FAIL per component")
{
	Mould pic = named_mould(NamedMould::pic, z2, 2);
	std::string lines = symmetry_check_lines(pic, SymmetryKind::symmetral);
	CHECK(lines.find("FAIL") != std::string::npos);
	CHECK(lines.find("residual=1/(v1*v2)") != std::string::npos);
	std::string ok = symmetry_check_lines(pic, SymmetryKind::symmetril);
	CHECK(ok.find("FAIL") == std::string::npos);
	CHECK(ok.find("PASS") != std::string::npos);
}
