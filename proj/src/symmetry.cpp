#include "mouldcalc/symmetry.hpp"

#include <sstream>

#include "mouldcalc/generic_shuffle.hpp"

namespace mould {

std::string to_string(SymmetryKind kind)
{
	switch (kind) {
	case SymmetryKind::alternal:
		return "alternal";
	case SymmetryKind::symmetral:
		return "symmetral";
	case SymmetryKind::alternil:
		return "alternil";
	default:
		return "symmetril";
	}
}

SymmetryKind parse_symmetry_kind(const std::string &text)
{
	for (auto kind : {SymmetryKind::alternal, SymmetryKind::symmetral, SymmetryKind::alternil,
	                  SymmetryKind::symmetril})
		if (to_string(kind) == text)
			return kind;
	throw ParseError("unknown symmetry kind: " + text);
}

std::string SymmetryWitness::str(char family) const
{
	std::ostringstream out;
	out << "(p,q)=(" << p << ',' << q << ") sigma=(";
	for (size_t i = 0; i < sigmas.size(); ++i) {
		if (i)
			out << ',';
		out << sigmas[i].str();
	}
	out << ") residual=" << residual.str(family);
	return out.str();
}

namespace {

bool lie_like(SymmetryKind kind)
{
	return kind == SymmetryKind::alternal || kind == SymmetryKind::alternil;
}

bool contracting(SymmetryKind kind)
{
	return kind == SymmetryKind::alternil || kind == SymmetryKind::symmetril;
}

void require_convention(const Mould &m, SymmetryKind kind)
{
	if (contracting(kind) && m.spec().conv != Convention::V)
		throw ConventionMismatch(to_string(kind) + " needs the V convention");
}

// Sh- or Sh*-weighted sum of mould values on the generic (p,q) word pair.
RatFun weighted_sum(const Mould &m, SymmetryKind kind, int p, int q,
                    const std::vector<GammaElem> &sig)
{
	const GammaSpec &g = m.spec().group;
	RatFun total;
	if (!contracting(kind)) {
		for (const auto &pat : generic_shuffle_patterns(p, q)) {
			std::vector<GammaElem> target(pat.size());
			std::map<int32_t, int32_t> ren;
			for (size_t t = 0; t < pat.size(); ++t) {
				target[t] = sig[pat[t] - 1];
				ren[int32_t(t) + 1] = pat[t];
			}
			const RatFun &c = m.cell(p + q, target);
			if (!c.is_zero())
				total += c.rename_vars(ren);
		}
		return total;
	}
	for (const auto &term : generic_shuffle_star_terms(p, q)) {
		std::vector<GammaElem> target;
		target.reserve(term.word.size());
		std::map<int32_t, int32_t> ren;
		for (size_t t = 0; t < term.word.size(); ++t) {
			GammaElem e = GammaElem::identity(g);
			for (int bit = 0; bit < p + q; ++bit)
				if (term.word[t].mask & (uint32_t(1) << bit))
					e = e.mul(sig[bit], g);
			target.push_back(std::move(e));
			ren[int32_t(t) + 1] = term.word[t].var;
		}
		const RatFun &c = m.cell(int(term.word.size()), target);
		if (!c.is_zero())
			total += term.coeff * c.rename_vars(ren);
	}
	return total;
}

RatFun expected_value(const Mould &m, SymmetryKind kind, int p, int q,
                      const std::vector<GammaElem> &sig)
{
	if (lie_like(kind))
		return RatFun();
	const RatFun &left = m.cell(p, std::vector<GammaElem>(sig.begin(), sig.begin() + p));
	if (left.is_zero())
		return RatFun();
	RatFun right = m.cell(q, std::vector<GammaElem>(sig.begin() + p, sig.end())).shift_vars(p);
	return left * right;
}

} // namespace

SymmetryReport check_symmetry(const Mould &m, SymmetryKind kind)
{
	require_convention(m, kind);
	Rational want_empty = lie_like(kind) ? 0 : 1;
	if (m.empty_value() != want_empty)
		return {false, SymmetryWitness{0, 0, {}, RatFun(m.empty_value() - want_empty)}};
	const GammaSpec &g = m.spec().group;
	for (int total = 2; total <= m.depth(); ++total) {
		for (int p = 1; p < total; ++p) {
			int q = total - p;
			uint64_t n = sigma_vector_count(g, total);
			for (uint64_t k = 0; k < n; ++k) {
				auto sig = sigma_vector_from_index(g, total, k);
				RatFun residual = weighted_sum(m, kind, p, q, sig) -
				                  expected_value(m, kind, p, q, sig);
				if (!residual.is_zero())
					return {false, SymmetryWitness{p, q, sig, residual}};
			}
		}
	}
	return {true, std::nullopt};
}

bool check_symmetry_characterization(const Mould &m, SymmetryKind kind)
{
	require_convention(m, kind);
	if (m.empty_value() != (lie_like(kind) ? Rational(0) : Rational(1)))
		return false;
	Dimould lhs = contracting(kind) ? shstar_map(m) : sh_map(m);
	Mould id = Mould::identity(m.spec());
	Dimould rhs = lie_like(kind) ? tensor(m, id) + tensor(id, m) : tensor(m, m);
	return lhs == rhs;
}

std::string symmetry_check_lines(const Mould &m, SymmetryKind kind)
{
	require_convention(m, kind);
	std::ostringstream out;
	const GammaSpec &g = m.spec().group;
	for (int total = 2; total <= m.depth(); ++total) {
		for (int p = 1; p < total; ++p) {
			int q = total - p;
			uint64_t n = sigma_vector_count(g, total);
			for (uint64_t k = 0; k < n; ++k) {
				auto sig = sigma_vector_from_index(g, total, k);
				RatFun residual = weighted_sum(m, kind, p, q, sig) -
				                  expected_value(m, kind, p, q, sig);
				out << "p=" << p << " q=" << q << " sigma=(";
				for (size_t i = 0; i < sig.size(); ++i) {
					if (i)
						out << ',';
					out << sig[i].str();
				}
				out << ") " << (residual.is_zero() ? "PASS" : "FAIL")
				    << " residual=" << residual.str(family_of(m.spec().conv)) << '\n';
			}
		}
	}
	return out.str();
}

Mould random_structured(SymmetryKind kind, MouldSpec spec, Rng &rng)
{
	if (contracting(kind))
		throw Error("random_structured generates alternal and symmetral moulds only");
	const GammaSpec &g = spec.group;
	std::uniform_int_distribution<int> small(-4, 4);
	auto depth1 = [&] {
		Mould m = Mould::zero(spec);
		uint64_t n = sigma_vector_count(g, 1);
		for (uint64_t k = 0; k < n; ++k) {
			Poly p = Poly(rat(small(rng))) + Poly::variable(1) * Poly(rat(small(rng)));
			m.set_cell(1, k, RatFun(std::move(p)));
		}
		return m;
	};
	// iterated left-nested brackets of depth-1 moulds, one per depth
	Mould sum = Mould::zero(spec);
	for (int len = 1; len <= spec.depth; ++len) {
		Mould b = depth1();
		for (int k = 2; k <= len; ++k)
			b = lu_bracket(b, depth1());
		int c = small(rng);
		sum = sum + b.scaled(rat(c == 0 ? 1 : c, 2));
	}
	if (kind == SymmetryKind::alternal)
		return sum;
	return exp_times(sum);
}

Mould random_mould(MouldSpec spec, Rational empty_value, Rng &rng)
{
	std::uniform_int_distribution<int> small(-4, 4);
	std::uniform_int_distribution<int> degree(0, 1);
	return Mould::make(spec, std::move(empty_value), [&](int r, const std::vector<GammaElem> &) {
		Poly p(rat(small(rng)));
		for (int i = 1; i <= r; ++i) {
			Poly v = Poly::variable(i);
			if (degree(rng))
				v = v * v;
			p += v * Poly(rat(small(rng)));
		}
		return RatFun(std::move(p));
	});
}

} // namespace mould
