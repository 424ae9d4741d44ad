#include "mouldcalc/gamma.hpp"

#include <sstream>

namespace mould {

GammaSpec::GammaSpec(std::vector<uint32_t> moduli) : moduli_(std::move(moduli))
{
	if (moduli_.empty())
		throw SpecMismatch("group needs at least one cyclic factor");
	for (auto n : moduli_)
		if (n < 1)
			throw SpecMismatch("cyclic factor must have positive order");
}

uint64_t GammaSpec::order() const
{
	uint64_t n = 1;
	for (auto m : moduli_)
		n *= m;
	return n;
}

std::string GammaSpec::str() const
{
	std::ostringstream out;
	for (size_t i = 0; i < moduli_.size(); ++i) {
		if (i)
			out << 'x';
		out << 'z' << moduli_[i];
	}
	return out.str();
}

GammaSpec parse_gamma_spec(const std::string &text)
{
	std::vector<uint32_t> moduli;
	size_t i = 0;
	while (i < text.size()) {
		if (text[i] != 'z')
			throw ParseError("bad group spec: " + text);
		++i;
		uint32_t n = 0;
		size_t start = i;
		while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
			n = n * 10 + (text[i++] - '0');
		if (i == start || n == 0)
			throw ParseError("bad group spec: " + text);
		moduli.push_back(n);
		if (i < text.size()) {
			if (text[i] != 'x')
				throw ParseError("bad group spec: " + text);
			++i;
		}
	}
	if (moduli.empty())
		throw ParseError("bad group spec: " + text);
	return GammaSpec(std::move(moduli));
}

GammaElem::GammaElem(const GammaSpec &spec, std::vector<uint32_t> residues)
    : residues_(std::move(residues))
{
	if (residues_.size() != spec.moduli().size())
		throw SpecMismatch("element has wrong number of components for group " + spec.str());
	for (size_t i = 0; i < residues_.size(); ++i)
		residues_[i] %= spec.moduli()[i];
}

GammaElem GammaElem::identity(const GammaSpec &spec)
{
	GammaElem e;
	e.residues_.assign(spec.moduli().size(), 0);
	return e;
}

GammaElem GammaElem::from_index(const GammaSpec &spec, uint64_t k)
{
	const auto &m = spec.moduli();
	GammaElem e;
	e.residues_.assign(m.size(), 0);
	for (size_t i = m.size(); i-- > 0;) {
		e.residues_[i] = uint32_t(k % m[i]);
		k /= m[i];
	}
	return e;
}

uint64_t GammaElem::index(const GammaSpec &spec) const
{
	uint64_t k = 0;
	for (size_t i = 0; i < residues_.size(); ++i)
		k = k * spec.moduli()[i] + residues_[i];
	return k;
}

bool GammaElem::is_identity() const
{
	for (auto r : residues_)
		if (r != 0)
			return false;
	return true;
}

namespace {

void check_member(const GammaElem &e, const GammaSpec &spec)
{
	if (e.residues().size() != spec.moduli().size())
		throw SpecMismatch("group element has wrong arity for " + spec.str());
	for (size_t i = 0; i < e.residues().size(); ++i)
		if (e.residues()[i] >= spec.moduli()[i])
			throw SpecMismatch("residue out of range for " + spec.str());
}

} // namespace

GammaElem GammaElem::mul(const GammaElem &o, const GammaSpec &spec) const
{
	check_member(*this, spec);
	check_member(o, spec);
	GammaElem e;
	e.residues_.resize(residues_.size());
	for (size_t i = 0; i < residues_.size(); ++i)
		e.residues_[i] = (residues_[i] + o.residues_[i]) % spec.moduli()[i];
	return e;
}

GammaElem GammaElem::inv(const GammaSpec &spec) const
{
	check_member(*this, spec);
	GammaElem e;
	e.residues_.resize(residues_.size());
	for (size_t i = 0; i < residues_.size(); ++i)
		e.residues_[i] = (spec.moduli()[i] - residues_[i]) % spec.moduli()[i];
	return e;
}

std::string GammaElem::str() const
{
	if (residues_.size() == 1)
		return std::to_string(residues_[0]);
	std::ostringstream out;
	out << '(';
	for (size_t i = 0; i < residues_.size(); ++i) {
		if (i)
			out << ',';
		out << residues_[i];
	}
	out << ')';
	return out.str();
}

GammaElem parse_gamma_elem(const GammaSpec &spec, const std::string &text)
{
	std::vector<uint32_t> rs;
	size_t i = 0;
	bool parens = !text.empty() && text.front() == '(';
	if (parens)
		++i;
	while (i < text.size() && text[i] != ')') {
		if (!std::isdigit(static_cast<unsigned char>(text[i])))
			throw ParseError("bad group element: " + text);
		uint32_t n = 0;
		while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
			n = n * 10 + (text[i++] - '0');
		rs.push_back(n);
		if (i < text.size() && text[i] == ',')
			++i;
	}
	if (parens && (i >= text.size() || text[i] != ')'))
		throw ParseError("bad group element: " + text);
	if (rs.size() != spec.moduli().size())
		throw ParseError("element " + text + " does not match group " + spec.str());
	return GammaElem(spec, std::move(rs));
}

std::vector<GammaElem> sigma_vector_from_index(const GammaSpec &spec, int r, uint64_t k)
{
	std::vector<GammaElem> v(r);
	uint64_t n = spec.order();
	for (int i = r; i-- > 0;) {
		v[i] = GammaElem::from_index(spec, k % n);
		k /= n;
	}
	return v;
}

uint64_t sigma_vector_index(const GammaSpec &spec, const std::vector<GammaElem> &sigmas)
{
	uint64_t k = 0;
	for (const auto &s : sigmas)
		k = k * spec.order() + s.index(spec);
	return k;
}

uint64_t sigma_vector_count(const GammaSpec &spec, int r)
{
	uint64_t n = 1;
	for (int i = 0; i < r; ++i)
		n *= spec.order();
	return n;
}

} // namespace mould
