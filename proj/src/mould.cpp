#include "mouldcalc/mould.hpp"

#include <fstream>
#include <sstream>

namespace mould {

char family_of(Convention conv)
{
	return conv == Convention::U ? 'u' : 'v';
}

std::string to_string(Convention conv)
{
	return conv == Convention::U ? "U" : "V";
}

Convention parse_convention(const std::string &text)
{
	if (text == "U" || text == "u")
		return Convention::U;
	if (text == "V" || text == "v")
		return Convention::V;
	throw ParseError("unknown convention: " + text);
}

Mould::Mould(MouldSpec spec, Rational empty_value) : spec_(std::move(spec)), empty_(std::move(empty_value))
{
	tables_.resize(spec_.depth);
	for (int r = 1; r <= spec_.depth; ++r)
		tables_[r - 1].assign(sigma_vector_count(spec_.group, r), RatFun());
}

Mould Mould::make(MouldSpec spec, Rational empty_value, const Generator &gen)
{
	Mould m(std::move(spec), std::move(empty_value));
	for (int r = 1; r <= m.spec_.depth; ++r) {
		uint64_t n = sigma_vector_count(m.spec_.group, r);
		for (uint64_t k = 0; k < n; ++k)
			m.set_cell(r, k, gen(r, sigma_vector_from_index(m.spec_.group, r, k)));
	}
	return m;
}

const RatFun &Mould::cell(int r, uint64_t sigma_index) const
{
	if (r < 1 || r > spec_.depth)
		throw DepthExceeded("depth " + std::to_string(r) + " outside truncation " +
		                    std::to_string(spec_.depth));
	return tables_[r - 1][sigma_index];
}

const RatFun &Mould::cell(int r, const std::vector<GammaElem> &sigmas) const
{
	return cell(r, sigma_vector_index(spec_.group, sigmas));
}

void Mould::set_cell(int r, uint64_t sigma_index, RatFun value)
{
	if (r < 1 || r > spec_.depth)
		throw DepthExceeded("depth " + std::to_string(r) + " outside truncation " +
		                    std::to_string(spec_.depth));
	if (value.max_variable() > r)
		throw VariableEscape("component at depth " + std::to_string(r) + " uses x" +
		                     std::to_string(value.max_variable()));
	tables_[r - 1][sigma_index] = std::move(value);
}

RatFun Mould::evaluate(const Word &w) const
{
	int r = int(w.size());
	if (r == 0)
		return RatFun(empty_);
	if (r > spec_.depth)
		throw DepthExceeded("word of length " + std::to_string(r) + " exceeds truncation " +
		                    std::to_string(spec_.depth));
	const RatFun &c = cell(r, sigma_vector_index(spec_.group, sigma_vector(w)));
	bool rename_ok = true;
	std::map<int32_t, int32_t> ren;
	std::vector<bool> seen;
	for (int i = 0; i < r && rename_ok; ++i) {
		const int32_t *v = w[i].form.single_variable();
		if (!v) {
			rename_ok = false;
			break;
		}
		ren[i + 1] = *v;
		if (size_t(*v) >= seen.size())
			seen.resize(size_t(*v) + 1, false);
		if (seen[*v])
			rename_ok = false; // repeated target, fall back to substitution
		seen[*v] = true;
	}
	if (rename_ok)
		return c.rename_vars(ren);
	std::map<int32_t, LinForm> sub;
	for (int i = 0; i < r; ++i)
		sub[i + 1] = w[i].form;
	return c.subst(sub);
}

Mould Mould::operator-() const
{
	return scaled(-1);
}

Mould Mould::scaled(const Rational &c) const
{
	Mould m(spec_, empty_ * c);
	RatFun f{c};
	for (int r = 1; r <= spec_.depth; ++r)
		for (uint64_t k = 0; k < tables_[r - 1].size(); ++k)
			m.tables_[r - 1][k] = tables_[r - 1][k] * f;
	return m;
}

Mould operator+(const Mould &a, const Mould &b)
{
	if (a.spec_ != b.spec_)
		throw SpecMismatch("mould addition across different specs");
	Mould m(a.spec_, a.empty_ + b.empty_);
	for (size_t r = 0; r < a.tables_.size(); ++r)
		for (size_t k = 0; k < a.tables_[r].size(); ++k)
			m.tables_[r][k] = a.tables_[r][k] + b.tables_[r][k];
	return m;
}

Mould operator-(const Mould &a, const Mould &b)
{
	return a + (-b);
}

Mould mu(const Mould &a, const Mould &b)
{
	if (a.spec() != b.spec())
		throw SpecMismatch("mu across different mould specs");
	const GammaSpec &g = a.spec().group;
	Mould m(a.spec(), a.empty_value() * b.empty_value());
	RatFun ea{a.empty_value()}, eb{b.empty_value()};
	for (int r = 1; r <= a.depth(); ++r) {
		uint64_t n = sigma_vector_count(g, r);
		for (uint64_t k = 0; k < n; ++k) {
			auto sigmas = sigma_vector_from_index(g, r, k);
			RatFun total;
			for (int i = 0; i <= r; ++i) {
				RatFun left =
				    i == 0 ? ea
				           : a.cell(i, std::vector<GammaElem>(sigmas.begin(),
				                                              sigmas.begin() + i));
				if (left.is_zero())
					continue;
				RatFun right =
				    i == r ? eb
				           : b.cell(r - i, std::vector<GammaElem>(sigmas.begin() + i,
				                                                  sigmas.end()))
				                 .shift_vars(i);
				if (right.is_zero())
					continue;
				total += left * right;
			}
			m.set_cell(r, k, std::move(total));
		}
	}
	return m;
}

Mould lu_bracket(const Mould &a, const Mould &b)
{
	return mu(a, b) - mu(b, a);
}

Mould exp_times(const Mould &a)
{
	if (!a.in_ari())
		throw NotInARI();
	Mould s = Mould::identity(a.spec()) + a;
	Mould p = a;
	Rational kfact = 1;
	for (int k = 2; k <= a.depth(); ++k) {
		p = mu(p, a); // vanishes below depth k, so the series is exact
		kfact *= k;
		s = s + p.scaled(1 / kfact);
	}
	return s;
}

Mould log_times(const Mould &s)
{
	if (!s.in_gari())
		throw NotInGARI();
	Mould t = s - Mould::identity(s.spec());
	Mould acc = t;
	Mould p = t;
	for (int k = 2; k <= s.depth(); ++k) {
		p = mu(p, t);
		Rational c(k % 2 == 0 ? -1 : 1, k);
		acc = acc + p.scaled(c);
	}
	return acc;
}

Mould gari_inverse(const Mould &s)
{
	if (!s.in_gari())
		throw NotInGARI();
	const GammaSpec &g = s.spec().group;
	Mould inv = Mould::identity(s.spec());
	for (int r = 1; r <= s.depth(); ++r) {
		uint64_t n = sigma_vector_count(g, r);
		for (uint64_t k = 0; k < n; ++k) {
			auto sigmas = sigma_vector_from_index(g, r, k);
			RatFun total;
			for (int i = 1; i <= r; ++i) {
				const RatFun &left = s.cell(
				    i, std::vector<GammaElem>(sigmas.begin(), sigmas.begin() + i));
				if (left.is_zero())
					continue;
				RatFun right =
				    i == r ? RatFun(Rational(1))
				           : inv.cell(r - i, std::vector<GammaElem>(sigmas.begin() + i,
				                                                    sigmas.end()))
				                 .shift_vars(i);
				total += left * right;
			}
			inv.set_cell(r, k, -total);
		}
	}
	return inv;
}

Mould pari(const Mould &m)
{
	Mould p = m;
	for (int r = 1; r <= m.depth(); ++r) {
		if (r % 2 == 0)
			continue;
		uint64_t n = sigma_vector_count(m.spec().group, r);
		for (uint64_t k = 0; k < n; ++k)
			p.set_cell(r, k, -m.cell(r, k));
	}
	return p;
}

Mould anti(const Mould &m)
{
	const GammaSpec &g = m.spec().group;
	Mould a(m.spec(), m.empty_value());
	for (int r = 1; r <= m.depth(); ++r) {
		std::map<int32_t, int32_t> rev;
		for (int i = 1; i <= r; ++i)
			rev[i] = r + 1 - i;
		uint64_t n = sigma_vector_count(g, r);
		for (uint64_t k = 0; k < n; ++k) {
			auto sigmas = sigma_vector_from_index(g, r, k);
			std::reverse(sigmas.begin(), sigmas.end());
			a.set_cell(r, k, m.cell(r, sigmas).rename_vars(rev));
		}
	}
	return a;
}

std::string Mould::to_text() const
{
	std::ostringstream out;
	out << "mould convention=" << to_string(spec_.conv) << " group=" << spec_.group.str()
	    << " depth=" << spec_.depth << " empty=" << mould::to_string(empty_) << '\n';
	for (int r = 1; r <= spec_.depth; ++r) {
		uint64_t n = sigma_vector_count(spec_.group, r);
		for (uint64_t k = 0; k < n; ++k) {
			auto sigmas = sigma_vector_from_index(spec_.group, r, k);
			out << r << " (";
			for (size_t i = 0; i < sigmas.size(); ++i) {
				if (i)
					out << ',';
				out << sigmas[i].str();
			}
			out << ") : " << cell(r, k).str('x') << '\n';
		}
	}
	return out.str();
}

namespace {

std::map<std::string, std::string> parse_header(const std::string &line)
{
	std::istringstream in(line);
	std::string tag;
	in >> tag;
	if (tag != "mould")
		throw ParseError("mould file must start with 'mould', got: " + line);
	std::map<std::string, std::string> kv;
	std::string item;
	while (in >> item) {
		auto eq = item.find('=');
		if (eq == std::string::npos)
			throw ParseError("bad header item: " + item);
		kv[item.substr(0, eq)] = item.substr(eq + 1);
	}
	return kv;
}

// splits "(a,b,(c,d))" on top-level commas into "a","b","(c,d)"
std::vector<std::string> split_sigma_vector(const std::string &text)
{
	if (text.size() < 2 || text.front() != '(' || text.back() != ')')
		throw ParseError("bad sigma vector: " + text);
	std::vector<std::string> parts;
	int depth = 0;
	std::string cur;
	for (size_t i = 1; i + 1 < text.size(); ++i) {
		char c = text[i];
		if (c == '(')
			++depth;
		if (c == ')')
			--depth;
		if (c == ',' && depth == 0) {
			parts.push_back(cur);
			cur.clear();
		} else {
			cur += c;
		}
	}
	if (!cur.empty())
		parts.push_back(cur);
	return parts;
}

} // namespace

Mould parse_mould(const std::string &text)
{
	std::istringstream in(text);
	std::string line;
	if (!std::getline(in, line))
		throw ParseError("empty mould text");
	auto kv = parse_header(line);
	for (const char *key : {"convention", "group", "depth", "empty"})
		if (!kv.count(key))
			throw ParseError(std::string("mould header misses ") + key);
	MouldSpec spec{parse_convention(kv["convention"]), parse_gamma_spec(kv["group"]),
	               std::stoi(kv["depth"])};
	Mould m(spec, parse_rational(kv["empty"]));
	while (std::getline(in, line)) {
		if (line.empty())
			continue;
		std::istringstream ls(line);
		int r;
		std::string sig, colon;
		if (!(ls >> r >> sig >> colon) || colon != ":")
			throw ParseError("bad mould line: " + line);
		std::string rest;
		std::getline(ls, rest);
		auto parts = split_sigma_vector(sig);
		if (int(parts.size()) != r)
			throw ParseError("sigma vector length mismatch: " + line);
		std::vector<GammaElem> sigmas;
		for (const auto &p : parts)
			sigmas.push_back(parse_gamma_elem(spec.group, p));
		m.set_cell(r, sigma_vector_index(spec.group, sigmas), parse_ratfun(rest));
	}
	return m;
}

Mould read_mould_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw Error("cannot open mould file: " + path);
	std::stringstream buf;
	buf << in.rdbuf();
	return parse_mould(buf.str());
}

void write_mould_file(const Mould &m, const std::string &path)
{
	std::ofstream out(path);
	if (!out)
		throw Error("cannot write mould file: " + path);
	out << m.to_text();
}

} // namespace mould
