#include "mouldcalc/dimould.hpp"

#include "mouldcalc/generic_shuffle.hpp"

namespace mould {

Dimould::Dimould(MouldSpec spec) : spec_(std::move(spec))
{
	grid_.resize(spec_.depth + 1);
	for (int r = 0; r <= spec_.depth; ++r) {
		grid_[r].resize(spec_.depth - r + 1);
		for (int s = 0; r + s <= spec_.depth; ++s)
			grid_[r][s].assign(sigma_vector_count(spec_.group, r + s), RatFun());
	}
}

Dimould Dimould::identity(MouldSpec spec)
{
	Dimould d(std::move(spec));
	d.grid_[0][0][0] = RatFun(Rational(1));
	return d;
}

const RatFun &Dimould::at(int r, int s, uint64_t sigma_index) const
{
	if (r < 0 || s < 0 || r + s > spec_.depth)
		throw DepthExceeded("dimould component (" + std::to_string(r) + "," +
		                    std::to_string(s) + ") outside truncation");
	return grid_[r][s][sigma_index];
}

const RatFun &Dimould::at(int r, int s, const std::vector<GammaElem> &sigmas) const
{
	return at(r, s, sigma_vector_index(spec_.group, sigmas));
}

void Dimould::set(int r, int s, uint64_t sigma_index, RatFun value)
{
	if (r < 0 || s < 0 || r + s > spec_.depth)
		throw DepthExceeded("dimould component (" + std::to_string(r) + "," +
		                    std::to_string(s) + ") outside truncation");
	if (value.max_variable() > r + s)
		throw VariableEscape("dimould component at (" + std::to_string(r) + "," +
		                     std::to_string(s) + ") uses x" +
		                     std::to_string(value.max_variable()));
	grid_[r][s][sigma_index] = std::move(value);
}

Dimould operator+(const Dimould &a, const Dimould &b)
{
	if (a.spec_ != b.spec_)
		throw SpecMismatch("dimould addition across different specs");
	Dimould d(a.spec_);
	for (int r = 0; r <= a.depth(); ++r)
		for (int s = 0; r + s <= a.depth(); ++s)
			for (size_t k = 0; k < a.grid_[r][s].size(); ++k)
				d.grid_[r][s][k] = a.grid_[r][s][k] + b.grid_[r][s][k];
	return d;
}

Dimould operator-(const Dimould &a, const Dimould &b)
{
	if (a.spec_ != b.spec_)
		throw SpecMismatch("dimould subtraction across different specs");
	Dimould d(a.spec_);
	for (int r = 0; r <= a.depth(); ++r)
		for (int s = 0; r + s <= a.depth(); ++s)
			for (size_t k = 0; k < a.grid_[r][s].size(); ++k)
				d.grid_[r][s][k] = a.grid_[r][s][k] - b.grid_[r][s][k];
	return d;
}

Dimould dimould_mu(const Dimould &a, const Dimould &b)
{
	if (a.spec() != b.spec())
		throw SpecMismatch("dimould mu across different specs");
	const GammaSpec &g = a.spec().group;
	Dimould d(a.spec());
	for (int r = 0; r <= a.depth(); ++r) {
		for (int s = 0; r + s <= a.depth(); ++s) {
			uint64_t n = sigma_vector_count(g, r + s);
			for (uint64_t k = 0; k < n; ++k) {
				auto sig = sigma_vector_from_index(g, r + s, k);
				RatFun total;
				for (int i = 0; i <= r; ++i) {
					for (int j = 0; j <= s; ++j) {
						// left factor sees slots (1..i | r+1..r+j)
						std::vector<GammaElem> ls(sig.begin(), sig.begin() + i);
						ls.insert(ls.end(), sig.begin() + r, sig.begin() + r + j);
						const RatFun &lv = a.at(i, j, ls);
						if (lv.is_zero())
							continue;
						std::map<int32_t, int32_t> lren;
						for (int t = 1; t <= j; ++t)
							lren[i + t] = r + t;
						// right factor sees slots (i+1..r | r+j+1..r+s)
						std::vector<GammaElem> rs(sig.begin() + i, sig.begin() + r);
						rs.insert(rs.end(), sig.begin() + r + j, sig.end());
						const RatFun &rv = b.at(r - i, s - j, rs);
						if (rv.is_zero())
							continue;
						std::map<int32_t, int32_t> rren;
						for (int t = 1; t <= r - i; ++t)
							rren[t] = i + t;
						for (int t = 1; t <= s - j; ++t)
							rren[r - i + t] = r + j + t;
						total += lv.rename_vars(lren) * rv.rename_vars(rren);
					}
				}
				d.set(r, s, k, std::move(total));
			}
		}
	}
	return d;
}

Dimould tensor(const Mould &m, const Mould &n)
{
	if (m.spec() != n.spec())
		throw SpecMismatch("tensor across different mould specs");
	const GammaSpec &g = m.spec().group;
	Dimould d(m.spec());
	for (int r = 0; r <= m.depth(); ++r) {
		for (int s = 0; r + s <= m.depth(); ++s) {
			uint64_t cnt = sigma_vector_count(g, r + s);
			for (uint64_t k = 0; k < cnt; ++k) {
				auto sig = sigma_vector_from_index(g, r + s, k);
				RatFun lv = r == 0 ? RatFun(m.empty_value())
				                   : m.cell(r, std::vector<GammaElem>(sig.begin(),
				                                                      sig.begin() + r));
				if (lv.is_zero())
					continue;
				RatFun rv = s == 0 ? RatFun(n.empty_value())
				                   : n.cell(s, std::vector<GammaElem>(sig.begin() + r,
				                                                      sig.end()))
				                         .shift_vars(r);
				if (rv.is_zero())
					continue;
				d.set(r, s, k, lv * rv);
			}
		}
	}
	return d;
}

Dimould sh_map(const Mould &m)
{
	const GammaSpec &g = m.spec().group;
	Dimould d(m.spec());
	d.set(0, 0, 0, RatFun(m.empty_value()));
	for (int r = 0; r <= m.depth(); ++r) {
		for (int s = 0; r + s <= m.depth(); ++s) {
			if (r == 0 && s == 0)
				continue;
			const auto &patterns = generic_shuffle_patterns(r, s);
			uint64_t cnt = sigma_vector_count(g, r + s);
			for (uint64_t k = 0; k < cnt; ++k) {
				auto sig = sigma_vector_from_index(g, r + s, k);
				RatFun total;
				for (const auto &pat : patterns) {
					std::vector<GammaElem> target(pat.size());
					std::map<int32_t, int32_t> ren;
					for (size_t t = 0; t < pat.size(); ++t) {
						target[t] = sig[pat[t] - 1];
						ren[int32_t(t) + 1] = pat[t];
					}
					const RatFun &c = m.cell(r + s, target);
					if (!c.is_zero())
						total += c.rename_vars(ren);
				}
				d.set(r, s, k, std::move(total));
			}
		}
	}
	return d;
}

Dimould shstar_map(const Mould &m)
{
	if (m.spec().conv != Convention::V)
		throw ConventionMismatch("Sh* needs the V convention");
	const GammaSpec &g = m.spec().group;
	Dimould d(m.spec());
	d.set(0, 0, 0, RatFun(m.empty_value()));
	for (int r = 0; r <= m.depth(); ++r) {
		for (int s = 0; r + s <= m.depth(); ++s) {
			if (r == 0 && s == 0)
				continue;
			const auto &terms = generic_shuffle_star_terms(r, s);
			uint64_t cnt = sigma_vector_count(g, r + s);
			for (uint64_t k = 0; k < cnt; ++k) {
				auto sig = sigma_vector_from_index(g, r + s, k);
				RatFun total;
				for (const auto &term : terms) {
					std::vector<GammaElem> target;
					target.reserve(term.word.size());
					std::map<int32_t, int32_t> ren;
					for (size_t t = 0; t < term.word.size(); ++t) {
						GammaElem e = GammaElem::identity(g);
						uint32_t mask = term.word[t].mask;
						for (int bit = 0; bit < r + s; ++bit)
							if (mask & (uint32_t(1) << bit))
								e = e.mul(sig[bit], g);
						target.push_back(std::move(e));
						ren[int32_t(t) + 1] = term.word[t].var;
					}
					const RatFun &c = m.cell(int(term.word.size()), target);
					if (!c.is_zero())
						total += term.coeff * c.rename_vars(ren);
				}
				d.set(r, s, k, std::move(total));
			}
		}
	}
	return d;
}

} // namespace mould
