#pragma once

#include "mouldcalc/mould.hpp"

namespace mould {

// Two-slot mould: for each (r,s) with r+s <= depth a table
// Gamma^{r+s} -> Q(x_1..x_{r+s}), slot boundary after x_r.
class Dimould {
public:
	Dimould() = default;
	explicit Dimould(MouldSpec spec);
	static Dimould identity(MouldSpec spec);

	const MouldSpec &spec() const { return spec_; }
	int depth() const { return spec_.depth; }

	const RatFun &at(int r, int s, uint64_t sigma_index) const;
	const RatFun &at(int r, int s, const std::vector<GammaElem> &sigmas) const;
	void set(int r, int s, uint64_t sigma_index, RatFun value);

	friend Dimould operator+(const Dimould &a, const Dimould &b);
	friend Dimould operator-(const Dimould &a, const Dimould &b);
	bool operator==(const Dimould &) const = default;

private:
	MouldSpec spec_;
	std::vector<std::vector<std::vector<RatFun>>> grid_; // grid_[r][s]
};

// Double split convolution, eqn-(2.2.1) style; unit is identity().
Dimould dimould_mu(const Dimould &a, const Dimould &b);

// Rank-one dimould (M tensor N)(omega;eta) = M(omega)N(eta).
Dimould tensor(const Mould &m, const Mould &n);

// Sh-weighted and Sh*-weighted sums of mould values on generic word pairs.
Dimould sh_map(const Mould &m);
Dimould shstar_map(const Mould &m); // V convention only

} // namespace mould
