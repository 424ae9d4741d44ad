#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mouldcalc/errors.hpp"

namespace mould {

// Finite abelian group Z/n_1 x ... x Z/n_k, written multiplicatively.
class GammaSpec {
public:
	GammaSpec() : moduli_{1} {}
	explicit GammaSpec(std::vector<uint32_t> moduli);

	const std::vector<uint32_t> &moduli() const { return moduli_; }
	uint64_t order() const;
	bool operator==(const GammaSpec &) const = default;

	std::string str() const; // "z2", "z3xz4"

private:
	std::vector<uint32_t> moduli_;
};

GammaSpec parse_gamma_spec(const std::string &text);

class GammaElem {
public:
	GammaElem() = default;
	GammaElem(const GammaSpec &spec, std::vector<uint32_t> residues);
	static GammaElem identity(const GammaSpec &spec);
	// Element with mixed-radix index k, first factor most significant.
	static GammaElem from_index(const GammaSpec &spec, uint64_t k);

	const std::vector<uint32_t> &residues() const { return residues_; }
	uint64_t index(const GammaSpec &spec) const;
	bool is_identity() const;

	GammaElem mul(const GammaElem &o, const GammaSpec &spec) const;
	GammaElem inv(const GammaSpec &spec) const;
	auto operator<=>(const GammaElem &) const = default;

	std::string str() const; // "1" or "(1,0)"

private:
	std::vector<uint32_t> residues_;
};

GammaElem parse_gamma_elem(const GammaSpec &spec, const std::string &text);

// All sigma-vectors of length r in deterministic mixed-radix order;
// index of a vector is sum sigma_k.index * |Gamma|^(r-1-k).
std::vector<GammaElem> sigma_vector_from_index(const GammaSpec &spec, int r, uint64_t k);
uint64_t sigma_vector_index(const GammaSpec &spec, const std::vector<GammaElem> &sigmas);
uint64_t sigma_vector_count(const GammaSpec &spec, int r);

} // namespace mould
