#pragma once

#include <cstdint>
#include <vector>

#include "mouldcalc/ratfun.hpp"

namespace mould {

// Expansions of the generic words (x_1..x_p) and (x_{p+1}..x_{p+q}), computed
// once per (p,q) and instantiated per sigma-vector by the callers.

// Plain shuffle: every target word is an interleaving; entry k of a pattern
// is the original position landing at slot k (1-based).
const std::vector<std::vector<int>> &generic_shuffle_patterns(int p, int q);

// Contracting shuffle: letters may merge.  A letter keeps one original
// variable and remembers the set of merged positions; the coefficient is a
// rational function of x_1..x_{p+q}.
struct GenLetter {
	uint32_t mask; // bit i-1 set when original position i was merged in
	int var;       // surviving variable index

	auto operator<=>(const GenLetter &) const = default;
};

struct GenTerm {
	RatFun coeff;
	std::vector<GenLetter> word;
};

const std::vector<GenTerm> &generic_shuffle_star_terms(int p, int q);

} // namespace mould
