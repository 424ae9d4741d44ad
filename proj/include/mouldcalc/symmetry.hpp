#pragma once

#include <optional>

#include "mouldcalc/dimould.hpp"

namespace mould {

enum class SymmetryKind { alternal, symmetral, alternil, symmetril };

std::string to_string(SymmetryKind kind);
SymmetryKind parse_symmetry_kind(const std::string &text);

struct SymmetryWitness {
	int p = 0, q = 0; // p = q = 0 flags a failing empty component
	std::vector<GammaElem> sigmas;
	RatFun residual;

	std::string str(char family = 'v') const;
};

struct SymmetryReport {
	bool holds = false;
	std::optional<SymmetryWitness> witness;
};

// Checks the defining identity on the generic word for every (p,q) with
// p,q >= 1, p + q <= depth and every sigma-vector; first failure wins.
// The empty component must be 0 (al/il) or 1 (as/is).
SymmetryReport check_symmetry(const Mould &m, SymmetryKind kind);

// Same predicate through the dimould characterization: Sh(M) (resp Sh*(M))
// equals M(x)I + I(x)M for the Lie-like kinds and M(x)M for the group-like
// ones.  No witness on failure.
bool check_symmetry_characterization(const Mould &m, SymmetryKind kind);

// One line per (p,q,sigma) with PASS/FAIL plus residual; drives the CLI.
std::string symmetry_check_lines(const Mould &m, SymmetryKind kind);

// Random rational combination of iterated lu-brackets of random depth-1
// moulds (vacuously alternal, closure keeps it so); symmetral takes exp.
Mould random_structured(SymmetryKind kind, MouldSpec spec, Rng &rng);

// Unstructured mould with dense random polynomial components.
Mould random_mould(MouldSpec spec, Rational empty_value, Rng &rng);

} // namespace mould
