#pragma once

#include <stdexcept>
#include <string>

namespace mould {

struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
	DivisionByZero() : Error("division by zero") {}
	explicit DivisionByZero(const std::string &what) : Error(what) {}
};

struct PoleAtSubstitution : Error {
	PoleAtSubstitution() : Error("substitution makes the denominator vanish identically") {}
	explicit PoleAtSubstitution(const std::string &what) : Error(what) {}
};

struct SpecMismatch : Error {
	explicit SpecMismatch(const std::string &what) : Error(what) {}
};

struct ConventionMismatch : Error {
	explicit ConventionMismatch(const std::string &what) : Error(what) {}
};

struct DepthExceeded : Error {
	explicit DepthExceeded(const std::string &what) : Error(what) {}
};

struct NotInARI : Error {
	NotInARI() : Error("mould has nonzero empty component, not in ARI") {}
};

struct NotInGARI : Error {
	NotInGARI() : Error("mould has empty component != 1, not in GARI") {}
};

struct VariableEscape : Error {
	explicit VariableEscape(const std::string &what) : Error(what) {}
};

struct EmptyAbsorber : Error {
	EmptyAbsorber() : Error("flexion needs a nonempty absorbing word") {}
};

struct ParseError : Error {
	explicit ParseError(const std::string &what) : Error(what) {}
};

} // namespace mould
