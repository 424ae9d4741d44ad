#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "mouldcalc/words.hpp"

namespace mould {

// U: variables on the upper row (u_i), decorations below; flexions add u-sums.
// V: decorations on the upper row, variables below (v_i); flexions multiply sigmas.
enum class Convention { U, V };

char family_of(Convention conv);
std::string to_string(Convention conv);
Convention parse_convention(const std::string &text);

struct MouldSpec {
	Convention conv = Convention::V;
	GammaSpec group;
	int depth = 0;

	bool operator==(const MouldSpec &) const = default;
};

// Depth-truncated mould: one dense table Gamma^r -> Q(x_1..x_r) per depth
// r <= spec.depth, plus the rational empty component.
class Mould {
public:
	using Generator = std::function<RatFun(int depth, const std::vector<GammaElem> &sigmas)>;

	Mould() = default;
	Mould(MouldSpec spec, Rational empty_value);
	static Mould identity(MouldSpec spec) { return Mould(std::move(spec), 1); }
	static Mould zero(MouldSpec spec) { return Mould(std::move(spec), 0); }
	// Tabulates generator(r, sigmas) for every cell; throws VariableEscape if
	// a component at depth r uses variables beyond x_r.
	static Mould make(MouldSpec spec, Rational empty_value, const Generator &gen);

	const MouldSpec &spec() const { return spec_; }
	int depth() const { return spec_.depth; }
	const Rational &empty_value() const { return empty_; }
	bool in_ari() const { return empty_ == 0; }
	bool in_gari() const { return empty_ == 1; }

	const RatFun &cell(int r, uint64_t sigma_index) const;
	const RatFun &cell(int r, const std::vector<GammaElem> &sigmas) const;
	void set_cell(int r, uint64_t sigma_index, RatFun value);

	// Table lookup at the word's sigma-vector followed by x_i -> form_i.
	RatFun evaluate(const Word &w) const;

	Mould operator-() const;
	friend Mould operator+(const Mould &a, const Mould &b);
	friend Mould operator-(const Mould &a, const Mould &b);
	Mould scaled(const Rational &c) const;
	bool operator==(const Mould &) const = default;

	std::string to_text() const;

private:
	MouldSpec spec_;
	Rational empty_ = 0;
	std::vector<std::vector<RatFun>> tables_; // tables_[r-1]
};

// Concatenation-split convolution (the mu product).
Mould mu(const Mould &a, const Mould &b);
Mould lu_bracket(const Mould &a, const Mould &b); // a mu b - b mu a

Mould exp_times(const Mould &a); // requires a in ARI
Mould log_times(const Mould &s); // requires s in GARI
Mould gari_inverse(const Mould &s); // two-sided mu inverse, depth recursion

Mould pari(const Mould &m); // sign (-1)^r at depth r
Mould anti(const Mould &m); // reverses the argument list

Mould parse_mould(const std::string &text);
Mould read_mould_file(const std::string &path);
void write_mould_file(const Mould &m, const std::string &path);

} // namespace mould
