#pragma once

#include <functional>
#include <optional>

#include "mouldcalc/mould.hpp"

namespace mould {

struct Composition {
	std::vector<int> parts; // all >= 1

	int weight() const;
	auto operator<=>(const Composition &) const = default;
	std::string str() const; // "2,1"
};

Composition parse_composition(const std::string &text);
std::vector<Composition> compositions_of(int n);

// The flexion derivation on U-convention moulds:
//   arit(B)(A)(w) = sum_{w=abc, b,c nonempty} A(a.^c) B(b v-flexed to c)
//                 - sum_{w=abc, a,b nonempty} A(a^.c) B(b v-flexed to a),
// the absorbing boundary letter soaking up u(b) and the B-argument's sigmas
// divided by the absorber's boundary sigma.  flip_relative_sign replaces the
// minus by a plus; that is the negative-control build of the verifier.
Mould arit_apply(const Mould &b, const Mould &a, bool flip_relative_sign = false);

Mould preari(const Mould &a, const Mould &b, bool flip_relative_sign = false);
Mould preari_k(const Mould &m, int k, bool flip_relative_sign = false);
Mould expari(const Mould &m, bool flip_relative_sign = false);

// Degreewise inverse: the M in ARI with expari(M) = s, solved depth by depth.
Mould expari_inverse(const Mould &s, bool flip_relative_sign = false);

Rational ex_coeff(const Composition &c);
Rational c_coeff(const Composition &c); // recurrence value, equals (sum m)! Ex(m)

// I + sum over compositions of Ex(m) A_{m_1} x ... x A_{m_r}.
Mould expari_expansion(const Mould &m, bool flip_relative_sign = false);

// Checks sum_k Sh(m,n;k) f(k) = f(m) f(n) for all composition pairs of total
// weight <= max_weight.
bool is_symmetral_family(const std::function<Rational(const Composition &)> &f, int max_weight);

// Recovers the weight-k expansion coefficients of preari_k(m) over the words
// A_{m_1} x ... x A_{m_r} by random evaluation and exact elimination; empty
// when the sampled system is rank-deficient.
std::optional<std::vector<std::pair<Composition, Rational>>>
solve_c_coefficients(const Mould &m, int k, Rng &rng, bool flip_relative_sign = false);

} // namespace mould
