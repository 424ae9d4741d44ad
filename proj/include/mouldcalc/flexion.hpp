#pragma once

#include "mouldcalc/mould.hpp"

namespace mould {

// Flexions on a split word.  The upper flexion lets the absorber soak up the
// neighbor block's upper row (sigma-product in V, u-sum in U); the lower
// flexion rewrites the block's lower row relative to the absorber's boundary
// letter (v-differences in V, sigma-quotients in U).

// a with its last letter absorbing all of b; needs a nonempty when b is not.
Word upper_flex_last(const Word &a, const Word &b, Convention conv, const GammaSpec &g);
// c with its first letter absorbing all of b (the arit mirror image).
Word upper_flex_first(const Word &c, const Word &b, Convention conv, const GammaSpec &g);
// b measured against the last letter of a.
Word lower_flex_last(const Word &b, const Word &a, Convention conv, const GammaSpec &g);
// b measured against the first letter of c.
Word lower_flex_first(const Word &b, const Word &c, Convention conv, const GammaSpec &g);

enum class FlexMarker { upper_ul, lower_lr };
// The two markers the V-side calculus uses: upper_ul(a,b) absorbs b into a,
// lower_lr(a,b) measures b against a.
Word flex(const Word &a, const Word &b, FlexMarker which, Convention conv, const GammaSpec &g);

enum class NamedMould { A, paj, C, pic, pij, poc };

NamedMould parse_named_mould(const std::string &name);
Mould named_mould(NamedMould name, const GammaSpec &group, int depth);
// Convenience: named mould by string, U names get U convention.
Mould named_mould(const std::string &name, const GammaSpec &group, int depth);

// --- decomposition combinatorics of section-3 style sums ---

enum class DecompVariant { D, E };
enum class HeadLenFilter { any, at_least_two, exactly_one };

struct Decomposition {
	std::vector<Word> parts;

	bool operator==(const Decomposition &) const = default;
};

// All ways to write w = c_1...c_t; D requires c_1..c_{t-1} nonempty, E
// requires c_2..c_{t-1} nonempty.  The head filter restricts l(c_1).
std::vector<Decomposition> enumerate_decompositions(const Word &w, int t, DecompVariant variant,
                                                    HeadLenFilter filter = HeadLenFilter::any);

// The three bijections used by the recurrence proofs, as (from, to) pairs:
//   D_t^{>=2}(w) -> D_t(w'), D_t^1(w) -> D_{t-1}(w'), E_t(w') -> D_t(w).
std::vector<std::pair<Decomposition, Decomposition>> bijection_head_at_least_two(const Word &w,
                                                                                 int t);
std::vector<std::pair<Decomposition, Decomposition>> bijection_head_exactly_one(const Word &w,
                                                                                int t);
std::vector<std::pair<Decomposition, Decomposition>> bijection_e_to_d(const Word &w, int t);

// ganit_v(B): sum over block decompositions w = a_1 b_1 ... a_s b_s of
// B(lower-flexed b_i) weighted evaluations at the upper-flexed a-blocks.
Mould ganit_apply(const Mould &b, const Mould &a);

// The word-level analogue g_B(w); evaluating a mould against it and summing
// reproduces ganit_apply at w.  Linear in w through g_expand_sum.
FormalWordSum g_expand(const Mould &b, const Word &w);
FormalWordSum g_expand_sum(const Mould &b, const FormalWordSum &s);

// g(w) = (w_1) g(w') + pic(lower)(g(upper-flexed w_2, w'')) as formal sums.
bool verify_g_recurrence(const Mould &pic_mould, const Word &w);
// poc analogue acting at the tail.
bool verify_gpoc_recurrence(const Mould &poc_mould, const Word &w);
// E_{2s+1}-indexed form of g equals the D_{2s}-indexed definition.
bool verify_g_equivalent_equation(const Mould &b, const Word &w);

// Sh- and Sh*-weighted sums of mould values over two arbitrary words.
RatFun sh_entry(const Mould &m, const Word &omega, const Word &eta);
RatFun shstar_entry(const Mould &m, const Word &omega, const Word &eta);

// Right-hand side of the transfer formula for Sh* of ganit_v(pic)(M) at
// (alpha; beta): the double decomposition sum against Sh(M).
RatFun transfer_formula_rhs(const Mould &m, const Mould &pic_mould, const Word &alpha,
                            const Word &beta);
// Same shape for ganit_v(poc) with Sh and Sh* swapped.
RatFun transfer_formula_rhs_poc(const Mould &m, const Mould &poc_mould, const Word &alpha,
                                const Word &beta);

} // namespace mould
