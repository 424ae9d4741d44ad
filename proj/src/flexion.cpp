#include "mouldcalc/flexion.hpp"

#include <algorithm>

namespace mould {

namespace {

GammaElem sigma_total(const Word &w, const GammaSpec &g)
{
	GammaElem e = GammaElem::identity(g);
	for (const auto &l : w)
		e = e.mul(l.sigma, g);
	return e;
}

LinForm form_total(const Word &w)
{
	LinForm f;
	for (const auto &l : w)
		f += l.form;
	return f;
}

} // namespace

Word upper_flex_last(const Word &a, const Word &b, Convention conv, const GammaSpec &g)
{
	if (b.empty())
		return a;
	if (a.empty())
		throw EmptyAbsorber();
	Word out = a;
	if (conv == Convention::V)
		out.back().sigma = out.back().sigma.mul(sigma_total(b, g), g);
	else
		out.back().form += form_total(b);
	return out;
}

Word upper_flex_first(const Word &c, const Word &b, Convention conv, const GammaSpec &g)
{
	if (b.empty())
		return c;
	if (c.empty())
		throw EmptyAbsorber();
	Word out = c;
	if (conv == Convention::V)
		out.front().sigma = out.front().sigma.mul(sigma_total(b, g), g);
	else
		out.front().form += form_total(b);
	return out;
}

Word lower_flex_last(const Word &b, const Word &a, Convention conv, const GammaSpec &g)
{
	if (b.empty())
		return b;
	if (a.empty())
		throw EmptyAbsorber();
	Word out = b;
	if (conv == Convention::V) {
		for (auto &l : out)
			l.form -= a.back().form;
	} else {
		GammaElem inv = a.back().sigma.inv(g);
		for (auto &l : out)
			l.sigma = l.sigma.mul(inv, g);
	}
	return out;
}

Word lower_flex_first(const Word &b, const Word &c, Convention conv, const GammaSpec &g)
{
	if (b.empty())
		return b;
	if (c.empty())
		throw EmptyAbsorber();
	Word out = b;
	if (conv == Convention::V) {
		for (auto &l : out)
			l.form -= c.front().form;
	} else {
		GammaElem inv = c.front().sigma.inv(g);
		for (auto &l : out)
			l.sigma = l.sigma.mul(inv, g);
	}
	return out;
}

Word flex(const Word &a, const Word &b, FlexMarker which, Convention conv, const GammaSpec &g)
{
	if (which == FlexMarker::upper_ul)
		return upper_flex_last(a, b, conv, g);
	return lower_flex_last(b, a, conv, g);
}

NamedMould parse_named_mould(const std::string &name)
{
	if (name == "A")
		return NamedMould::A;
	if (name == "paj")
		return NamedMould::paj;
	if (name == "C")
		return NamedMould::C;
	if (name == "pic")
		return NamedMould::pic;
	if (name == "pij")
		return NamedMould::pij;
	if (name == "poc")
		return NamedMould::poc;
	throw ParseError("unknown named mould: " + name);
}

Mould named_mould(NamedMould name, const GammaSpec &group, int depth)
{
	auto chain = [](int m, auto &&factor) { // product of factor(i) for i in [2..m]
		Poly p{Rational(1)};
		for (int i = 2; i <= m; ++i)
			p = p * factor(i);
		return p;
	};
	Poly one{Rational(1)};
	switch (name) {
	case NamedMould::A: // 0, 0, 1/((u2-u1)...(um-u_{m-1}))
		return Mould::make({Convention::U, group, depth}, 0,
		                   [&](int m, const std::vector<GammaElem> &) {
			                   if (m < 2)
				                   return RatFun();
			                   Poly den = chain(m, [](int i) {
				                   return Poly::variable(i) - Poly::variable(i - 1);
			                   });
			                   return RatFun(Poly(Rational(1)), std::move(den));
		                   });
	case NamedMould::paj: // 1/(u1(u1+u2)...(u1+...+um))
		return Mould::make({Convention::U, group, depth}, 1,
		                   [&](int m, const std::vector<GammaElem> &) {
			                   Poly den = Poly::variable(1), partial = Poly::variable(1);
			                   for (int i = 2; i <= m; ++i) {
				                   partial += Poly::variable(i);
				                   den = den * partial;
			                   }
			                   return RatFun(Poly(Rational(1)), std::move(den));
		                   });
	case NamedMould::C: // 0, 1, 1/((v2-v1)...(vm-v1))
		return Mould::make({Convention::V, group, depth}, 0,
		                   [&](int m, const std::vector<GammaElem> &) {
			                   if (m == 1)
				                   return RatFun(Rational(1));
			                   Poly den = chain(m, [](int i) {
				                   return Poly::variable(i) - Poly::variable(1);
			                   });
			                   return RatFun(Poly(Rational(1)), std::move(den));
		                   });
	case NamedMould::pic: // 1/(v1...vm)
		return Mould::make({Convention::V, group, depth}, 1,
		                   [&](int m, const std::vector<GammaElem> &) {
			                   Poly den{Rational(1)};
			                   for (int i = 1; i <= m; ++i)
				                   den = den * Poly::variable(i);
			                   return RatFun(Poly(Rational(1)), std::move(den));
		                   });
	case NamedMould::pij: // 1/v1, 1/((v1-v2)...(v_{m-1}-vm)vm)
		return Mould::make({Convention::V, group, depth}, 1,
		                   [&](int m, const std::vector<GammaElem> &) {
			                   Poly den = Poly::variable(m);
			                   for (int i = 1; i < m; ++i)
				                   den = den * (Poly::variable(i) - Poly::variable(i + 1));
			                   return RatFun(Poly(Rational(1)), std::move(den));
		                   });
	default: // poc: -1/(v1(v1-v2)...(v_{r-1}-vr))
		return Mould::make({Convention::V, group, depth}, 1,
		                   [&](int m, const std::vector<GammaElem> &) {
			                   Poly den = Poly::variable(1);
			                   for (int i = 1; i < m; ++i)
				                   den = den * (Poly::variable(i) - Poly::variable(i + 1));
			                   return RatFun(Poly(Rational(-1)), std::move(den));
		                   });
	}
}

Mould named_mould(const std::string &name, const GammaSpec &group, int depth)
{
	return named_mould(parse_named_mould(name), group, depth);
}

std::vector<Decomposition> enumerate_decompositions(const Word &w, int t, DecompVariant variant,
                                                    HeadLenFilter filter)
{
	std::vector<Decomposition> out;
	std::vector<Word> parts(t);
	auto rec = [&](auto &&self, size_t pos, int slot) -> void {
		if (slot == t) {
			if (pos == w.size())
				out.push_back({parts});
			return;
		}
		bool interior = variant == DecompVariant::D ? slot < t - 1
		                                            : (slot > 0 && slot < t - 1);
		size_t min_len = interior ? 1 : 0;
		for (size_t len = min_len; pos + len <= w.size(); ++len) {
			if (slot == 0) {
				if (filter == HeadLenFilter::at_least_two && len < 2)
					continue;
				if (filter == HeadLenFilter::exactly_one && len != 1)
					continue;
			}
			parts[slot] = Word(w.begin() + long(pos), w.begin() + long(pos + len));
			self(self, pos + len, slot + 1);
		}
	};
	rec(rec, 0, 0);
	return out;
}

std::vector<std::pair<Decomposition, Decomposition>> bijection_head_at_least_two(const Word &w,
                                                                                 int t)
{
	std::vector<std::pair<Decomposition, Decomposition>> pairs;
	for (auto &d :
	     enumerate_decompositions(w, t, DecompVariant::D, HeadLenFilter::at_least_two)) {
		Decomposition image = d;
		image.parts[0].erase(image.parts[0].begin());
		pairs.emplace_back(std::move(d), std::move(image));
	}
	return pairs;
}

std::vector<std::pair<Decomposition, Decomposition>> bijection_head_exactly_one(const Word &w,
                                                                                int t)
{
	std::vector<std::pair<Decomposition, Decomposition>> pairs;
	for (auto &d : enumerate_decompositions(w, t, DecompVariant::D, HeadLenFilter::exactly_one)) {
		Decomposition image;
		image.parts.assign(d.parts.begin() + 1, d.parts.end());
		pairs.emplace_back(std::move(d), std::move(image));
	}
	return pairs;
}

std::vector<std::pair<Decomposition, Decomposition>> bijection_e_to_d(const Word &w, int t)
{
	std::vector<std::pair<Decomposition, Decomposition>> pairs;
	if (w.empty())
		return pairs;
	Word tail(w.begin() + 1, w.end());
	for (auto &e : enumerate_decompositions(tail, t, DecompVariant::E)) {
		Decomposition image = e;
		image.parts[0].insert(image.parts[0].begin(), w.front());
		pairs.emplace_back(std::move(e), std::move(image));
	}
	return pairs;
}

namespace {

// Shared shape of the ganit and g_B sums: one term per block decomposition
// w = a_1 b_1 ... a_s b_s (a_i nonempty, interior b_i nonempty).
struct GanitTerm {
	RatFun coeff; // product of B at the lower-flexed b-blocks
	Word word;    // concatenation of the upper-flexed a-blocks
};

// One term per element of D_{2s}(w), s >= 1: blocks (a_1;b_1;...;a_s;b_s).
template <typename Sink>
void for_each_ganit_term(const Mould &b, const Word &w, Sink &&sink)
{
	const GammaSpec &g = b.spec().group;
	Convention conv = b.spec().conv;
	int r = int(w.size());
	for (int s = 1; 2 * s - 1 <= r; ++s) {
		for (const auto &d : enumerate_decompositions(w, 2 * s, DecompVariant::D)) {
			GanitTerm term{RatFun(Rational(1)), {}};
			bool vanished = false;
			for (int i = 0; i < s && !vanished; ++i) {
				const Word &ai = d.parts[2 * i];
				const Word &bi = d.parts[2 * i + 1];
				Word fa = upper_flex_last(ai, bi, conv, g);
				term.word.insert(term.word.end(), fa.begin(), fa.end());
				if (!bi.empty()) {
					term.coeff = term.coeff *
					             b.evaluate(lower_flex_last(bi, ai, conv, g));
					vanished = term.coeff.is_zero();
				}
			}
			if (!vanished)
				sink(std::move(term));
		}
	}
}

} // namespace

Mould ganit_apply(const Mould &b, const Mould &a)
{
	if (b.spec() != a.spec())
		throw SpecMismatch("ganit across different mould specs");
	if (b.spec().conv != Convention::V)
		throw ConventionMismatch("ganit_v needs the V convention");
	const GammaSpec &g = b.spec().group;
	Mould out(a.spec(), a.empty_value());
	for (int r = 1; r <= a.depth(); ++r) {
		uint64_t n = sigma_vector_count(g, r);
		for (uint64_t k = 0; k < n; ++k) {
			auto sig = sigma_vector_from_index(g, r, k);
			Word w(r);
			for (int i = 0; i < r; ++i)
				w[i] = {sig[i], LinForm::var(i + 1)};
			RatFun total;
			for_each_ganit_term(b, w, [&](GanitTerm term) {
				RatFun v = a.evaluate(term.word);
				if (!v.is_zero())
					total += term.coeff * v;
			});
			out.set_cell(r, k, std::move(total));
		}
	}
	return out;
}

FormalWordSum g_expand(const Mould &b, const Word &w)
{
	FormalWordSum sum;
	if (w.empty())
		return FormalWordSum::single({});
	for_each_ganit_term(b, w, [&](GanitTerm term) { sum.add(term.word, term.coeff); });
	return sum;
}

FormalWordSum g_expand_sum(const Mould &b, const FormalWordSum &s)
{
	FormalWordSum out;
	for (const auto &[w, c] : s.terms())
		out += g_expand(b, w).scaled(c);
	return out;
}

bool verify_g_recurrence(const Mould &pic_mould, const Word &w)
{
	if (w.size() < 2)
		throw Error("g recurrence needs a word of length >= 2");
	const GammaSpec &g = pic_mould.spec().group;
	Convention conv = pic_mould.spec().conv;
	Word tail(w.begin() + 1, w.end());         // w'
	Word tail2(w.begin() + 2, w.end());        // w''
	Word head{w.front()}, second{w[1]};
	FormalWordSum lhs = g_expand(pic_mould, w);
	FormalWordSum rhs = g_expand(pic_mould, tail).prepended(w.front());
	Word flexed = upper_flex_last(head, second, conv, g);
	Word arg = flexed;
	arg.insert(arg.end(), tail2.begin(), tail2.end());
	RatFun c = pic_mould.evaluate(lower_flex_last(second, head, conv, g));
	rhs += g_expand(pic_mould, arg).scaled(c);
	return lhs == rhs;
}

bool verify_gpoc_recurrence(const Mould &poc_mould, const Word &w)
{
	if (w.size() < 2)
		throw Error("g_poc recurrence needs a word of length >= 2");
	const GammaSpec &g = poc_mould.spec().group;
	Convention conv = poc_mould.spec().conv;
	size_t r = w.size();
	Word front(w.begin(), w.end() - 1);        // all but last
	Word front2(w.begin(), w.end() - 2);       // all but last two
	Word prev{w[r - 2]}, last{w[r - 1]};
	FormalWordSum lhs = g_expand(poc_mould, w);
	FormalWordSum rhs = g_expand(poc_mould, front).appended(w.back());
	Word flexed = upper_flex_last(prev, last, conv, g);
	Word arg = front2;
	arg.insert(arg.end(), flexed.begin(), flexed.end());
	RatFun c = poc_mould.evaluate(lower_flex_last(last, prev, conv, g));
	rhs += g_expand(poc_mould, arg).scaled(c);
	return lhs == rhs;
}

bool verify_g_equivalent_equation(const Mould &b, const Word &w)
{
	if (w.empty())
		throw Error("equivalent equation needs a nonempty word");
	const GammaSpec &g = b.spec().group;
	Convention conv = b.spec().conv;
	Word head{w.front()};
	Word tail(w.begin() + 1, w.end());
	FormalWordSum rhs;
	for (int s = 0; 2 * s + 1 <= int(tail.size()) + 2; ++s) {
		for (const auto &d : enumerate_decompositions(tail, 2 * s + 1, DecompVariant::E)) {
			const Word &b0 = d.parts.front();
			RatFun coeff = b0.empty()
			                   ? RatFun(Rational(1))
			                   : b.evaluate(lower_flex_last(b0, head, conv, g));
			Word word = upper_flex_last(head, b0, conv, g);
			// W_B of the alternating tail (a_1;b_1;...;a_s;b_s)
			for (int i = 0; i < s; ++i) {
				const Word &ai = d.parts[1 + 2 * i];
				const Word &bi = d.parts[2 + 2 * i];
				Word fa = upper_flex_last(ai, bi, conv, g);
				word.insert(word.end(), fa.begin(), fa.end());
				if (!bi.empty())
					coeff = coeff * b.evaluate(lower_flex_last(bi, ai, conv, g));
			}
			if (!coeff.is_zero())
				rhs.add(word, coeff);
		}
	}
	return g_expand(b, w) == rhs;
}

RatFun sh_entry(const Mould &m, const Word &omega, const Word &eta)
{
	RatFun total;
	FormalWordSum expansion = shuffle(omega, eta);
	for (const auto &[w, c] : expansion.terms()) {
		RatFun v = m.evaluate(w);
		if (!v.is_zero())
			total += c * v;
	}
	return total;
}

RatFun shstar_entry(const Mould &m, const Word &omega, const Word &eta)
{
	RatFun total;
	FormalWordSum expansion = shuffle_star(omega, eta, m.spec().group);
	for (const auto &[w, c] : expansion.terms()) {
		RatFun v = m.evaluate(w);
		if (!v.is_zero())
			total += c * v;
	}
	return total;
}

namespace {

RatFun transfer_rhs(const Mould &m, const Mould &weight, const Word &alpha, const Word &beta,
                    bool weighted_sum_uses_shstar)
{
	const GammaSpec &g = weight.spec().group;
	Convention conv = weight.spec().conv;
	RatFun total;
	auto blocks = [&](const Word &w, int pairs, auto &&per) {
		for (const auto &d : enumerate_decompositions(w, 2 * pairs, DecompVariant::D))
			per(d);
	};
	for (int p = 1; 2 * p - 1 <= int(alpha.size()); ++p) {
		for (int q = 1; 2 * q - 1 <= int(beta.size()); ++q) {
			blocks(alpha, p, [&](const Decomposition &da) {
				RatFun ca{Rational(1)};
				Word ua;
				for (int i = 0; i < p; ++i) {
					const Word &ai = da.parts[2 * i];
					const Word &bi = da.parts[2 * i + 1];
					Word fa = upper_flex_last(ai, bi, conv, g);
					ua.insert(ua.end(), fa.begin(), fa.end());
					if (!bi.empty())
						ca = ca * weight.evaluate(
						              lower_flex_last(bi, ai, conv, g));
				}
				if (ca.is_zero())
					return;
				blocks(beta, q, [&](const Decomposition &db) {
					RatFun cb{Rational(1)};
					Word ub;
					for (int j = 0; j < q; ++j) {
						const Word &cj = db.parts[2 * j];
						const Word &dj = db.parts[2 * j + 1];
						Word fc = upper_flex_last(cj, dj, conv, g);
						ub.insert(ub.end(), fc.begin(), fc.end());
						if (!dj.empty())
							cb = cb * weight.evaluate(lower_flex_last(
							              dj, cj, conv, g));
					}
					if (cb.is_zero())
						return;
					RatFun inner = weighted_sum_uses_shstar
					                   ? shstar_entry(m, ua, ub)
					                   : sh_entry(m, ua, ub);
					if (!inner.is_zero())
						total += ca * cb * inner;
				});
			});
		}
	}
	return total;
}

} // namespace

RatFun transfer_formula_rhs(const Mould &m, const Mould &pic_mould, const Word &alpha,
                            const Word &beta)
{
	return transfer_rhs(m, pic_mould, alpha, beta, false);
}

RatFun transfer_formula_rhs_poc(const Mould &m, const Mould &poc_mould, const Word &alpha,
                                const Word &beta)
{
	return transfer_rhs(m, poc_mould, alpha, beta, true);
}

} // namespace mould
