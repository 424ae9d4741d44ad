#include "mouldcalc/ari_exp.hpp"

#include <map>
#include <sstream>

#include "mouldcalc/flexion.hpp"
#include "mouldcalc/generic_shuffle.hpp"

namespace mould {

int Composition::weight() const
{
	int w = 0;
	for (int p : parts)
		w += p;
	return w;
}

std::string Composition::str() const
{
	std::ostringstream out;
	for (size_t i = 0; i < parts.size(); ++i) {
		if (i)
			out << ',';
		out << parts[i];
	}
	return out.str();
}

Composition parse_composition(const std::string &text)
{
	Composition c;
	std::istringstream in(text);
	std::string item;
	while (std::getline(in, item, ',')) {
		int v = std::stoi(item);
		if (v < 1)
			throw ParseError("composition parts must be >= 1: " + text);
		c.parts.push_back(v);
	}
	if (c.parts.empty())
		throw ParseError("empty composition");
	return c;
}

std::vector<Composition> compositions_of(int n)
{
	std::vector<Composition> out;
	Composition cur;
	auto rec = [&](auto &&self, int rest) -> void {
		if (rest == 0) {
			out.push_back(cur);
			return;
		}
		for (int first = 1; first <= rest; ++first) {
			cur.parts.push_back(first);
			self(self, rest - first);
			cur.parts.pop_back();
		}
	};
	rec(rec, n);
	return out;
}

Mould arit_apply(const Mould &b, const Mould &a, bool flip_relative_sign)
{
	if (b.spec() != a.spec())
		throw SpecMismatch("arit across different mould specs");
	if (b.spec().conv != Convention::U)
		throw ConventionMismatch("arit acts on the U convention");
	if (!b.in_ari())
		throw NotInARI();
	const GammaSpec &g = b.spec().group;
	Convention conv = Convention::U;
	Mould out(a.spec(), 0);
	for (int r = 2; r <= a.depth(); ++r) {
		uint64_t n = sigma_vector_count(g, r);
		for (uint64_t k = 0; k < n; ++k) {
			auto sig = sigma_vector_from_index(g, r, k);
			Word w(r);
			for (int i = 0; i < r; ++i)
				w[i] = {sig[i], LinForm::var(i + 1)};
			RatFun total;
			for (int i = 0; i <= r; ++i) {
				for (int j = i + 1; j <= r; ++j) {
					Word wa(w.begin(), w.begin() + i);
					Word wb(w.begin() + i, w.begin() + j);
					Word wc(w.begin() + j, w.end());
					if (!wc.empty()) { // b absorbed rightward into c
						Word arg = wa;
						Word fc = upper_flex_first(wc, wb, conv, g);
						arg.insert(arg.end(), fc.begin(), fc.end());
						RatFun va = a.evaluate(arg);
						if (!va.is_zero()) {
							RatFun vb = b.evaluate(
							    lower_flex_first(wb, wc, conv, g));
							total += va * vb;
						}
					}
					if (!wa.empty()) { // b absorbed leftward into a
						Word arg = upper_flex_last(wa, wb, conv, g);
						arg.insert(arg.end(), wc.begin(), wc.end());
						RatFun va = a.evaluate(arg);
						if (!va.is_zero()) {
							RatFun vb = b.evaluate(
							    lower_flex_last(wb, wa, conv, g));
							RatFun piece = va * vb;
							if (flip_relative_sign)
								total += piece;
							else
								total -= piece;
						}
					}
				}
			}
			out.set_cell(r, k, std::move(total));
		}
	}
	return out;
}

Mould preari(const Mould &a, const Mould &b, bool flip_relative_sign)
{
	return arit_apply(b, a, flip_relative_sign) + mu(a, b);
}

Mould preari_k(const Mould &m, int k, bool flip_relative_sign)
{
	if (!m.in_ari())
		throw NotInARI();
	Mould acc = Mould::identity(m.spec());
	for (int i = 1; i <= k; ++i)
		acc = preari(acc, m, flip_relative_sign);
	return acc;
}

Mould expari(const Mould &m, bool flip_relative_sign)
{
	if (!m.in_ari())
		throw NotInARI();
	Mould acc = Mould::identity(m.spec());
	Mould p = acc;
	Rational kfact = 1;
	for (int k = 1; k <= m.depth(); ++k) {
		p = preari(p, m, flip_relative_sign); // depth valuation of preari_k is k
		kfact *= k;
		acc = acc + p.scaled(1 / kfact);
	}
	return acc;
}

Mould expari_inverse(const Mould &s, bool flip_relative_sign)
{
	if (!s.in_gari())
		throw NotInGARI();
	const GammaSpec &g = s.spec().group;
	Mould m = Mould::zero(s.spec());
	for (int d = 1; d <= s.depth(); ++d) {
		Mould e = expari(m, flip_relative_sign);
		uint64_t n = sigma_vector_count(g, d);
		for (uint64_t k = 0; k < n; ++k)
			m.set_cell(d, k, m.cell(d, k) + s.cell(d, k) - e.cell(d, k));
	}
	return m;
}

Rational ex_coeff(const Composition &c)
{
	Rational r = 1;
	for (int p : c.parts)
		r /= factorial(p - 1);
	int tail = 0;
	for (size_t i = c.parts.size(); i-- > 0;) {
		tail += c.parts[i];
		r /= tail;
	}
	return r;
}

Rational c_coeff(const Composition &c)
{
	static std::map<std::vector<int>, Rational> memo;
	auto rec = [&](auto &&self, const std::vector<int> &m) -> Rational {
		for (int p : m)
			if (p <= 0)
				return 0;
		if (m.size() == 1)
			return 1; // C(m1) telescopes down to C(1) = 1
		auto it = memo.find(m);
		if (it != memo.end())
			return it->second;
		Rational total = 0;
		for (size_t i = 0; i < m.size(); ++i) {
			std::vector<int> lower = m;
			lower[i] -= 1;
			total += self(self, lower);
		}
		if (m.back() == 1)
			total += self(self, std::vector<int>(m.begin(), m.end() - 1));
		memo.emplace(m, total);
		return total;
	};
	return rec(rec, c.parts);
}

Mould expari_expansion(const Mould &m, bool flip_relative_sign)
{
	if (!m.in_ari())
		throw NotInARI();
	int depth = m.depth();
	std::vector<Mould> a_pow; // a_pow[j] = arit(m)^j (m)
	a_pow.push_back(m);
	for (int j = 1; j < depth; ++j)
		a_pow.push_back(arit_apply(m, a_pow.back(), flip_relative_sign));
	Mould acc = Mould::identity(m.spec());
	for (int w = 1; w <= depth; ++w) {
		for (const auto &comp : compositions_of(w)) {
			Mould prod = a_pow[comp.parts[0] - 1];
			for (size_t i = 1; i < comp.parts.size(); ++i)
				prod = mu(prod, a_pow[comp.parts[i] - 1]);
			acc = acc + prod.scaled(ex_coeff(comp));
		}
	}
	return acc;
}

bool is_symmetral_family(const std::function<Rational(const Composition &)> &f, int max_weight)
{
	for (int total = 2; total <= max_weight; ++total) {
		for (int wm = 1; wm < total; ++wm) {
			for (const auto &m : compositions_of(wm)) {
				for (const auto &n : compositions_of(total - wm)) {
					int i = int(m.parts.size()), j = int(n.parts.size());
					std::vector<int> joined = m.parts;
					joined.insert(joined.end(), n.parts.begin(), n.parts.end());
					Rational lhs = 0;
					for (const auto &pat : generic_shuffle_patterns(i, j)) {
						Composition target;
						for (int pos : pat)
							target.parts.push_back(joined[pos - 1]);
						lhs += f(target);
					}
					if (lhs != f(m) * f(n))
						return false;
				}
			}
		}
	}
	return true;
}

namespace {

// exact elimination over Q; returns empty when rank < unknowns
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> rows,
                                                  std::vector<Rational> rhs)
{
	size_t unknowns = rows.empty() ? 0 : rows[0].size();
	size_t row = 0;
	std::vector<size_t> pivot_rows;
	for (size_t col = 0; col < unknowns; ++col) {
		size_t sel = row;
		while (sel < rows.size() && rows[sel][col] == 0)
			++sel;
		if (sel == rows.size())
			return std::nullopt;
		std::swap(rows[sel], rows[row]);
		std::swap(rhs[sel], rhs[row]);
		for (size_t k = 0; k < rows.size(); ++k) {
			if (k == row || rows[k][col] == 0)
				continue;
			Rational factor = rows[k][col] / rows[row][col];
			for (size_t c = col; c < unknowns; ++c)
				rows[k][c] -= factor * rows[row][c];
			rhs[k] -= factor * rhs[row];
		}
		pivot_rows.push_back(row);
		++row;
	}
	std::vector<Rational> sol(unknowns);
	for (size_t col = 0; col < unknowns; ++col)
		sol[col] = rhs[pivot_rows[col]] / rows[pivot_rows[col]][col];
	// consistency of the remaining rows
	for (size_t k = row; k < rows.size(); ++k) {
		Rational acc = 0;
		bool all_zero = true;
		for (size_t c = 0; c < unknowns; ++c) {
			if (rows[k][c] != 0)
				all_zero = false;
			acc += rows[k][c] * sol[c];
		}
		(void)all_zero;
		if (acc != rhs[k])
			return std::nullopt;
	}
	return sol;
}

} // namespace

std::optional<std::vector<std::pair<Composition, Rational>>>
solve_c_coefficients(const Mould &m, int k, Rng &rng, bool flip_relative_sign)
{
	auto comps = compositions_of(k);
	std::vector<Mould> a_pow;
	a_pow.push_back(m);
	for (int j = 1; j < k; ++j)
		a_pow.push_back(arit_apply(m, a_pow.back(), flip_relative_sign));
	std::vector<Mould> words;
	for (const auto &comp : comps) {
		Mould prod = a_pow[comp.parts[0] - 1];
		for (size_t i = 1; i < comp.parts.size(); ++i)
			prod = mu(prod, a_pow[comp.parts[i] - 1]);
		words.push_back(std::move(prod));
	}
	Mould target = preari_k(m, k, flip_relative_sign);

	const GammaSpec &g = m.spec().group;
	for (int attempt = 0; attempt < 6; ++attempt) {
		std::vector<std::vector<Rational>> rows;
		std::vector<Rational> rhs;
		for (int r = k; r <= m.depth(); ++r) {
			uint64_t n = sigma_vector_count(g, r);
			for (uint64_t cell = 0; cell < n; ++cell) {
				std::map<int32_t, Rational> point;
				for (int v = 1; v <= r; ++v)
					point[v] = random_rational(rng, 50);
				bool pole = false;
				std::vector<Rational> row;
				for (const auto &w : words) {
					const RatFun &f = w.cell(r, cell);
					Rational den = f.den().eval(point);
					if (den == 0) {
						pole = true;
						break;
					}
					row.push_back(f.num().eval(point) / den);
				}
				if (pole)
					continue;
				const RatFun &t = target.cell(r, cell);
				Rational den = t.den().eval(point);
				if (den == 0)
					continue;
				rows.push_back(std::move(row));
				rhs.push_back(t.num().eval(point) / den);
			}
		}
		auto sol = solve_linear(std::move(rows), std::move(rhs));
		if (!sol)
			continue;
		std::vector<std::pair<Composition, Rational>> out;
		for (size_t i = 0; i < comps.size(); ++i)
			out.emplace_back(comps[i], (*sol)[i]);
		return out;
	}
	return std::nullopt;
}

} // namespace mould
