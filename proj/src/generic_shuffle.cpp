#include "mouldcalc/generic_shuffle.hpp"

#include <map>
#include <mutex>

namespace mould {

namespace {

std::mutex cache_mutex;

std::vector<std::vector<int>> compute_shuffle_patterns(int p, int q)
{
	std::vector<std::vector<int>> out;
	std::vector<int> cur;
	auto rec = [&](auto &&self, int i, int j) -> void {
		if (i == p && j == q) {
			out.push_back(cur);
			return;
		}
		if (i < p) {
			cur.push_back(i + 1);
			self(self, i + 1, j);
			cur.pop_back();
		}
		if (j < q) {
			cur.push_back(p + j + 1);
			self(self, i, j + 1);
			cur.pop_back();
		}
	};
	rec(rec, 0, 0);
	return out;
}

using GenWord = std::vector<GenLetter>;
using GenSum = std::map<GenWord, RatFun>;

GenSum prepend(const GenLetter &l, const GenSum &s, const RatFun &scale)
{
	GenSum out;
	for (const auto &[w, c] : s) {
		GenWord nw;
		nw.reserve(w.size() + 1);
		nw.push_back(l);
		nw.insert(nw.end(), w.begin(), w.end());
		out.emplace(std::move(nw), c * scale);
	}
	return out;
}

void accumulate(GenSum &into, const GenSum &from, bool negate = false)
{
	for (const auto &[w, c] : from) {
		auto [it, fresh] = into.emplace(w, negate ? -c : c);
		if (!fresh) {
			it->second += negate ? -c : c;
			if (it->second.is_zero())
				into.erase(it);
		}
	}
}

std::vector<GenTerm> compute_shuffle_star_terms(int p, int q)
{
	// suffix pair (i,j): i letters of the left word consumed, j of the right
	std::vector<std::vector<GenSum>> memo(p + 1, std::vector<GenSum>(q + 1));
	auto singleton = [](int pos) { return GenLetter{uint32_t(1) << (pos - 1), pos}; };
	for (int i = p; i >= 0; --i) {
		for (int j = q; j >= 0; --j) {
			GenSum s;
			if (i == p && j == q) {
				s.emplace(GenWord{}, RatFun(Rational(1)));
			} else if (i == p) {
				GenWord w;
				for (int k = j + 1; k <= q; ++k)
					w.push_back(singleton(p + k));
				s.emplace(std::move(w), RatFun(Rational(1)));
			} else if (j == q) {
				GenWord w;
				for (int k = i + 1; k <= p; ++k)
					w.push_back(singleton(k));
				s.emplace(std::move(w), RatFun(Rational(1)));
			} else {
				int a = i + 1, b = p + j + 1; // head positions
				RatFun one{Rational(1)};
				accumulate(s, prepend(singleton(a), memo[i + 1][j], one));
				accumulate(s, prepend(singleton(b), memo[i][j + 1], one));
				RatFun c(Poly(Rational(1)),
				         Poly::variable(a) - Poly::variable(b));
				GenLetter ma{(uint32_t(1) << (a - 1)) | (uint32_t(1) << (b - 1)), a};
				GenLetter mb{ma.mask, b};
				accumulate(s, prepend(ma, memo[i + 1][j + 1], c));
				accumulate(s, prepend(mb, memo[i + 1][j + 1], c), true);
			}
			memo[i][j] = std::move(s);
		}
	}
	std::vector<GenTerm> terms;
	terms.reserve(memo[0][0].size());
	for (auto &[w, c] : memo[0][0])
		terms.push_back({std::move(c), w});
	return terms;
}

} // namespace

const std::vector<std::vector<int>> &generic_shuffle_patterns(int p, int q)
{
	static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
	std::lock_guard lock(cache_mutex);
	auto it = cache.find({p, q});
	if (it == cache.end())
		it = cache.emplace(std::make_pair(p, q), compute_shuffle_patterns(p, q)).first;
	return it->second;
}

const std::vector<GenTerm> &generic_shuffle_star_terms(int p, int q)
{
	static std::map<std::pair<int, int>, std::vector<GenTerm>> cache;
	std::lock_guard lock(cache_mutex);
	auto it = cache.find({p, q});
	if (it == cache.end())
		it = cache.emplace(std::make_pair(p, q), compute_shuffle_star_terms(p, q)).first;
	return it->second;
}

} // namespace mould
