/*
 * Copyright 2026 The Knights and Spies Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "knights/solver.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <map>

#include "knights/formulas.hpp"

namespace knights::solver {

// ---------------------------------------------------------------------------
// WorldSet

int WorldSet::count() const
{
	int c = 0;
	for (auto w : words)
		c += std::popcount(w);
	return c;
}

WorldSet WorldSet::operator&(const WorldSet& o) const
{
	WorldSet r;
	for (int i = 0; i < 4; ++i)
		r.words[i] = words[i] & o.words[i];
	return r;
}

bool WorldSet::subset_of(const WorldSet& o) const
{
	for (int i = 0; i < 4; ++i)
		if (words[i] & ~o.words[i])
			return false;
	return true;
}

std::size_t WorldSetHash::operator()(const WorldSet& w) const
{
	std::uint64_t h = 0x9e3779b97f4a7c15ULL;
	for (auto x : w.words) {
		h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
		h *= 0xff51afd7ed558ccdULL;
	}
	return static_cast<std::size_t>(h ^ (h >> 33));
}

WorldTables::WorldTables(const GameParams& params) : params_(params)
{
	const int n = params.n;
	if (n > kMaxGenericPeople)
		throw GameError(GameError::Code::TooLarge, "the generic solver handles at most 8 people");
	const unsigned worlds = 1U << n;
	for (unsigned m = 0; m < worlds; ++m) {
		const int c = std::popcount(m);
		if (c <= params.spies() && c >= params.min_spies())
			initial_.set(m);
	}
	survive_.resize(static_cast<std::size_t>(n * n * 2));
	for (Person a = 1; a <= n; ++a)
		for (Person b = 1; b <= n; ++b) {
			if (a == b)
				continue;
			for (Answer ans : {Answer::Support, Answer::Accuse}) {
				WorldSet& w = survive_[static_cast<std::size_t>(((a - 1) * n + (b - 1)) * 2 + (ans == Answer::Accuse))];
				const Edge e{{a, b}, ans};
				for (unsigned m = 0; m < worlds; ++m)
					if (consistent_with(e, m, params.model))
						w.set(m);
			}
		}
	contains_.resize(static_cast<std::size_t>(n));
	for (Person p = 1; p <= n; ++p)
		for (unsigned m = 0; m < worlds; ++m)
			if (m & bit(p))
				contains_[static_cast<std::size_t>(p - 1)].set(m);
}

const WorldSet& WorldTables::survivors(Question q, Answer a) const
{
	const int n = params_.n;
	return survive_[static_cast<std::size_t>(((q.asker - 1) * n + (q.subject - 1)) * 2 + (a == Answer::Accuse))];
}

WorldSet WorldTables::of(const QuestionGraph& g) const
{
	WorldSet s = initial_;
	for (const auto& e : g.edges())
		s = s & survivors(e.question, e.answer);
	return s;
}

bool WorldTables::achieved(const WorldSet& s, const Objective& o) const
{
	const int n = params_.n;
	const auto is_knight = [&](int p) { return (s & contains_[static_cast<std::size_t>(p)]).empty(); };
	const auto is_spy = [&](int p) { return s.subset_of(contains_[static_cast<std::size_t>(p)]); };
	const auto any = [&](auto pred) {
		for (int p = 0; p < n; ++p)
			if (pred(p))
				return true;
		return false;
	};
	const auto only_empty = [&] { return s.count() == 1 && s.test(0); };
	switch (o.kind) {
	case ObjectiveKind::FindKnight:
		return any(is_knight);
	case ObjectiveKind::FindSpy:
		return any(is_spy);
	case ObjectiveKind::FindSpyOrAllKnights:
		return any(is_spy) || only_empty();
	case ObjectiveKind::AllKnightsProven:
		return only_empty();
	case ObjectiveKind::IdentityOfPerson:
		return is_knight(o.person - 1) || is_spy(o.person - 1);
	case ObjectiveKind::AnyIdentity:
		return any(is_knight) || any(is_spy);
	case ObjectiveKind::AllIdentities:
		return s.count() == 1;
	}
	return false;
}

namespace {

// Minimax search over world sets against deadlines. A question whose answer can leave
// the set unchanged is never useful (the Spy Master gives that answer), so it is skipped.
class GenericSearch {
public:
	GenericSearch(const GameParams& params, std::vector<std::pair<Objective, int>> reqs, Budget budget)
	    : tables_(params), reqs_(std::move(reqs)), budget_(budget)
	{
		const int n = params.n;
		for (Person a = 1; a <= n; ++a)
			for (Person b = 1; b <= n; ++b)
				if (a != b && (params.model == SpyModel::Unconstrained || a < b))
					moves_.push_back({a, b});
	}

	bool feasible() { return win(tables_.initial(), 0); }

private:
	WorldTables tables_;
	std::vector<std::pair<Objective, int>> reqs_;
	Budget budget_;
	std::vector<Question> moves_;
	// Per world set: smallest t known to lose, largest t known to win.
	struct Entry {
		int lose = 1 << 20;
		int win = -1;
	};
	std::unordered_map<WorldSet, Entry, WorldSetHash> memo_;

	bool win(const WorldSet& s, int t)
	{
		bool all = true;
		for (const auto& [o, deadline] : reqs_)
			if (!tables_.achieved(s, o)) {
				if (t >= deadline)
					return false;
				all = false;
			}
		if (all)
			return true;

		auto it = memo_.find(s);
		if (it != memo_.end()) {
			if (t <= it->second.win)
				return true;
			if (t >= it->second.lose)
				return false;
		}

		bool result = false;
		for (const Question& q : moves_) {
			const WorldSet a = s & tables_.survivors(q, Answer::Support);
			const WorldSet b = s & tables_.survivors(q, Answer::Accuse);
			if (a == s || b == s)
				continue;
			if ((a.empty() || win(a, t + 1)) && (b.empty() || win(b, t + 1))) {
				result = true;
				break;
			}
		}

		if (memo_.size() >= budget_.max_states)
			throw GameError(GameError::Code::BudgetExceeded, "generic solver state budget exhausted");
		Entry& e = memo_[s];
		if (result)
			e.win = std::max(e.win, t);
		else
			e.lose = std::min(e.lose, t);
		return result;
	}
};

}  // namespace

int solve_generic(const GameParams& params, const Objective& objective, Budget budget)
{
	// Values never exceed n + s; every useful question cuts the world set.
	for (int d = 0; d <= params.n * params.n; ++d) {
		GenericSearch search(params, {{objective, d}}, budget);
		if (search.feasible())
			return d;
	}
	return kUnreachable;
}

bool combined_feasible(const GameParams& params, const std::vector<std::pair<Objective, int>>& requirements,
                       Budget budget)
{
	GenericSearch search(params, requirements, budget);
	return search.feasible();
}

// ---------------------------------------------------------------------------
// Abstract liar states

void AbstractState::normalise()
{
	for (auto& [y, z] : sigs)
		if (y < z)
			std::swap(y, z);
	std::sort(sigs.begin(), sigs.end());
}

std::string AbstractState::key() const
{
	std::string k;
	k.reserve(sigs.size() * 2 + 3);
	if (tracked) {
		k.push_back(static_cast<char>(tracked->first));
		k.push_back(static_cast<char>(tracked->second));
	}
	k.push_back('|');
	for (const auto& [y, z] : sigs) {
		k.push_back(static_cast<char>(y));
		k.push_back(static_cast<char>(z));
	}
	return k;
}

int AbstractState::people() const
{
	int n = tracked ? tracked->first + tracked->second : 0;
	for (const auto& [y, z] : sigs)
		n += y + z;
	return n;
}

AbstractState abstract_of(const QuestionGraph& g, Person tracked)
{
	if (g.model() != SpyModel::Liar)
		throw GameError(GameError::Code::ModeError, "abstraction needs liar spies");
	AbstractState s;
	for (const auto& comp : g.components()) {
		if (tracked && g.connected(comp.front(), tracked)) {
			int own = 0;
			for (Person p : comp)
				own += g.colour(p) == g.colour(tracked);
			s.tracked = std::pair{own, static_cast<int>(comp.size()) - own};
			continue;
		}
		const ComponentSig sig = g.signature(comp.front());
		s.sigs.emplace_back(sig.y, sig.z);
	}
	s.normalise();
	return s;
}

AbstractFacts abstract_facts(const AbstractState& s, const GameParams& params)
{
	// Component i, option 0: the smaller (or "other") class are the spies; option 1:
	// the larger (or "own") class are. Feasible iff some total lands in [lo, hi].
	struct Part {
		int spies[2];
	};
	std::vector<Part> parts;
	if (s.tracked)
		parts.push_back({{s.tracked->second, s.tracked->first}});
	for (const auto& [y, z] : s.sigs)
		parts.push_back({{z, y}});
	const int lo = params.min_spies();
	const int hi = params.spies();
	const std::size_t m = parts.size();

	using Bits = std::bitset<65>;
	std::vector<Bits> pre(m + 1), suf(m + 1);
	pre[0].set(0);
	for (std::size_t i = 0; i < m; ++i)
		pre[i + 1] = (pre[i] << static_cast<std::size_t>(parts[i].spies[0])) |
		             (pre[i] << static_cast<std::size_t>(parts[i].spies[1]));
	suf[m].set(0);
	for (std::size_t i = m; i-- > 0;)
		suf[i] = (suf[i + 1] << static_cast<std::size_t>(parts[i].spies[0])) |
		         (suf[i + 1] << static_cast<std::size_t>(parts[i].spies[1]));

	AbstractFacts f;
	Bits window;
	for (int t = lo; t <= hi; ++t)
		window.set(static_cast<std::size_t>(t));
	f.consistent = (pre[m] & window).any();
	if (!f.consistent)
		return f;

	bool all = true;
	for (std::size_t i = 0; i < m; ++i) {
		bool ok[2] = {false, false};
		// others contribute a + b for a in pre[i], b in suf[i+1]
		Bits others;
		for (std::size_t a = 0; a < 65; ++a)
			if (pre[i].test(a))
				others |= suf[i + 1] << a;
		for (int opt = 0; opt < 2; ++opt)
			ok[opt] = ((others << static_cast<std::size_t>(parts[i].spies[opt])) & window).any();
		const bool tie = parts[i].spies[0] == parts[i].spies[1];
		const bool forced = ok[0] != ok[1] && !tie;
		if (!forced) {
			all = false;
			continue;
		}
		const int spy_class = parts[i].spies[ok[0] ? 0 : 1];
		const int knight_class = parts[i].spies[ok[0] ? 1 : 0];
		if (spy_class > 0)
			f.spy_known = true;
		if (knight_class > 0)
			f.knight_known = true;
		if (s.tracked && i == 0)
			f.tracked_known = true;
	}
	f.all_known = all;
	if (all) {
		int spies = 0;
		for (std::size_t i = 0; i < m; ++i) {
			// recompute which option was forced
			Bits others;
			for (std::size_t a = 0; a < 65; ++a)
				if (pre[i].test(a))
					others |= suf[i + 1] << a;
			const bool ok0 = ((others << static_cast<std::size_t>(parts[i].spies[0])) & window).any();
			spies += parts[i].spies[ok0 ? 0 : 1];
		}
		f.all_knights = spies == 0;
	}
	return f;
}

bool abstract_achieved(const AbstractState& s, const GameParams& params, const Objective& objective)
{
	const AbstractFacts f = abstract_facts(s, params);
	switch (objective.kind) {
	case ObjectiveKind::FindKnight:
		return f.knight_known;
	case ObjectiveKind::FindSpy:
		return f.spy_known;
	case ObjectiveKind::FindSpyOrAllKnights:
		return f.spy_known || f.all_knights;
	case ObjectiveKind::AllKnightsProven:
		return f.all_knights;
	case ObjectiveKind::IdentityOfPerson:
		return f.tracked_known;
	case ObjectiveKind::AnyIdentity:
		return f.knight_known || f.spy_known;
	case ObjectiveKind::AllIdentities:
		return f.all_known;
	}
	return false;
}

std::vector<AbstractState> merge_outcomes(const AbstractState& s, int i, int j, const GameParams& params)
{
	std::vector<AbstractState> out;
	const auto emit = [&](AbstractState t) {
		t.normalise();
		if (abstract_facts(t, params).consistent)
			out.push_back(std::move(t));
	};
	if (i == -1 || j == -1) {
		const int other = i == -1 ? j : i;
		const auto [y, z] = s.sigs[static_cast<std::size_t>(other)];
		const auto [own, opp] = *s.tracked;
		for (int flip = 0; flip < 2; ++flip) {
			AbstractState t = s;
			t.sigs.erase(t.sigs.begin() + other);
			t.tracked = flip ? std::pair{own + z, opp + y} : std::pair{own + y, opp + z};
			emit(std::move(t));
		}
		return out;
	}
	const auto [y1, z1] = s.sigs[static_cast<std::size_t>(i)];
	const auto [y2, z2] = s.sigs[static_cast<std::size_t>(j)];
	for (int flip = 0; flip < 2; ++flip) {
		AbstractState t = s;
		t.sigs.erase(t.sigs.begin() + std::max(i, j));
		t.sigs.erase(t.sigs.begin() + std::min(i, j));
		t.sigs.emplace_back(flip ? std::pair{y1 + z2, z1 + y2} : std::pair{y1 + y2, z1 + z2});
		emit(std::move(t));
	}
	return out;
}

LiarAbstractSolver::LiarAbstractSolver(GameParams params, Objective objective, Budget budget)
    : params_(params), objective_(objective), budget_(budget)
{
	if (params_.model != SpyModel::Liar)
		throw GameError(GameError::Code::ModeError, "the abstract solver needs liar spies");
	if (params_.n > 64)
		throw GameError(GameError::Code::TooLarge, "at most 64 people");
}

Person LiarAbstractSolver::tracked_person() const
{
	return objective_.kind == ObjectiveKind::IdentityOfPerson ? objective_.person : 0;
}

int LiarAbstractSolver::value(const QuestionGraph& g) { return value(abstract_of(g, tracked_person())); }

int LiarAbstractSolver::initial_value()
{
	return value(QuestionGraph(params_.n, SpyModel::Liar));
}

int LiarAbstractSolver::value(const AbstractState& s)
{
	const std::string key = s.key();
	if (auto it = memo_.find(key); it != memo_.end())
		return it->second;
	if (abstract_achieved(s, params_, objective_)) {
		memo_.emplace(key, 0);
		return 0;
	}

	int best = kUnreachable;
	const int m = static_cast<int>(s.sigs.size());
	const auto consider = [&](int i, int j) {
		int worst = -1;
		for (const auto& t : merge_outcomes(s, i, j, params_)) {
			worst = std::max(worst, 1 + value(t));
			if (worst >= best)
				return;
		}
		if (worst >= 0)
			best = std::min(best, worst);
	};
	if (s.tracked)
		for (int i = 0; i < m; ++i)
			if (i == 0 || s.sigs[static_cast<std::size_t>(i)] != s.sigs[static_cast<std::size_t>(i - 1)])
				consider(-1, i);
	for (int i = 0; i < m; ++i) {
		if (i > 0 && s.sigs[static_cast<std::size_t>(i)] == s.sigs[static_cast<std::size_t>(i - 1)])
			continue;
		for (int j = i + 1; j < m; ++j) {
			if (j > i + 1 && s.sigs[static_cast<std::size_t>(j)] == s.sigs[static_cast<std::size_t>(j - 1)])
				continue;
			consider(i, j);
		}
	}
	best = std::min(best, kUnreachable);

	if (memo_.size() >= budget_.max_states)
		throw GameError(GameError::Code::BudgetExceeded, "abstract solver state budget exhausted");
	memo_.emplace(key, best);
	return best;
}

int solve_liar_abstract(const GameParams& params, const Objective& objective, Budget budget)
{
	LiarAbstractSolver solver(params, objective, budget);
	return solver.initial_value();
}

LiarAbstractSolver& shared_solver(const GameParams& params, const Objective& objective)
{
	thread_local std::vector<std::unique_ptr<LiarAbstractSolver>> cache;
	for (auto& s : cache) {
		const auto& p = s->params();
		if (p.n == params.n && p.k == params.k && p.spy_known == params.spy_known && s->objective() == objective)
			return *s;
	}
	if (cache.size() >= 16)
		cache.erase(cache.begin());
	cache.push_back(std::make_unique<LiarAbstractSolver>(params, objective));
	return *cache.back();
}

// ---------------------------------------------------------------------------
// Majority game

namespace {

class MajoritySearch {
public:
	explicit MajoritySearch(int excess) : e_(excess) {}

	// Fewest merges that force a knight from nonzero weights w (sorted).
	int questions(const std::vector<int>& w)
	{
		if (auto it = memo_.find(w); it != memo_.end())
			return it->second;
		int total = 0;
		for (int c : w)
			total += c;
		const int resid = (total - e_) / 2;
		if (!w.empty() && w.back() >= resid + 1) {
			memo_.emplace(w, 0);
			return 0;
		}
		int best = kUnreachable;
		const std::size_t m = w.size();
		for (std::size_t i = 0; i < m; ++i) {
			if (i > 0 && w[i] == w[i - 1])
				continue;
			for (std::size_t j = i + 1; j < m; ++j) {
				if (j > i + 1 && w[j] == w[j - 1])
					continue;
				int worst = -1;
				for (int flip = 0; flip < 2 && worst < best; ++flip) {
					const int c = flip ? w[j] - w[i] : w[j] + w[i];
					if (total - (w[i] + w[j]) + c < e_)
						continue;
					std::vector<int> next;
					next.reserve(m - 1);
					for (std::size_t t = 0; t < m; ++t)
						if (t != i && t != j)
							next.push_back(w[t]);
					if (c > 0)
						next.insert(std::upper_bound(next.begin(), next.end(), c), c);
					worst = std::max(worst, 1 + questions(next));
				}
				if (worst >= 0)
					best = std::min(best, worst);
			}
		}
		memo_.emplace(w, best);
		return best;
	}

private:
	int e_;
	std::map<std::vector<int>, int> memo_;
};

}  // namespace

MajorityValue majority_value(std::vector<int> weights, int excess)
{
	int total = 0;
	for (int c : weights) {
		if (c < 0)
			throw GameError(GameError::Code::InvalidParams, "weights must be non-negative");
		total += c;
	}
	if (excess < 1 || total < excess)
		throw GameError(GameError::Code::InvalidParams, "the knight excess must be positive and at most the total weight");
	if ((total - excess) % 2 != 0)
		throw GameError(GameError::Code::ParityError, "total weight and excess differ in parity");

	const int components = static_cast<int>(weights.size());
	std::vector<int> nonzero;
	for (int c : weights)
		if (c > 0)
			nonzero.push_back(c);
	std::sort(nonzero.begin(), nonzero.end());
	MajoritySearch search(excess);
	MajorityValue v;
	v.questions = search.questions(nonzero);
	v.components = components - v.questions;
	return v;
}

std::vector<ConjectureRow> check_conjecture(int k_max)
{
	std::vector<ConjectureRow> rows;
	for (int k = 2; k <= k_max; ++k)
		for (int a = 1; a < k; ++a) {
			std::vector<int> w(static_cast<std::size_t>(a), 2);
			w.insert(w.end(), static_cast<std::size_t>(2 * k - 2 * a - 1), 1);
			ConjectureRow row;
			row.k = k;
			row.a = a;
			row.value = majority_value(w, 1).components;
			row.expected = formulas::binary_ones(k - 1) + 1;
			row.pass = row.value == row.expected;
			row.lower_bound = row.value >= row.expected;
			rows.push_back(row);
		}
	return rows;
}

std::vector<ClassifyRow> classify_all_identities(int n_max, Budget budget)
{
	std::vector<ClassifyRow> rows;
	for (int n = 3; n <= n_max; ++n)
		for (int k = n / 2 + 1; k < n; ++k) {
			const int s = n - k;
			const auto d = formulas::decompose(n, k);
			if (d.r < 2 || d.r >= s)
				continue;
			ClassifyRow row{n, k, d.q, d.r, 0, false};
			row.value = solve_liar_abstract(GameParams::make(n, k, SpyModel::Liar, false), Objective::all_identities(), budget);
			row.minimal = row.value == n - d.q;
			rows.push_back(row);
		}
	return rows;
}

}  // namespace knights::solver
