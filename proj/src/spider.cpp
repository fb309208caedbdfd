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

#include <algorithm>

#include "knights/strategies.hpp"

namespace knights {

namespace {

bool power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

// Asks w about Person 1 if that is still open and the question is new.
void settle_person_one(Interrogation& in, Person w)
{
	if (w != 1 && !in.known().of(1) && !in.graph().asked({w, 1}) && !in.finished())
		in.ask(w, 1);
}

// Last resort once a knight is known: ask w about anyone still unknown.
void sweep_unknowns(Interrogation& in, Person w)
{
	for (Person p = 1; p <= in.params().n && !in.finished(); ++p)
		if (p != w && !in.known().of(p) && !in.graph().asked({w, p}))
			in.ask(w, p);
}

// Runs over people 1..n only; anyone beyond is left to sweep_unknowns.
void spider(Interrogation& in, bool combined, int n)
{
	const Objective spy = spy_objective(in.params());

	// Phase 1: follow the chain 1 -> 2 -> 3 -> ...
	in.set_phase(1);
	Person p = 0;
	for (Person a = 1; a < n; ++a) {
		if (in.ask(a, a + 1) == Answer::Accuse) {
			p = a;
			break;
		}
		if (in.finished())
			return;
	}
	if (!p) {
		if (!in.settled(spy))
			in.ask(n, 1);
		if (combined)
			sweep_unknowns(in, n);
		return;
	}

	// Phase 2: candidates.
	in.set_phase(2);
	int ell = in.params().spies();
	Person cand = p;
	int sup = p - 1;
	int acc = 1;
	Person next = p + 2;
	while (true) {
		if (acc > sup) {
			ell -= acc;
			cand = next++;
			sup = acc = 0;
			continue;
		}
		if (sup >= ell)
			break;
		if (next > n)
			throw GameError(GameError::Code::StrategyStuck, "spider ran out of people");
		if (in.ask(next++, cand) == Answer::Support)
			++sup;
		else
			++acc;
		if (in.finished())
			return;
	}
	const Person w = cand;
	if (combined && !in.settled(Objective::knight()))
		in.claim(Claim::knight(w));
	if (!in.settled(spy) && w != p && !in.graph().asked({w, p}))
		in.ask(w, p);
	if (combined)
		settle_person_one(in, w);
	sweep_unknowns(in, w);
}

}  // namespace

ExtendedSpider::ExtendedSpider(GameParams params, bool combined) : Strategy(params), combined_(combined) {}

std::vector<Objective> ExtendedSpider::objectives() const
{
	std::vector<Objective> v{spy_objective(params_)};
	if (combined_) {
		v.push_back(Objective::knight());
		v.push_back(Objective::identity_of(1));
	}
	return v;
}

void ExtendedSpider::play(Interrogation& in) const { spider(in, combined_, params_.n); }

ModifiedKnightHuntCombined::ModifiedKnightHuntCombined(GameParams params) : Strategy(params)
{
	if (params_.model != SpyModel::Unconstrained)
		throw GameError(GameError::Code::ModeError, "the modified hunt is for unconstrained spies");
}

std::vector<Objective> ModifiedKnightHuntCombined::objectives() const
{
	return {Objective::knight(), Objective::identity_of(1), spy_objective(params_)};
}

void ModifiedKnightHuntCombined::play(Interrogation& in) const
{
	const int n = params_.n;
	const int s = params_.spies();
	if (n == 2 * s + 1 && power_of_two(s)) {
		spider(in, true, 2 * s + 1);
		return;
	}

	int a = 0;
	while ((2 << a) <= s)
		++a;
	const int xsize = 2 << a;  // 2^{a+1}

	// Phase 1: components of X are directed paths, members in path order.
	in.set_phase(1);
	std::vector<std::vector<Person>> paths;
	for (Person p = 2; p <= xsize + 1; ++p)
		paths.push_back({p});
	Person accuser = 0;
	while (paths.size() > 1) {
		std::size_t i = 0, j = 0;
		bool found = false;
		for (std::size_t u = 0; u < paths.size() && !found; ++u)
			for (std::size_t v = u + 1; v < paths.size() && !found; ++v)
				if (paths[u].size() == paths[v].size()) {
					// smallest size first
					bool smaller = false;
					for (std::size_t t = 0; t < paths.size(); ++t)
						for (std::size_t t2 = t + 1; t2 < paths.size(); ++t2)
							if (paths[t].size() == paths[t2].size() && paths[t].size() < paths[u].size())
								smaller = true;
					if (!smaller) {
						i = u;
						j = v;
						found = true;
					}
				}
		if (!found)
			throw GameError(GameError::Code::StrategyStuck, "no equal paths in X");
		if (in.ask(paths[i].back(), paths[j].front()) == Answer::Accuse) {
			accuser = paths[i].back();
			break;
		}
		if (in.finished())
			return;
		paths[i].insert(paths[i].end(), paths[j].begin(), paths[j].end());
		paths.erase(paths.begin() + static_cast<std::ptrdiff_t>(j));
	}

	if (!accuser) {
		// X is one supportive path of more than s people: its sink is a knight.
		const Person w = paths.front().back();
		const Person source = paths.front().front();
		if (!in.settled(Objective::knight()))
			in.claim(Claim::knight(w));
		settle_person_one(in, w);
		for (Person p = xsize + 2; p <= n && !in.finished(); ++p)
			in.ask(w, p);
		if (!in.finished() && !in.graph().asked({w, source}))
			in.ask(w, source);
		sweep_unknowns(in, w);
		return;
	}

	// Phase 2: forget the accusation and finish a knight hunt over P.
	in.set_phase(2);
	std::vector<Block> blocks;
	blocks.push_back({{1}, 1, 1, false, 0});
	for (const auto& path : paths)
		blocks.push_back({path, path.back(), static_cast<int>(path.size()), false, 0});
	for (Person p = xsize + 2; p <= 2 * s + 1; ++p)
		blocks.push_back({{p}, p, 1, false, 0});
	KnightHunt hunt(std::move(blocks));
	// the accuser as a merge subject may become the knight, exposing its accusation
	hunt.run(in, 1, false, accuser);
	if (in.finished())
		return;
	const Person w = hunt.knight();
	if (!in.settled(Objective::knight()))
		in.claim(Claim::knight(w));
	settle_person_one(in, w);
	if (!in.settled(spy_objective(params_)) && !in.finished() && !in.graph().asked({w, accuser}) && w != accuser)
		in.ask(w, accuser);
	sweep_unknowns(in, w);
}

SolverGuided::SolverGuided(GameParams params, Objective objective) : Strategy(params), objective_(objective)
{
	if (params_.model != SpyModel::Liar)
		throw GameError(GameError::Code::ModeError, "solver-guided play needs liar spies");
}

std::unique_ptr<Strategy> make_strategy(const std::string& id, const GameParams& params)
{
	if (id == "bkh")
		return std::make_unique<BinaryKnightHunt>(params);
	if (id == "bsh")
		return std::make_unique<BinarySpyHunt>(params);
	if (id == "bsh1")
		return std::make_unique<BinarySpyHunt>(params, true, true);
	if (id == "edge")
		return std::make_unique<LiarEdgeCase>(params);
	if (id == "figure2") {
		if (params.n != 9 || params.k != 5)
			throw GameError(GameError::Code::ConfigError, "figure2 is the nine-person game with k = 5");
		return std::make_unique<LiarEdgeCase>(params, true);
	}
	if (id == "spider")
		return std::make_unique<ExtendedSpider>(params);
	if (id == "spider+")
		return std::make_unique<ExtendedSpider>(params, true);
	if (id == "mbkh")
		return std::make_unique<ModifiedKnightHuntCombined>(params);
	if (id == "optimal")
		return std::make_unique<SolverGuided>(params, spy_objective(params));
	throw GameError(GameError::Code::ConfigError, "unknown strategy: " + id);
}

}  // namespace knights
