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
#include <limits>

#include "knights/solver.hpp"
#include "knights/strategies.hpp"

namespace knights {

KnightHunt::KnightHunt(const std::vector<Person>& people)
{
	for (Person p : people)
		blocks_.push_back({{p}, p, 1, false, 0});
}

void KnightHunt::absorb(const KnightHunt& other)
{
	blocks_.insert(blocks_.end(), other.blocks_.begin(), other.blocks_.end());
	if (!first_accuser_)
		first_accuser_ = other.first_accuser_;
}

std::optional<std::pair<std::size_t, std::size_t>> KnightHunt::next_pair(Person prefer, Person then) const
{
	const auto eligible = [&](std::size_t i) { return !blocks_[i].accusatory; };

	for (Person pref : {prefer, then}) {
		if (!pref)
			continue;
		for (std::size_t j = 0; j < blocks_.size(); ++j) {
			const auto& b = blocks_[j];
			if (!eligible(j) || std::find(b.members.begin(), b.members.end(), pref) == b.members.end())
				continue;
			for (std::size_t i = 0; i < blocks_.size(); ++i)
				if (i != j && eligible(i) && blocks_[i].size == b.size)
					return std::pair{i, j};
		}
	}

	int best = std::numeric_limits<int>::max();
	std::optional<std::pair<std::size_t, std::size_t>> pick;
	for (std::size_t i = 0; i < blocks_.size(); ++i) {
		if (!eligible(i) || blocks_[i].size >= best)
			continue;
		for (std::size_t j = i + 1; j < blocks_.size(); ++j)
			if (eligible(j) && blocks_[j].size == blocks_[i].size) {
				best = blocks_[i].size;
				pick = std::pair{i, j};
				break;
			}
	}
	return pick;
}

bool KnightHunt::run(Interrogation& in, Person prefer, bool stop_on_accusation, Person then)
{
	while (auto pair = next_pair(prefer, then)) {
		if (in.finished())
			return false;
		auto [i, j] = *pair;
		Block& a = blocks_[i];
		Block& b = blocks_[j];
		const Answer ans = in.ask(a.sink, b.sink);

		Block merged;
		merged.members = a.members;
		merged.members.insert(merged.members.end(), b.members.begin(), b.members.end());
		merged.sink = b.sink;
		merged.size = a.size + b.size;
		merged.accusatory = ans == Answer::Accuse;
		merged.accuser = merged.accusatory ? a.sink : 0;
		if (merged.accusatory && !first_accuser_)
			first_accuser_ = a.sink;

		const std::size_t lo = std::min(i, j), hi = std::max(i, j);
		blocks_.erase(blocks_.begin() + static_cast<std::ptrdiff_t>(hi));
		blocks_[lo] = std::move(merged);

		if (stop_on_accusation && ans == Answer::Accuse)
			return false;
	}
	return true;
}

Person KnightHunt::knight() const
{
	const Block* best = nullptr;
	for (const auto& b : blocks_)
		if (!b.accusatory && (!best || b.size > best->size))
			best = &b;
	if (!best)
		throw GameError(GameError::Code::StrategyStuck, "knight hunt has no non-accusatory block");
	return best->sink;
}

const Block& KnightHunt::block_of(Person p) const
{
	for (const auto& b : blocks_)
		if (std::find(b.members.begin(), b.members.end(), p) != b.members.end())
			return b;
	throw GameError(GameError::Code::InvalidParams, "person not in this hunt");
}

SwitchOutcome run_switching_hunt(Interrogation& in, const std::vector<Person>& chain, const std::vector<Person>& primed)
{
	const int d = static_cast<int>(chain.size());
	SwitchOutcome out;
	int b = 1;  // 1-based as in the description
	bool on_primed = false;
	while (b < d) {
		const auto& side = on_primed ? primed : chain;
		int j = b;
		bool accused = false;
		while (j < d) {
			if (in.ask(side[j], side[j - 1]) == Answer::Accuse) {
				if (!out.first_accuser)
					out.first_accuser = side[j];
				accused = true;
				++j;
				break;
			}
			++j;
		}
		if (!accused)
			break;
		b = j;
		on_primed = !on_primed;
		++out.switches;
	}
	out.knight = on_primed ? primed[d - 1] : chain[d - 1];
	return out;
}

void connect_everyone(Interrogation& in, Person w)
{
	while (!in.finished() && in.graph().component_count() > 1) {
		Person target = 0;
		for (const auto& comp : in.graph().components())
			if (!in.graph().connected(comp.front(), w)) {
				target = comp.front();
				break;
			}
		in.ask(w, target);
	}
}

void solver_guided(Interrogation& in, const Objective& objective)
{
	if (in.params().model != SpyModel::Liar)
		throw GameError(GameError::Code::ModeError, "solver-guided play needs liar spies");
	const Person tracked = objective.kind == ObjectiveKind::IdentityOfPerson ? objective.person : 0;

	solver::LiarAbstractSolver* sol = &solver::shared_solver(in.params(), objective);

	while (!in.settled(objective)) {
		const auto comps = in.graph().components();
		int best = solver::kUnreachable + 1;
		Question pick{};
		for (std::size_t i = 0; i < comps.size(); ++i)
			for (std::size_t j = i + 1; j < comps.size(); ++j) {
				const Question q{comps[i].front(), comps[j].front()};
				int worst = -1;
				for (Answer a : {Answer::Support, Answer::Accuse}) {
					const QuestionGraph g = in.graph().with(q, a);
					if (!knowledge(g, in.params()).consistent)
						continue;
					worst = std::max(worst, sol->value(solver::abstract_of(g, tracked)));
				}
				if (worst >= 0 && worst < best) {
					best = worst;
					pick = q;
				}
			}
		if (best > solver::kUnreachable)
			throw GameError(GameError::Code::StrategyStuck, "no question makes progress");
		in.ask(pick.asker, pick.subject);
	}
}

// ---------------------------------------------------------------------------

BinaryKnightHunt::BinaryKnightHunt(GameParams params, std::vector<Person> people, bool assume_majority)
    : Strategy(params), people_(std::move(people))
{
	if (people_.empty())
		for (Person p = 1; p <= params_.n; ++p)
			people_.push_back(p);
	if (static_cast<int>(people_.size()) <= 2 * params_.spies() && !assume_majority)
		throw GameError(GameError::Code::PreconditionUnmet, "knights need a strict majority in the hunted set");
}

void BinaryKnightHunt::play(Interrogation& in) const
{
	KnightHunt hunt(people_);
	if (hunt.run(in) && !in.finished())
		in.claim(Claim::knight(hunt.knight()));
}

SwitchingKnightHunt::SwitchingKnightHunt(GameParams params, QuestionGraph start, std::vector<Person> chain,
                                         std::vector<Person> primed)
    : Strategy(params), start_(std::move(start)), chain_(std::move(chain)), primed_(std::move(primed))
{
	const std::size_t d = chain_.size();
	if (d == 0 || primed_.size() != d)
		throw GameError(GameError::Code::ConfigError, "chain and primed lists must have equal non-zero length");
	int total = 0;
	for (std::size_t i = 0; i < d; ++i) {
		const int c = start_.signature(chain_[i]).weight();
		if (i > 0 && c <= total)
			throw GameError(GameError::Code::ConfigError, "weights must exceed the sum of all earlier weights");
		total += c;
		if (!start_.in_larger_class(chain_[i]))
			throw GameError(GameError::Code::ConfigError, "chosen person is not in the larger class");
		if (i > 0) {
			if (start_.signature(primed_[i]).weight() != c)
				throw GameError(GameError::Code::ConfigError, "paired components differ in weight");
			if (!start_.in_larger_class(primed_[i]))
				throw GameError(GameError::Code::ConfigError, "chosen person is not in the larger class");
		}
	}
}

void SwitchingKnightHunt::play(Interrogation& in) const
{
	const SwitchOutcome out = run_switching_hunt(in, chain_, primed_);
	if (!in.finished())
		in.claim(Claim::knight(out.knight));
}

Objective spy_objective(const GameParams& params)
{
	return params.spy_known ? Objective::spy() : Objective::spy_or_all_knights();
}

}  // namespace knights
