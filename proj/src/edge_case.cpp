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

#include <array>

#include "knights/formulas.hpp"
#include "knights/strategies.hpp"

namespace knights {

namespace {

bool power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

// Nine-person line: question, expected answer, and the question to ask instead of
// the next row when the other answer comes. Zeros mark the last row.
struct ScriptRow {
	int asker, subject;
	Answer expected;
	int alt_asker, alt_subject;
};

constexpr std::array<ScriptRow, 7> kNineScript{{
    {1, 2, Answer::Support, 3, 4},
    {1, 3, Answer::Support, 4, 5},
    {4, 5, Answer::Support, 1, 6},
    {4, 6, Answer::Accuse, 1, 4},
    {4, 7, Answer::Support, 1, 5},
    {1, 8, Answer::Accuse, 1, 4},
    {1, 9, Answer::Support, 0, 0},
}};

// p[1..9] are the people (or block representatives) standing in for 1..9.
void nine_person_script(Interrogation& in, const std::array<Person, 10>& p, const Objective& goal)
{
	for (const auto& row : kNineScript) {
		if (in.settled(goal))
			return;
		const Answer a = in.ask(p[row.asker], p[row.subject]);
		if (a != row.expected && row.alt_asker) {
			if (!in.settled(goal))
				in.ask(p[row.alt_asker], p[row.alt_subject]);
			break;
		}
	}
	// The table leaves the side lines to the reader; finish them optimally.
	if (!in.settled(goal))
		solver_guided(in, goal);
}

}  // namespace

LiarEdgeCase::LiarEdgeCase(GameParams params, bool force_script) : Strategy(params), force_script_(force_script)
{
	if (params_.model != SpyModel::Liar)
		throw GameError(GameError::Code::ModeError, "this strategy assumes lying spies");
	if (params_.n != 2 * params_.spies() + 1)
		throw GameError(GameError::Code::PreconditionUnmet, "needs n = 2s + 1");
}

std::vector<Objective> LiarEdgeCase::objectives() const { return {spy_objective(params_)}; }

bool LiarEdgeCase::scripted() const
{
	const int s = params_.spies();
	return s >= 4 && power_of_two(s) && (params_.spy_known || force_script_);
}

void LiarEdgeCase::play(Interrogation& in) const
{
	const int s = params_.spies();
	const int n = params_.n;
	const Objective goal = spy_objective(params_);

	std::vector<Person> everyone;
	for (Person p = 1; p <= n; ++p)
		everyone.push_back(p);

	if (scripted()) {
		std::array<Person, 10> p{};
		if (s == 4) {
			for (int i = 1; i <= 9; ++i)
				p[i] = i;
			nine_person_script(in, p, goal);
			return;
		}
		// Eight hunts on blocks of s/4 people, then the same script over the blocks.
		const int m = s / 4;
		std::vector<KnightHunt> hunts;
		for (int i = 0; i < 8; ++i) {
			std::vector<Person> block;
			for (int j = 1; j <= m; ++j)
				block.push_back(i * m + j);
			hunts.emplace_back(block);
		}
		for (std::size_t i = 0; i < hunts.size(); ++i) {
			if (hunts[i].run(in, 0, true))
				continue;
			if (in.settled(goal))
				return;
			// Accusation: hunt for a knight among everyone else and ask about the accuser.
			KnightHunt rest;
			for (const auto& h : hunts)
				rest.absorb(h);
			rest.absorb(KnightHunt(std::vector<Person>{n}));
			const Person accuser = hunts[i].first_accuser();
			rest.run(in);
			if (!in.settled(goal))
				in.ask(rest.knight(), accuser);
			if (!in.settled(goal))
				solver_guided(in, goal);
			return;
		}
		for (int i = 0; i < 8; ++i)
			p[i + 1] = hunts[static_cast<std::size_t>(i)].blocks().front().sink;
		p[9] = n;
		nine_person_script(in, p, goal);
		return;
	}

	KnightHunt hunt(everyone);
	hunt.run(in);
	if (in.settled(goal))
		return;
	const Person w = hunt.knight();

	if (s >= 3 && !power_of_two(s)) {
		// Pad to 2s - 2 questions with w, keeping a forest of three components.
		while (in.asked() < 2 * s - 2 && !in.settled(goal)) {
			std::vector<Person> best;
			for (const auto& c : in.graph().components())
				if (!in.graph().connected(c.front(), w) && (best.empty() || c.size() < best.size()))
					best = c;
			in.ask(w, best.front());
		}
		if (in.settled(goal))
			return;
		// An accuser outside w's component: w's answer about him settles a spy.
		for (const auto& e : in.graph().edges())
			if (e.answer == Answer::Accuse && !in.graph().connected(e.question.asker, w)) {
				in.ask(w, e.question.asker);
				if (!in.settled(goal))
					solver_guided(in, goal);
				return;
			}
	}
	connect_everyone(in, w);
	if (!in.settled(goal))
		solver_guided(in, goal);
}

}  // namespace knights
