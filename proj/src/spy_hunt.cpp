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

std::vector<Person> range(Person lo, Person hi)
{
	std::vector<Person> v;
	for (Person p = lo; p <= hi; ++p)
		v.push_back(p);
	return v;
}

const Block* block_of_size(const KnightHunt& h, int size)
{
	for (const auto& b : h.blocks())
		if (!b.accusatory && b.size == size)
			return &b;
	return nullptr;
}

}  // namespace

BinarySpyHunt::BinarySpyHunt(GameParams params, bool person_one_in_x, bool continue_to_all)
    : Strategy(params), person_one_in_x_(person_one_in_x), continue_to_all_(continue_to_all)
{
	if (params_.model != SpyModel::Liar)
		throw GameError(GameError::Code::ModeError, "the spy hunt assumes lying spies");
	if (params_.n < 2 * (params_.spies() + 1))
		throw GameError(GameError::Code::PreconditionUnmet, "spy hunt needs n >= 2(s+1)");
}

std::vector<Objective> BinarySpyHunt::objectives() const
{
	std::vector<Objective> v{spy_objective(params_)};
	if (person_one_in_x_) {
		v.push_back(Objective::knight());
		v.push_back(Objective::identity_of(1));
	}
	if (continue_to_all_)
		v.push_back(Objective::all_identities());
	return v;
}

void BinarySpyHunt::play(Interrogation& in) const
{
	const int n = params_.n;
	const int s = params_.spies();
	const int q = n / (s + 1);
	const int r = n % (s + 1);
	const Objective spy = spy_objective(params_);
	const Person prefer = person_one_in_x_ ? 1 : 0;

	// Knight w is known and someone made an accusation: settle Person 1 if asked to,
	// then the accuser, then everyone else if asked to.
	const auto close_out = [&](Person w, Person accuser) {
		in.set_phase(static_cast<int>(Phase::Finish));
		if (person_one_in_x_ && !in.known().of(1) && !in.finished())
			in.ask(w, 1);
		if (!in.settled(spy) && !in.finished() && !in.known().of(accuser))
			in.ask(w, accuser);
		if (continue_to_all_)
			connect_everyone(in, w);
	};

	// Phase 1
	in.set_phase(static_cast<int>(Phase::HuntX));
	KnightHunt hx(range(1, s + 1));
	hx.run(in, prefer);
	if (in.finished())
		return;
	KnightHunt hx2(range(s + 2, 2 * s + 1));
	hx2.run(in);
	if (in.finished())
		return;

	if (hx.accused() || hx2.accused()) {
		const Person z = hx.accused() ? hx.first_accuser() : hx2.first_accuser();
		KnightHunt all = hx;
		all.absorb(hx2);
		all.run(in, prefer);
		if (in.finished())
			return;
		close_out(all.knight(), z);
		return;
	}

	// Phase 2: components in X have the sizes of the binary expansion of s + 1;
	// X' has the same sizes apart from the smallest.
	in.set_phase(static_cast<int>(Phase::Switch));
	std::vector<Person> chain, primed;
	for (int bit = 0; (1 << bit) <= s + 1; ++bit) {
		if (!((s + 1) >> bit & 1))
			continue;
		const Block* b = block_of_size(hx, 1 << bit);
		if (!b)
			throw GameError(GameError::Code::StrategyStuck, "unexpected component sizes after phase 1");
		chain.push_back(b->sink);
		if (primed.empty()) {
			primed.push_back(0);
		} else {
			const Block* b2 = block_of_size(hx2, 1 << bit);
			if (!b2)
				throw GameError(GameError::Code::StrategyStuck, "unexpected component sizes after phase 1");
			primed.push_back(b2->sink);
		}
	}
	const SwitchOutcome sw = run_switching_hunt(in, chain, primed);
	const Person w = sw.knight;
	if (in.finished())
		return;
	if (sw.first_accuser) {
		close_out(w, sw.first_accuser);
		return;
	}
	if (person_one_in_x_ && !in.settled(Objective::knight()))
		in.claim(Claim::knight(w));

	// Phase 3: X is now one component of size s + 1. Join X' into one component of
	// size s, then chain fresh people into q - 2 further components of size s + 1.
	in.set_phase(static_cast<int>(Phase::Build));
	const auto build = [&](Person asker, Person subject) {
		if (in.ask(asker, subject) == Answer::Accuse) {
			close_out(w, asker);
			return false;
		}
		return !in.finished();
	};
	const Person y = chain.size() > 1 ? primed.back() : hx2.blocks().front().sink;
	for (const auto& b : hx2.blocks())
		if (b.sink != y && !build(y, b.sink))
			return;
	Person next = 2 * s + 2;
	for (int c = 0; c < q - 2; ++c) {
		for (int i = 0; i < s; ++i, ++next)
			if (!build(next, next + 1))
				return;
		++next;
	}
	std::vector<Person> x;  // singletons x_1 .. x_{r+1}
	for (; next <= n; ++next)
		x.push_back(next);

	// Phase 4
	in.set_phase(static_cast<int>(Phase::Finish));
	const auto done = [&] { return in.settled(spy); };
	if (r == 0) {
		in.ask(w, x[0]);
		if (!done())
			in.ask(w, y);
	} else if (in.ask(y, x[r]) == Answer::Accuse) {
		in.ask(w, y);
	} else {
		for (int i = 0; i < r - 1 && !done(); ++i)
			in.ask(w, x[i]);
		if (!done())
			in.ask(w, x[r - 1]);
	}
	if (continue_to_all_)
		connect_everyone(in, w);
}

}  // namespace knights
