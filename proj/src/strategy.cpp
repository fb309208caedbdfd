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

#include "knights/strategy.hpp"

#include <algorithm>

namespace knights {

Interrogation::Interrogation(const GameParams& params, QuestionGraph start, const std::vector<Edge>& history,
                             std::vector<Objective> tracked)
    : params_(params),
      graph_(std::move(start)),
      history_(history),
      cursor_(graph_.edges().size()),
      tracked_(std::move(tracked))
{
	refresh();
}

void Interrogation::refresh()
{
	known_ = knowledge(graph_, params_);
	if (!known_.consistent)
		return;
	for (const auto& o : tracked_)
		if (!settled(o))
			if (auto c = known_.status(o))
				claims_.push_back({asked(), *c});
}

Answer Interrogation::ask(Person asker, Person subject)
{
	const Question q{asker, subject};
	if (cursor_ >= history_.size())
		throw Suspend{q};
	const Edge& e = history_[cursor_];
	if (!(e.question == q))
		throw GameError(GameError::Code::ConfigError, "answer history does not follow this strategy");
	graph_.apply(q, e.answer);
	++cursor_;
	refresh();
	return e.answer;
}

void Interrogation::claim(const Claim& c)
{
	const bool repeat = std::any_of(claims_.begin(), claims_.end(), [&](const TimedClaim& t) { return t.claim == c; });
	if (!repeat)
		claims_.push_back({asked(), c});
}

bool Interrogation::settled(const Objective& o) const
{
	return std::any_of(claims_.begin(), claims_.end(), [&](const TimedClaim& t) { return t.claim.settles(o); });
}

bool Interrogation::finished() const
{
	return std::all_of(tracked_.begin(), tracked_.end(), [&](const Objective& o) { return settled(o); });
}

Replay Strategy::replay(const QuestionGraph& g) const
{
	Interrogation in(params_, start(), g.edges(), objectives());
	Replay r;
	try {
		play(in);
	} catch (const Interrogation::Suspend& s) {
		r.question = s.question;
	}
	r.claims = in.claims();
	r.phase = in.phase();
	return r;
}

Move Strategy::next(const QuestionGraph& g)
{
	Replay r = replay(g);
	Move move;
	move.question = r.question;
	for (std::size_t i = delivered_; i < r.claims.size(); ++i)
		move.claims.push_back(r.claims[i].claim);
	delivered_ = r.claims.size();
	return move;
}

int Strategy::phase_after(const QuestionGraph& g) const { return replay(g).phase; }

}  // namespace knights
