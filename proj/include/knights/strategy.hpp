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

#ifndef KNIGHTS_STRATEGY_HPP
#define KNIGHTS_STRATEGY_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "knights/game.hpp"

namespace knights {

struct TimedClaim {
	int index = 0;  // questions answered when the claim was made
	Claim claim;

	friend bool operator==(const TimedClaim&, const TimedClaim&) = default;
};

/**
 * Execution context for an interrogation procedure.
 *
 * Strategies are written as straight-line procedures that call ask() and claim().
 * A procedure is re-run from the start against the answer history each time the
 * next question is needed: ask() returns recorded answers while the history lasts
 * and then suspends the run with the question it wants asked next. This keeps every
 * strategy a pure function of the history, so cloning one is free.
 *
 * After every answer the context also claims, for each tracked objective, anything
 * that has just become forced.
 */
class Interrogation {
public:
	struct Suspend {
		Question question;
	};

	Interrogation(const GameParams& params, QuestionGraph start, const std::vector<Edge>& history,
	              std::vector<Objective> tracked);

	Answer ask(Person asker, Person subject);
	void claim(const Claim& c);

	const GameParams& params() const { return params_; }
	const QuestionGraph& graph() const { return graph_; }
	const Knowledge& known() const { return known_; }
	int asked() const { return graph_.question_count(); }

	bool settled(const Objective& o) const;
	/// True once every tracked objective has been claimed.
	bool finished() const;
	const std::vector<Objective>& tracked() const { return tracked_; }
	const std::vector<TimedClaim>& claims() const { return claims_; }

	/// Lowest-index known knight, if any.
	std::optional<Person> knight() const { return known_.some_knight(); }

	/// Free-form phase tag a procedure may set for inspection.
	void set_phase(int phase) { phase_ = phase; }
	int phase() const { return phase_; }

private:
	GameParams params_;
	QuestionGraph graph_;
	const std::vector<Edge>& history_;
	std::size_t cursor_;
	std::vector<Objective> tracked_;
	std::vector<TimedClaim> claims_;
	Knowledge known_;
	int phase_ = 0;

	void refresh();
};

/// Full result of replaying a procedure over a history.
struct Replay {
	std::vector<TimedClaim> claims;
	std::optional<Question> question;  // empty once the procedure has returned
	int phase = 0;
};

/// What a strategy wants next: claims made now, then a question or nothing (done).
struct Move {
	std::vector<Claim> claims;
	std::optional<Question> question;
};

class Strategy {
public:
	explicit Strategy(GameParams params) : params_(params) {}
	virtual ~Strategy() = default;

	virtual std::string name() const = 0;
	virtual std::unique_ptr<Strategy> clone() const = 0;

	/// Objectives this strategy promises to settle.
	virtual std::vector<Objective> objectives() const = 0;

	/// Replays the procedure over g's answers and returns the next move. Claims already
	/// returned by earlier calls are not repeated. g must extend the start graph.
	Move next(const QuestionGraph& g);

	/// Phase tag the procedure had set when it stopped on g.
	int phase_after(const QuestionGraph& g) const;

	/// Stateless replay: every claim with its index, and the next question if any.
	Replay replay(const QuestionGraph& g) const;

	/// Graph the strategy starts from (empty by default).
	virtual QuestionGraph start() const { return QuestionGraph(params_.n, params_.model); }

	const GameParams& params() const { return params_; }

protected:
	virtual void play(Interrogation& in) const = 0;

	GameParams params_;

private:
	std::size_t delivered_ = 0;
};

}  // namespace knights

#endif  // KNIGHTS_STRATEGY_HPP
