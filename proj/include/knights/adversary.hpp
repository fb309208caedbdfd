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

#ifndef KNIGHTS_ADVERSARY_HPP
#define KNIGHTS_ADVERSARY_HPP

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "knights/game.hpp"
#include "knights/solver.hpp"
#include "knights/strategy.hpp"

namespace knights {

/// Number of spy assignments consistent with g (liar spies: any n; otherwise n <= 16).
long double assignment_count(const QuestionGraph& g, const GameParams& params);

/// A Spy Master. answer() sees the graph before question q is answered.
class Adversary {
public:
	virtual ~Adversary() = default;
	virtual std::string name() const = 0;
	virtual std::unique_ptr<Adversary> clone() const = 0;
	virtual Answer answer(const QuestionGraph& g, Question q, const GameParams& params) = 0;
	/// True if answers depend on more than the abstract state and question index
	/// (directions, exact people). Search engines then key on the whole history.
	virtual bool history_dependent() const { return false; }
};

/// Consistent answer keeping the most assignments alive; ties go to Support.
Answer fallback_answer(const QuestionGraph& g, Question q, const GameParams& params);

/// The preferred answer if it keeps the game consistent, else the fallback.
Answer consistent_or_fallback(const QuestionGraph& g, Question q, const GameParams& params, Answer preferred);

enum class SpyPolicy { Lie, Truth, Support, Accuse };

/// Answers from a fixed spy set. Unconstrained spies follow `policy`.
class GroundTruth : public Adversary {
public:
	explicit GroundTruth(SpyMask spies, SpyPolicy policy = SpyPolicy::Lie) : spies_(spies), policy_(policy) {}
	std::string name() const override { return "truth"; }
	std::unique_ptr<Adversary> clone() const override { return std::make_unique<GroundTruth>(*this); }
	Answer answer(const QuestionGraph& g, Question q, const GameParams& params) override;
	bool history_dependent() const override { return true; }

	/// Truthful-knight rule: Support iff the subject is a knight (asker a knight), or
	/// the spy policy otherwise.
	static Answer rule(SpyMask spies, Question q, SpyModel model, SpyPolicy policy = SpyPolicy::Lie);

private:
	SpyMask spies_;
	SpyPolicy policy_;
};

/// Supports the first n-q-1 questions (n-q-2 with a spy known), then accuses a question
/// joining two small components when the remainder calls for it.
class LiarLowerBound : public Adversary {
public:
	std::string name() const override { return "liar-lb"; }
	std::unique_ptr<Adversary> clone() const override { return std::make_unique<LiarLowerBound>(*this); }
	Answer answer(const QuestionGraph& g, Question q, const GameParams& params) override;
};

/// Keeps Person 1 ambiguous through question K(n,k): optimal knight-hiding replies
/// before that question, then the Person-1 case rule.
class MajorityLowerBound : public Adversary {
public:
	std::string name() const override { return "majority-lb"; }
	std::unique_ptr<Adversary> clone() const override { return std::make_unique<MajorityLowerBound>(*this); }
	Answer answer(const QuestionGraph& g, Question q, const GameParams& params) override;
};

/// Always supports (unconstrained spies).
class UnconstrainedLowerBound : public Adversary {
public:
	std::string name() const override { return "unconstrained-lb"; }
	std::unique_ptr<Adversary> clone() const override { return std::make_unique<UnconstrainedLowerBound>(*this); }
	Answer answer(const QuestionGraph& g, Question q, const GameParams& params) override;
};

/// Policy behind the conditional combined-deadline bound for n = 2k - 1, k even.
class Conjecture84 : public Adversary {
public:
	std::string name() const override { return "conjecture84"; }
	std::unique_ptr<Adversary> clone() const override { return std::make_unique<Conjecture84>(*this); }
	Answer answer(const QuestionGraph& g, Question q, const GameParams& params) override;
	bool history_dependent() const override { return true; }
};

/// Minimax-optimal replies for one objective, from the abstract liar solver.
class OptimalLiar : public Adversary {
public:
	explicit OptimalLiar(Objective objective) : objective_(objective) {}
	std::string name() const override { return "optimal"; }
	std::unique_ptr<Adversary> clone() const override { return std::make_unique<OptimalLiar>(*this); }
	Answer answer(const QuestionGraph& g, Question q, const GameParams& params) override;

private:
	Objective objective_;
};

/// Fixed answer list; past its end (or where inconsistent) the fallback answer.
class Scripted : public Adversary {
public:
	explicit Scripted(std::vector<Answer> answers) : answers_(std::move(answers)) {}
	std::string name() const override { return "script"; }
	std::unique_ptr<Adversary> clone() const override { return std::make_unique<Scripted>(*this); }
	Answer answer(const QuestionGraph& g, Question q, const GameParams& params) override;
	bool history_dependent() const override { return true; }

private:
	std::vector<Answer> answers_;
};

/// Reads answers from a stream, refusing ones that contradict earlier answers.
class HumanPrompt : public Adversary {
public:
	HumanPrompt(std::istream& in, std::ostream& out) : in_(&in), out_(&out) {}
	std::string name() const override { return "human"; }
	std::unique_ptr<Adversary> clone() const override { return std::make_unique<HumanPrompt>(*this); }
	Answer answer(const QuestionGraph& g, Question q, const GameParams& params) override;
	bool history_dependent() const override { return true; }

private:
	std::istream* in_;
	std::ostream* out_;
};

/// Parses an adversary id: truth:{1,3}[:lie|truth|support|accuse], liar-lb,
/// majority-lb, unconstrained-lb, conjecture84, optimal, script:SSA..., script:figure2,
/// script:figure3, human.
std::unique_ptr<Adversary> make_adversary(const std::string& id, const GameParams& params, std::istream& in,
                                          std::ostream& out);

// ---------------------------------------------------------------------------
// Exhaustive Spy Master: every consistent answer at every question.

struct WorstCase {
	int max_questions = 0;                 // largest claim index over all branches and objectives
	std::vector<int> per_objective;        // largest settling index per objective
	std::vector<Edge> witness;             // a history reaching max_questions
	std::size_t leaves = 0;
};

using StrategyFactory = std::function<std::unique_ptr<Strategy>()>;

/// Throws StrategyStuck (with the trace in the message) if some branch ends with an
/// objective unsettled, InvalidClaim if a claim was not forced when made.
WorstCase worst_case(const StrategyFactory& factory, const GameParams& params, std::vector<Objective> objectives = {});

// ---------------------------------------------------------------------------
// Exhaustive Interrogator against a fixed policy.

/// True iff some questioning meets every (objective, deadline) against the policy.
bool interrogator_wins(const GameParams& params, const std::vector<std::pair<Objective, int>>& requirements,
                       Adversary& policy, solver::Budget budget = {});

/// Fewest questions that settle the objective against the policy (cap + 1 if more).
int interrogator_value(const GameParams& params, const Objective& objective, Adversary& policy, int cap,
                       solver::Budget budget = {});

}  // namespace knights

#endif  // KNIGHTS_ADVERSARY_HPP
