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

#include "knights/adversary.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "knights/formulas.hpp"

namespace knights {

long double assignment_count(const QuestionGraph& g, const GameParams& params)
{
	const int lo = params.min_spies();
	const int hi = params.spies();
	if (params.model == SpyModel::Unconstrained)
		return static_cast<long double>(consistent_assignments(g, params).size());

	// ways[t]: colourings with t spies so far
	std::vector<long double> ways(static_cast<std::size_t>(params.n + 1), 0);
	ways[0] = 1;
	for (const auto& comp : g.components()) {
		const ComponentSig sig = g.signature(comp.front());
		std::vector<long double> next(ways.size(), 0);
		for (std::size_t t = 0; t < ways.size(); ++t) {
			if (ways[t] == 0)
				continue;
			for (int add : {sig.y, sig.z})
				if (t + static_cast<std::size_t>(add) < next.size())
					next[t + static_cast<std::size_t>(add)] += ways[t];
		}
		ways = std::move(next);
	}
	long double total = 0;
	for (int t = lo; t <= hi; ++t)
		total += ways[static_cast<std::size_t>(t)];
	return total;
}

namespace {

bool answer_ok(const QuestionGraph& g, Question q, Answer a, const GameParams& params)
{
	if (!g.admits(q, a))
		return false;
	if (params.model == SpyModel::Unconstrained)
		return !consistent_assignments(g.with(q, a), params).empty();
	return knowledge(g.with(q, a), params).consistent;
}

}  // namespace

Answer fallback_answer(const QuestionGraph& g, Question q, const GameParams& params)
{
	long double best = -1;
	Answer pick = Answer::Support;
	for (Answer a : {Answer::Support, Answer::Accuse}) {
		if (!answer_ok(g, q, a, params))
			continue;
		const long double c = assignment_count(g.with(q, a), params);
		if (c > best) {
			best = c;
			pick = a;
		}
	}
	if (best <= 0)
		throw GameError(GameError::Code::AdversaryInconsistent, "no answer to this question is consistent");
	return pick;
}

Answer consistent_or_fallback(const QuestionGraph& g, Question q, const GameParams& params, Answer preferred)
{
	return answer_ok(g, q, preferred, params) ? preferred : fallback_answer(g, q, params);
}

// ---------------------------------------------------------------------------

Answer GroundTruth::rule(SpyMask spies, Question q, SpyModel model, SpyPolicy policy)
{
	const bool asker_spy = spies & bit(q.asker);
	const bool subject_spy = spies & bit(q.subject);
	const Answer truth = subject_spy ? Answer::Accuse : Answer::Support;
	if (!asker_spy)
		return truth;
	if (model == SpyModel::Liar)
		return opposite(truth);
	switch (policy) {
	case SpyPolicy::Lie:
		return opposite(truth);
	case SpyPolicy::Truth:
		return truth;
	case SpyPolicy::Support:
		return Answer::Support;
	case SpyPolicy::Accuse:
		return Answer::Accuse;
	}
	return truth;
}

Answer GroundTruth::answer(const QuestionGraph&, Question q, const GameParams& params)
{
	return rule(spies_, q, params.model, policy_);
}

namespace {

bool joins_small(const QuestionGraph& g, Question q, int s)
{
	return !g.connected(q.asker, q.subject) && g.component_size(q.asker) <= s && g.component_size(q.subject) <= s;
}

// Answer maximizing the remaining abstract value of the objective; ties to Support.
Answer optimal_liar_answer(const QuestionGraph& g, Question q, const GameParams& params, const Objective& o)
{
	auto& sol = solver::shared_solver(params, o);
	int best = -1;
	Answer pick = Answer::Support;
	for (Answer a : {Answer::Support, Answer::Accuse}) {
		if (!answer_ok(g, q, a, params))
			continue;
		const int v = sol.value(g.with(q, a));
		if (v > best) {
			best = v;
			pick = a;
		}
	}
	if (best < 0)
		throw GameError(GameError::Code::AdversaryInconsistent, "no answer to this question is consistent");
	return pick;
}

}  // namespace

Answer LiarLowerBound::answer(const QuestionGraph& g, Question q, const GameParams& params)
{
	if (params.model != SpyModel::Liar)
		throw GameError(GameError::Code::ModeError, "this Spy Master assumes lying spies");
	const int n = params.n;
	const int s = params.spies();
	const auto d = formulas::decompose(n, params.k);
	const int index = g.question_count() + 1;

	Answer want = Answer::Support;
	if (params.spy_known) {
		if (n == 5 && params.k == 3) {
			// Support first, then steer towards the positions where no spy is determined.
			if (index > 1)
				return optimal_liar_answer(g, q, params, Objective::spy());
		} else if (index == n - d.q - 1 && d.r <= 1 && joins_small(g, q, s)) {
			want = Answer::Accuse;
		}
	} else if (index == n - d.q && d.r == 0 && joins_small(g, q, s)) {
		want = Answer::Accuse;
	}
	return consistent_or_fallback(g, q, params, want);
}

Answer MajorityLowerBound::answer(const QuestionGraph& g, Question q, const GameParams& params)
{
	if (params.model != SpyModel::Liar)
		throw GameError(GameError::Code::ModeError, "this Spy Master assumes lying spies");
	const int t = formulas::knight_target(params.n, params.k);
	const int index = g.question_count() + 1;
	if (index < t)
		return optimal_liar_answer(g, q, params, Objective::knight());

	const bool touches_one = g.connected(q.asker, 1) || g.connected(q.subject, 1);
	const Answer want = touches_one ? Answer::Support : Answer::Accuse;
	const auto ambiguous_after = [&](Answer a) {
		return answer_ok(g, q, a, params) && !knowledge(g.with(q, a), params).of(1);
	};
	if (!ambiguous_after(want) && ambiguous_after(opposite(want)))
		return opposite(want);
	return consistent_or_fallback(g, q, params, want);
}

Answer UnconstrainedLowerBound::answer(const QuestionGraph& g, Question q, const GameParams& params)
{
	return consistent_or_fallback(g, q, params, Answer::Support);
}

Answer OptimalLiar::answer(const QuestionGraph& g, Question q, const GameParams& params)
{
	return optimal_liar_answer(g, q, params, objective_);
}

Answer Conjecture84::answer(const QuestionGraph& g, Question q, const GameParams& params)
{
	const int n = params.n;
	const int k = params.k;
	if (params.model != SpyModel::Unconstrained || !params.spy_known || n != 2 * k - 1 || k % 2 != 0)
		throw GameError(GameError::Code::PreconditionUnmet, "needs unconstrained spies, a known spy, n = 2k - 1, k even");

	// Replay the history to find the first question that did not join two singletons.
	QuestionGraph h(n, SpyModel::Unconstrained);
	QuestionGraph shadow(n, SpyModel::Liar);  // the same answers read as lying spies
	enum class Mode { Singletons, Liar, Supportive } mode = Mode::Singletons;
	for (const auto& e : g.edges()) {
		if (mode == Mode::Singletons && !(h.component_size(e.question.asker) == 1 &&
		                                  h.component_size(e.question.subject) == 1)) {
			const bool into_sink = h.component_size(e.question.asker) == 2 &&
			                       h.component_size(e.question.subject) == 2 &&
			                       !h.connected(e.question.asker, e.question.subject) && !h.is_source(e.question.subject);
			mode = into_sink ? Mode::Supportive : Mode::Liar;
		}
		h.apply(e.question, e.answer);
		if (shadow.admits(e.question, e.answer))
			shadow.apply(e.question, e.answer);
	}

	Answer want = Answer::Support;
	if (mode == Mode::Singletons) {
		const int a = h.component_size(q.asker);
		const int b = h.component_size(q.subject);
		if (a == 1 && b == 1)
			want = Answer::Support;
		else if ((a == 2 && b == 1) || (a == 1 && b == 2))
			want = Answer::Accuse;
		else if (a == 2 && b == 2 && !h.connected(q.asker, q.subject))
			want = h.is_source(q.subject) ? Answer::Accuse : Answer::Support;
	} else if (mode == Mode::Liar) {
		GameParams lp = params;
		lp.model = SpyModel::Liar;
		if (shadow.question_count() == g.question_count()) {
			auto& sol = solver::shared_solver(lp, Objective::knight());
			int best = -1;
			for (Answer a : {Answer::Support, Answer::Accuse}) {
				if (!answer_ok(shadow, q, a, lp) || !answer_ok(g, q, a, params))
					continue;
				const int v = sol.value(shadow.with(q, a));
				if (v > best) {
					best = v;
					want = a;
				}
			}
		}
	}
	return consistent_or_fallback(g, q, params, want);
}

Answer Scripted::answer(const QuestionGraph& g, Question q, const GameParams& params)
{
	const auto i = static_cast<std::size_t>(g.question_count());
	if (i < answers_.size())
		return consistent_or_fallback(g, q, params, answers_[i]);
	return fallback_answer(g, q, params);
}

Answer HumanPrompt::answer(const QuestionGraph& g, Question q, const GameParams& params)
{
	while (true) {
		*out_ << "Q" << g.question_count() + 1 << ": Person " << q.asker << ", is Person " << q.subject
		      << " a spy? [s]upport / [a]ccuse: " << std::flush;
		std::string word;
		if (!(*in_ >> word))
			throw GameError(GameError::Code::ConfigError, "input ended before the game did");
		std::transform(word.begin(), word.end(), word.begin(), [](unsigned char c) { return std::tolower(c); });
		Answer a;
		if (word == "s" || word == "support" || word == "no")
			a = Answer::Support;
		else if (word == "a" || word == "accuse" || word == "yes")
			a = Answer::Accuse;
		else {
			*out_ << "Please answer 's' or 'a'.\n";
			continue;
		}
		if (answer_ok(g, q, a, params))
			return a;
		*out_ << "That answer leaves no assignment of at most " << params.spies() << " spies"
		      << (params.spy_known ? " (and at least one)" : "") << " consistent with the answers so far.\n";
	}
}

std::unique_ptr<Adversary> make_adversary(const std::string& id, const GameParams& params, std::istream& in,
                                          std::ostream& out)
{
	const auto bad = [&] { return GameError(GameError::Code::ConfigError, "unknown adversary: " + id); };
	if (id == "liar-lb")
		return std::make_unique<LiarLowerBound>();
	if (id == "majority-lb")
		return std::make_unique<MajorityLowerBound>();
	if (id == "unconstrained-lb")
		return std::make_unique<UnconstrainedLowerBound>();
	if (id == "conjecture84")
		return std::make_unique<Conjecture84>();
	if (id == "optimal")
		return std::make_unique<OptimalLiar>(params.spy_known ? Objective::spy() : Objective::spy_or_all_knights());
	if (id == "human")
		return std::make_unique<HumanPrompt>(in, out);

	if (id.rfind("script:", 0) == 0) {
		std::string body = id.substr(7);
		if (body == "figure2")
			body = "SSSASAS";
		else if (body == "figure3")
			body = std::string(25, 'S') + "ASS";
		std::vector<Answer> answers;
		for (char c : body) {
			if (c == 'S' || c == 's')
				answers.push_back(Answer::Support);
			else if (c == 'A' || c == 'a')
				answers.push_back(Answer::Accuse);
			else if (c != ',' && c != ' ')
				throw bad();
		}
		return std::make_unique<Scripted>(std::move(answers));
	}

	if (id.rfind("truth:", 0) == 0) {
		const auto open = id.find('{');
		const auto close = id.find('}');
		if (open == std::string::npos || close == std::string::npos || close < open)
			throw bad();
		SpyMask spies = 0;
		std::stringstream list(id.substr(open + 1, close - open - 1));
		std::string item;
		while (std::getline(list, item, ',')) {
			if (item.empty())
				continue;
			const int p = std::stoi(item);
			if (p < 1 || p > params.n)
				throw GameError(GameError::Code::ConfigError, "spy out of range in " + id);
			spies |= bit(p);
		}
		SpyPolicy policy = SpyPolicy::Lie;
		const std::string rest = id.substr(close + 1);
		if (rest == ":truth")
			policy = SpyPolicy::Truth;
		else if (rest == ":support")
			policy = SpyPolicy::Support;
		else if (rest == ":accuse")
			policy = SpyPolicy::Accuse;
		else if (!rest.empty() && rest != ":lie")
			throw bad();
		const int count = std::popcount(spies);
		if (count > params.spies() || count < params.min_spies())
			throw GameError(GameError::Code::ConfigError, "spy set breaks the game's bounds");
		return std::make_unique<GroundTruth>(spies, policy);
	}
	throw bad();
}

// ---------------------------------------------------------------------------
// Exhaustive Spy Master

namespace {

std::string trace_text(const std::vector<Edge>& edges)
{
	std::ostringstream os;
	for (const auto& e : edges)
		os << " (" << e.question.asker << "," << e.question.subject << ")" << (e.answer == Answer::Support ? "S" : "A");
	return os.str();
}

struct WorstSearch {
	const Strategy& strategy;
	const GameParams& params;
	const std::vector<Objective>& objectives;
	WorstCase result;

	void dfs(const QuestionGraph& g)
	{
		const Replay r = strategy.replay(g);
		const Knowledge known = knowledge(g, params);
		for (const auto& c : r.claims)
			if (c.index == g.question_count() && !known.holds(c.claim))
				throw GameError(GameError::Code::InvalidClaim,
				                strategy.name() + " claimed " + to_string(c.claim) + " unforced after" + trace_text(g.edges()));

		if (r.question) {
			bool any = false;
			for (Answer a : {Answer::Support, Answer::Accuse}) {
				if (!g.admits(*r.question, a))
					continue;
				QuestionGraph next = g.with(*r.question, a);
				if (!knowledge(next, params).consistent)
					continue;
				any = true;
				dfs(next);
			}
			if (!any)
				throw GameError(GameError::Code::AdversaryInconsistent, "no consistent answer after" + trace_text(g.edges()));
			return;
		}

		++result.leaves;
		for (std::size_t i = 0; i < objectives.size(); ++i) {
			int at = -1;
			for (const auto& c : r.claims)
				if (c.claim.settles(objectives[i])) {
					at = c.index;
					break;
				}
			if (at < 0)
				throw GameError(GameError::Code::StrategyStuck, strategy.name() + " stopped without settling " +
				                                                    to_string(objectives[i]) + " after" + trace_text(g.edges()));
			result.per_objective[i] = std::max(result.per_objective[i], at);
			if (at > result.max_questions || result.witness.empty()) {
				result.max_questions = std::max(result.max_questions, at);
				result.witness = g.edges();
			}
		}
	}
};

}  // namespace

WorstCase worst_case(const StrategyFactory& factory, const GameParams& params, std::vector<Objective> objectives)
{
	const auto strategy = factory();
	if (objectives.empty())
		objectives = strategy->objectives();
	WorstSearch search{*strategy, params, objectives, {}};
	search.result.per_objective.assign(objectives.size(), 0);
	search.dfs(strategy->start());
	return search.result;
}

// ---------------------------------------------------------------------------
// Exhaustive Interrogator

namespace {

class Probe {
public:
	Probe(const GameParams& params, std::vector<std::pair<Objective, int>> reqs, Adversary& policy,
	      solver::Budget budget)
	    : params_(params), reqs_(std::move(reqs)), policy_(policy), budget_(budget)
	{
		if (params_.model == SpyModel::Unconstrained)
			tables_ = std::make_unique<solver::WorldTables>(params_);
		for (const auto& [o, d] : reqs_)
			horizon_ = std::max(horizon_, d);
	}

	bool win(const QuestionGraph& g)
	{
		return tables_ ? win(g, tables_->of(g)) : win(g, solver::WorldSet{});
	}

private:
	// `world` is the explicit consistent set (unconstrained spies only).
	bool win(const QuestionGraph& g, const solver::WorldSet& world)
	{
		const int t = g.question_count();
		bool all = true;
		if (tables_) {
			for (const auto& [o, deadline] : reqs_)
				if (!tables_->achieved(world, o)) {
					if (t >= deadline)
						return false;
					all = false;
				}
		} else {
			const Knowledge known = knowledge(g, params_);
			for (const auto& [o, deadline] : reqs_)
				if (!known.status(o)) {
					if (t >= deadline)
						return false;
					all = false;
				}
		}
		if (all)
			return true;

		const std::string k = key(g, world);
		if (auto it = memo_.find(k); it != memo_.end())
			return it->second;

		// A policy that ignores history answers the same state the same way, so a
		// question that teaches nothing, or repeats a sibling's outcome, can be skipped.
		const bool shortcut = tables_ && !policy_.history_dependent();
		std::unordered_set<solver::WorldSet, solver::WorldSetHash> seen;

		bool result = false;
		for (const Question& q : moves(g)) {
			const Answer a = policy_.answer(g, q, params_);
			if (!g.admits(q, a))
				throw GameError(GameError::Code::AdversaryInconsistent, policy_.name() + " gave an impossible answer");
			solver::WorldSet child;
			if (tables_) {
				child = world & tables_->survivors(q, a);
				if (child.empty())
					throw GameError(GameError::Code::AdversaryInconsistent, policy_.name() + " gave an inconsistent answer");
				if (shortcut && (child == world || !seen.insert(child).second))
					continue;
			}
			const QuestionGraph next = g.with(q, a);
			if (!tables_ && !knowledge(next, params_).consistent)
				throw GameError(GameError::Code::AdversaryInconsistent, policy_.name() + " gave an inconsistent answer");
			if (win(next, child)) {
				result = true;
				break;
			}
		}
		if (memo_.size() >= budget_.max_states)
			throw GameError(GameError::Code::BudgetExceeded, "interrogator search budget exhausted");
		memo_.emplace(k, result);
		return result;
	}

	GameParams params_;
	std::vector<std::pair<Objective, int>> reqs_;
	Adversary& policy_;
	solver::Budget budget_;
	std::unique_ptr<solver::WorldTables> tables_;
	int horizon_ = 0;
	std::unordered_map<std::string, bool> memo_;

	std::string key(const QuestionGraph& g, const solver::WorldSet& world) const
	{
		std::string k(1, static_cast<char>(g.question_count()));
		if (policy_.history_dependent()) {
			for (const auto& e : g.edges()) {
				k.push_back(static_cast<char>(e.question.asker));
				k.push_back(static_cast<char>(e.question.subject));
				k.push_back(e.answer == Answer::Support ? 'S' : 'A');
			}
			return k;
		}
		if (tables_) {
			k.append(reinterpret_cast<const char*>(world.words.data()), sizeof(world.words));
			return k;
		}
		k += solver::abstract_of(g, 1).key();
		return k;
	}

	std::vector<Question> moves(const QuestionGraph& g) const
	{
		std::vector<Question> out;
		const int n = params_.n;
		if (params_.model == SpyModel::Unconstrained || policy_.history_dependent()) {
			for (Person a = 1; a <= n; ++a)
				for (Person b = 1; b <= n; ++b)
					if (a != b && !g.asked({a, b}) &&
					    (params_.model == SpyModel::Unconstrained || !g.connected(a, b)))
						out.push_back({a, b});
			return out;
		}
		// Liar spies: one question per pair of components and choice of class on each
		// side, asked between the least members of those classes.
		const auto comps = g.components();
		std::vector<std::vector<Person>> reps;  // per component: least member of each class
		for (const auto& c : comps) {
			std::vector<Person> r;
			Person first[2] = {0, 0};
			for (Person p : c) {
				const int col = g.colour(p);
				if (!first[col])
					first[col] = p;
			}
			for (Person p : first)
				if (p)
					r.push_back(p);
			reps.push_back(r);
		}
		for (std::size_t i = 0; i < comps.size(); ++i)
			for (std::size_t j = i + 1; j < comps.size(); ++j)
				for (Person a : reps[i])
					for (Person b : reps[j])
						out.push_back({a, b});
		return out;
	}
};

}  // namespace

bool interrogator_wins(const GameParams& params, const std::vector<std::pair<Objective, int>>& requirements,
                       Adversary& policy, solver::Budget budget)
{
	Probe probe(params, requirements, policy, budget);
	return probe.win(QuestionGraph(params.n, params.model));
}

int interrogator_value(const GameParams& params, const Objective& objective, Adversary& policy, int cap,
                       solver::Budget budget)
{
	for (int d = 0; d <= cap; ++d)
		if (interrogator_wins(params, {{objective, d}}, policy, budget))
			return d;
	return cap + 1;
}

}  // namespace knights
