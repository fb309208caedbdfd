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

#include "knights/checks.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "knights/adversary.hpp"
#include "knights/harness.hpp"
#include "knights/formulas.hpp"
#include "knights/strategies.hpp"

namespace knights::checks {

bool Report::pass() const { return failures() == 0; }

int Report::failures() const
{
	int f = 0;
	for (const auto& r : rows)
		f += r.pass ? 0 : 1;
	return f;
}

std::string to_json_lines(const Report& r)
{
	std::ostringstream os;
	for (const auto& row : r.rows)
		os << nlohmann::json{{"check", r.name},
		                     {"cell", row.cell},
		                     {"expected", row.expected},
		                     {"computed", row.computed},
		                     {"pass", row.pass}}
		          .dump()
		   << '\n';
	os << nlohmann::json{{"check", r.name},
	                     {"summary", true},
	                     {"cells", r.rows.size()},
	                     {"failures", r.failures()},
	                     {"pass", r.pass()},
	                     {"seconds", r.seconds}}
	          .dump()
	   << '\n';
	return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
public:
	explicit Timer(Report& r) : r_(r), t0_(Clock::now()) {}
	~Timer() { r_.seconds = std::chrono::duration<double>(Clock::now() - t0_).count(); }

private:
	Report& r_;
	Clock::time_point t0_;
};

std::string cell(const GameParams& p, const std::string& extra = "")
{
	std::ostringstream os;
	os << "n=" << p.n << " k=" << p.k << " " << to_string(p.model) << (p.spy_known ? " spy_known" : "");
	if (!extra.empty())
		os << " " << extra;
	return os.str();
}

void add(Report& r, std::string c, int expected, int computed, bool at_most = false)
{
	const bool ok = at_most ? computed <= expected : computed == expected;
	r.rows.push_back({std::move(c), (at_most ? "<= " : "") + std::to_string(expected), std::to_string(computed), ok});
}

void add_error(Report& r, std::string c, const std::string& expected, const std::exception& e)
{
	r.rows.push_back({std::move(c), expected, std::string("error: ") + e.what(), false});
}

template <class F>
void for_each_game(int n_lo, int n_max, F&& f)
{
	for (int n = n_lo; n <= n_max; ++n)
		for (int k = n / 2 + 1; k < n; ++k)
			f(n, k);
}

// Deadline a strategy must meet for an objective.
int deadline(const GameParams& p, const Objective& o)
{
	const int K = formulas::knight_target(p.n, p.k);
	const bool liar = p.model == SpyModel::Liar;
	switch (o.kind) {
	case ObjectiveKind::FindSpy:
		return liar ? formulas::liar_spy_targets(p.n, p.k).spy : p.n - 1;
	case ObjectiveKind::FindSpyOrAllKnights:
		return liar ? formulas::liar_spy_targets(p.n, p.k).all : p.n;
	case ObjectiveKind::FindKnight:
		return liar ? K : K + 1;
	case ObjectiveKind::IdentityOfPerson:
		return liar ? K + 1 : K + 2;
	case ObjectiveKind::AllIdentities:
		return p.n - 1;
	default:
		return 0;
	}
}

void sweep(Report& r, const std::string& id, const GameParams& p)
{
	const std::string c = cell(p, id);
	try {
		const WorstCase w = worst_case([&] { return make_strategy(id, p); }, p);
		const auto objectives = make_strategy(id, p)->objectives();
		for (std::size_t i = 0; i < objectives.size(); ++i)
			add(r, c + " " + to_string(objectives[i]), deadline(p, objectives[i]), w.per_objective[i], true);
	} catch (const GameError& e) {
		add_error(r, c, "completes", e);
	}
}

}  // namespace

Report spy_hunt(int n_max)
{
	Report r{"strategy:binary-spy-hunt", {}, 0};
	Timer t(r);
	for_each_game(3, n_max, [&](int n, int k) {
		if (n < 2 * (n - k + 1))
			return;
		for (bool known : {false, true}) {
			const GameParams p = GameParams::make(n, k, SpyModel::Liar, known);
			sweep(r, "bsh", p);
			sweep(r, "bsh1", p);
		}
	});
	return r;
}

Report edge_case(int n_max)
{
	Report r{"strategy:edge-case", {}, 0};
	Timer t(r);
	for (int s = 1; 2 * s + 1 <= n_max; ++s)
		for (bool known : {false, true})
			sweep(r, "edge", GameParams::make(2 * s + 1, s + 1, SpyModel::Liar, known));
	if (n_max >= 9) {
		// the nine-person table followed through every branch
		const GameParams p = GameParams::make(9, 5, SpyModel::Liar, true);
		try {
			const WorstCase w = worst_case([&] { return std::make_unique<LiarEdgeCase>(p, true); }, p);
			add(r, cell(p, "figure2 find-spy"), 7, w.max_questions);
		} catch (const GameError& e) {
			add_error(r, cell(p, "figure2"), "7", e);
		}
	}
	return r;
}

Report spider(int n_max)
{
	Report r{"strategy:extended-spider", {}, 0};
	Timer t(r);
	for_each_game(3, n_max, [&](int n, int k) {
		for (bool known : {false, true})
			sweep(r, "spider", GameParams::make(n, k, SpyModel::Unconstrained, known));
	});
	return r;
}

Report modified_hunt(int n_max)
{
	Report r{"strategy:modified-knight-hunt", {}, 0};
	Timer t(r);
	for_each_game(3, n_max, [&](int n, int k) {
		for (bool known : {false, true})
			sweep(r, "mbkh", GameParams::make(n, k, SpyModel::Unconstrained, known));
	});
	return r;
}

// ---------------------------------------------------------------------------
// Solver agreement

namespace {

template <class Solve>
void value_row(Report& r, const GameParams& p, const Objective& o, int expected, Solve&& solve)
{
	const std::string c = cell(p, to_string(o));
	try {
		add(r, c, expected, solve(p, o));
	} catch (const GameError& e) {
		add_error(r, c, std::to_string(expected), e);
	}
}

}  // namespace

Report theorem1(int n_max, solver::Budget budget)
{
	Report r{"theorem1", {}, 0};
	Timer t(r);
	const auto solve = [&](const GameParams& p, const Objective& o) { return solver::solve_liar_abstract(p, o, budget); };
	for_each_game(3, n_max, [&](int n, int k) {
		const auto spy = formulas::liar_spy_targets(n, k);
		const auto id = formulas::identity_targets(n, k);
		const int K = formulas::knight_target(n, k);
		const GameParams open = GameParams::make(n, k, SpyModel::Liar, false);
		const GameParams known = GameParams::make(n, k, SpyModel::Liar, true);
		value_row(r, open, Objective::spy_or_all_knights(), spy.all, solve);
		value_row(r, known, Objective::spy(), spy.spy, solve);
		for (const GameParams& p : {open, known}) {
			value_row(r, p, Objective::knight(), K, solve);
			value_row(r, p, Objective::any_identity(), id.any, solve);
		}
		value_row(r, open, Objective::identity_of(1), id.person, solve);
		value_row(r, known, Objective::identity_of(1), id.person_spy_liar, solve);
	});
	return r;
}

Report theorem2(int n_max, solver::Budget budget)
{
	Report r{"theorem2", {}, 0};
	Timer t(r);
	const auto solve = [&](const GameParams& p, const Objective& o) { return solver::solve_generic(p, o, budget); };
	for_each_game(3, n_max, [&](int n, int k) {
		const auto spy = formulas::unconstrained_spy_targets(n, k);
		const auto id = formulas::identity_targets(n, k);
		const int K = formulas::knight_target(n, k);
		const GameParams open = GameParams::make(n, k, SpyModel::Unconstrained, false);
		const GameParams known = GameParams::make(n, k, SpyModel::Unconstrained, true);
		value_row(r, open, Objective::spy_or_all_knights(), spy.all, solve);
		value_row(r, known, Objective::spy(), spy.spy, solve);
		for (const GameParams& p : {open, known}) {
			value_row(r, p, Objective::knight(), K, solve);
			value_row(r, p, Objective::any_identity(), id.any, solve);
		}
		value_row(r, open, Objective::identity_of(1), id.person, solve);
		value_row(r, known, Objective::identity_of(1), id.person_spy_unconstrained, solve);
	});
	return r;
}

Report lemma71(solver::Budget budget)
{
	Report r{"lemma71", {}, 0};
	Timer t(r);
	const GameParams known = GameParams::make(7, 4, SpyModel::Unconstrained, true);
	const GameParams open = GameParams::make(7, 4, SpyModel::Unconstrained, false);
	struct Case {
		const GameParams* p;
		std::vector<std::pair<Objective, int>> reqs;
		bool expected;
		const char* label;
	};
	const std::vector<Case> cases = {
	    {&known, {{Objective::knight(), 4}, {Objective::spy(), 6}}, false, "knight<=4 spy<=6"},
	    {&open, {{Objective::knight(), 4}, {Objective::spy_or_all_knights(), 7}}, false, "knight<=4 spy-or-all-knights<=7"},
	    {&known, {{Objective::knight(), 5}, {Objective::spy(), 6}}, true, "knight<=5 spy<=6"},
	    {&known, {{Objective::knight(), 4}, {Objective::spy(), 7}}, true, "knight<=4 spy<=7"},
	};
	for (const auto& c : cases) {
		const std::string name = cell(*c.p, c.label);
		try {
			const bool got = solver::combined_feasible(*c.p, c.reqs, budget);
			r.rows.push_back({name, c.expected ? "feasible" : "infeasible", got ? "feasible" : "infeasible", got == c.expected});
		} catch (const GameError& e) {
			add_error(r, name, c.expected ? "feasible" : "infeasible", e);
		}
	}
	return r;
}

Report cross_solver(int n_max, solver::Budget budget)
{
	Report r{"cross-solver", {}, 0};
	Timer t(r);
	const std::vector<Objective> objectives = {
	    Objective::knight(),          Objective::spy(),          Objective::spy_or_all_knights(),
	    Objective::identity_of(1),    Objective::any_identity(), Objective::all_identities(),
	    {ObjectiveKind::AllKnightsProven, 1},
	};
	for_each_game(3, n_max, [&](int n, int k) {
		for (bool known : {false, true}) {
			const GameParams p = GameParams::make(n, k, SpyModel::Liar, known);
			for (const auto& o : objectives) {
				const std::string c = cell(p, to_string(o));
				try {
					const int generic = solver::solve_generic(p, o, budget);
					const int abstract = solver::solve_liar_abstract(p, o, budget);
					const auto show = [](int v) { return v >= solver::kUnreachable ? std::string("unreachable") : std::to_string(v); };
					r.rows.push_back({c, show(generic), show(abstract), generic == abstract});
				} catch (const GameError& e) {
					add_error(r, c, "agreement", e);
				}
			}
		}
	});
	return r;
}

// ---------------------------------------------------------------------------
// Lower-bound Spy Masters

namespace {

// Value against the policy is at least `bound`: no questioning wins by bound - 1.
void lower_bound_row(Report& r, const GameParams& p, const Objective& o, int bound, Adversary& policy,
                     solver::Budget budget)
{
	const std::string c = cell(p, to_string(o) + " vs " + policy.name());
	try {
		const int v = interrogator_value(p, o, policy, bound, budget);
		r.rows.push_back({c, ">= " + std::to_string(bound), v > bound ? "> " + std::to_string(bound) : std::to_string(v),
		                  v >= bound});
	} catch (const GameError& e) {
		add_error(r, c, ">= " + std::to_string(bound), e);
	}
}

}  // namespace

Report liar_lower_bound(int n_max, solver::Budget budget)
{
	Report r{"lower-bound:liar", {}, 0};
	Timer t(r);
	for_each_game(3, n_max, [&](int n, int k) {
		const auto spy = formulas::liar_spy_targets(n, k);
		LiarLowerBound policy;
		lower_bound_row(r, GameParams::make(n, k, SpyModel::Liar, false), Objective::spy_or_all_knights(), spy.all,
		                policy, budget);
		lower_bound_row(r, GameParams::make(n, k, SpyModel::Liar, true), Objective::spy(), spy.spy, policy, budget);
	});
	return r;
}

Report majority_lower_bound(int n_max, solver::Budget budget)
{
	Report r{"lower-bound:majority", {}, 0};
	Timer t(r);
	for_each_game(3, n_max, [&](int n, int k) {
		const auto id = formulas::identity_targets(n, k);
		MajorityLowerBound policy;
		lower_bound_row(r, GameParams::make(n, k, SpyModel::Liar, false), Objective::identity_of(1), id.person, policy,
		                budget);
		lower_bound_row(r, GameParams::make(n, k, SpyModel::Liar, true), Objective::identity_of(1), id.person_spy_liar,
		                policy, budget);
	});
	return r;
}

Report unconstrained_lower_bound(int n_max, solver::Budget budget)
{
	Report r{"lower-bound:unconstrained", {}, 0};
	Timer t(r);
	for_each_game(3, n_max, [&](int n, int k) {
		const auto spy = formulas::unconstrained_spy_targets(n, k);
		UnconstrainedLowerBound policy;
		lower_bound_row(r, GameParams::make(n, k, SpyModel::Unconstrained, false), Objective::spy_or_all_knights(),
		                spy.all, policy, budget);
		lower_bound_row(r, GameParams::make(n, k, SpyModel::Unconstrained, true), Objective::spy(), spy.spy, policy,
		                budget);
	});
	return r;
}

// ---------------------------------------------------------------------------
// Majority game and all identities

Report majority(int k_odd_max, int k_max)
{
	Report r{"majority", {}, 0};
	Timer t(r);
	for (int k = 2; k <= k_odd_max; ++k) {
		const std::string c = "odd room k=" + std::to_string(k) + " weights {1^" + std::to_string(2 * k - 1) + "}";
		try {
			const auto v = solver::majority_value(std::vector<int>(static_cast<std::size_t>(2 * k - 1), 1), 1);
			add(r, c, 2 * (k - 1) - formulas::binary_ones(k - 1), v.questions);
		} catch (const GameError& e) {
			add_error(r, c, "value", e);
		}
	}
	try {
		for (const auto& row : solver::check_conjecture(k_max))
			r.rows.push_back({"V_1 k=" + std::to_string(row.k) + " a=" + std::to_string(row.a), std::to_string(row.expected),
			                  std::to_string(row.value), row.pass});
	} catch (const GameError& e) {
		add_error(r, "conjecture k<=" + std::to_string(k_max), "B(k-1)+1", e);
	}
	return r;
}

Report atable(int n_max, solver::Budget budget)
{
	Report r{"atable", {}, 0};
	Timer t(r);
	try {
		std::vector<std::pair<int, int>> found;
		for (const auto& row : solver::classify_all_identities(n_max, budget)) {
			const auto f = formulas::all_identities_liar(row.n, row.k);
			const GameParams p = GameParams::make(row.n, row.k, SpyModel::Liar, false);
			if (f.exact())
				add(r, cell(p, "all-identities"), f.lo, row.value);
			else
				r.rows.push_back({cell(p, "all-identities"), "in [" + std::to_string(f.lo) + "," + std::to_string(f.hi) + "]",
				                  std::to_string(row.value), row.value >= f.lo && row.value <= f.hi});
			if (row.minimal)
				found.emplace_back(row.n, row.k);
		}
		std::vector<std::pair<int, int>> listed;
		for (const auto& pr : formulas::all_identities_exceptions())
			if (pr.first <= n_max)
				listed.push_back(pr);
		const auto show = [](const std::vector<std::pair<int, int>>& v) {
			std::string out = "{";
			for (const auto& [n, k] : v)
				out += (out.size() > 1 ? "," : "") + std::string("(") + std::to_string(n) + "," + std::to_string(k) + ")";
			return out + "}";
		};
		r.rows.push_back({"exceptional pairs n<=" + std::to_string(n_max), show(listed), show(found), listed == found});
	} catch (const GameError& e) {
		add_error(r, "classify n<=" + std::to_string(n_max), "exceptional pairs", e);
	}
	return r;
}

// ---------------------------------------------------------------------------
// Property suite

namespace {

// Naive re-derivation of liar components: explicit member lists with identity
// classes, merged by the rule "support joins equal classes, accusation crosses".
struct NaiveClasses {
	std::vector<int> comp;    // person -> component id
	std::vector<int> side;    // person -> 0/1 within its component
	explicit NaiveClasses(int n) : comp(static_cast<std::size_t>(n + 1)), side(static_cast<std::size_t>(n + 1), 0)
	{
		for (int p = 0; p <= n; ++p)
			comp[static_cast<std::size_t>(p)] = p;
	}
	std::pair<int, int> sizes(int id, int of_side) const
	{
		int a = 0, b = 0;
		for (std::size_t p = 1; p < comp.size(); ++p)
			if (comp[p] == id)
				(side[p] == of_side ? a : b)++;
		return {a, b};
	}
	void join(Person x, Person y, Answer ans)
	{
		const int cx = comp[static_cast<std::size_t>(x)], cy = comp[static_cast<std::size_t>(y)];
		const int flip = side[static_cast<std::size_t>(x)] ^ side[static_cast<std::size_t>(y)] ^ (ans == Answer::Accuse ? 1 : 0);
		for (std::size_t p = 1; p < comp.size(); ++p)
			if (comp[p] == cy) {
				comp[p] = cx;
				side[p] ^= flip;
			}
	}
};

class RandomAnswers : public Adversary {
public:
	explicit RandomAnswers(std::uint64_t seed) : rng_(seed) {}
	std::string name() const override { return "random"; }
	std::unique_ptr<Adversary> clone() const override { return std::make_unique<RandomAnswers>(*this); }
	bool history_dependent() const override { return true; }
	Answer answer(const QuestionGraph& g, Question q, const GameParams& params) override
	{
		std::vector<Answer> ok;
		for (Answer a : {Answer::Support, Answer::Accuse})
			if (g.admits(q, a) && knowledge(g.with(q, a), params).consistent)
				ok.push_back(a);
		if (ok.empty())
			throw GameError(GameError::Code::AdversaryInconsistent, "no consistent answer");
		return ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng_)];
	}

private:
	std::mt19937_64 rng_;
};

struct PropertyTally {
	std::map<std::string, long> checked;
	std::map<std::string, std::string> first_failure;

	void check(const std::string& prop, bool ok, const std::function<std::string()>& why)
	{
		++checked[prop];
		if (!ok && !first_failure.count(prop))
			first_failure[prop] = why();
	}
};

std::string history(const QuestionGraph& g)
{
	std::string out;
	for (const auto& e : g.edges())
		out += " (" + std::to_string(e.question.asker) + "," + std::to_string(e.question.subject) + ")" +
		       (e.answer == Answer::Support ? "S" : "A");
	return out;
}

// Properties of one reachable graph. `before` is the consistent set of its parent.
void graph_properties(PropertyTally& t, const QuestionGraph& g, const GameParams& p, const ConsistentSet* before,
                      const NaiveClasses* naive)
{
	const ConsistentSet now = consistent_assignments(g, p);
	const auto where = [&] { return "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) + history(g); };

	t.check("component-count", g.component_count() >= p.n - g.question_count(), where);

	if (before)
		t.check("monotonicity",
		        std::all_of(now.members.begin(), now.members.end(), [&](SpyMask m) { return before->contains(m); }), where);

	const Knowledge fast = knowledge(g, p);
	const Knowledge slow = knowledge_from(now);
	t.check("knowledge-oracle",
	        fast.consistent == slow.consistent && (!slow.consistent || (fast.identity == slow.identity &&
	                                                                   fast.all_knights == slow.all_knights)),
	        where);

	if (p.model != SpyModel::Liar || now.empty())
		return;

	for (const auto& comp : g.components()) {
		// colouring against every consistent assignment
		for (Person a : comp)
			for (Person b : comp) {
				if (a >= b)
					continue;
				const bool same_colour = g.colour(a) == g.colour(b);
				const bool always_same = std::all_of(now.members.begin(), now.members.end(), [&](SpyMask m) {
					return static_cast<bool>(m & bit(a)) == static_cast<bool>(m & bit(b));
				});
				const bool always_diff = std::all_of(now.members.begin(), now.members.end(), [&](SpyMask m) {
					return static_cast<bool>(m & bit(a)) != static_cast<bool>(m & bit(b));
				});
				t.check("colouring", same_colour ? always_same : always_diff, where);
			}
		if (naive) {
			const ComponentSig sig = g.signature(comp.front());
			const int id = naive->comp[static_cast<std::size_t>(comp.front())];
			const auto [a, b] = naive->sizes(id, 0);
			t.check("weight-fold", sig.y == std::max(a, b) && sig.z == std::min(a, b) && sig.weight() == std::abs(a - b), where);
		}
	}

	if (!p.spy_known) {
		std::set<std::vector<Person>> by_weight;
		for (const auto& c : unambiguous_components(g, p))
			by_weight.insert(c);
		std::set<std::vector<Person>> by_oracle;
		for (const auto& c : g.components()) {
			const SpyMask first = now.members.front();
			const bool fixed = std::all_of(now.members.begin(), now.members.end(), [&](SpyMask m) {
				return std::all_of(c.begin(), c.end(), [&](Person x) { return (m & bit(x)) == (first & bit(x)); });
			});
			if (fixed)
				by_oracle.insert(c);
		}
		t.check("unambiguous-components", by_weight == by_oracle, where);
	}
}

// Every history of up to `depth` questions in the game; properties at every node.
void exhaustive(PropertyTally& t, const GameParams& p, int depth)
{
	struct Frame {
		QuestionGraph g;
		NaiveClasses naive;
	};
	std::function<void(const Frame&, const ConsistentSet*)> dfs = [&](const Frame& f, const ConsistentSet* before) {
		graph_properties(t, f.g, p, before, p.model == SpyModel::Liar ? &f.naive : nullptr);
		if (f.g.question_count() >= depth)
			return;
		const ConsistentSet here = consistent_assignments(f.g, p);
		for (Person a = 1; a <= p.n; ++a)
			for (Person b = 1; b <= p.n; ++b) {
				if (a == b || f.g.asked({a, b}))
					continue;
				for (Answer ans : {Answer::Support, Answer::Accuse}) {
					if (!f.g.admits({a, b}, ans))
						continue;
					Frame next{f.g.with({a, b}, ans), f.naive};
					if (consistent_assignments(next.g, p).empty())
						continue;
					if (p.model == SpyModel::Liar && !f.g.connected(a, b))
						next.naive.join(a, b, ans);
					dfs(next, &here);
				}
			}
	};
	dfs(Frame{QuestionGraph(p.n, p.model), NaiveClasses(p.n)}, nullptr);
}

// Random walk of `length` random questions with uniformly random consistent answers.
void random_history(PropertyTally& t, const GameParams& p, int length, std::mt19937_64& rng)
{
	QuestionGraph g(p.n, p.model);
	NaiveClasses naive(p.n);
	graph_properties(t, g, p, nullptr, p.model == SpyModel::Liar ? &naive : nullptr);
	std::uniform_int_distribution<int> person(1, p.n);
	for (int step = 0; step < length; ++step) {
		const ConsistentSet before = consistent_assignments(g, p);
		Question q{person(rng), person(rng)};
		if (q.asker == q.subject || g.asked(q))
			continue;
		std::vector<Answer> ok;
		for (Answer a : {Answer::Support, Answer::Accuse})
			if (g.admits(q, a) && !consistent_assignments(g.with(q, a), p).empty())
				ok.push_back(a);
		if (ok.empty())
			continue;
		const Answer a = ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)];
		if (p.model == SpyModel::Liar && !g.connected(q.asker, q.subject))
			naive.join(q.asker, q.subject, a);
		g.apply(q, a);
		graph_properties(t, g, p, &before, p.model == SpyModel::Liar ? &naive : nullptr);
	}
}

bool power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

}  // namespace

Report properties(int n_exhaustive, int random_histories)
{
	Report r{"properties", {}, 0};
	Timer timer(r);
	PropertyTally t;

	for (int n = 3; n <= n_exhaustive; ++n)
		for (int k = n / 2 + 1; k < n; ++k)
			for (SpyModel m : {SpyModel::Liar, SpyModel::Unconstrained})
				for (bool known : {false, true})
					exhaustive(t, GameParams::make(n, k, m, known), n <= 4 ? 4 : 3);

	std::mt19937_64 rng(20260417);
	std::uniform_int_distribution<int> pick_n(3, 8);
	for (int i = 0; i < random_histories; ++i) {
		const int n = pick_n(rng);
		const int k = std::uniform_int_distribution<int>(n / 2 + 1, n - 1)(rng);
		const SpyModel m = (i % 3 == 2) ? SpyModel::Unconstrained : SpyModel::Liar;
		random_history(t, GameParams::make(n, k, m, i % 2 == 1), 6, rng);
	}

	// Strategies against random consistent answers: every claim valid when made,
	// every objective settled, and knight hunts keep power-of-two components.
	const std::vector<std::pair<std::string, SpyModel>> ids = {
	    {"bkh", SpyModel::Liar}, {"bsh", SpyModel::Liar}, {"bsh1", SpyModel::Liar}, {"edge", SpyModel::Liar},
	    {"spider", SpyModel::Unconstrained}, {"spider+", SpyModel::Unconstrained}, {"mbkh", SpyModel::Unconstrained},
	    {"bkh", SpyModel::Unconstrained}, {"spider", SpyModel::Liar},
	};
	for (int i = 0; i < random_histories; ++i) {
		const auto& [id, model] = ids[static_cast<std::size_t>(i) % ids.size()];
		const int n = std::uniform_int_distribution<int>(3, model == SpyModel::Liar ? 14 : 10)(rng);
		const int k = std::uniform_int_distribution<int>(n / 2 + 1, n - 1)(rng);
		const GameParams p = GameParams::make(n, k, model, (i / static_cast<int>(ids.size())) % 2 == 1);
		const std::string where = id + " n=" + std::to_string(n) + " k=" + std::to_string(k);
		std::unique_ptr<Strategy> strategy;
		try {
			strategy = make_strategy(id, p);
		} catch (const GameError&) {
			continue;  // not applicable to these parameters
		}
		RandomAnswers adversary(rng());
		try {
			RunObserver obs;
			QuestionGraph shadow(p.n, p.model);
			if (id == "bkh")
				obs.on_answer = [&](int, const Edge& e) {
					shadow.apply(e.question, e.answer);
					bool ok = true;
					for (const auto& c : shadow.components())
						ok = ok && power_of_two(static_cast<int>(c.size()));
					t.check("bkh-power-of-two", ok, [&] { return where + history(shadow); });
				};
			int cycle_edges = 0;
			if (id == "spider" || id == "spider+" || id == "mbkh")
				obs.on_answer = [&](int, const Edge& e) {
					if (shadow.connected(e.question.asker, e.question.subject))
						++cycle_edges;
					shadow.apply(e.question, e.answer);
				};
			run_strategy(*strategy, adversary, p, obs);
			t.check("claim-validity", true, [] { return std::string(); });
			if (id == "spider" || id == "spider+" || id == "mbkh")
				t.check(id + "-forest", cycle_edges <= (id == "mbkh" ? 2 : 1), [&] { return where + history(shadow); });
		} catch (const GameError& e) {
			t.check("claim-validity", false, [&] { return where + ": " + e.what(); });
		}
	}

	for (const auto& [prop, count] : t.checked) {
		const auto f = t.first_failure.find(prop);
		r.rows.push_back({prop + " (" + std::to_string(count) + " checks)", "holds",
		                  f == t.first_failure.end() ? "holds" : "fails: " + f->second, f == t.first_failure.end()});
	}
	return r;
}

}  // namespace knights::checks
