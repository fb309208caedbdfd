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

#ifndef KNIGHTS_SOLVER_HPP
#define KNIGHTS_SOLVER_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "knights/game.hpp"

namespace knights::solver {

/// Returned when no sequence of questions can force the objective.
inline constexpr int kUnreachable = 1 << 20;

struct Budget {
	std::size_t max_states = 40'000'000;
};

// ---------------------------------------------------------------------------
// Generic solver over explicit consistent sets (n <= 8).

inline constexpr int kMaxGenericPeople = 8;

/// Consistent set over at most 8 people: bit m set iff spy mask m is consistent.
struct WorldSet {
	std::array<std::uint64_t, 4> words{};

	bool test(unsigned m) const { return (words[m >> 6] >> (m & 63)) & 1U; }
	void set(unsigned m) { words[m >> 6] |= std::uint64_t{1} << (m & 63); }
	bool empty() const { return (words[0] | words[1] | words[2] | words[3]) == 0; }
	int count() const;
	WorldSet operator&(const WorldSet& o) const;
	bool subset_of(const WorldSet& o) const;

	friend bool operator==(const WorldSet&, const WorldSet&) = default;
};

struct WorldSetHash {
	std::size_t operator()(const WorldSet& w) const;
};

/// Precomputed masks for one game: which worlds survive each answer.
class WorldTables {
public:
	explicit WorldTables(const GameParams& params);

	const GameParams& params() const { return params_; }
	const WorldSet& initial() const { return initial_; }
	const WorldSet& survivors(Question q, Answer a) const;
	WorldSet of(const QuestionGraph& g) const;
	bool achieved(const WorldSet& s, const Objective& o) const;

private:
	GameParams params_;
	WorldSet initial_;
	std::vector<WorldSet> survive_;  // [(asker-1)*n + subject-1][answer]
	std::vector<WorldSet> contains_;  // worlds in which person p is a spy
};

/// Minimax number of questions to force the objective. BudgetExceeded past the limit.
int solve_generic(const GameParams& params, const Objective& objective, Budget budget = {});

/// True iff one questioning strategy meets every (objective, deadline) pair at once.
bool combined_feasible(const GameParams& params, const std::vector<std::pair<Objective, int>>& requirements,
                       Budget budget = {});

// ---------------------------------------------------------------------------
// Liar spies: abstraction to component signatures.

/// Components as (y, z) class sizes with y >= z, sorted; optionally one distinguished
/// component given as (size of the tracked person's class, size of the other class).
struct AbstractState {
	std::vector<std::pair<int, int>> sigs;
	std::optional<std::pair<int, int>> tracked;

	void normalise();
	std::string key() const;
	int people() const;
};

/// Abstract state of a liar question graph; `tracked` names the person to follow.
AbstractState abstract_of(const QuestionGraph& g, Person tracked = 0);

/// Feasibility facts about an abstract state under the spy-count bounds.
struct AbstractFacts {
	bool consistent = false;
	bool knight_known = false;
	bool spy_known = false;
	bool all_known = false;
	bool all_knights = false;
	bool tracked_known = false;
	long long assignments = 0;
};

AbstractFacts abstract_facts(const AbstractState& s, const GameParams& params);
bool abstract_achieved(const AbstractState& s, const GameParams& params, const Objective& objective);

/// The two states a question joining components i and j (indices into sigs; -1 for
/// the tracked component) can lead to. Infeasible outcomes are omitted.
std::vector<AbstractState> merge_outcomes(const AbstractState& s, int i, int j, const GameParams& params);

class LiarAbstractSolver {
public:
	LiarAbstractSolver(GameParams params, Objective objective, Budget budget = {});

	/// Exact minimax value (kUnreachable if the objective cannot be forced).
	int value(const AbstractState& s);
	int value(const QuestionGraph& g);
	int initial_value();

	std::size_t states() const { return memo_.size(); }
	const GameParams& params() const { return params_; }
	const Objective& objective() const { return objective_; }
	Person tracked_person() const;

private:
	GameParams params_;
	Objective objective_;
	Budget budget_;
	std::unordered_map<std::string, int> memo_;
};

int solve_liar_abstract(const GameParams& params, const Objective& objective, Budget budget = {});

/// Per-thread solver shared by everything that replays the same game, so its memo
/// survives across calls.
LiarAbstractSolver& shared_solver(const GameParams& params, const Objective& objective);

// ---------------------------------------------------------------------------
// Majority game.

struct MajorityValue {
	int questions = 0;  // optimal number of questions to find a knight
	int components = 0;  // V_e(M): components left at the end of optimal play
};

/// From weights M with knight excess at least e (sum M == e mod 2). Weights >= 0.
MajorityValue majority_value(std::vector<int> weights, int excess);

struct ConjectureRow {
	int k = 0;
	int a = 0;
	int value = 0;     // V_1({2^a, 1^(2k-2a-1)})
	int expected = 0;  // B(k-1) + 1
	bool pass = false;
	bool lower_bound = false;  // value >= expected
};

std::vector<ConjectureRow> check_conjecture(int k_max);

// ---------------------------------------------------------------------------
// Finding all identities with liar spies.

struct ClassifyRow {
	int n = 0;
	int k = 0;
	int q = 0;
	int r = 0;
	int value = 0;
	bool minimal = false;  // value == n - q
};

/// Every (n, k) with n <= n_max and 2 <= r < n - k, solved exactly.
std::vector<ClassifyRow> classify_all_identities(int n_max, Budget budget = {});

}  // namespace knights::solver

#endif  // KNIGHTS_SOLVER_HPP
