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

#ifndef KNIGHTS_CHECKS_HPP
#define KNIGHTS_CHECKS_HPP

#include <string>
#include <vector>

#include "knights/solver.hpp"

// Verification sweeps shared by `knights verify` and the acceptance runner.
namespace knights::checks {

struct Row {
	std::string cell;      // e.g. "n=9 k=5 liar spy_known find-spy"
	std::string expected;
	std::string computed;
	bool pass = false;
};

struct Report {
	std::string name;
	std::vector<Row> rows;
	double seconds = 0;

	bool pass() const;
	int failures() const;
};

/// Liar formulas against the abstract solver, 3 <= n <= n_max.
Report theorem1(int n_max, solver::Budget budget = {});
/// Unconstrained spy, identity and knight values from the generic solver.
Report theorem2(int n_max, solver::Budget budget = {});
/// The (7,4) combined-deadline infeasibility and its relaxations.
Report lemma71(solver::Budget budget = {});

/// Worst case of each strategy over every consistent answer sequence.
Report spy_hunt(int n_max);
Report edge_case(int n_max);
Report spider(int n_max);
Report modified_hunt(int n_max);

/// Exhaustive interrogator against the lower-bound Spy Masters.
Report liar_lower_bound(int n_max, solver::Budget budget = {});
Report majority_lower_bound(int n_max, solver::Budget budget = {});
Report unconstrained_lower_bound(int n_max, solver::Budget budget = {});

/// Majority game: odd balls and the conjectured family.
Report majority(int k_odd_max, int k_max);
/// Pairs with 2 <= r < n - k where finding all identities takes only n - q.
Report atable(int n_max, solver::Budget budget = {});
/// Abstract liar solver against the generic solver, n <= n_max.
Report cross_solver(int n_max, solver::Budget budget = {});
/// Invariant checks: exhaustive for n <= n_exhaustive, plus random histories.
Report properties(int n_exhaustive, int random_histories);

/// Machine-readable: one JSON object per row, then a summary record.
std::string to_json_lines(const Report& r);

}  // namespace knights::checks

#endif  // KNIGHTS_CHECKS_HPP
