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

// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
// Failing cells are listed underneath their criterion.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "knights/checks.hpp"

namespace {

using namespace knights::checks;

struct Criterion {
	int id;
	const char* title;
	std::function<std::vector<Report>()> run;
};

}  // namespace

int main(int argc, char** argv)
{
	// `--only 4` runs one criterion
	int only = 0;
	for (int i = 1; i + 1 < argc; ++i)
		if (std::string(argv[i]) == "--only")
			only = std::stoi(argv[i + 1]);

	const std::vector<Criterion> criteria = {
	    {1, "liar formulas = abstract solver, n <= 10", [] { return std::vector{theorem1(10)}; }},
	    {2, "unconstrained values from the generic solver, n <= 7", [] { return std::vector{theorem2(7)}; }},
	    {3, "(7,4) combined deadlines infeasible, relaxations feasible", [] { return std::vector{lemma71()}; }},
	    {4, "strategy worst cases meet their deadlines",
	     [] { return std::vector{spy_hunt(12), edge_case(11), spider(8), modified_hunt(8)}; }},
	    {5, "lower-bound Spy Masters hold the interrogator to the theorem values",
	     [] { return std::vector{liar_lower_bound(9), majority_lower_bound(9), unconstrained_lower_bound(7)}; }},
	    {6, "majority game: odd rooms k <= 10, conjecture for k <= 8", [] { return std::vector{majority(10, 8)}; }},
	    {7, "all-identities exceptions: {(13,9)} for n <= 13, plus (16,11) for n <= 16",
	     [] { return std::vector{atable(13), atable(16)}; }},
	    {8, "abstract solver = generic solver, liar spies, n <= 7", [] { return std::vector{cross_solver(7)}; }},
	    {9, "invariants: exhaustive n <= 5 and 10^4 random histories", [] { return std::vector{properties(5, 10000)}; }},
	};

	bool all = true;
	for (const auto& c : criteria) {
		if (only && c.id != only)
			continue;
		const auto reports = c.run();
		bool pass = true;
		std::size_t cells = 0;
		double seconds = 0;
		for (const auto& r : reports) {
			pass = pass && r.pass();
			cells += r.rows.size();
			seconds += r.seconds;
		}
		all = all && pass;
		std::printf("criterion %d: %s  %s  [%zu cells, %.1fs]\n", c.id, pass ? "PASS" : "FAIL", c.title, cells, seconds);
		for (const auto& r : reports)
			for (const auto& row : r.rows)
				if (!row.pass)
					std::printf("    %s | %s: expected %s, got %s\n", r.name.c_str(), row.cell.c_str(), row.expected.c_str(),
					            row.computed.c_str());
		std::fflush(stdout);
	}
	return all ? 0 : 1;
}
