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

#include <gtest/gtest.h>

#include "knights/formulas.hpp"
#include "knights/solver.hpp"

namespace knights {
namespace {

using namespace solver;

GameParams P(int n, int k, SpyModel m = SpyModel::Liar, bool known = false) { return GameParams::make(n, k, m, known); }

TEST(GenericSolver, SmallValues)
{
	EXPECT_EQ(solve_generic(P(5, 3, SpyModel::Liar, true), Objective::spy()), 4);
	EXPECT_EQ(solve_generic(P(4, 3, SpyModel::Unconstrained, true), Objective::spy()), 3);
	EXPECT_EQ(solve_generic(P(5, 3), Objective::knight()), formulas::knight_target(5, 3));
	EXPECT_EQ(solve_generic(P(5, 3, SpyModel::Unconstrained), Objective::all_identities()), 6);
	EXPECT_THROW(solve_generic(P(9, 5), Objective::knight()), GameError);
}

TEST(GenericSolver, BudgetIsEnforced)
{
	EXPECT_THROW(solve_generic(P(7, 4, SpyModel::Unconstrained), Objective::all_identities(), Budget{10}), GameError);
}

TEST(WorldTables, InitialSetRespectsSpyBounds)
{
	const WorldTables t(P(5, 3, SpyModel::Liar, true));
	EXPECT_EQ(t.initial().count(), 5 + 10);  // one or two spies
	const WorldTables u(P(5, 3));
	EXPECT_EQ(u.initial().count(), 1 + 5 + 10);
}

TEST(AbstractSolver, Values)
{
	EXPECT_EQ(solve_liar_abstract(P(9, 5, SpyModel::Liar, true), Objective::spy()), 7);
	EXPECT_EQ(solve_liar_abstract(P(8, 5), Objective::spy_or_all_knights()), 7);
	EXPECT_EQ(solve_liar_abstract(P(9, 5, SpyModel::Liar, true), Objective::identity_of(1)), 7);
	EXPECT_THROW(solve_liar_abstract(P(5, 3, SpyModel::Unconstrained), Objective::knight()), GameError);
}

TEST(AbstractSolver, AgreesWithGenericSolver)
{
	const std::vector<Objective> objectives = {Objective::knight(), Objective::spy_or_all_knights(),
	                                           Objective::identity_of(1), Objective::any_identity(),
	                                           Objective::all_identities()};
	for (int n = 3; n <= 6; ++n)
		for (int k = n / 2 + 1; k < n; ++k)
			for (bool known : {false, true})
				for (const auto& o : objectives) {
					const GameParams p = P(n, k, SpyModel::Liar, known);
					EXPECT_EQ(solve_liar_abstract(p, o), solve_generic(p, o)) << n << "," << k << " " << to_string(o);
				}
}

TEST(AbstractState, KeyIgnoresOrder)
{
	AbstractState a{{{2, 1}, {1, 0}, {3, 0}}, std::nullopt};
	AbstractState b{{{3, 0}, {2, 1}, {1, 0}}, std::nullopt};
	a.normalise();
	b.normalise();
	EXPECT_EQ(a.key(), b.key());
	EXPECT_EQ(a.people(), 7);
}

TEST(Majority, Values)
{
	const MajorityValue nine = majority_value(std::vector<int>(9, 1), 1);
	EXPECT_EQ(nine.questions, 2 * 4 - formulas::binary_ones(4));
	EXPECT_EQ(nine.components, 2);
	EXPECT_EQ(majority_value({3}, 1).questions, 0);
	EXPECT_EQ(majority_value({3}, 3).questions, 0);
	EXPECT_EQ(majority_value({2, 1, 1, 1}, 1).components, 2);
	EXPECT_EQ(majority_value({2, 1, 1, 1, 1, 1}, 1).components, 3);
}

TEST(Majority, ConjectureRows)
{
	const auto rows = check_conjecture(6);
	for (const auto& r : rows) {
		EXPECT_TRUE(r.pass) << "k=" << r.k << " a=" << r.a;
		EXPECT_EQ(r.expected, formulas::binary_ones(r.k - 1) + 1);
	}
	const auto find = [&](int k, int a) {
		for (const auto& r : rows)
			if (r.k == k && r.a == a)
				return r.value;
		return -1;
	};
	EXPECT_EQ(find(2, 1), 2);
	EXPECT_EQ(find(3, 1), 2);
	EXPECT_EQ(find(4, 2), 3);
}

TEST(CombinedFeasible, SevenFour)
{
	const GameParams known = P(7, 4, SpyModel::Unconstrained, true);
	const GameParams open = P(7, 4, SpyModel::Unconstrained, false);
	EXPECT_FALSE(combined_feasible(known, {{Objective::knight(), 4}, {Objective::spy(), 6}}));
	EXPECT_FALSE(combined_feasible(open, {{Objective::knight(), 4}, {Objective::spy_or_all_knights(), 7}}));
	EXPECT_TRUE(combined_feasible(known, {{Objective::knight(), 5}, {Objective::spy(), 6}}));
	EXPECT_TRUE(combined_feasible(known, {{Objective::knight(), 4}, {Objective::spy(), 7}}));
}

TEST(Classify, SmallRooms)
{
	const auto rows = classify_all_identities(13);
	bool saw_13_9 = false;
	for (const auto& r : rows) {
		EXPECT_GE(r.r, 2);
		EXPECT_LT(r.r, r.n - r.k);
		EXPECT_FALSE(r.n == 7 && r.k == 5);
		if (r.n == 11 && r.k == 7) {
			EXPECT_FALSE(r.minimal);
			EXPECT_EQ(r.value, r.n - r.q + 1);
		}
		if (r.n == 13 && r.k == 9) {
			saw_13_9 = true;
			EXPECT_TRUE(r.minimal);
			EXPECT_EQ(r.value, 11);
		}
		if (!(r.n == 13 && r.k == 9))
			EXPECT_FALSE(r.minimal) << r.n << "," << r.k;
	}
	EXPECT_TRUE(saw_13_9);
}

}  // namespace
}  // namespace knights
