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
#include "knights/game.hpp"
#include "knights/solver.hpp"

namespace knights {
namespace {

using namespace formulas;

TEST(Formulas, BinaryOnes)
{
	EXPECT_EQ(binary_ones(4), 1);
	EXPECT_EQ(binary_ones(13), 3);
	EXPECT_EQ(binary_ones(0), 0);
	for (long long m = 0; m < 300; ++m) {
		int c = 0;
		for (long long x = m; x; x /= 2)
			c += static_cast<int>(x % 2);
		EXPECT_EQ(binary_ones(m), c);
	}
}

TEST(Formulas, Decompose)
{
	for (int n = 3; n <= 40; ++n)
		for (int k = n / 2 + 1; k < n; ++k) {
			const auto d = decompose(n, k);
			const int s = n - k;
			EXPECT_EQ(n, d.q * (s + 1) + d.r);
			EXPECT_GE(d.r, 0);
			EXPECT_LE(d.r, s);
		}
}

TEST(Formulas, KnightTarget)
{
	EXPECT_EQ(knight_target(29, 16), 23);
	EXPECT_EQ(knight_target(7, 4), 4);
	EXPECT_EQ(knight_target(3, 2), 1);
}

TEST(Formulas, SpyTargets)
{
	EXPECT_EQ(liar_spy_targets(9, 5).spy, 7);
	EXPECT_EQ(liar_spy_targets(5, 3).spy, 4);
	EXPECT_EQ(liar_spy_targets(8, 5).all, 7);
	EXPECT_EQ(unconstrained_spy_targets(7, 4).all, 7);
	EXPECT_EQ(unconstrained_spy_targets(7, 4).spy, 6);
	EXPECT_EQ(unconstrained_spy_targets(4, 3).all, 4);
	EXPECT_EQ(unconstrained_spy_targets(4, 3).spy, 3);
	EXPECT_EQ(unconstrained_spy_targets(3, 2).all, 3);
	EXPECT_EQ(unconstrained_spy_targets(3, 2).spy, 2);
}

TEST(Formulas, IdentityTargets)
{
	EXPECT_EQ(identity_targets(5, 3).person, 4);
	EXPECT_EQ(identity_targets(9, 5).person_spy_liar, 7);
	EXPECT_EQ(identity_targets(9, 5).person_spy_unconstrained, 8);
	EXPECT_TRUE(nominated_person_exception(9, 5));
	EXPECT_TRUE(nominated_person_exception(5, 3));
	EXPECT_TRUE(nominated_person_exception(3, 2));
	EXPECT_FALSE(nominated_person_exception(9, 6));
	EXPECT_FALSE(nominated_person_exception(7, 4));
}

TEST(Formulas, AllIdentities)
{
	const auto a = all_identities_liar(13, 9);
	EXPECT_TRUE(a.exact());
	EXPECT_EQ(a.lo, 11);
	EXPECT_TRUE(a.exceptional);
	EXPECT_EQ(all_identities_liar(7, 4).lo, 6);
	EXPECT_TRUE(all_identities_liar(7, 4).exact());
	EXPECT_EQ(all_identities_liar(12, 9).lo, 10);
	EXPECT_EQ(all_identities_liar(11, 7).lo, 10);  // r = 2, not listed: n - q + 1
	EXPECT_EQ(all_identities_liar(11, 8).lo, 9);   // r = n - k
	EXPECT_EQ(all_identities_liar(3, 2).lo, 2);    // one spy: r = 1 = n - k
	const auto open = all_identities_liar(31, 18);
	EXPECT_FALSE(open.exact());
	EXPECT_EQ(open.lo, 29);
	EXPECT_EQ(open.hi, 30);
	EXPECT_EQ(all_identities_unconstrained(7, 4), 9);
	EXPECT_EQ(all_identities_unconstrained(3, 2), 3);
	EXPECT_EQ(all_identities_unconstrained(5, 3), 6);
}

TEST(Formulas, ExceptionListShape)
{
	for (const auto& [n, k] : all_identities_exceptions()) {
		const auto d = decompose(n, k);
		EXPECT_LE(n, kExceptionTableLimit);
		EXPECT_GE(d.r, 2);
		EXPECT_LT(d.r, n - k);
	}
}

// Formulas against exact search on the smallest rooms.
TEST(Formulas, MatchSolversOnSmallRooms)
{
	for (int n = 3; n <= 6; ++n)
		for (int k = n / 2 + 1; k < n; ++k) {
			const auto L = GameParams::make(n, k, SpyModel::Liar, false);
			const auto Lk = GameParams::make(n, k, SpyModel::Liar, true);
			const auto S = GameParams::make(n, k, SpyModel::Unconstrained, false);
			const auto Sk = GameParams::make(n, k, SpyModel::Unconstrained, true);
			EXPECT_EQ(solver::solve_liar_abstract(L, Objective::knight()), knight_target(n, k));
			EXPECT_EQ(solver::solve_liar_abstract(L, Objective::spy_or_all_knights()), liar_spy_targets(n, k).all);
			EXPECT_EQ(solver::solve_liar_abstract(Lk, Objective::spy()), liar_spy_targets(n, k).spy);
			EXPECT_EQ(solver::solve_generic(S, Objective::spy_or_all_knights()), unconstrained_spy_targets(n, k).all);
			EXPECT_EQ(solver::solve_generic(Sk, Objective::spy()), unconstrained_spy_targets(n, k).spy);
			EXPECT_EQ(solver::solve_generic(S, Objective::all_identities()), all_identities_unconstrained(n, k));
			EXPECT_EQ(solver::solve_liar_abstract(L, Objective::all_identities()), all_identities_liar(n, k).lo);
		}
}

}  // namespace
}  // namespace knights
