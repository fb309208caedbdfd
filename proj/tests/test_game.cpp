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

#include <algorithm>
#include <bit>
#include <random>

#include "knights/game.hpp"

namespace knights {
namespace {

SpyMask mask(std::initializer_list<Person> people)
{
	SpyMask m = 0;
	for (Person p : people)
		m |= bit(p);
	return m;
}

GameParams liar(int n, int k, bool known = false) { return GameParams::make(n, k, SpyModel::Liar, known); }

// Oracle: every subset of the right size that agrees with each answer.
std::vector<SpyMask> brute(const QuestionGraph& g, const GameParams& p)
{
	std::vector<SpyMask> out;
	for (SpyMask m = 0; m < (SpyMask{1} << p.n); ++m) {
		const int c = std::popcount(m);
		if (c < p.min_spies() || c > p.spies())
			continue;
		if (consistent_with(g.edges(), m, p.model))
			out.push_back(m);
	}
	return out;
}

TEST(GameParams, RejectsNonMajority)
{
	EXPECT_THROW(GameParams::make(4, 2, SpyModel::Liar, false), GameError);
	EXPECT_THROW(GameParams::make(4, 4, SpyModel::Liar, false), GameError);
	EXPECT_NO_THROW(GameParams::make(4, 3, SpyModel::Liar, false));
	EXPECT_EQ(liar(9, 5).spies(), 4);
	EXPECT_EQ(liar(9, 5, true).min_spies(), 1);
}

TEST(QuestionGraph, SupportThenAccuse)
{
	QuestionGraph g(3, SpyModel::Liar);
	g.apply({1, 2}, Answer::Support);
	EXPECT_EQ(g.component_count(), 2);
	EXPECT_EQ(g.component_of(1), (std::vector<Person>{1, 2}));
	EXPECT_EQ(g.signature(1), (ComponentSig{2, 0, false}));
	g.apply({1, 3}, Answer::Accuse);
	EXPECT_EQ(g.component_count(), 1);
	EXPECT_EQ(g.signature(3), (ComponentSig{2, 1, true}));
	EXPECT_TRUE(g.in_larger_class(1));
	EXPECT_FALSE(g.in_larger_class(3));
}

TEST(QuestionGraph, ContradictionLeavesGraphUnchanged)
{
	QuestionGraph g(3, SpyModel::Liar);
	g.apply({1, 2}, Answer::Support);
	EXPECT_FALSE(g.admits({2, 1}, Answer::Accuse));
	try {
		g.apply({2, 1}, Answer::Accuse);
		FAIL() << "expected a contradiction";
	} catch (const GameError& e) {
		EXPECT_EQ(e.code(), GameError::Code::ContradictoryAnswer);
	}
	EXPECT_EQ(g.question_count(), 1);
	// unconstrained spies may contradict themselves
	QuestionGraph u(3, SpyModel::Unconstrained);
	u.apply({1, 2}, Answer::Support);
	EXPECT_NO_THROW(u.apply({2, 1}, Answer::Accuse));
}

TEST(QuestionGraph, RejectsSelfAndRepeatedQuestions)
{
	QuestionGraph g(3, SpyModel::Liar);
	try {
		g.apply({2, 2}, Answer::Support);
		FAIL();
	} catch (const GameError& e) {
		EXPECT_EQ(e.code(), GameError::Code::SelfQuestion);
	}
	g.apply({1, 2}, Answer::Support);
	try {
		g.apply({1, 2}, Answer::Support);
		FAIL();
	} catch (const GameError& e) {
		EXPECT_EQ(e.code(), GameError::Code::DuplicateQuestion);
	}
}

TEST(MergeWeight, Examples)
{
	EXPECT_EQ(merge_weight(3, 2, Answer::Support), 5);
	EXPECT_EQ(merge_weight(3, 2, Answer::Accuse), 1);
	EXPECT_EQ(merge_weight(1, 1, Answer::Accuse), 0);
}

TEST(ConsistentSet, EmptyRoomOfThree)
{
	QuestionGraph g(3, SpyModel::Liar);
	EXPECT_EQ(consistent_assignments(g, liar(3, 2)).members, (std::vector<SpyMask>{0, mask({1}), mask({2}), mask({3})}));
	EXPECT_EQ(consistent_assignments(g, liar(3, 2, true)).members,
	          (std::vector<SpyMask>{mask({1}), mask({2}), mask({3})}));
	g.apply({1, 2}, Answer::Support);
	g.apply({1, 3}, Answer::Accuse);
	EXPECT_EQ(consistent_assignments(g, liar(3, 2)).members, (std::vector<SpyMask>{mask({3})}));
}

TEST(ObjectiveStatus, Examples)
{
	const ConsistentSet one{3, {mask({3})}};
	EXPECT_EQ(objective_status(one, Objective::spy()), Claim::spy(3));
	const ConsistentSet two{3, {0, mask({1})}};
	EXPECT_FALSE(objective_status(two, Objective::spy_or_all_knights()));
	const ConsistentSet three{3, {mask({1}), mask({1, 2})}};
	EXPECT_EQ(objective_status(three, Objective::knight()), Claim::knight(3));
	EXPECT_THROW(objective_status(ConsistentSet{3, {}}, Objective::knight()), GameError);
}

TEST(UnambiguousComponents, WeightCriterion)
{
	// (5,3): a weight-3 component and two singletons
	QuestionGraph g(5, SpyModel::Liar);
	g.apply({1, 2}, Answer::Support);
	g.apply({1, 3}, Answer::Support);
	EXPECT_EQ(unambiguous_components(g, liar(5, 3)), (std::vector<std::vector<Person>>{{1, 2, 3}}));
	const Knowledge k = knowledge(g, liar(5, 3));
	EXPECT_EQ(k.of(1), Identity::Knight);
	EXPECT_FALSE(k.of(4));

	QuestionGraph h(3, SpyModel::Liar);
	h.apply({1, 2}, Answer::Support);
	h.apply({2, 3}, Answer::Support);
	EXPECT_EQ(unambiguous_components(h, liar(3, 2)).size(), 1u);

	EXPECT_TRUE(unambiguous_components(QuestionGraph(9, SpyModel::Liar), liar(9, 5)).empty());
	EXPECT_THROW(unambiguous_components(QuestionGraph(3, SpyModel::Unconstrained),
	                                    GameParams::make(3, 2, SpyModel::Unconstrained, false)),
	             GameError);
}

// Random histories: the enumerator and the exact knowledge agree with brute force.
TEST(Knowledge, AgreesWithBruteForceOnRandomHistories)
{
	std::mt19937 rng(7);
	for (int trial = 0; trial < 400; ++trial) {
		const int n = 3 + static_cast<int>(rng() % 6);
		const int k = n / 2 + 1 + static_cast<int>(rng() % ((n - 1) - (n / 2 + 1) + 1));
		const SpyModel model = rng() % 2 ? SpyModel::Liar : SpyModel::Unconstrained;
		const GameParams p = GameParams::make(n, k, model, rng() % 2);
		// answers from a hidden spy set keep the history consistent
		SpyMask spies = 0;
		while (std::popcount(spies) < p.min_spies() || spies == 0)
			spies = rng() & ((SpyMask{1} << n) - 1);
		while (std::popcount(spies) > p.spies())
			spies &= spies - 1;
		QuestionGraph g(n, model);
		const int questions = static_cast<int>(rng() % (n + 2));
		for (int i = 0; i < questions; ++i) {
			const Person a = 1 + static_cast<int>(rng() % n), b = 1 + static_cast<int>(rng() % n);
			if (a == b || g.asked({a, b}))
				continue;
			Answer ans;
			if (!(spies & bit(a)))
				ans = (spies & bit(b)) ? Answer::Accuse : Answer::Support;
			else if (model == SpyModel::Liar)
				ans = (spies & bit(b)) ? Answer::Support : Answer::Accuse;
			else
				ans = rng() % 2 ? Answer::Support : Answer::Accuse;
			g.apply({a, b}, ans);
		}
		const auto oracle = brute(g, p);
		const ConsistentSet s = consistent_assignments(g, p);
		ASSERT_EQ(s.members, oracle);
		ASSERT_TRUE(s.contains(spies));
		const Knowledge known = knowledge(g, p);
		for (Person q = 1; q <= n; ++q) {
			const bool always_spy = std::all_of(oracle.begin(), oracle.end(), [&](SpyMask m) { return m & bit(q); });
			const bool never_spy = std::none_of(oracle.begin(), oracle.end(), [&](SpyMask m) { return m & bit(q); });
			std::optional<Identity> expect;
			if (always_spy)
				expect = Identity::Spy;
			else if (never_spy)
				expect = Identity::Knight;
			ASSERT_EQ(known.of(q), expect) << "person " << q;
		}
		ASSERT_EQ(known.all_knights, oracle.size() == 1 && oracle[0] == 0);
		// components never increase and each question joins at most two
		ASSERT_GE(g.component_count(), n - g.question_count());
	}
}

}  // namespace
}  // namespace knights
