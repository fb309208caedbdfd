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

#include <sstream>

#include "knights/adversary.hpp"
#include "knights/formulas.hpp"
#include "knights/harness.hpp"
#include "knights/strategies.hpp"

namespace knights {
namespace {

GameParams P(int n, int k, SpyModel m = SpyModel::Liar, bool known = false) { return GameParams::make(n, k, m, known); }

TEST(GroundTruth, Rule)
{
	const SpyMask three = bit(3);
	EXPECT_EQ(GroundTruth::rule(three, {1, 2}, SpyModel::Liar), Answer::Support);
	EXPECT_EQ(GroundTruth::rule(three, {1, 3}, SpyModel::Liar), Answer::Accuse);
	EXPECT_EQ(GroundTruth::rule(three, {3, 1}, SpyModel::Liar), Answer::Accuse);
	EXPECT_EQ(GroundTruth::rule(three | bit(2), {3, 2}, SpyModel::Liar), Answer::Support);
	EXPECT_EQ(GroundTruth::rule(three, {3, 1}, SpyModel::Unconstrained, SpyPolicy::Support), Answer::Support);
	EXPECT_EQ(GroundTruth::rule(three, {3, 1}, SpyModel::Unconstrained, SpyPolicy::Truth), Answer::Support);
	EXPECT_EQ(GroundTruth::rule(three, {3, 2}, SpyModel::Unconstrained, SpyPolicy::Accuse), Answer::Accuse);
}

TEST(AssignmentCount, MatchesEnumeration)
{
	for (SpyModel m : {SpyModel::Liar, SpyModel::Unconstrained}) {
		const GameParams p = P(6, 4, m, true);
		QuestionGraph g(6, m);
		g.apply({1, 2}, Answer::Support);
		g.apply({3, 4}, Answer::Accuse);
		EXPECT_EQ(assignment_count(g, p), static_cast<long double>(consistent_assignments(g, p).size()));
	}
}

TEST(FallbackAnswer, PrefersTheLargerSideAndIsAlwaysConsistent)
{
	const GameParams p = P(3, 2, SpyModel::Liar, true);
	QuestionGraph g(3, SpyModel::Liar);
	// one spy among three: asking 1 about 2, Support keeps {3} only, Accuse keeps {1},{2}
	EXPECT_EQ(fallback_answer(g, {1, 2}, p), Answer::Accuse);
	g.apply({1, 2}, Answer::Support);
	g.apply({2, 3}, Answer::Accuse);
	// now Person 3 is the spy; 1 must accuse 3
	EXPECT_EQ(consistent_or_fallback(g, {1, 3}, p, Answer::Support), Answer::Accuse);
}

TEST(LiarLowerBound, HoldsInterrogatorToTargets)
{
	LiarLowerBound lb;
	const GameParams all = P(8, 5);
	EXPECT_EQ(interrogator_value(all, Objective::spy_or_all_knights(), lb, 6), 7);
	const GameParams known = P(5, 3, SpyModel::Liar, true);
	EXPECT_GT(interrogator_value(known, Objective::spy(), lb, 3), 3);
}

TEST(LiarLowerBound, EarlyQuestionsAreSupported)
{
	const GameParams p = P(8, 5);  // q = 2
	LiarLowerBound lb;
	QuestionGraph g(8, SpyModel::Liar);
	const int q = formulas::decompose(8, 5).q;
	for (Person a = 1; a < 8 - q; ++a) {
		const Answer ans = lb.answer(g, {a, a + 1}, p);
		EXPECT_EQ(ans, Answer::Support);
		g.apply({a, a + 1}, ans);
	}
	EXPECT_GE(g.component_count(), q + 1);
}

TEST(MajorityLowerBound, HidesPersonOne)
{
	MajorityLowerBound lb;
	const GameParams p = P(5, 3);
	EXPECT_GT(interrogator_value(p, Objective::identity_of(1), lb, formulas::knight_target(5, 3)), 3);
}

TEST(UnconstrainedLowerBound, AlwaysSupports)
{
	UnconstrainedLowerBound lb;
	const GameParams known = P(5, 3, SpyModel::Unconstrained, true);
	EXPECT_GT(interrogator_value(known, Objective::spy(), lb, 3), 3);
	const GameParams open = P(4, 3, SpyModel::Unconstrained, false);
	EXPECT_GT(interrogator_value(open, Objective::spy_or_all_knights(), lb, 3), 3);

	// all-Support histories keep the honest room possible
	QuestionGraph g(4, SpyModel::Unconstrained);
	for (auto q : {Question{1, 2}, {2, 3}, {4, 1}}) {
		g.apply(q, lb.answer(g, q, open));
		EXPECT_TRUE(consistent_assignments(g, open).contains(0));
	}
}

TEST(Conjecture84, Rules)
{
	const GameParams p = P(7, 4, SpyModel::Unconstrained, true);
	Conjecture84 c;
	QuestionGraph g(7, SpyModel::Unconstrained);
	EXPECT_EQ(c.answer(g, {1, 2}, p), Answer::Support);
	g.apply({1, 2}, Answer::Support);
	g.apply({3, 4}, Answer::Support);
	// 2+2 merge into a source vertex
	EXPECT_EQ(c.answer(g, {2, 3}, p), Answer::Accuse);
	EXPECT_EQ(c.answer(g, {1, 4}, p), Answer::Support);
	// strategies that settle both objectives miss one of the two deadlines
	for (const char* id : {"mbkh", "spider"}) {
		auto s = make_strategy(id, p);
		Conjecture84 fresh;
		const Transcript t = run_strategy(*s, fresh, p);
		const int knight = t.settled_at(Objective::knight()).value_or(99);
		const int spy = t.settled_at(Objective::spy()).value_or(99);
		EXPECT_TRUE(knight > 4 || spy > 6) << id << " knight " << knight << " spy " << spy;
	}
	EXPECT_THROW(c.answer(QuestionGraph(7, SpyModel::Liar), {1, 2}, P(7, 4, SpyModel::Liar, true)), GameError);
}

TEST(HumanPrompt, ExplainsRejectedAnswers)
{
	const GameParams p = P(3, 2);
	std::istringstream in("maybe\nyes\n");
	std::ostringstream out;
	HumanPrompt h(in, out);
	EXPECT_EQ(h.answer(QuestionGraph(3, SpyModel::Liar), {1, 2}, p), Answer::Accuse);
	EXPECT_NE(out.str().find("Person 1"), std::string::npos);

	QuestionGraph g(3, SpyModel::Liar);
	g.apply({1, 2}, Answer::Support);
	std::istringstream contradict("a\ns\n");
	std::ostringstream out2;
	HumanPrompt h2(contradict, out2);
	EXPECT_EQ(h2.answer(g, {2, 1}, p), Answer::Support);

	std::istringstream eof("");
	HumanPrompt h3(eof, out2);
	EXPECT_THROW(h3.answer(g, {1, 3}, p), GameError);
}

TEST(WorstCase, ReportsTheLargestClaimIndex)
{
	const GameParams p = P(5, 3);
	const WorstCase w = worst_case([&] { return std::make_unique<BinaryKnightHunt>(p); }, p);
	EXPECT_EQ(w.max_questions, formulas::knight_target(5, 3));
	ASSERT_FALSE(w.witness.empty());
	// replaying the witness reaches the same index
	Scripted replay([&] {
		std::vector<Answer> a;
		for (const auto& e : w.witness)
			a.push_back(e.answer);
		return a;
	}());
	BinaryKnightHunt s(p);
	const Transcript t = run_strategy(s, replay, p);
	EXPECT_EQ(*t.settled_at(Objective::knight()), w.max_questions);
}

TEST(MakeAdversary, ParsesIds)
{
	std::istringstream in;
	std::ostringstream out;
	const GameParams p = P(7, 4);
	for (const char* id : {"truth:{}", "truth:{1,3}", "truth:{2}:support", "liar-lb", "majority-lb", "optimal",
	                       "script:SSA", "script:figure2", "human"})
		EXPECT_NO_THROW(make_adversary(id, p, in, out)) << id;
	for (const char* id : {"truth:{9}", "truth:{1,2,3,4}", "script:SXA", "bogus"})
		EXPECT_THROW(make_adversary(id, p, in, out), GameError) << id;
}

}  // namespace
}  // namespace knights
