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

#include <iostream>

#include "knights/adversary.hpp"
#include "knights/formulas.hpp"
#include "knights/harness.hpp"
#include "knights/strategies.hpp"

namespace knights {
namespace {

GameParams P(int n, int k, SpyModel m = SpyModel::Liar, bool known = false) { return GameParams::make(n, k, m, known); }

std::vector<Answer> script(const std::string& s)
{
	std::vector<Answer> out;
	for (char c : s)
		out.push_back(c == 'A' ? Answer::Accuse : Answer::Support);
	return out;
}

// Index of the first claim of the given kind, or -1.
int first(const Transcript& t, Claim::Kind kind)
{
	for (const auto& c : t.claims)
		if (c.claim.kind == kind)
			return c.index;
	return -1;
}

TEST(BinaryKnightHunt, AllSupportTraces)
{
	for (int size : {3, 5, 7}) {
		const GameParams p = P(size, size / 2 + 1);
		BinaryKnightHunt s(p);
		GroundTruth everyone_honest(0);
		const Transcript t = run_strategy(s, everyone_honest, p);
		EXPECT_EQ(static_cast<int>(t.edges.size()), size - formulas::binary_ones(size)) << size;
		ASSERT_TRUE(t.settled_at(Objective::knight()));
	}
	// size 3: the knight is the sink of the pair
	const GameParams p = P(3, 2);
	BinaryKnightHunt s(p);
	GroundTruth honest(0);
	const Transcript t = run_strategy(s, honest, p);
	ASSERT_EQ(t.edges.size(), 1u);
	const Claim c = t.claims.front().claim;
	EXPECT_EQ(c.kind, Claim::Kind::KnightIs);
	EXPECT_TRUE(c.person == t.edges[0].question.asker || c.person == t.edges[0].question.subject);
}

TEST(BinaryKnightHunt, EarlyAccusationAndWorstCase)
{
	const GameParams p = P(7, 4);
	BinaryKnightHunt s(p);
	Scripted first_accuses(script("ASSSSSS"));
	const Transcript t = run_strategy(s, first_accuses, p);
	EXPECT_LE(*t.settled_at(Objective::knight()), 4);

	const WorstCase w = worst_case([&] { return std::make_unique<BinaryKnightHunt>(p); }, p);
	EXPECT_EQ(w.max_questions, 7 - formulas::binary_ones(7));
}

TEST(BinaryKnightHunt, NeedsAMajorityOfTheGroup)
{
	EXPECT_THROW(BinaryKnightHunt(P(7, 4), {1, 2, 3, 4}), GameError);
	EXPECT_NO_THROW(BinaryKnightHunt(P(7, 4), {1, 2, 3, 4}, true));
}

// Components C_1 = {1}, C_2 = {2,3}, C_3 = {4..7}, C'_2 = {8,9}, C'_3 = {10..13}.
struct SwitchSetup {
	GameParams params = P(13, 7);
	QuestionGraph g{13, SpyModel::Liar};
	std::vector<Person> chain{1, 2, 4};
	std::vector<Person> primed{0, 8, 10};

	// scripts are indexed from the first question of the game, preset ones included
	std::vector<Answer> after_setup(const std::string& s) const
	{
		auto a = script(std::string(g.edges().size(), 'S') + s);
		return a;
	}

	SwitchSetup()
	{
		for (auto [a, b] : {std::pair{3, 2}, {5, 4}, {6, 4}, {7, 4}, {9, 8}, {11, 10}, {12, 10}, {13, 10}})
			g.apply({a, b}, Answer::Support);
	}
};

TEST(SwitchingKnightHunt, SingleComponentTerminatesAtOnce)
{
	const GameParams p = P(3, 2);
	QuestionGraph g(3, SpyModel::Liar);
	g.apply({2, 1}, Answer::Support);
	g.apply({3, 1}, Answer::Support);
	SwitchingKnightHunt s(p, g, {1}, {0});
	const Replay r = s.replay(g);
	EXPECT_FALSE(r.question);
	ASSERT_FALSE(r.claims.empty());
	EXPECT_EQ(r.claims.front().claim, Claim::knight(1));
	EXPECT_EQ(r.claims.front().index, 2);
}

TEST(SwitchingKnightHunt, AllSupport)
{
	SwitchSetup x;
	SwitchingKnightHunt s(x.params, x.g, x.chain, x.primed);
	Scripted yes(x.after_setup("SS"));
	const Transcript t = run_strategy(s, yes, x.params);
	ASSERT_EQ(t.edges.size() - x.g.edges().size(), 2u);
	EXPECT_EQ(t.edges.back().question, (Question{4, 2}));
	QuestionGraph end(13, SpyModel::Liar);
	for (const auto& e : t.edges)
		end.apply(e.question, e.answer);
	EXPECT_EQ(knowledge(end, x.params).of(4), Identity::Knight);
}

TEST(SwitchingKnightHunt, SwitchesSidesAfterAnAccusation)
{
	SwitchSetup x;
	SwitchingKnightHunt s(x.params, x.g, x.chain, x.primed);
	Scripted replies(x.after_setup("AS"));
	const Transcript t = run_strategy(s, replies, x.params);
	const std::size_t base = x.g.edges().size();
	ASSERT_EQ(t.edges.size(), base + 2);
	EXPECT_EQ(t.edges[base].question, (Question{2, 1}));
	EXPECT_EQ(t.edges[base + 1].question, (Question{10, 8}));
	// p_3' supported p_2', so both are knights
	QuestionGraph end(13, SpyModel::Liar);
	for (const auto& e : t.edges)
		end.apply(e.question, e.answer);
	const Knowledge k = knowledge(end, x.params);
	EXPECT_EQ(k.of(10), Identity::Knight);
	EXPECT_EQ(k.of(8), Identity::Knight);
}

TEST(SwitchingKnightHunt, RejectsBadWeights)
{
	SwitchSetup x;
	EXPECT_THROW(SwitchingKnightHunt(x.params, x.g, {1, 2, 8}, {0, 4, 10}), GameError);
	EXPECT_THROW(SwitchingKnightHunt(x.params, x.g, {1, 4, 2}, {0, 10, 8}), GameError);
}

TEST(BinarySpyHunt, TwentyNineRoomScript)
{
	const GameParams p = P(29, 16, SpyModel::Liar, true);
	BinarySpyHunt s(p, true, true);
	auto replies = make_adversary("script:figure3", p, std::cin, std::cout);
	const Transcript t = run_strategy(s, *replies, p);
	EXPECT_EQ(*t.settled_at(Objective::knight()), 23);
	EXPECT_EQ(*t.settled_at(Objective::spy()), 27);
	EXPECT_EQ(*t.settled_at(Objective::all_identities()), 28);
	EXPECT_EQ(t.edges.size(), 28u);
}

TEST(BinarySpyHunt, AllKnightsVerdictInRoomOfEight)
{
	const GameParams p = P(8, 5);
	BinarySpyHunt s(p);
	GroundTruth honest(0);
	const Transcript t = run_strategy(s, honest, p);
	EXPECT_LE(*t.settled_at(Objective::spy_or_all_knights()), 7);
}

TEST(BinarySpyHunt, WorstCaseMeetsTargets)
{
	for (bool known : {false, true})
		for (int n = 4; n <= 9; ++n)
			for (int k = n / 2 + 1; k < n; ++k) {
				if (n < 2 * (n - k + 1))
					continue;
				const GameParams p = P(n, k, SpyModel::Liar, known);
				const auto t = formulas::liar_spy_targets(n, k);
				const WorstCase w = worst_case([&] { return std::make_unique<BinarySpyHunt>(p); }, p);
				EXPECT_LE(w.max_questions, known ? t.spy : t.all) << n << "," << k << " known=" << known;
			}
}

TEST(LiarEdgeCase, NinePersonScript)
{
	const GameParams p = P(9, 5, SpyModel::Liar, true);
	auto s = make_strategy("figure2", p);
	auto replies = make_adversary("script:figure2", p, std::cin, std::cout);
	const Transcript t = run_strategy(*s, *replies, p);
	EXPECT_EQ(first(t, Claim::Kind::SpyIs), 7);
	const WorstCase w = worst_case([&] { return make_strategy("figure2", p); }, p);
	EXPECT_EQ(w.max_questions, 7);
}

TEST(LiarEdgeCase, WorstCaseMeetsTargets)
{
	for (int s = 1; s <= 5; ++s) {
		const int n = 2 * s + 1, k = s + 1;
		for (bool known : {false, true}) {
			const GameParams p = P(n, k, SpyModel::Liar, known);
			const auto t = formulas::liar_spy_targets(n, k);
			const WorstCase w = worst_case([&] { return std::make_unique<LiarEdgeCase>(p); }, p);
			EXPECT_LE(w.max_questions, known ? t.spy : t.all) << n;
		}
	}
}

TEST(ExtendedSpider, ChainOfSupport)
{
	const GameParams known = P(7, 4, SpyModel::Unconstrained, true);
	ExtendedSpider a(known);
	Scripted yes(script("SSSSSS"));
	const Transcript t = run_strategy(a, yes, known);
	EXPECT_EQ(t.edges.size(), 6u);
	EXPECT_EQ(t.claims.back().claim, Claim::spy(1));
	EXPECT_EQ(t.claims.back().index, 6);

	const GameParams open = P(7, 4, SpyModel::Unconstrained, false);
	ExtendedSpider b(open);
	GroundTruth honest(0);
	const Transcript u = run_strategy(b, honest, open);
	ASSERT_EQ(u.edges.size(), 7u);
	EXPECT_EQ(u.edges.back().question, (Question{7, 1}));
	EXPECT_EQ(first(u, Claim::Kind::AllKnights), 7);
}

TEST(ExtendedSpider, WorstCaseUnconstrained)
{
	const GameParams p = P(7, 4, SpyModel::Unconstrained, true);
	const WorstCase w = worst_case([&] { return std::make_unique<ExtendedSpider>(p); }, p);
	EXPECT_LE(w.max_questions, 6);
}

TEST(ModifiedKnightHunt, CombinedDeadlines)
{
	for (auto [n, k] : {std::pair{7, 4}, {9, 5}, {6, 4}}) {
		const GameParams p = P(n, k, SpyModel::Unconstrained, true);
		const int K = formulas::knight_target(n, k);
		ModifiedKnightHuntCombined probe(p);
		const auto objectives = probe.objectives();
		const WorstCase w = worst_case([&] { return std::make_unique<ModifiedKnightHuntCombined>(p); }, p);
		for (std::size_t i = 0; i < objectives.size(); ++i) {
			const Objective& o = objectives[i];
			int deadline = n - 1;
			if (o == Objective::knight())
				deadline = K + 1;
			else if (o.kind == ObjectiveKind::IdentityOfPerson)
				deadline = K + 2;
			EXPECT_LE(w.per_objective[i], deadline) << n << "," << k << " " << to_string(o);
		}
	}
}

TEST(Strategies, FactoryRejectsUnknownIds)
{
	EXPECT_THROW(make_strategy("nonesuch", P(5, 3)), GameError);
	EXPECT_THROW(make_strategy("figure2", P(7, 4)), GameError);
}

}  // namespace
}  // namespace knights
