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
#include <sstream>

#include "knights/adversary.hpp"
#include "knights/harness.hpp"
#include "knights/strategies.hpp"

namespace knights {
namespace {

GameParams P(int n, int k, SpyModel m = SpyModel::Liar, bool known = false) { return GameParams::make(n, k, m, known); }

// Asks 1 about 2 and stops without claiming anything.
class Quitter : public Strategy {
public:
	using Strategy::Strategy;
	std::string name() const override { return "quitter"; }
	std::unique_ptr<Strategy> clone() const override { return std::make_unique<Quitter>(*this); }
	std::vector<Objective> objectives() const override { return {Objective::all_identities()}; }

protected:
	void play(Interrogation& in) const override { in.ask(1, 2); }
};

// Claims Person 1 is a knight before asking anything.
class Braggart : public Quitter {
public:
	using Quitter::Quitter;
	std::string name() const override { return "braggart"; }

protected:
	void play(Interrogation& in) const override { in.claim(Claim::knight(1)); }
};

// Answers Accuse to a question it already answered Support to in reverse.
class Contrarian : public Adversary {
public:
	std::string name() const override { return "contrarian"; }
	std::unique_ptr<Adversary> clone() const override { return std::make_unique<Contrarian>(*this); }
	Answer answer(const QuestionGraph& g, Question, const GameParams&) override
	{
		return g.question_count() == 0 ? Answer::Support : Answer::Accuse;
	}
};

class Pair : public Quitter {
public:
	using Quitter::Quitter;

protected:
	void play(Interrogation& in) const override
	{
		in.ask(1, 2);
		in.ask(2, 1);
	}
};

GameError::Code code_of(const std::function<void()>& f)
{
	try {
		f();
	} catch (const GameError& e) {
		return e.code();
	}
	ADD_FAILURE() << "no error";
	return GameError::Code::ConfigError;
}

TEST(RunStrategy, ProtocolErrors)
{
	const GameParams p = P(3, 2);
	GroundTruth honest(0);
	Quitter q(p);
	EXPECT_EQ(code_of([&] { run_strategy(q, honest, p); }), GameError::Code::StrategyStuck);
	Braggart b(p);
	EXPECT_EQ(code_of([&] { run_strategy(b, honest, p); }), GameError::Code::InvalidClaim);
	Pair pr(p);
	Contrarian c;
	EXPECT_EQ(code_of([&] { run_strategy(pr, c, p); }), GameError::Code::AdversaryInconsistent);
}

TEST(RunStrategy, ObserverSeesEveryEvent)
{
	const GameParams p = P(7, 4);
	BinaryKnightHunt s(p);
	GroundTruth liars(bit(2) | bit(5));
	int answers = 0, claims = 0;
	RunObserver obs;
	obs.on_answer = [&](int i, const Edge&) { EXPECT_EQ(i, ++answers); };
	obs.on_claim = [&](const TimedClaim&) { ++claims; };
	const Transcript t = run_strategy(s, liars, p, obs);
	EXPECT_EQ(answers, static_cast<int>(t.edges.size()));
	EXPECT_EQ(claims, static_cast<int>(t.claims.size()));
	// the claimed knight really is one
	for (const auto& c : t.claims)
		if (c.claim.kind == Claim::Kind::KnightIs)
			EXPECT_FALSE((bit(2) | bit(5)) & bit(c.claim.person));
}

TEST(Transcript, JsonRoundTrip)
{
	const GameParams p = P(9, 5, SpyModel::Liar, true);
	auto s = make_strategy("figure2", p);
	auto a = make_adversary("script:figure2", p, std::cin, std::cout);
	const Transcript t = run_strategy(*s, *a, p);
	std::stringstream buf;
	write_transcript(buf, t);
	const Transcript back = read_transcript(buf);
	EXPECT_EQ(back.params.n, 9);
	EXPECT_TRUE(back.params.spy_known);
	EXPECT_EQ(back.edges, t.edges);
	EXPECT_EQ(back.claims, t.claims);
}

TEST(Transcript, RejectsBadInput)
{
	std::istringstream none("{\"index\":1,\"asker\":1,\"subject\":2,\"answer\":\"support\"}\n");
	EXPECT_THROW(read_transcript(none), GameError);
	std::istringstream junk("not json\n");
	EXPECT_THROW(read_transcript(junk), GameError);
	std::istringstream contradiction(
	    "{\"game\":{\"n\":3,\"k\":2,\"spy_model\":\"liar\",\"spy_known\":false}}\n"
	    "{\"index\":1,\"asker\":1,\"subject\":2,\"answer\":\"support\"}\n"
	    "{\"index\":2,\"asker\":2,\"subject\":1,\"answer\":\"accuse\"}\n");
	EXPECT_THROW(read_transcript(contradiction), GameError);
}

TEST(Dot, SingleEdgeAndEmptyGraph)
{
	Transcript one{P(3, 2), {{{1, 2}, Answer::Support}}, {}};
	const std::string dot = to_dot(one);
	EXPECT_NE(dot.find("1 -> 2 [label=\"1\"];"), std::string::npos);
	EXPECT_EQ(dot.find("dashed"), std::string::npos);

	Transcript empty{P(4, 3), {}, {}};
	const std::string bare = to_dot(empty);
	EXPECT_EQ(bare.find("->"), std::string::npos);
	for (const char* v : {"  1;", "  2;", "  3;", "  4;"})
		EXPECT_NE(bare.find(v), std::string::npos) << v;
	EXPECT_TRUE(edges_from_dot(bare).empty());
}

TEST(Dot, TwentyNineRoomRoundTrip)
{
	const GameParams p = P(29, 16, SpyModel::Liar, true);
	BinarySpyHunt s(p, true, true);
	auto a = make_adversary("script:figure3", p, std::cin, std::cout);
	const Transcript t = run_strategy(s, *a, p);
	const std::string dot = to_dot(t);
	const auto edges = edges_from_dot(dot);
	ASSERT_EQ(edges.size(), 28u);
	EXPECT_EQ(edges, t.edges);
	// one tree: 28 edges joining 29 people
	QuestionGraph g(29, SpyModel::Liar);
	for (const auto& e : edges)
		g.apply(e.question, e.answer);
	EXPECT_EQ(g.component_count(), 1);
}

TEST(Dot, MalformedLabels)
{
	EXPECT_THROW(edges_from_dot("1 -> 2 [label=\"2\"];"), GameError);
	EXPECT_THROW(edges_from_dot("1 -> 2 [label=\"1\"];\n2 -> 3 [label=\"1\"];"), GameError);
}

}  // namespace
}  // namespace knights
