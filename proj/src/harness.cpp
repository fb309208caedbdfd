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

#include "knights/harness.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace knights {

using nlohmann::json;

std::optional<int> Transcript::settled_at(const Objective& o) const
{
	for (const auto& c : claims)
		if (c.claim.settles(o))
			return c.index;
	return std::nullopt;
}

Transcript run_strategy(Strategy& strategy, Adversary& adversary, const GameParams& params, const RunObserver& observer)
{
	Transcript t{params, {}, {}};
	QuestionGraph g = strategy.start();
	t.edges = g.edges();
	while (true) {
		const Move move = strategy.next(g);
		const Knowledge known = knowledge(g, params);
		for (const auto& c : move.claims) {
			if (!known.holds(c))
				throw GameError(GameError::Code::InvalidClaim, strategy.name() + " claimed " + to_string(c) +
				                                                   " before it was forced");
			t.claims.push_back({g.question_count(), c});
			if (observer.on_claim)
				observer.on_claim(t.claims.back());
		}
		if (!move.question)
			break;
		const Question q = *move.question;
		const Answer a = adversary.answer(g, q, params);
		if (!g.admits(q, a))
			throw GameError(GameError::Code::AdversaryInconsistent, adversary.name() + " contradicted earlier answers");
		QuestionGraph next = g.with(q, a);
		if (!knowledge(next, params).consistent)
			throw GameError(GameError::Code::AdversaryInconsistent,
			                adversary.name() + " left no consistent assignment of spies");
		g = std::move(next);
		t.edges.push_back({q, a});
		if (observer.on_answer)
			observer.on_answer(g.question_count(), t.edges.back());
	}
	for (const auto& o : strategy.objectives())
		if (!t.settled_at(o))
			throw GameError(GameError::Code::StrategyStuck, strategy.name() + " stopped with " + to_string(o) + " unsettled");
	return t;
}

// ---------------------------------------------------------------------------

namespace {

const char* claim_kind(Claim::Kind k)
{
	switch (k) {
	case Claim::Kind::KnightIs: return "knight";
	case Claim::Kind::SpyIs: return "spy";
	case Claim::Kind::AllKnights: return "all-knights";
	case Claim::Kind::PersonIs: return "person";
	case Claim::Kind::FullAssignment: return "assignment";
	}
	return "?";
}

Claim::Kind claim_kind(const std::string& s)
{
	if (s == "knight") return Claim::Kind::KnightIs;
	if (s == "spy") return Claim::Kind::SpyIs;
	if (s == "all-knights") return Claim::Kind::AllKnights;
	if (s == "person") return Claim::Kind::PersonIs;
	if (s == "assignment") return Claim::Kind::FullAssignment;
	throw GameError(GameError::Code::ConfigError, "unknown claim kind: " + s);
}

std::vector<Person> people_of(SpyMask m)
{
	std::vector<Person> out;
	for (Person p = 1; p <= kMaxPeople; ++p)
		if (m & bit(p))
			out.push_back(p);
	return out;
}

}  // namespace

void write_transcript(std::ostream& out, const Transcript& t)
{
	out << json{{"game",
	             {{"n", t.params.n},
	              {"k", t.params.k},
	              {"spy_model", to_string(t.params.model)},
	              {"spy_known", t.params.spy_known}}}}
	           .dump()
	    << '\n';

	// interleave by index: claims made after i answers follow answer i
	std::size_t c = 0;
	const auto flush_claims = [&](int upto) {
		for (; c < t.claims.size() && t.claims[c].index <= upto; ++c) {
			const Claim& cl = t.claims[c].claim;
			json j{{"index", t.claims[c].index}, {"claim", claim_kind(cl.kind)}};
			if (cl.kind == Claim::Kind::FullAssignment)
				j["spies"] = people_of(cl.spies);
			else if (cl.kind != Claim::Kind::AllKnights) {
				j["person"] = cl.person;
				j["identity"] = to_string(cl.identity);
			}
			out << j.dump() << '\n';
		}
	};
	flush_claims(0);
	for (std::size_t i = 0; i < t.edges.size(); ++i) {
		const Edge& e = t.edges[i];
		out << json{{"index", i + 1},
		            {"asker", e.question.asker},
		            {"subject", e.question.subject},
		            {"answer", to_string(e.answer)}}
		           .dump()
		    << '\n';
		flush_claims(static_cast<int>(i + 1));
	}
	flush_claims(1 << 30);
}

Transcript read_transcript(std::istream& in)
{
	Transcript t;
	bool have_header = false;
	std::string line;
	try {
		while (std::getline(in, line)) {
			if (line.find_first_not_of(" \t\r") == std::string::npos)
				continue;
			const json j = json::parse(line);
			if (j.contains("game")) {
				const auto& g = j.at("game");
				const std::string model = g.at("spy_model").get<std::string>();
				if (model != "liar" && model != "unconstrained")
					throw GameError(GameError::Code::ConfigError, "unknown spy model: " + model);
				t.params = GameParams::make(g.at("n").get<int>(), g.at("k").get<int>(),
				                            model == "liar" ? SpyModel::Liar : SpyModel::Unconstrained,
				                            g.value("spy_known", false));
				have_header = true;
			} else if (j.contains("answer")) {
				const std::string a = j.at("answer").get<std::string>();
				if (a != "support" && a != "accuse")
					throw GameError(GameError::Code::ConfigError, "unknown answer: " + a);
				t.edges.push_back({{j.at("asker").get<int>(), j.at("subject").get<int>()},
				                   a == "support" ? Answer::Support : Answer::Accuse});
			} else if (j.contains("claim")) {
				Claim c;
				c.kind = claim_kind(j.at("claim").get<std::string>());
				c.person = j.value("person", 0);
				c.identity = j.value("identity", std::string("knight")) == "spy" ? Identity::Spy : Identity::Knight;
				if (c.kind == Claim::Kind::SpyIs)
					c.identity = Identity::Spy;
				if (j.contains("spies"))
					for (int p : j.at("spies"))
						c.spies |= bit(p);
				t.claims.push_back({j.at("index").get<int>(), c});
			} else {
				throw GameError(GameError::Code::ConfigError, "unrecognised transcript record: " + line);
			}
		}
	} catch (const json::exception& e) {
		throw GameError(GameError::Code::ConfigError, std::string("bad transcript: ") + e.what());
	}
	if (!have_header)
		throw GameError(GameError::Code::ConfigError, "transcript has no game header");
	// replay to reject impossible histories
	QuestionGraph g(t.params.n, t.params.model);
	for (const auto& e : t.edges)
		g.apply(e.question, e.answer);
	return t;
}

std::string to_dot(const Transcript& t)
{
	std::ostringstream os;
	os << "digraph questions {\n  rankdir=LR;\n  node [shape=circle];\n";
	for (Person p = 1; p <= t.params.n; ++p)
		os << "  " << p << ";\n";
	for (std::size_t i = 0; i < t.edges.size(); ++i) {
		const Edge& e = t.edges[i];
		os << "  " << e.question.asker << " -> " << e.question.subject << " [label=\"" << i + 1 << "\"";
		if (e.answer == Answer::Accuse)
			os << ", style=dashed";
		os << "];\n";
	}
	os << "}\n";
	return os.str();
}

std::vector<Edge> edges_from_dot(const std::string& dot)
{
	static const std::regex edge(R"re((\d+)\s*->\s*(\d+)\s*\[label="(\d+)"(\s*,\s*style=dashed)?\])re");
	std::map<int, Edge> by_label;
	for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator(); ++it) {
		const auto& m = *it;
		const int label = std::stoi(m[3]);
		const Edge e{{std::stoi(m[1]), std::stoi(m[2])}, m[4].matched ? Answer::Accuse : Answer::Support};
		if (!by_label.emplace(label, e).second)
			throw GameError(GameError::Code::ConfigError, "edge label " + std::to_string(label) + " repeated");
	}
	std::vector<Edge> out;
	int expect = 1;
	for (const auto& [label, e] : by_label) {
		if (label != expect++)
			throw GameError(GameError::Code::ConfigError, "edge labels are not 1..m");
		out.push_back(e);
	}
	return out;
}

}  // namespace knights
