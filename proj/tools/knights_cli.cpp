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

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "knights/adversary.hpp"
#include "knights/checks.hpp"
#include "knights/formulas.hpp"
#include "knights/harness.hpp"
#include "knights/strategies.hpp"

namespace {

using namespace knights;

enum Exit { kPass = 0, kVerifyFailed = 1, kProtocol = 2, kUsage = 3 };

struct Config {
	int n = 0;
	int k = 0;
	std::string spy_model = "liar";
	bool spy_known = false;
	std::string strategy;
	std::string adversary;
	std::optional<int> n_max;
	std::optional<int> k_max;
	std::size_t budget = solver::Budget{}.max_states;
	std::string out;
	std::string check;
	std::string transcript;
};

GameParams game(const Config& c)
{
	if (c.spy_model != "liar" && c.spy_model != "unconstrained")
		throw GameError(GameError::Code::ConfigError, "--spy-model must be liar or unconstrained");
	return GameParams::make(c.n, c.k, c.spy_model == "liar" ? SpyModel::Liar : SpyModel::Unconstrained, c.spy_known);
}

int exit_for(const GameError& e)
{
	switch (e.code()) {
	case GameError::Code::InvalidClaim:
	case GameError::Code::AdversaryInconsistent:
	case GameError::Code::StrategyStuck:
		return kProtocol;
	default:
		return kUsage;
	}
}

std::string describe(const Claim& c)
{
	switch (c.kind) {
	case Claim::Kind::KnightIs: return "Person " + std::to_string(c.person) + " is a knight";
	case Claim::Kind::SpyIs: return "Person " + std::to_string(c.person) + " is a spy";
	case Claim::Kind::AllKnights: return "everyone is a knight";
	case Claim::Kind::PersonIs:
		return "Person " + std::to_string(c.person) + " is a " + to_string(c.identity);
	case Claim::Kind::FullAssignment: return to_string(c);
	}
	return to_string(c);
}

int cmd_play(const Config& c)
{
	const GameParams p = game(c);
	auto strategy = make_strategy(c.strategy, p);
	auto adversary = make_adversary(c.adversary, p, std::cin, std::cout);

	RunObserver obs;
	obs.on_answer = [](int i, const Edge& e) {
		std::cout << "Q" << i << ": Person " << e.question.asker << " about Person " << e.question.subject << ": "
		          << to_string(e.answer) << "\n";
	};
	obs.on_claim = [](const TimedClaim& tc) {
		std::cout << "  claim after question " << tc.index << ": " << describe(tc.claim) << "\n";
	};
	Transcript t;
	try {
		t = run_strategy(*strategy, *adversary, p, obs);
	} catch (const GameError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return exit_for(e);
	}
	std::cout << t.edges.size() << " questions asked\n";
	if (!c.out.empty()) {
		std::ofstream f(c.out);
		if (!f)
			throw GameError(GameError::Code::ConfigError, "cannot write " + c.out);
		write_transcript(f, t);
	}
	return kPass;
}

std::vector<checks::Report> run_check(const Config& c)
{
	const solver::Budget b{c.budget};
	const auto nm = [&](int def) { return c.n_max.value_or(def); };
	const std::string& w = c.check;
	if (w == "theorem1")
		return {checks::theorem1(nm(10), b), checks::spy_hunt(std::max(nm(10), 12)), checks::edge_case(std::max(nm(10), 11)),
		        checks::liar_lower_bound(std::min(nm(10), 10), b)};
	if (w == "theorem2")
		return {checks::theorem2(std::min(nm(7), 7), b), checks::spider(nm(8)),
		        checks::unconstrained_lower_bound(std::min(nm(7), 7), b)};
	if (w == "theorem3")
		return {checks::majority_lower_bound(nm(10), b), checks::majority(c.k_max.value_or(10), 1)};
	if (w == "theorem4")
		return {checks::spy_hunt(nm(12))};
	if (w == "theorem5")
		return {checks::modified_hunt(nm(8)), checks::lemma71(b)};
	if (w == "atable")
		return {checks::atable(nm(13), b)};
	if (w == "conjecture")
		return {checks::majority(10, c.k_max.value_or(8))};
	if (w == "cross-solver")
		return {checks::cross_solver(std::min(nm(7), 8), b)};
	if (w == "properties")
		return {checks::properties(5, 10000)};
	throw GameError(GameError::Code::ConfigError, "unknown check: " + w);
}

int cmd_verify(const Config& c)
{
	const auto reports = run_check(c);
	std::ofstream file;
	if (!c.out.empty()) {
		file.open(c.out);
		if (!file)
			throw GameError(GameError::Code::ConfigError, "cannot write " + c.out);
	}
	std::ostream& machine = c.out.empty() ? std::cout : file;
	bool pass = true;
	for (const auto& r : reports) {
		machine << checks::to_json_lines(r);
		pass = pass && r.pass();
		if (!c.out.empty()) {
			for (const auto& row : r.rows)
				if (!row.pass)
					std::cout << "FAIL " << r.name << " " << row.cell << ": expected " << row.expected << ", got "
					          << row.computed << "\n";
			std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name << " (" << r.rows.size() << " cells, " << std::fixed
			          << std::setprecision(1) << r.seconds << "s)\n";
		}
	}
	return pass ? kPass : kVerifyFailed;
}

int cmd_table(const Config& c)
{
	int lo = 3, hi = c.n_max.value_or(12);
	if (c.n) {
		lo = hi = c.n;
	}
	if (lo < 3 || hi > kMaxPeople || lo > hi)
		throw GameError(GameError::Code::InvalidParams, "range must lie within 3.." + std::to_string(kMaxPeople));
	std::ostringstream os;
	const auto col = [&](const std::string& v, int w = 6) { os << std::setw(w) << v; };
	for (const char* h : {"n", "k", "q", "r", "K", "E", "N", "N^L", "N^S", "Tall_L", "Tspy_L", "Tall_S", "Tspy_S"})
		col(h, std::string(h).size() > 3 ? 8 : 5);
	os << "  A\n";
	for (int n = lo; n <= hi; ++n)
		for (int k = n / 2 + 1; k < n; ++k) {
			if (c.k && k != c.k)
				continue;
			const auto d = formulas::decompose(n, k);
			const int K = formulas::knight_target(n, k);
			const auto id = formulas::identity_targets(n, k);
			const auto tl = formulas::liar_spy_targets(n, k);
			const auto ts = formulas::unconstrained_spy_targets(n, k);
			const auto a = formulas::all_identities_liar(n, k);
			const bool nl_exc = formulas::nominated_person_exception(n, k);
			const bool t_exc = n == 5 && k == 3;
			for (int v : {n, k, d.q, d.r, K, id.any, id.person})
				col(std::to_string(v), 5);
			col(std::to_string(id.person_spy_liar) + (nl_exc ? "*" : ""), 5);
			col(std::to_string(id.person_spy_unconstrained), 5);
			col(std::to_string(tl.all), 8);
			col(std::to_string(tl.spy) + (t_exc ? "*" : ""), 8);
			col(std::to_string(ts.all), 8);
			col(std::to_string(ts.spy), 8);
			os << "  ";
			if (a.exact())
				os << a.lo << (a.exceptional ? "*" : "");
			else
				os << "[" << a.lo << "," << a.hi << "] unknown";
			os << "\n";
		}
	os << "* exception to the general formula\n";
	std::cout << os.str();
	return kPass;
}

int cmd_dot(const Config& c)
{
	std::ifstream file;
	if (c.transcript != "-") {
		file.open(c.transcript);
		if (!file)
			throw GameError(GameError::Code::ConfigError, "cannot read " + c.transcript);
	}
	const Transcript t = read_transcript(c.transcript == "-" ? std::cin : file);
	const std::string dot = to_dot(t);
	if (c.out.empty()) {
		std::cout << dot;
	} else {
		std::ofstream f(c.out);
		if (!f)
			throw GameError(GameError::Code::ConfigError, "cannot write " + c.out);
		f << dot;
	}
	return kPass;
}

void game_flags(CLI::App* app, Config& c, bool required)
{
	app->add_option("--n", c.n, "people in the room")->required(required);
	app->add_option("--k", c.k, "lower bound on the number of knights")->required(required);
	app->add_option("--spy-model", c.spy_model, "liar or unconstrained")->check(CLI::IsMember({"liar", "unconstrained"}));
	app->add_flag("--spy-known", c.spy_known, "at least one spy is known to be present");
}

}  // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Knights and spies: interrogation strategies, Spy Masters and exact solvers"};
	app.require_subcommand(1);
	Config c;

	auto* play = app.add_subcommand("play", "run a strategy against a Spy Master or a human");
	game_flags(play, c, true);
	play->add_option("--strategy", c.strategy, "bkh, bsh, bsh1, edge, figure2, spider, spider+, mbkh, optimal")->required();
	play->add_option("--adversary", c.adversary,
	                 "truth:{i,j}[:lie|truth|support|accuse], script:SAS..., script:figure2, script:figure3, "
	                 "liar-lb, majority-lb, unconstrained-lb, conjecture84, optimal, human")
	    ->required();
	play->add_option("--out", c.out, "write the transcript here");

	auto budget_flag = [&](CLI::App* a) {
		a->add_option("--budget", c.budget, "solver state limit")->capture_default_str();
	};
	auto* verify = app.add_subcommand("verify", "check theorems against solvers and exhaustive sweeps");
	verify->add_option("check", c.check, "theorem1..theorem5, atable, conjecture, cross-solver, properties")->required();
	verify->add_option("--n-max", c.n_max, "largest room size");
	verify->add_option("--k-max", c.k_max, "largest k for majority sweeps");
	verify->add_option("--out", c.out, "write the machine report here (summary goes to stdout)");
	budget_flag(verify);

	auto* conjecture = app.add_subcommand("conjecture", "same as verify conjecture");
	conjecture->add_option("--k-max", c.k_max, "largest k")->default_val(8);
	conjecture->add_option("--out", c.out, "write the machine report here");

	auto* atable = app.add_subcommand("atable", "same as verify atable");
	atable->add_option("--n-max", c.n_max, "largest room size")->default_val(13);
	atable->add_option("--out", c.out, "write the machine report here");
	budget_flag(atable);

	auto* table = app.add_subcommand("table", "formula values over a range");
	table->add_option("--n-max", c.n_max, "largest room size (default 12)");
	table->add_option("--n", c.n, "a single room size");
	table->add_option("--k", c.k, "a single k");

	auto* dot = app.add_subcommand("dot", "Graphviz question graph of a transcript");
	dot->add_option("transcript", c.transcript, "transcript file, or - for standard input")->required();
	dot->add_option("--out", c.out, "write the graph here");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? kPass : kUsage;
	}

	try {
		if (*play)
			return cmd_play(c);
		if (*verify)
			return cmd_verify(c);
		if (*conjecture) {
			c.check = "conjecture";
			return cmd_verify(c);
		}
		if (*atable) {
			c.check = "atable";
			return cmd_verify(c);
		}
		if (*table)
			return cmd_table(c);
		if (*dot)
			return cmd_dot(c);
	} catch (const GameError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return exit_for(e);
	}
	return kUsage;
}
