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

#ifndef KNIGHTS_STRATEGIES_HPP
#define KNIGHTS_STRATEGIES_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "knights/strategy.hpp"

namespace knights {

/// A group of people treated as one unit by a knight hunt. `size` is the weight the
/// hunt counts for the group; `sink` answers and is asked about on its behalf.
struct Block {
	std::vector<Person> members;
	Person sink = 0;
	int size = 1;
	bool accusatory = false;
	Person accuser = 0;
};

/// Binary Knight Hunt bookkeeping: repeatedly connect the sinks of two equal-size
/// non-accusatory blocks until all such blocks have distinct sizes.
class KnightHunt {
public:
	KnightHunt() = default;
	explicit KnightHunt(const std::vector<Person>& people);
	explicit KnightHunt(std::vector<Block> blocks) : blocks_(std::move(blocks)) {}

	void absorb(const KnightHunt& other);

	/// Smallest size with two eligible blocks, first two in list order. With `prefer`,
	/// the block holding that person is used whenever it has a partner, as the subject;
	/// `then` is a weaker preference of the same kind.
	std::optional<std::pair<std::size_t, std::size_t>> next_pair(Person prefer = 0, Person then = 0) const;

	/// Runs to termination, or until the first accusation when asked to stop there.
	/// Returns true iff the hunt terminated.
	bool run(Interrogation& in, Person prefer = 0, bool stop_on_accusation = false, Person then = 0);

	/// Sink of the largest non-accusatory block.
	Person knight() const;
	bool accused() const { return first_accuser_ != 0; }
	Person first_accuser() const { return first_accuser_; }
	const std::vector<Block>& blocks() const { return blocks_; }
	const Block& block_of(Person p) const;

private:
	std::vector<Block> blocks_;
	Person first_accuser_ = 0;
};

struct SwitchOutcome {
	Person knight = 0;
	Person first_accuser = 0;  // 0 when every answer was supportive
	int switches = 0;
};

/// Switching Knight Hunt over p_1..p_d (chain[0..d-1]) and p'_2..p'_d (primed[1..d-1];
/// primed[0] is ignored).
SwitchOutcome run_switching_hunt(Interrogation& in, const std::vector<Person>& chain,
                                 const std::vector<Person>& primed);

/// Asks the knight w about people outside w's component until one component remains.
void connect_everyone(Interrogation& in, Person w);

/// Liar spies: repeatedly makes the question whose worst-case remaining cost, by the
/// exact abstract solver, is least, until the objective is claimed.
void solver_guided(Interrogation& in, const Objective& objective);

// ---------------------------------------------------------------------------

class BinaryKnightHunt : public Strategy {
public:
	/// people defaults to everyone. Throws PreconditionUnmet when |people| <= 2s and
	/// assume_majority is false.
	BinaryKnightHunt(GameParams params, std::vector<Person> people = {}, bool assume_majority = false);

	std::string name() const override { return "bkh"; }
	std::unique_ptr<Strategy> clone() const override { return std::make_unique<BinaryKnightHunt>(*this); }
	std::vector<Objective> objectives() const override { return {Objective::knight()}; }

protected:
	void play(Interrogation& in) const override;

private:
	std::vector<Person> people_;
};

/// Starts from a prepared graph holding components C_1..C_d and C'_2..C'_d.
class SwitchingKnightHunt : public Strategy {
public:
	/// Throws ConfigError if the weights violate c_{j+1} > c_1 + ... + c_j, if C'_i
	/// and C_i differ in weight, or if a chosen person is not in a larger class.
	SwitchingKnightHunt(GameParams params, QuestionGraph start, std::vector<Person> chain,
	                    std::vector<Person> primed);

	std::string name() const override { return "skh"; }
	std::unique_ptr<Strategy> clone() const override { return std::make_unique<SwitchingKnightHunt>(*this); }
	std::vector<Objective> objectives() const override { return {Objective::knight()}; }
	QuestionGraph start() const override { return start_; }

protected:
	void play(Interrogation& in) const override;

private:
	QuestionGraph start_;
	std::vector<Person> chain_;
	std::vector<Person> primed_;
};

/// Binary Spy Hunt for liar spies with n >= 2(s + 1). With person_one_in_x it also
/// settles a knight by K(n,k) and Person 1 by K(n,k) + 1; with continue_to_all it
/// goes on to every identity by question n - 1.
class BinarySpyHunt : public Strategy {
public:
	enum class Phase { Start, HuntX, Switch, Build, Finish };

	BinarySpyHunt(GameParams params, bool person_one_in_x = false, bool continue_to_all = false);

	std::string name() const override { return person_one_in_x_ ? "bsh1" : "bsh"; }
	std::unique_ptr<Strategy> clone() const override { return std::make_unique<BinarySpyHunt>(*this); }
	std::vector<Objective> objectives() const override;

protected:
	void play(Interrogation& in) const override;

private:
	bool person_one_in_x_;
	bool continue_to_all_;
};

/// Liar spies with n = 2s + 1. With force_script the nine-person table is followed
/// even when no spy is guaranteed.
class LiarEdgeCase : public Strategy {
public:
	explicit LiarEdgeCase(GameParams params, bool force_script = false);

	std::string name() const override { return "edge"; }
	std::unique_ptr<Strategy> clone() const override { return std::make_unique<LiarEdgeCase>(*this); }
	std::vector<Objective> objectives() const override;

	/// True iff this instance follows the nine-person script (directly or over blocks).
	bool scripted() const;

protected:
	void play(Interrogation& in) const override;

private:
	bool force_script_;
};

/// Follow-the-chain questioning, then candidate elimination. Works for both models.
/// In combined mode it also settles a knight and Person 1.
class ExtendedSpider : public Strategy {
public:
	explicit ExtendedSpider(GameParams params, bool combined = false);

	std::string name() const override { return "spider"; }
	std::unique_ptr<Strategy> clone() const override { return std::make_unique<ExtendedSpider>(*this); }
	std::vector<Objective> objectives() const override;

protected:
	void play(Interrogation& in) const override;

private:
	bool combined_;
};

/// Unconstrained spies: a knight by K(n,k) + 1, Person 1 by K(n,k) + 2, and a spy by
/// n - 1 (spy known) or a spy or all-knights verdict by n.
class ModifiedKnightHuntCombined : public Strategy {
public:
	explicit ModifiedKnightHuntCombined(GameParams params);

	std::string name() const override { return "mbkh"; }
	std::unique_ptr<Strategy> clone() const override { return std::make_unique<ModifiedKnightHuntCombined>(*this); }
	std::vector<Objective> objectives() const override;

protected:
	void play(Interrogation& in) const override;
};

/// Optimal play for liar spies from the exact abstract solver.
class SolverGuided : public Strategy {
public:
	SolverGuided(GameParams params, Objective objective);

	std::string name() const override { return "optimal"; }
	std::unique_ptr<Strategy> clone() const override { return std::make_unique<SolverGuided>(*this); }
	std::vector<Objective> objectives() const override { return {objective_}; }

protected:
	void play(Interrogation& in) const override { solver_guided(in, objective_); }

private:
	Objective objective_;
};

/// Objective a spy-finding strategy must settle under the given params.
Objective spy_objective(const GameParams& params);

/// Builds a strategy by CLI id: bkh, bsh, bsh1, edge, figure2, spider, mbkh, optimal.
std::unique_ptr<Strategy> make_strategy(const std::string& id, const GameParams& params);

}  // namespace knights

#endif  // KNIGHTS_STRATEGIES_HPP
