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

#ifndef KNIGHTS_HARNESS_HPP
#define KNIGHTS_HARNESS_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "knights/adversary.hpp"
#include "knights/strategy.hpp"

namespace knights {

struct Transcript {
	GameParams params;
	std::vector<Edge> edges;
	std::vector<TimedClaim> claims;

	/// Index of the first claim settling o, if any.
	std::optional<int> settled_at(const Objective& o) const;
};

/// Called after every event; used for live printing.
struct RunObserver {
	std::function<void(int index, const Edge&)> on_answer;
	std::function<void(const TimedClaim&)> on_claim;
};

/// Plays strategy against adversary, validating each answer and claim as it happens.
Transcript run_strategy(Strategy& strategy, Adversary& adversary, const GameParams& params,
                        const RunObserver& observer = {});

// Line-delimited JSON records: a game header, then one record per answer or claim.
void write_transcript(std::ostream& out, const Transcript& t);
Transcript read_transcript(std::istream& in);

/// Graphviz text: solid arrows for support, dashed for accusations, labelled in order.
std::string to_dot(const Transcript& t);

/// Edges of a graph written by to_dot, in label order. ConfigError if malformed.
std::vector<Edge> edges_from_dot(const std::string& dot);

}  // namespace knights

#endif  // KNIGHTS_HARNESS_HPP
