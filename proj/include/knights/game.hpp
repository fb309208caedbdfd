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

#ifndef KNIGHTS_GAME_HPP
#define KNIGHTS_GAME_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace knights {

/// People are numbered 1..n, as in the question model.
using Person = int;

/// Bit (p - 1) set iff Person p is a spy.
using SpyMask = std::uint64_t;

inline constexpr int kMaxPeople = 64;
/// Largest room for which consistent sets are enumerated explicitly.
inline constexpr int kMaxEnumeratedPeople = 16;

enum class SpyModel { Liar, Unconstrained };
enum class Answer { Support, Accuse };
enum class Identity { Knight, Spy };

inline SpyMask bit(Person p) { return SpyMask{1} << (p - 1); }
inline Answer opposite(Answer a) { return a == Answer::Support ? Answer::Accuse : Answer::Support; }
inline Identity opposite(Identity i) { return i == Identity::Knight ? Identity::Spy : Identity::Knight; }

const char* to_string(SpyModel m);
const char* to_string(Answer a);
const char* to_string(Identity i);

class GameError : public std::runtime_error {
public:
	enum class Code {
		InvalidParams,
		SelfQuestion,
		DuplicateQuestion,
		ContradictoryAnswer,
		WeightOrder,
		EmptyConsistentSet,
		ModeError,
		PreconditionUnmet,
		ConfigError,
		InvalidClaim,
		AdversaryInconsistent,
		StrategyStuck,
		BudgetExceeded,
		ParityError,
		TooLarge,
	};

	GameError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
	Code code() const { return code_; }

private:
	Code code_;
};

/// Rules of one game instance: n people, at least k knights, n/2 < k < n.
struct GameParams {
	int n = 3;
	int k = 2;
	SpyModel model = SpyModel::Liar;
	bool spy_known = false;

	/// Throws GameError(InvalidParams) unless n/2 < k < n and n <= kMaxPeople.
	static GameParams make(int n, int k, SpyModel model, bool spy_known);

	int spies() const { return n - k; }
	/// Least number of spies any consistent assignment may contain.
	int min_spies() const { return spy_known ? 1 : 0; }
};

struct Question {
	Person asker = 0;
	Person subject = 0;

	friend bool operator==(const Question&, const Question&) = default;
};

struct Edge {
	Question question;
	Answer answer;

	friend bool operator==(const Edge&, const Edge&) = default;
};

/// Larger identity class y, smaller class z; weight y - z.
struct ComponentSig {
	int y = 1;
	int z = 0;
	bool accusatory = false;

	int weight() const { return y - z; }
	int size() const { return y + z; }

	friend bool operator==(const ComponentSig&, const ComponentSig&) = default;
};

/// Question graph on persons 1..n with union-find components. In liar mode each
/// component also carries a 2-colouring: equal colour iff equal identity.
class QuestionGraph {
public:
	QuestionGraph(int n, SpyModel model);

	/// Appends an answered question. Throws SelfQuestion, DuplicateQuestion, or
	/// (liar mode) ContradictoryAnswer; the graph is unchanged on error.
	void apply(Question q, Answer a);

	/// Same as apply on a copy.
	QuestionGraph with(Question q, Answer a) const;

	/// True iff the answer can be applied without a colouring contradiction.
	bool admits(Question q, Answer a) const;

	int n() const { return n_; }
	SpyModel model() const { return model_; }
	const std::vector<Edge>& edges() const { return edges_; }
	int question_count() const { return static_cast<int>(edges_.size()); }

	Person root(Person p) const;
	bool connected(Person a, Person b) const { return root(a) == root(b); }
	/// Colour of p relative to its root (0 or 1). Meaningful in liar mode.
	int colour(Person p) const;
	bool asked(Question q) const;

	int component_count() const { return components_; }
	/// Members of p's component, ascending.
	std::vector<Person> component_of(Person p) const;
	/// All components ordered by least member.
	std::vector<std::vector<Person>> components() const;
	int component_size(Person p) const;
	bool accusatory(Person p) const;

	/// Signature of p's component. In unconstrained mode y is the component size.
	ComponentSig signature(Person p) const;
	/// True iff p is in the larger colour class of its component (ties count as larger).
	bool in_larger_class(Person p) const;

	/// Number of supportive / accusatory edges into p.
	int in_degree(Person p) const;
	bool is_source(Person p) const { return in_degree(p) == 0; }

private:
	int n_;
	SpyModel model_;
	std::vector<Edge> edges_;
	std::vector<int> parent_;
	std::vector<int> parity_;  // colour relative to parent
	std::vector<int> size_;
	std::vector<int> colour0_;  // per root: members with colour 0 relative to root
	std::vector<char> accusatory_;
	std::vector<int> in_degree_;
	std::vector<std::uint64_t> asked_;  // row per asker, bit per subject
	int components_;

	std::pair<int, int> find(Person p) const;
	void check_person(Person p) const;
};

/// Accumulated weight when merging components of weights c >= c' with a question
/// between their larger classes: c + c' on Support, c - c' on Accuse.
int merge_weight(int c, int c_prime, Answer a);

/// True iff the spy set agrees with every answer under the given model.
bool consistent_with(const std::vector<Edge>& edges, SpyMask spies, SpyModel model);
bool consistent_with(const Edge& e, SpyMask spies, SpyModel model);

/// Explicit set of spy assignments consistent with all answers so far.
struct ConsistentSet {
	int n = 0;
	std::vector<SpyMask> members;  // ascending

	bool empty() const { return members.empty(); }
	std::size_t size() const { return members.size(); }
	bool contains(SpyMask m) const;
};

/// Brute force over all 2^n candidate spy sets; n <= kMaxEnumeratedPeople.
ConsistentSet consistent_assignments(const QuestionGraph& g, const GameParams& params);

enum class ObjectiveKind { FindKnight, FindSpy, FindSpyOrAllKnights, AllKnightsProven, IdentityOfPerson, AnyIdentity, AllIdentities };

struct Objective {
	ObjectiveKind kind = ObjectiveKind::FindKnight;
	Person person = 1;  // IdentityOfPerson only

	static Objective knight() { return {ObjectiveKind::FindKnight, 1}; }
	static Objective spy() { return {ObjectiveKind::FindSpy, 1}; }
	static Objective spy_or_all_knights() { return {ObjectiveKind::FindSpyOrAllKnights, 1}; }
	static Objective identity_of(Person p) { return {ObjectiveKind::IdentityOfPerson, p}; }
	static Objective any_identity() { return {ObjectiveKind::AnyIdentity, 1}; }
	static Objective all_identities() { return {ObjectiveKind::AllIdentities, 1}; }

	friend bool operator==(const Objective&, const Objective&) = default;
};

std::string to_string(const Objective& o);

struct Claim {
	enum class Kind { KnightIs, SpyIs, AllKnights, PersonIs, FullAssignment };
	Kind kind = Kind::KnightIs;
	Person person = 0;
	Identity identity = Identity::Knight;
	SpyMask spies = 0;

	static Claim knight(Person p) { return {Kind::KnightIs, p, Identity::Knight, 0}; }
	static Claim spy(Person p) { return {Kind::SpyIs, p, Identity::Spy, 0}; }
	static Claim all_knights() { return {Kind::AllKnights, 0, Identity::Knight, 0}; }
	static Claim person_is(Person p, Identity i) { return {Kind::PersonIs, p, i, 0}; }
	static Claim assignment(SpyMask m) { return {Kind::FullAssignment, 0, Identity::Knight, m}; }

	/// True iff this claim settles the objective.
	bool settles(const Objective& o) const;

	friend bool operator==(const Claim&, const Claim&) = default;
};

std::string to_string(const Claim& c);

/// Achieved(claim) or nothing. Throws EmptyConsistentSet on an empty set.
std::optional<Claim> objective_status(const ConsistentSet& s, const Objective& o);

/// True iff the claim holds under every member of s.
bool claim_holds(const ConsistentSet& s, const Claim& c);

/// What is forced about each person given the answers. Computed exactly in liar mode
/// for any n (subset-sum over components) and by enumeration otherwise.
struct Knowledge {
	int n = 0;
	bool consistent = true;
	std::vector<std::optional<Identity>> identity;  // index p - 1
	bool all_knights = false;                        // only the empty spy set remains
	std::optional<SpyMask> unique;                   // set when exactly one assignment remains

	std::optional<Identity> of(Person p) const { return identity[p - 1]; }
	std::optional<Person> some_knight() const;
	std::optional<Person> some_spy() const;
	std::optional<Claim> status(const Objective& o) const;
	bool holds(const Claim& c) const;
};

Knowledge knowledge(const QuestionGraph& g, const GameParams& params);
Knowledge knowledge_from(const ConsistentSet& s);

/// Components whose identities are forced, by the weight criterion: with weight sum
/// 2 * s_resid + e where e = k - (n - k), exactly those of weight >= s_resid + 1.
/// Liar mode only (ModeError otherwise). Each component is listed by its members.
std::vector<std::vector<Person>> unambiguous_components(const QuestionGraph& g, const GameParams& params);

}  // namespace knights

#endif  // KNIGHTS_GAME_HPP
