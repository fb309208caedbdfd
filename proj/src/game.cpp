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

#include "knights/game.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <sstream>

namespace knights {

const char* to_string(SpyModel m) { return m == SpyModel::Liar ? "liar" : "unconstrained"; }
const char* to_string(Answer a) { return a == Answer::Support ? "support" : "accuse"; }
const char* to_string(Identity i) { return i == Identity::Knight ? "knight" : "spy"; }

GameParams GameParams::make(int n, int k, SpyModel model, bool spy_known)
{
	if (n < 3 || n > kMaxPeople)
		throw GameError(GameError::Code::InvalidParams, "n must lie in 3.." + std::to_string(kMaxPeople));
	if (!(2 * k > n && k < n))
		throw GameError(GameError::Code::InvalidParams,
		                "need n/2 < k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
	return GameParams{n, k, model, spy_known};
}

// ---------------------------------------------------------------------------
// QuestionGraph

QuestionGraph::QuestionGraph(int n, SpyModel model)
    : n_(n),
      model_(model),
      parent_(n + 1),
      parity_(n + 1, 0),
      size_(n + 1, 1),
      colour0_(n + 1, 1),
      accusatory_(n + 1, 0),
      in_degree_(n + 1, 0),
      asked_(n + 1, 0),
      components_(n)
{
	if (n < 1 || n > kMaxPeople)
		throw GameError(GameError::Code::InvalidParams, "room size out of range");
	for (int p = 0; p <= n; ++p)
		parent_[p] = p;
}

void QuestionGraph::check_person(Person p) const
{
	if (p < 1 || p > n_)
		throw GameError(GameError::Code::InvalidParams, "no person " + std::to_string(p));
}

std::pair<int, int> QuestionGraph::find(Person p) const
{
	int par = 0;
	while (parent_[p] != p) {
		par ^= parity_[p];
		p = parent_[p];
	}
	return {p, par};
}

Person QuestionGraph::root(Person p) const
{
	check_person(p);
	return find(p).first;
}

int QuestionGraph::colour(Person p) const
{
	check_person(p);
	return find(p).second;
}

bool QuestionGraph::asked(Question q) const
{
	check_person(q.asker);
	check_person(q.subject);
	return (asked_[q.asker] >> (q.subject - 1)) & 1U;
}

bool QuestionGraph::admits(Question q, Answer a) const
{
	if (model_ != SpyModel::Liar)
		return true;
	auto [ra, pa] = find(q.asker);
	auto [rb, pb] = find(q.subject);
	if (ra != rb)
		return true;
	const int want = a == Answer::Support ? 0 : 1;
	return (pa ^ pb) == want;
}

void QuestionGraph::apply(Question q, Answer a)
{
	check_person(q.asker);
	check_person(q.subject);
	if (q.asker == q.subject)
		throw GameError(GameError::Code::SelfQuestion, "person " + std::to_string(q.asker) + " asked about themself");
	if (asked(q))
		throw GameError(GameError::Code::DuplicateQuestion, "question (" + std::to_string(q.asker) + "," +
		                                                        std::to_string(q.subject) + ") already asked");
	if (!admits(q, a))
		throw GameError(GameError::Code::ContradictoryAnswer, "answer contradicts earlier answers");

	auto [ra, pa] = find(q.asker);
	auto [rb, pb] = find(q.subject);
	const int rel = a == Answer::Support ? 0 : 1;
	if (ra != rb) {
		if (size_[ra] < size_[rb]) {
			std::swap(ra, rb);
			std::swap(pa, pb);
		}
		// attach rb under ra so that colour(asker) ^ colour(subject) == rel
		const int link = pa ^ pb ^ rel;
		parent_[rb] = ra;
		parity_[rb] = link;
		size_[ra] += size_[rb];
		colour0_[ra] += link == 0 ? colour0_[rb] : size_[rb] - colour0_[rb];
		accusatory_[ra] = accusatory_[ra] || accusatory_[rb];
		--components_;
	}
	if (a == Answer::Accuse)
		accusatory_[ra] = 1;
	asked_[q.asker] |= bit(q.subject);
	++in_degree_[q.subject];
	edges_.push_back({q, a});
}

QuestionGraph QuestionGraph::with(Question q, Answer a) const
{
	QuestionGraph g = *this;
	g.apply(q, a);
	return g;
}

std::vector<Person> QuestionGraph::component_of(Person p) const
{
	const Person r = root(p);
	std::vector<Person> out;
	for (Person x = 1; x <= n_; ++x)
		if (find(x).first == r)
			out.push_back(x);
	return out;
}

std::vector<std::vector<Person>> QuestionGraph::components() const
{
	std::vector<std::vector<Person>> out;
	std::vector<int> slot(n_ + 1, -1);
	for (Person x = 1; x <= n_; ++x) {
		const int r = find(x).first;
		if (slot[r] < 0) {
			slot[r] = static_cast<int>(out.size());
			out.emplace_back();
		}
		out[slot[r]].push_back(x);
	}
	return out;
}

int QuestionGraph::component_size(Person p) const { return size_[root(p)]; }

bool QuestionGraph::accusatory(Person p) const { return accusatory_[root(p)] != 0; }

ComponentSig QuestionGraph::signature(Person p) const
{
	const Person r = root(p);
	if (model_ != SpyModel::Liar)
		return {size_[r], 0, accusatory_[r] != 0};
	const int c0 = colour0_[r];
	const int c1 = size_[r] - c0;
	return {std::max(c0, c1), std::min(c0, c1), accusatory_[r] != 0};
}

bool QuestionGraph::in_larger_class(Person p) const
{
	auto [r, par] = find(p);
	const int c0 = colour0_[r];
	const int c1 = size_[r] - c0;
	return par == 0 ? c0 >= c1 : c1 >= c0;
}

int QuestionGraph::in_degree(Person p) const
{
	check_person(p);
	return in_degree_[p];
}

int merge_weight(int c, int c_prime, Answer a)
{
	if (c < c_prime || c_prime < 0)
		throw GameError(GameError::Code::WeightOrder, "merge_weight needs c >= c' >= 0");
	return a == Answer::Support ? c + c_prime : c - c_prime;
}

// ---------------------------------------------------------------------------
// Consistency

bool consistent_with(const Edge& e, SpyMask spies, SpyModel model)
{
	const bool asker_spy = (spies & bit(e.question.asker)) != 0;
	const bool subject_spy = (spies & bit(e.question.subject)) != 0;
	if (model == SpyModel::Liar)
		return (e.answer == Answer::Support) == (asker_spy == subject_spy);
	if (asker_spy)
		return true;
	return (e.answer == Answer::Support) == !subject_spy;
}

bool consistent_with(const std::vector<Edge>& edges, SpyMask spies, SpyModel model)
{
	return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return consistent_with(e, spies, model); });
}

bool ConsistentSet::contains(SpyMask m) const { return std::binary_search(members.begin(), members.end(), m); }

ConsistentSet consistent_assignments(const QuestionGraph& g, const GameParams& params)
{
	if (g.n() > kMaxEnumeratedPeople)
		throw GameError(GameError::Code::TooLarge, "explicit consistent sets are limited to 16 people");
	ConsistentSet out{g.n(), {}};
	const SpyMask limit = SpyMask{1} << g.n();
	for (SpyMask m = 0; m < limit; ++m) {
		const int c = std::popcount(m);
		if (c > params.spies() || c < params.min_spies())
			continue;
		if (consistent_with(g.edges(), m, params.model))
			out.members.push_back(m);
	}
	return out;
}

std::string to_string(const Objective& o)
{
	switch (o.kind) {
	case ObjectiveKind::FindKnight: return "find-knight";
	case ObjectiveKind::FindSpy: return "find-spy";
	case ObjectiveKind::FindSpyOrAllKnights: return "find-spy-or-all-knights";
	case ObjectiveKind::AllKnightsProven: return "all-knights";
	case ObjectiveKind::IdentityOfPerson: return "identity-of-" + std::to_string(o.person);
	case ObjectiveKind::AnyIdentity: return "any-identity";
	case ObjectiveKind::AllIdentities: return "all-identities";
	}
	return "?";
}

bool Claim::settles(const Objective& o) const
{
	const bool spy_found = kind == Kind::SpyIs || (kind == Kind::PersonIs && identity == Identity::Spy) ||
	                       (kind == Kind::FullAssignment && spies != 0);
	const bool knight_found = kind == Kind::KnightIs || (kind == Kind::PersonIs && identity == Identity::Knight) ||
	                          kind == Kind::AllKnights || kind == Kind::FullAssignment;
	const bool everyone = kind == Kind::AllKnights || kind == Kind::FullAssignment;
	switch (o.kind) {
	case ObjectiveKind::FindKnight: return knight_found;
	case ObjectiveKind::FindSpy: return spy_found;
	case ObjectiveKind::FindSpyOrAllKnights: return spy_found || kind == Kind::AllKnights ||
		                                                (kind == Kind::FullAssignment && spies == 0);
	case ObjectiveKind::AllKnightsProven: return kind == Kind::AllKnights || (kind == Kind::FullAssignment && spies == 0);
	case ObjectiveKind::IdentityOfPerson: return everyone || (kind != Kind::AllKnights && person == o.person);
	case ObjectiveKind::AnyIdentity: return true;
	case ObjectiveKind::AllIdentities: return everyone;
	}
	return false;
}

std::string to_string(const Claim& c)
{
	std::ostringstream os;
	switch (c.kind) {
	case Claim::Kind::KnightIs: os << "knight " << c.person; break;
	case Claim::Kind::SpyIs: os << "spy " << c.person; break;
	case Claim::Kind::AllKnights: os << "all knights"; break;
	case Claim::Kind::PersonIs: os << "person " << c.person << " is a " << to_string(c.identity); break;
	case Claim::Kind::FullAssignment: {
		os << "spies {";
		bool first = true;
		for (Person p = 1; p <= kMaxPeople; ++p)
			if (c.spies & bit(p)) {
				os << (first ? "" : ",") << p;
				first = false;
			}
		os << "}";
		break;
	}
	}
	return os.str();
}

bool claim_holds(const ConsistentSet& s, const Claim& c)
{
	auto all = [&](auto pred) { return std::all_of(s.members.begin(), s.members.end(), pred); };
	switch (c.kind) {
	case Claim::Kind::KnightIs: return all([&](SpyMask m) { return (m & bit(c.person)) == 0; });
	case Claim::Kind::SpyIs: return all([&](SpyMask m) { return (m & bit(c.person)) != 0; });
	case Claim::Kind::AllKnights: return all([](SpyMask m) { return m == 0; });
	case Claim::Kind::PersonIs:
		return all([&](SpyMask m) { return ((m & bit(c.person)) != 0) == (c.identity == Identity::Spy); });
	case Claim::Kind::FullAssignment: return all([&](SpyMask m) { return m == c.spies; });
	}
	return false;
}

std::optional<Claim> objective_status(const ConsistentSet& s, const Objective& o)
{
	if (s.empty())
		throw GameError(GameError::Code::EmptyConsistentSet, "no assignment is consistent with the answers");
	return knowledge_from(s).status(o);
}

// ---------------------------------------------------------------------------
// Knowledge

std::optional<Person> Knowledge::some_knight() const
{
	for (Person p = 1; p <= n; ++p)
		if (identity[p - 1] == Identity::Knight)
			return p;
	return std::nullopt;
}

std::optional<Person> Knowledge::some_spy() const
{
	for (Person p = 1; p <= n; ++p)
		if (identity[p - 1] == Identity::Spy)
			return p;
	return std::nullopt;
}

std::optional<Claim> Knowledge::status(const Objective& o) const
{
	if (!consistent)
		throw GameError(GameError::Code::EmptyConsistentSet, "no assignment is consistent with the answers");
	const auto knight = some_knight();
	const auto spy = some_spy();
	switch (o.kind) {
	case ObjectiveKind::FindKnight:
		if (knight)
			return Claim::knight(*knight);
		break;
	case ObjectiveKind::FindSpy:
		if (spy)
			return Claim::spy(*spy);
		break;
	case ObjectiveKind::FindSpyOrAllKnights:
		if (spy)
			return Claim::spy(*spy);
		if (all_knights)
			return Claim::all_knights();
		break;
	case ObjectiveKind::AllKnightsProven:
		if (all_knights)
			return Claim::all_knights();
		break;
	case ObjectiveKind::IdentityOfPerson:
		if (auto id = of(o.person))
			return Claim::person_is(o.person, *id);
		break;
	case ObjectiveKind::AnyIdentity:
		if (knight)
			return Claim::knight(*knight);
		if (spy)
			return Claim::spy(*spy);
		break;
	case ObjectiveKind::AllIdentities:
		if (unique)
			return Claim::assignment(*unique);
		break;
	}
	return std::nullopt;
}

bool Knowledge::holds(const Claim& c) const
{
	if (!consistent)
		return false;
	switch (c.kind) {
	case Claim::Kind::KnightIs: return of(c.person) == Identity::Knight;
	case Claim::Kind::SpyIs: return of(c.person) == Identity::Spy;
	case Claim::Kind::AllKnights: return all_knights;
	case Claim::Kind::PersonIs: return of(c.person) == c.identity;
	case Claim::Kind::FullAssignment: return unique && *unique == c.spies;
	}
	return false;
}

Knowledge knowledge_from(const ConsistentSet& s)
{
	Knowledge out;
	out.n = s.n;
	out.identity.assign(s.n, std::nullopt);
	out.consistent = !s.empty();
	if (!out.consistent)
		return out;
	SpyMask always = ~SpyMask{0};
	SpyMask ever = 0;
	for (SpyMask m : s.members) {
		always &= m;
		ever |= m;
	}
	for (Person p = 1; p <= s.n; ++p) {
		if (always & bit(p))
			out.identity[p - 1] = Identity::Spy;
		else if (!(ever & bit(p)))
			out.identity[p - 1] = Identity::Knight;
	}
	if (s.size() == 1)
		out.unique = s.members.front();
	out.all_knights = s.size() == 1 && s.members.front() == 0;
	return out;
}

namespace {

using SumSet = std::bitset<kMaxPeople + 1>;

SumSet convolve(const SumSet& a, const SumSet& b)
{
	SumSet out;
	for (int i = 0; i <= kMaxPeople; ++i)
		if (a[i])
			out |= b << i;
	return out;
}

bool hits(const SumSet& sums, int lo, int hi)
{
	for (int v = std::max(lo, 0); v <= std::min(hi, kMaxPeople); ++v)
		if (sums[v])
			return true;
	return false;
}

// Liar mode: each component is labelled by which colour class holds the spies.
Knowledge liar_knowledge(const QuestionGraph& g, const GameParams& params)
{
	Knowledge out;
	out.n = g.n();
	out.identity.assign(g.n(), std::nullopt);

	const auto comps = g.components();
	const std::size_t d = comps.size();
	// option 0: colour-0 class are knights (spies = colour-1 count); option 1: the reverse
	std::vector<std::array<int, 2>> spies_if(d);
	for (std::size_t i = 0; i < d; ++i) {
		int c0 = 0;
		for (Person p : comps[i])
			c0 += g.colour(p) == 0;
		const int c1 = static_cast<int>(comps[i].size()) - c0;
		spies_if[i] = {c1, c0};
	}
	std::vector<SumSet> prefix(d + 1), suffix(d + 1);
	prefix[0][0] = true;
	suffix[d][0] = true;
	for (std::size_t i = 0; i < d; ++i)
		prefix[i + 1] = (prefix[i] << spies_if[i][0]) | (prefix[i] << spies_if[i][1]);
	for (std::size_t i = d; i-- > 0;)
		suffix[i] = (suffix[i + 1] << spies_if[i][0]) | (suffix[i + 1] << spies_if[i][1]);

	const int lo = params.min_spies();
	const int hi = params.spies();
	out.consistent = hits(prefix[d], lo, hi);
	if (!out.consistent)
		return out;

	bool unique = true;
	SpyMask assignment = 0;
	for (std::size_t i = 0; i < d; ++i) {
		const SumSet others = convolve(prefix[i], suffix[i + 1]);
		bool ok[2];
		for (int opt = 0; opt < 2; ++opt)
			ok[opt] = hits(others, lo - spies_if[i][opt], hi - spies_if[i][opt]);
		if (ok[0] && ok[1]) {
			unique = false;
			continue;
		}
		const int opt = ok[0] ? 0 : 1;
		for (Person p : comps[i]) {
			const bool spy = (g.colour(p) == 1) == (opt == 0);
			out.identity[p - 1] = spy ? Identity::Spy : Identity::Knight;
			if (spy)
				assignment |= bit(p);
		}
	}
	if (unique) {
		out.unique = assignment;
		out.all_knights = assignment == 0;
	}
	return out;
}

}  // namespace

Knowledge knowledge(const QuestionGraph& g, const GameParams& params)
{
	if (params.model == SpyModel::Liar)
		return liar_knowledge(g, params);
	return knowledge_from(consistent_assignments(g, params));
}

std::vector<std::vector<Person>> unambiguous_components(const QuestionGraph& g, const GameParams& params)
{
	if (params.model != SpyModel::Liar || g.model() != SpyModel::Liar)
		throw GameError(GameError::Code::ModeError, "the weight criterion applies to liar spies only");
	const auto comps = g.components();
	int total = 0;
	for (const auto& c : comps)
		total += g.signature(c.front()).weight();
	const int excess = params.k - (params.n - params.k);
	const int resid = (total - excess) / 2;
	std::vector<std::vector<Person>> out;
	for (const auto& c : comps)
		if (g.signature(c.front()).weight() >= resid + 1)
			out.push_back(c);
	return out;
}

}  // namespace knights
