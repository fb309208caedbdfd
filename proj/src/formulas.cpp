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

#include "knights/formulas.hpp"

#include <algorithm>
#include <bit>

#include "knights/game.hpp"

namespace knights::formulas {

namespace {

void check(int n, int k)
{
	if (n < 3 || !(2 * k > n && k < n))
		throw GameError(GameError::Code::InvalidParams,
		                "need n/2 < k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

}  // namespace

QRDecomposition decompose(int n, int k)
{
	check(n, k);
	const int block = n - k + 1;
	return {n / block, n % block};
}

int binary_ones(long long m)
{
	if (m < 0)
		throw GameError(GameError::Code::InvalidParams, "binary_ones needs m >= 0");
	return std::popcount(static_cast<unsigned long long>(m));
}

int knight_target(int n, int k)
{
	check(n, k);
	const int s = n - k;
	return 2 * s - binary_ones(s);
}

SpyTargets liar_spy_targets(int n, int k)
{
	const auto [q, r] = decompose(n, k);
	SpyTargets t;
	t.all = r == 0 ? n - q + 1 : n - q;
	t.spy = r <= 1 ? n - q : n - q - 1;
	if (n == 5 && k == 3)
		t.spy = 4;
	return t;
}

SpyTargets unconstrained_spy_targets(int n, int k)
{
	check(n, k);
	return {n, n - 1};
}

bool nominated_person_exception(int n, int k)
{
	check(n, k);
	for (int e = 0; (1LL << (e + 1)) + 1 <= n; ++e)  // e = 0 is (3,2): one question settles Person 1
		if (n == (1 << (e + 1)) + 1 && k == (1 << e) + 1)
			return true;
	return false;
}

IdentityTargets identity_targets(int n, int k)
{
	const int t = knight_target(n, k);
	IdentityTargets out;
	out.any = t;
	out.person = t + 1;
	out.person_spy_unconstrained = t + 1;
	out.person_spy_liar = nominated_person_exception(n, k) ? t : t + 1;
	return out;
}

const std::vector<std::pair<int, int>>& all_identities_exceptions()
{
	static const std::vector<std::pair<int, int>> pairs = {
	    {13, 9},  {16, 11}, {18, 14}, {19, 13}, {21, 14}, {22, 15}, {22, 17},
	    {23, 19}, {24, 16}, {25, 17}, {25, 19}, {26, 17}, {26, 20}, {27, 18},
	    {28, 19}, {28, 23}, {28, 24}, {29, 19}, {29, 22}, {30, 20}, {30, 23},
	};
	return pairs;
}

AllIdentitiesValue all_identities_liar(int n, int k)
{
	const auto [q, r] = decompose(n, k);
	const int s = n - k;
	// with one spy, r = 1 is also r = s; the exact value there is n - q
	if (r == s)
		return {n - q, n - q, true, false};
	if (r <= 1)
		return {n - q + 1, n - q + 1, true, false};
	if (n <= kExceptionTableLimit) {
		const auto& list = all_identities_exceptions();
		const bool listed = std::find(list.begin(), list.end(), std::make_pair(n, k)) != list.end();
		const int v = listed ? n - q : n - q + 1;
		return {v, v, true, listed};
	}
	return {n - q, n - q + 1, false, false};
}

int all_identities_unconstrained(int n, int k)
{
	check(n, k);
	return n + (n - k) - 1;
}

}  // namespace knights::formulas
