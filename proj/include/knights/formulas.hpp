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

#ifndef KNIGHTS_FORMULAS_HPP
#define KNIGHTS_FORMULAS_HPP

#include <optional>
#include <utility>
#include <vector>

namespace knights::formulas {

/// n = q (s + 1) + r with 0 <= r <= s, where s = n - k.
struct QRDecomposition {
	int q = 0;
	int r = 0;
};

QRDecomposition decompose(int n, int k);

/// Number of ones in the binary expansion of m.
int binary_ones(long long m);

/// 2(n - k) - B(n - k): questions needed to find a knight.
int knight_target(int n, int k);

struct SpyTargets {
	int all = 0;  // find a spy or prove everyone a knight
	int spy = 0;  // find a spy when one is known to be present
};

/// Liar spies; includes the single exception T_spy(5, 3) = 4.
SpyTargets liar_spy_targets(int n, int k);
/// Unconstrained spies: (n, n - 1).
SpyTargets unconstrained_spy_targets(int n, int k);

struct IdentityTargets {
	int any = 0;              // at least one identity (E), spy known or not
	int person = 0;           // a nominated person (N), both models
	int person_spy_liar = 0;  // nominated person, spy known, liar spies
	int person_spy_unconstrained = 0;
};

IdentityTargets identity_targets(int n, int k);

/// True iff n = 2^(e+1) + 1 and k = 2^e + 1 for some e >= 0.
bool nominated_person_exception(int n, int k);

/// Value of A(n, k) or, where no closed form is known, the interval [lo, hi].
struct AllIdentitiesValue {
	int lo = 0;
	int hi = 0;
	bool known = true;
	bool exceptional = false;  // listed pair with A = n - q

	bool exact() const { return known && lo == hi; }
};

/// Pairs with n <= 30 and 2 <= r < n - k where finding all identities takes n - q.
const std::vector<std::pair<int, int>>& all_identities_exceptions();
inline constexpr int kExceptionTableLimit = 30;

AllIdentitiesValue all_identities_liar(int n, int k);
/// n + (n - k) - 1.
int all_identities_unconstrained(int n, int k);

}  // namespace knights::formulas

#endif  // KNIGHTS_FORMULAS_HPP
