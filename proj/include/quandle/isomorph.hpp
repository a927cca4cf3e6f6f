#pragma once

#include "quandle/core.hpp"

namespace quandle {

// new[p(i)][p(j)] = p(old[i][j]).
Table relabel(const Table& q, const Permutation& p);

// A witness bijection rho with rho(a > b) = rho(a) > rho(b), if one exists.
// Backtracking over partial maps with per-element profile pruning.
std::optional<Permutation> are_isomorphic(const Table& q, const Table& q2);

// Lexicographically minimal table (row-major) among all relabelings.
// Exhaustive minimization; n <= max_order.
Table canonical_form(const Table& q, int max_order = 9);

// The relabeling p with relabel(q, p) == canonical_form(q).
Permutation canonical_relabeling(const Table& q, int max_order = 9);

// All quandles of order n up to isomorphism, as sorted canonical forms.
// Column-by-column search over diagonal-fixing permutations with
// incremental axiom (iii) pruning. n <= max_order (default 5; raising the
// bound past 5 comes with no runtime guarantee).
std::vector<Table> census(int n, int max_order = 5);

} // namespace quandle
