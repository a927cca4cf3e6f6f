#pragma once

#include "quandle/core.hpp"

namespace quandle {

// Partition of {1..n} into minimal complemented subquandles. Each part is
// sorted ascending; parts are ordered by minimum element.
struct OrbitDecomposition {
    std::vector<std::vector<int>> parts;
};

// Restriction of a table to a closed subset, relabeled 1..k. labels[i-1] is
// the original index of new element i.
struct Subquandle {
    Table table;
    std::vector<int> labels;
};

// X closed under > restricted to itself (subquandle criterion).
bool is_closed_subset(const Table& q, const std::vector<int>& xs);

// Complement of X closed under >. X itself must be closed; a non-closed X is
// a contract violation (std::invalid_argument), distinct from a false result.
bool is_complemented(const Table& q, const std::vector<int>& xs);

// Closure of {a} under all column permutations f_b; sorted.
std::vector<int> orbit(const Table& q, int a);

OrbitDecomposition orbit_decomposition(const Table& q);

// S(a): intersection of all complemented subquandles containing a, by
// exhaustive scan over subsets. Independent oracle for orbit(); n <= 16.
std::vector<int> minimal_complemented(const Table& q, int a);

bool is_connected(const Table& q);

// 0 for a connected quandle, else 1 + max depth over orbit parts.
int subquandle_depth(const Table& q);

// All closed subsets including the empty set and Q, sorted by size then
// lexicographically. Exhaustive; n <= max_order.
std::vector<std::vector<int>> all_subquandles(const Table& q, int max_order = 12);

Subquandle restrict_to(const Table& q, const std::vector<int>& part);

} // namespace quandle
