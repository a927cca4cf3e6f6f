#pragma once

#include "quandle/core.hpp"

namespace quandle {

// A rack action of R on S: one automorphism phi_r of S per element r of R,
// satisfying phi_r(phi_r'(s)) = phi_{r' > r}(phi_r(s)).
struct RackAction {
    Table source; // R, order k
    Table target; // S, order m
    std::vector<Permutation> maps; // maps[r-1] = phi_r, a permutation of 1..m
};

enum class RackActionDefect {
    NotAutomorphism, // some phi_r fails phi(a > b) = phi(a) > phi(b)
    RackLaw,         // some triple fails the rack action law
};

struct RackActionViolation {
    RackActionDefect kind;
    // NotAutomorphism: {r, a, b}; RackLaw: {r, r2, s} with
    // phi_r(phi_r2(s)) != phi_{r2 > r}(phi_r(s)).
    std::array<int, 3> witness{};
};

bool is_automorphism(const Table& q, const Permutation& p);

// All automorphisms, sorted lexicographically by image vector. Backtracking
// with partial-homomorphism pruning; n <= max_order.
std::vector<Permutation> automorphisms(const Table& q, int max_order = 10);

// Empty optional iff both rack-action invariants hold; otherwise the first
// witness (automorphism checks by r then (a,b), then rack law by (r,r2,s)).
std::optional<RackActionViolation> verify_rack_action(const RackAction& a);

// All rack actions of r on s. phi assignments are chosen in source-element
// order with candidates in lexicographic order, so the output order is
// deterministic.
std::vector<RackAction> enumerate_rack_actions(const Table& r, const Table& s);

// maps[b-1] = column_permutation(q, b): the action of a quandle on itself.
RackAction self_action(const Table& q);

} // namespace quandle
