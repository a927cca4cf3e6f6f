#pragma once

#include "quandle/core.hpp"

namespace quandle {

// T_n: i > j = i.
Table trivial(int n);

// Z_n with x > y = t*x + (1-t)*y (mod n); element k represents residue k-1.
// Requires gcd(t, n) = 1.
Table alexander(int n, int t);

// R_n = alexander(n, -1), i.e. i > j = 2j - i (mod n) on residues.
Table dihedral(int n);

// Conjugation quandle of a group given by its Cayley table: x > y = y^-1 x y.
// The table is verified to be a group (identity, inverses, associativity).
Table conjugation(const Table& cayley);

// Cartesian product, (a,x) > (b,y) = (a > b, x > y), with (a,x) encoded as
// (a-1)*m + x where m = |second factor|.
Table product(const Table& q, const Table& q2);

} // namespace quandle
