#pragma once

#include "quandle/actions.hpp"
#include "quandle/core.hpp"
#include "quandle/decomp.hpp"

namespace quandle {

// Blocks Q_1..Q_k with global indices assigned contiguously (Q_1 gets
// 1..n_1, Q_2 gets n_1+1..n_1+n_2, ...) plus the grid of rack actions
// Phi^{i,j}: Q_i -> Aut(Q_j) for i != j. In the assembled quandle,
// x > y = phi^{j,i}_y(x) for x in Q_i, y in Q_j.
struct StructureMaps {
    std::vector<Table> blocks;
    // actions[i][j] = maps of Phi^{i+1,j+1} (indexed by elements of block i,
    // each a permutation of block j); empty on the diagonal.
    std::vector<std::vector<std::vector<Permutation>>> actions;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int offset(int block) const; // 0-based block index -> global offset
    int total_order() const;
};

// Builds the block table. Verifies every Phi^{i,j} is a rack action and all
// cross-block compatibility conditions hold (throws std::invalid_argument
// naming the first failing check, rack-action validity first, then
// compatibility triples in lexicographic order); the assembled table is
// validated as a final redundant check.
Table assemble(const StructureMaps& s);

// All grids of rack actions on the given blocks passing the compatibility
// conditions, in deterministic order (ordered block pairs row-major,
// candidate actions in enumerate_rack_actions order).
std::vector<StructureMaps> enumerate_structure_maps(const std::vector<Table>& blocks);

// All quandle structures on the disjoint union with every block a
// subquandle and every block complemented (subquandle depth 1 relative to
// the blocks). Labeled structures; duplicates under isomorphism not merged.
std::vector<Table> glue_n(const std::vector<Table>& blocks);
std::vector<Table> glue2(const Table& q, const Table& q2);

// All non-connected quandle structures on the disjoint union with each
// block a subquandle, at every subquandle depth, via recursion over
// partitions of the block list. Output is deduplicated up to isomorphism:
// sorted canonical forms.
std::vector<Table> enumerate_nonconnected(const std::vector<Table>& blocks);

// Reads the structure maps off q relative to a partition of {1..n} into
// complemented subquandles (each part closed, complement closed; checked).
// assemble() of the result reproduces q up to the relabeling that makes the
// parts contiguous.
StructureMaps extract_structure_maps(const Table& q, const std::vector<std::vector<int>>& parts);

// Two grids on the same block list are isomorphic iff there are
// automorphisms rho_i of each block with
// rho_j(phi^{i,j}_b(a)) = psi^{i,j}_{rho_i(b)}(rho_j(a)); searched over
// products of block automorphism groups.
bool structure_maps_isomorphic(const StructureMaps& s, const StructureMaps& s2);

} // namespace quandle
