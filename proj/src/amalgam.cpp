#include "quandle/amalgam.hpp"

#include "quandle/isomorph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace quandle {

namespace {

constexpr double kGridBudget = 1e8;

void check_shape(const StructureMaps& s) {
    const int k = s.block_count();
    if (static_cast<int>(s.actions.size()) != k)
        throw std::invalid_argument("structure maps need a k x k action grid");
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(s.actions[static_cast<size_t>(i)].size()) != k)
            throw std::invalid_argument("structure maps need a k x k action grid");
        for (int j = 0; j < k; ++j) {
            const auto& maps = s.actions[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (i == j) {
                if (!maps.empty())
                    throw std::invalid_argument("diagonal action entries must be empty");
                continue;
            }
            if (static_cast<int>(maps.size()) != s.blocks[static_cast<size_t>(i)].order())
                throw std::invalid_argument("action Phi^{i,j} needs one map per element of block i");
            for (const auto& p : maps)
                if (p.size() != s.blocks[static_cast<size_t>(j)].order())
                    throw std::invalid_argument("action Phi^{i,j} maps must permute block j");
        }
    }
}

std::string violation_text(const RackActionViolation& v) {
    if (v.kind == RackActionDefect::NotAutomorphism)
        return "map " + std::to_string(v.witness[0]) + " is not an automorphism at (a,b)=(" +
               std::to_string(v.witness[1]) + "," + std::to_string(v.witness[2]) + ")";
    return "rack law fails at (r,r',s)=(" + std::to_string(v.witness[0]) + "," +
           std::to_string(v.witness[1]) + "," + std::to_string(v.witness[2]) + ")";
}

// Rack-action validity first (ordered pairs row-major), then the cross-block
// compatibility conditions with block triples in lexicographic order.
std::optional<std::string> first_defect(const StructureMaps& s) {
    const int k = s.block_count();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j)
                continue;
            RackAction action{s.blocks[static_cast<size_t>(i)], s.blocks[static_cast<size_t>(j)],
                              s.actions[static_cast<size_t>(i)][static_cast<size_t>(j)]};
            if (auto v = verify_rack_action(action))
                return "Phi^{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                       "}: " + violation_text(*v);
        }

    auto phi = [&](int i, int j, int b) -> const Permutation& {
        return s.actions[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(b) - 1];
    };
    // Triples (a in Q_bi, b in Q_bj, c in Q_bk) of (a > b) > c = (a > c) > (b > c).
    // bi == bj and bj == bk reduce to the automorphism and rack-law checks above.
    for (int bi = 0; bi < k; ++bi)
        for (int bj = 0; bj < k; ++bj)
            for (int bk = 0; bk < k; ++bk) {
                if (bi == bj || bj == bk)
                    continue;
                const Table& qi = s.blocks[static_cast<size_t>(bi)];
                const Table& qj = s.blocks[static_cast<size_t>(bj)];
                const Table& qk = s.blocks[static_cast<size_t>(bk)];
                if (bk == bi) {
                    for (int a = 1; a <= qi.order(); ++a)
                        for (int b = 1; b <= qj.order(); ++b)
                            for (int c = 1; c <= qi.order(); ++c) {
                                const int lhs = qi.op(phi(bj, bi, b)(a), c);
                                const int rhs = phi(bj, bi, phi(bi, bj, c)(b))(qi.op(a, c));
                                if (lhs != rhs)
                                    return "compatibility fails at blocks (" + std::to_string(bi + 1) +
                                           "," + std::to_string(bj + 1) + "," + std::to_string(bk + 1) +
                                           "), elements (" + std::to_string(a) + "," +
                                           std::to_string(b) + "," + std::to_string(c) + ")";
                            }
                } else {
                    for (int a = 1; a <= qi.order(); ++a)
                        for (int b = 1; b <= qj.order(); ++b)
                            for (int c = 1; c <= qk.order(); ++c) {
                                const int lhs = phi(bk, bi, c)(phi(bj, bi, b)(a));
                                const int rhs = phi(bj, bi, phi(bk, bj, c)(b))(phi(bk, bi, c)(a));
                                if (lhs != rhs)
                                    return "compatibility fails at blocks (" + std::to_string(bi + 1) +
                                           "," + std::to_string(bj + 1) + "," + std::to_string(bk + 1) +
                                           "), elements (" + std::to_string(a) + "," +
                                           std::to_string(b) + "," + std::to_string(c) + ")";
                            }
                }
            }
    return std::nullopt;
}

Table assemble_unchecked(const StructureMaps& s) {
    const int n = s.total_order();
    const int k = s.block_count();
    std::vector<int> entries(static_cast<size_t>(n) * n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const int oi = s.offset(i);
            const int oj = s.offset(j);
            const Table& qi = s.blocks[static_cast<size_t>(i)];
            const Table& qj = s.blocks[static_cast<size_t>(j)];
            for (int a = 1; a <= qi.order(); ++a)
                for (int b = 1; b <= qj.order(); ++b) {
                    const int value =
                        i == j ? qi.op(a, b)
                               : s.actions[static_cast<size_t>(j)][static_cast<size_t>(i)]
                                          [static_cast<size_t>(b) - 1](a);
                    entries[static_cast<size_t>(oi + a - 1) * n + (oj + b - 1)] = oi + value;
                }
        }
    return Table(n, std::move(entries));
}

std::vector<std::vector<std::vector<int>>> partitions_of(int k) {
    // restricted growth strings; cells come out ordered by minimum element
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> rgs(static_cast<size_t>(k), 0);
    auto emit = [&]() {
        const int cells = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> partition(static_cast<size_t>(cells));
        for (int i = 0; i < k; ++i)
            partition[static_cast<size_t>(rgs[static_cast<size_t>(i)])].push_back(i);
        out.push_back(std::move(partition));
    };
    auto gen = [&](auto&& self, int i, int used) -> void {
        if (i == k) {
            emit();
            return;
        }
        for (int c = 0; c <= used; ++c) {
            rgs[static_cast<size_t>(i)] = c;
            self(self, i + 1, std::max(used, c + 1));
        }
    };
    if (k > 0)
        gen(gen, 0, 0);
    return out;
}

} // namespace

int StructureMaps::offset(int block) const {
    int off = 0;
    for (int i = 0; i < block; ++i)
        off += blocks[static_cast<size_t>(i)].order();
    return off;
}

int StructureMaps::total_order() const {
    return offset(block_count());
}

Table assemble(const StructureMaps& s) {
    check_shape(s);
    if (auto defect = first_defect(s))
        throw std::invalid_argument(*defect);
    Table t = assemble_unchecked(s);
    if (check_axioms(t))
        throw std::logic_error("assembled table failed validation");
    return t;
}

std::vector<StructureMaps> enumerate_structure_maps(const std::vector<Table>& blocks) {
    const int k = static_cast<int>(blocks.size());
    for (const auto& block : blocks)
        if (!is_quandle(block))
            throw std::invalid_argument("every block must be a quandle");

    StructureMaps grid;
    grid.blocks = blocks;
    grid.actions.assign(static_cast<size_t>(k), std::vector<std::vector<Permutation>>(static_cast<size_t>(k)));
    if (k <= 1)
        return {grid};

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j)
                pairs.emplace_back(i, j);

    std::vector<std::vector<RackAction>> candidates;
    double total = 1;
    for (auto [i, j] : pairs) {
        candidates.push_back(enumerate_rack_actions(blocks[static_cast<size_t>(i)],
                                                    blocks[static_cast<size_t>(j)]));
        total *= static_cast<double>(candidates.back().size());
        if (total > kGridBudget)
            throw BoundExceeded("structure map enumeration exceeds the search budget");
    }

    std::vector<StructureMaps> found;
    auto search = [&](auto&& self, size_t t) -> void {
        if (t == pairs.size()) {
            if (!first_defect(grid))
                found.push_back(grid);
            return;
        }
        auto [i, j] = pairs[t];
        for (const auto& action : candidates[t]) {
            grid.actions[static_cast<size_t>(i)][static_cast<size_t>(j)] = action.maps;
            self(self, t + 1);
        }
        grid.actions[static_cast<size_t>(i)][static_cast<size_t>(j)].clear();
    };
    search(search, 0);
    return found;
}

std::vector<Table> glue_n(const std::vector<Table>& blocks) {
    std::vector<Table> out;
    for (const auto& grid : enumerate_structure_maps(blocks))
        out.push_back(assemble(grid));
    return out;
}

std::vector<Table> glue2(const Table& q, const Table& q2) {
    return glue_n({q, q2});
}

std::vector<Table> enumerate_nonconnected(const std::vector<Table>& blocks) {
    if (blocks.empty())
        throw std::invalid_argument("enumerate_nonconnected needs at least one block");
    for (const auto& block : blocks)
        if (block.order() < 1)
            throw std::invalid_argument("blocks must be nonempty");

    std::vector<Table> canon_blocks;
    canon_blocks.reserve(blocks.size());
    for (const auto& block : blocks)
        canon_blocks.push_back(canonical_form(block));

    // keyed by the sorted canonical forms of the cell's blocks; partitions of
    // the block list overlap heavily, so cells recur
    std::map<std::vector<Table>, std::vector<Table>> memo;

    auto recurse = [&](auto&& self, std::vector<Table> cell) -> const std::vector<Table>& {
        std::vector<Table> key = cell;
        std::sort(key.begin(), key.end());
        if (auto it = memo.find(key); it != memo.end())
            return it->second;

        std::set<Table> out;
        const int k = static_cast<int>(cell.size());
        for (const auto& partition : partitions_of(k)) {
            if (partition.size() < 2)
                continue;
            std::vector<std::vector<Table>> choices;
            bool dead_end = false;
            for (const auto& indices : partition) {
                if (indices.size() == 1) {
                    choices.push_back({cell[static_cast<size_t>(indices[0])]});
                } else {
                    std::vector<Table> sub;
                    for (int idx : indices)
                        sub.push_back(cell[static_cast<size_t>(idx)]);
                    choices.push_back(self(self, std::move(sub)));
                }
                if (choices.back().empty()) {
                    dead_end = true;
                    break;
                }
            }
            if (dead_end)
                continue;

            std::vector<size_t> pick(choices.size(), 0);
            while (true) {
                std::vector<Table> parts;
                parts.reserve(choices.size());
                for (size_t c = 0; c < choices.size(); ++c)
                    parts.push_back(choices[c][pick[c]]);
                for (const auto& glued : glue_n(parts))
                    out.insert(canonical_form(glued));
                size_t c = 0;
                while (c < choices.size() && ++pick[c] == choices[c].size()) {
                    pick[c] = 0;
                    ++c;
                }
                if (c == choices.size())
                    break;
            }
        }
        return memo[std::move(key)] = std::vector<Table>(out.begin(), out.end());
    };

    return recurse(recurse, std::move(canon_blocks));
}

StructureMaps extract_structure_maps(const Table& q, const std::vector<std::vector<int>>& parts) {
    const int n = q.order();
    if (parts.empty())
        throw std::invalid_argument("partition must be nonempty");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    int covered = 0;
    for (const auto& part : parts) {
        if (part.empty())
            throw std::invalid_argument("partition parts must be nonempty");
        for (int x : part) {
            if (x < 1 || x > n || seen[static_cast<size_t>(x)])
                throw std::invalid_argument("parts must disjointly cover 1..n");
            seen[static_cast<size_t>(x)] = 1;
            ++covered;
        }
    }
    if (covered != n)
        throw std::invalid_argument("parts must disjointly cover 1..n");
    for (const auto& part : parts)
        if (!is_complemented(q, part)) // also rejects non-closed parts
            throw std::invalid_argument("each part must be a complemented subquandle");

    const int k = static_cast<int>(parts.size());
    StructureMaps s;
    std::vector<std::vector<int>> labels;
    std::vector<std::vector<int>> position(static_cast<size_t>(k),
                                           std::vector<int>(static_cast<size_t>(n) + 1, 0));
    for (int i = 0; i < k; ++i) {
        auto sub = restrict_to(q, parts[static_cast<size_t>(i)]);
        for (size_t a = 0; a < sub.labels.size(); ++a)
            position[static_cast<size_t>(i)][static_cast<size_t>(sub.labels[a])] =
                static_cast<int>(a) + 1;
        labels.push_back(sub.labels);
        s.blocks.push_back(std::move(sub.table));
    }
    s.actions.assign(static_cast<size_t>(k), std::vector<std::vector<Permutation>>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j)
                continue;
            const auto& src = labels[static_cast<size_t>(i)];
            const auto& dst = labels[static_cast<size_t>(j)];
            std::vector<Permutation> maps;
            maps.reserve(src.size());
            for (int y : src) {
                std::vector<int> images;
                images.reserve(dst.size());
                for (int x : dst) {
                    const int v = position[static_cast<size_t>(j)][static_cast<size_t>(q.op(x, y))];
                    if (v == 0)
                        throw std::invalid_argument("parts are not invariant under the operation");
                    images.push_back(v);
                }
                maps.emplace_back(std::move(images));
            }
            s.actions[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(maps);
        }
    return s;
}

bool structure_maps_isomorphic(const StructureMaps& s, const StructureMaps& s2) {
    check_shape(s);
    check_shape(s2);
    if (s.blocks != s2.blocks)
        throw std::invalid_argument("structure maps must share the same block list");

    const int k = s.block_count();
    std::vector<std::vector<Permutation>> auts;
    double total = 1;
    for (const auto& block : s.blocks) {
        auts.push_back(automorphisms(block));
        total *= static_cast<double>(auts.back().size());
        if (total > 1e7)
            throw BoundExceeded("structure map isomorphism search exceeds the budget");
    }

    std::vector<const Permutation*> rho(static_cast<size_t>(k), nullptr);
    auto matches = [&]() {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j)
                    continue;
                const auto& phis = s.actions[static_cast<size_t>(i)][static_cast<size_t>(j)];
                const auto& psis = s2.actions[static_cast<size_t>(i)][static_cast<size_t>(j)];
                const auto& rho_i = *rho[static_cast<size_t>(i)];
                const auto& rho_j = *rho[static_cast<size_t>(j)];
                for (int b = 1; b <= s.blocks[static_cast<size_t>(i)].order(); ++b)
                    for (int a = 1; a <= s.blocks[static_cast<size_t>(j)].order(); ++a)
                        if (rho_j(phis[static_cast<size_t>(b) - 1](a)) !=
                            psis[static_cast<size_t>(rho_i(b)) - 1](rho_j(a)))
                            return false;
            }
        return true;
    };
    auto search = [&](auto&& self, int i) -> bool {
        if (i == k)
            return matches();
        for (const auto& candidate : auts[static_cast<size_t>(i)]) {
            rho[static_cast<size_t>(i)] = &candidate;
            if (self(self, i + 1))
                return true;
        }
        return false;
    };
    return search(search, 0);
}

} // namespace quandle
