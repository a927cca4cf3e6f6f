#include "quandle/isomorph.hpp"

#include "quandle/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace quandle {

namespace {

std::vector<int> cycle_type(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    std::vector<int> lengths;
    for (int a = 1; a <= n; ++a) {
        if (seen[static_cast<size_t>(a)])
            continue;
        int length = 0;
        for (int x = a; !seen[static_cast<size_t>(x)]; x = p(x)) {
            seen[static_cast<size_t>(x)] = 1;
            ++length;
        }
        lengths.push_back(length);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

// per-element invariant used to prune the isomorphism search
struct Profile {
    int orbit_size;
    std::vector<int> column_cycles;
    int row_fixes;

    friend auto operator<=>(const Profile&, const Profile&) = default;
};

std::vector<Profile> profiles(const Table& q) {
    const int n = q.order();
    std::vector<int> orbit_size(static_cast<size_t>(n) + 1, 0);
    for (const auto& part : orbit_decomposition(q).parts)
        for (int a : part)
            orbit_size[static_cast<size_t>(a)] = static_cast<int>(part.size());
    std::vector<Profile> out;
    out.reserve(static_cast<size_t>(n));
    for (int a = 1; a <= n; ++a) {
        int fixes = 0;
        for (int b = 1; b <= n; ++b)
            if (q.op(a, b) == a)
                ++fixes;
        out.push_back(Profile{orbit_size[static_cast<size_t>(a)],
                              cycle_type(column_permutation(q, a)), fixes});
    }
    return out;
}

} // namespace

Table relabel(const Table& q, const Permutation& p) {
    const int n = q.order();
    if (p.size() != n)
        throw std::invalid_argument("relabeling size must match table order");
    std::vector<int> entries(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            entries[static_cast<size_t>(p(i) - 1) * n + (p(j) - 1)] = p(q.op(i, j));
    return Table(n, std::move(entries));
}

std::optional<Permutation> are_isomorphic(const Table& q, const Table& q2) {
    const int n = q.order();
    if (q2.order() != n)
        return std::nullopt;
    if (n == 0)
        return Permutation(0);

    const auto prof = profiles(q);
    const auto prof2 = profiles(q2);
    {
        auto lhs = prof;
        auto rhs = prof2;
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs != rhs)
            return std::nullopt;
    }

    std::vector<int> image(static_cast<size_t>(n) + 1, 0);
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);

    auto consistent = [&](int depth) {
        for (int i = 1; i <= depth; ++i)
            for (int j = 1; j <= depth; ++j) {
                const int v = q.op(i, j);
                if (v <= depth && image[static_cast<size_t>(v)] !=
                                      q2.op(image[static_cast<size_t>(i)], image[static_cast<size_t>(j)]))
                    return false;
            }
        return true;
    };

    auto search = [&](auto&& self, int depth) -> bool {
        if (depth > n)
            return true;
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<size_t>(v)] ||
                prof[static_cast<size_t>(depth) - 1] != prof2[static_cast<size_t>(v) - 1])
                continue;
            image[static_cast<size_t>(depth)] = v;
            used[static_cast<size_t>(v)] = 1;
            if (consistent(depth) && self(self, depth + 1))
                return true;
            used[static_cast<size_t>(v)] = 0;
        }
        image[static_cast<size_t>(depth)] = 0;
        return false;
    };
    if (!search(search, 1))
        return std::nullopt;
    return Permutation(std::vector<int>(image.begin() + 1, image.end()));
}

Permutation canonical_relabeling(const Table& q, int max_order) {
    const int n = q.order();
    if (n > max_order)
        throw BoundExceeded("canonical form search is limited to order " + std::to_string(max_order));
    if (n <= 1)
        return Permutation(n);

    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<size_t>(i)] = i + 1;
    std::vector<int> pinv(static_cast<size_t>(n) + 1);
    std::vector<int> best;
    std::vector<int> best_p;
    std::vector<int> candidate(static_cast<size_t>(n) * n);

    do {
        for (int i = 1; i <= n; ++i)
            pinv[static_cast<size_t>(p[static_cast<size_t>(i) - 1])] = i;
        bool worse = false;
        bool better = best.empty();
        for (int idx = 0; idx < n * n && !worse; ++idx) {
            const int r = idx / n + 1;
            const int c = idx % n + 1;
            const int v =
                p[static_cast<size_t>(q.op(pinv[static_cast<size_t>(r)], pinv[static_cast<size_t>(c)])) - 1];
            candidate[static_cast<size_t>(idx)] = v;
            if (!better) {
                if (v < best[static_cast<size_t>(idx)])
                    better = true;
                else if (v > best[static_cast<size_t>(idx)])
                    worse = true;
            }
        }
        if (!worse && better) {
            best = candidate;
            best_p = p;
        }
    } while (std::next_permutation(p.begin(), p.end()));

    return Permutation(std::move(best_p));
}

Table canonical_form(const Table& q, int max_order) {
    if (q.order() <= 1) {
        if (q.order() > max_order)
            throw BoundExceeded("canonical form search is limited to order " + std::to_string(max_order));
        return q;
    }
    return relabel(q, canonical_relabeling(q, max_order));
}

std::vector<Table> census(int n, int max_order) {
    if (n < 1)
        throw std::invalid_argument("census order must be at least 1");
    if (n > max_order)
        throw BoundExceeded("census is limited to order " + std::to_string(max_order) +
                            "; raise max_order explicitly (no runtime guarantee)");

    // candidate columns: permutations of 1..n fixing the column index
    std::vector<std::vector<std::vector<int>>> columns(static_cast<size_t>(n) + 1);
    {
        std::vector<int> p(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            p[static_cast<size_t>(i)] = i + 1;
        do {
            for (int j = 1; j <= n; ++j)
                if (p[static_cast<size_t>(j) - 1] == j)
                    columns[static_cast<size_t>(j)].push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }

    std::vector<int> table(static_cast<size_t>(n) * n, 0); // row-major
    auto at = [&](int i, int j) -> int& { return table[static_cast<size_t>(i - 1) * n + (j - 1)]; };

    // axiom (iii) over triples that become checkable once column c is set:
    // needs columns j, k and op(j,k) assigned
    auto check_new = [&](int c) {
        for (int j = 1; j <= c; ++j)
            for (int k = 1; k <= c; ++k) {
                const int v = at(j, k);
                if (v > c)
                    continue;
                if (j != c && k != c && v != c)
                    continue;
                for (int i = 1; i <= n; ++i)
                    if (at(at(i, j), k) != at(at(i, k), v))
                        return false;
            }
        return true;
    };

    std::set<Table> canon;
    auto search = [&](auto&& self, int c) -> void {
        if (c > n) {
            canon.insert(canonical_form(Table(n, table), std::max(n, 9)));
            return;
        }
        for (const auto& col : columns[static_cast<size_t>(c)]) {
            for (int i = 1; i <= n; ++i)
                at(i, c) = col[static_cast<size_t>(i) - 1];
            if (check_new(c))
                self(self, c + 1);
        }
        for (int i = 1; i <= n; ++i)
            at(i, c) = 0;
    };
    search(search, 1);
    return std::vector<Table>(canon.begin(), canon.end());
}

} // namespace quandle
