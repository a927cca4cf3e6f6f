#include "quandle/actions.hpp"

#include <algorithm>
#include <cmath>

namespace quandle {

namespace {

constexpr double kRackActionCandidateBudget = 1e8;

void check_well_formed(const RackAction& a) {
    if (static_cast<int>(a.maps.size()) != a.source.order())
        throw std::invalid_argument("rack action needs one map per source element");
    for (const auto& p : a.maps)
        if (p.size() != a.target.order())
            throw std::invalid_argument("rack action map size must match target order");
}

} // namespace

bool is_automorphism(const Table& q, const Permutation& p) {
    const int n = q.order();
    if (p.size() != n)
        throw std::invalid_argument("permutation size must match quandle order");
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (p(q.op(a, b)) != q.op(p(a), p(b)))
                return false;
    return true;
}

std::vector<Permutation> automorphisms(const Table& q, int max_order) {
    const int n = q.order();
    if (n > max_order)
        throw BoundExceeded("automorphism search is limited to order " + std::to_string(max_order));
    std::vector<Permutation> found;
    std::vector<int> image(static_cast<size_t>(n) + 1, 0);
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);

    // partial homomorphism check for all pairs whose images are known
    auto consistent = [&](int depth) {
        for (int i = 1; i <= depth; ++i)
            for (int j = 1; j <= depth; ++j) {
                const int v = q.op(i, j);
                if (v <= depth && image[static_cast<size_t>(v)] !=
                                      q.op(image[static_cast<size_t>(i)], image[static_cast<size_t>(j)]))
                    return false;
            }
        return true;
    };

    auto search = [&](auto&& self, int depth) -> void {
        if (depth > n) {
            std::vector<int> images(image.begin() + 1, image.end());
            found.emplace_back(std::move(images));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<size_t>(v)])
                continue;
            image[static_cast<size_t>(depth)] = v;
            used[static_cast<size_t>(v)] = 1;
            if (consistent(depth))
                self(self, depth + 1);
            used[static_cast<size_t>(v)] = 0;
        }
        image[static_cast<size_t>(depth)] = 0;
    };
    search(search, 1);
    return found; // candidates tried in ascending order, so already lexicographic
}

std::optional<RackActionViolation> verify_rack_action(const RackAction& a) {
    check_well_formed(a);
    const int k = a.source.order();
    const int m = a.target.order();
    for (int r = 1; r <= k; ++r) {
        const auto& phi = a.maps[static_cast<size_t>(r) - 1];
        for (int x = 1; x <= m; ++x)
            for (int y = 1; y <= m; ++y)
                if (phi(a.target.op(x, y)) != a.target.op(phi(x), phi(y)))
                    return RackActionViolation{RackActionDefect::NotAutomorphism, {r, x, y}};
    }
    for (int r = 1; r <= k; ++r)
        for (int r2 = 1; r2 <= k; ++r2) {
            const auto& outer = a.maps[static_cast<size_t>(r) - 1];
            const auto& inner = a.maps[static_cast<size_t>(r2) - 1];
            const auto& twisted = a.maps[static_cast<size_t>(a.source.op(r2, r)) - 1];
            for (int s = 1; s <= m; ++s)
                if (outer(inner(s)) != twisted(outer(s)))
                    return RackActionViolation{RackActionDefect::RackLaw, {r, r2, s}};
        }
    return std::nullopt;
}

std::vector<RackAction> enumerate_rack_actions(const Table& r, const Table& s) {
    const int k = r.order();
    const auto auts = automorphisms(s);
    if (std::pow(static_cast<double>(auts.size()), k) > kRackActionCandidateBudget)
        throw BoundExceeded("rack action enumeration: |Aut(S)|^|R| exceeds the search budget");

    std::vector<RackAction> found;
    std::vector<int> choice(static_cast<size_t>(k), -1); // index into auts per source element

    // rack law over assigned triples: phi_a(phi_b(s)) = phi_{b > a}(phi_a(s))
    auto law_holds = [&](int depth) {
        for (int x = 1; x <= depth; ++x)
            for (int y = 1; y <= depth; ++y) {
                const int t = r.op(y, x);
                if (t > depth)
                    continue;
                const auto& outer = auts[static_cast<size_t>(choice[static_cast<size_t>(x) - 1])];
                const auto& inner = auts[static_cast<size_t>(choice[static_cast<size_t>(y) - 1])];
                const auto& twisted = auts[static_cast<size_t>(choice[static_cast<size_t>(t) - 1])];
                for (int e = 1; e <= s.order(); ++e)
                    if (outer(inner(e)) != twisted(outer(e)))
                        return false;
            }
        return true;
    };

    auto search = [&](auto&& self, int depth) -> void {
        if (depth > k) {
            std::vector<Permutation> maps;
            maps.reserve(static_cast<size_t>(k));
            for (int x = 0; x < k; ++x)
                maps.push_back(auts[static_cast<size_t>(choice[static_cast<size_t>(x)])]);
            found.push_back(RackAction{r, s, std::move(maps)});
            return;
        }
        for (size_t c = 0; c < auts.size(); ++c) {
            choice[static_cast<size_t>(depth) - 1] = static_cast<int>(c);
            if (law_holds(depth))
                self(self, depth + 1);
        }
        choice[static_cast<size_t>(depth) - 1] = -1;
    };
    if (k == 0)
        found.push_back(RackAction{r, s, {}});
    else
        search(search, 1);
    return found;
}

RackAction self_action(const Table& q) {
    std::vector<Permutation> maps;
    maps.reserve(static_cast<size_t>(q.order()));
    for (int b = 1; b <= q.order(); ++b)
        maps.push_back(column_permutation(q, b));
    return RackAction{q, q, std::move(maps)};
}

} // namespace quandle
