#include "quandle/decomp.hpp"

#include <algorithm>

namespace quandle {

namespace {

constexpr int kMinimalComplementedBound = 16;

std::vector<char> membership(const Table& q, const std::vector<int>& xs) {
    std::vector<char> in(static_cast<size_t>(q.order()) + 1, 0);
    for (int x : xs) {
        if (x < 1 || x > q.order())
            throw std::out_of_range("subset element out of range: " + std::to_string(x));
        in[static_cast<size_t>(x)] = 1;
    }
    return in;
}

bool mask_closed(const Table& q, unsigned long long mask) {
    const int n = q.order();
    for (int a = 1; a <= n; ++a) {
        if (!(mask >> (a - 1) & 1ull))
            continue;
        for (int b = 1; b <= n; ++b) {
            if (!(mask >> (b - 1) & 1ull))
                continue;
            if (!(mask >> (q.op(a, b) - 1) & 1ull))
                return false;
        }
    }
    return true;
}

std::vector<int> mask_to_set(unsigned long long mask, int n) {
    std::vector<int> out;
    for (int a = 1; a <= n; ++a)
        if (mask >> (a - 1) & 1ull)
            out.push_back(a);
    return out;
}

} // namespace

bool is_closed_subset(const Table& q, const std::vector<int>& xs) {
    const auto in = membership(q, xs);
    for (int a : xs)
        for (int b : xs)
            if (!in[static_cast<size_t>(q.op(a, b))])
                return false;
    return true;
}

bool is_complemented(const Table& q, const std::vector<int>& xs) {
    if (!is_closed_subset(q, xs))
        throw std::invalid_argument("is_complemented requires a closed subset");
    const auto in = membership(q, xs);
    std::vector<int> complement;
    for (int a = 1; a <= q.order(); ++a)
        if (!in[static_cast<size_t>(a)])
            complement.push_back(a);
    return is_closed_subset(q, complement);
}

std::vector<int> orbit(const Table& q, int a) {
    const int n = q.order();
    if (a < 1 || a > n)
        throw std::out_of_range("element index out of range: " + std::to_string(a));
    std::vector<char> in(static_cast<size_t>(n) + 1, 0);
    std::vector<int> queue{a};
    in[static_cast<size_t>(a)] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        for (int b = 1; b <= n; ++b) {
            const int y = q.op(x, b);
            if (!in[static_cast<size_t>(y)]) {
                in[static_cast<size_t>(y)] = 1;
                queue.push_back(y);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

OrbitDecomposition orbit_decomposition(const Table& q) {
    OrbitDecomposition decomposition;
    std::vector<char> assigned(static_cast<size_t>(q.order()) + 1, 0);
    for (int a = 1; a <= q.order(); ++a) {
        if (assigned[static_cast<size_t>(a)])
            continue;
        auto part = orbit(q, a);
        for (int x : part)
            assigned[static_cast<size_t>(x)] = 1;
        decomposition.parts.push_back(std::move(part));
    }
    return decomposition;
}

std::vector<int> minimal_complemented(const Table& q, int a) {
    const int n = q.order();
    if (a < 1 || a > n)
        throw std::out_of_range("element index out of range: " + std::to_string(a));
    if (n > kMinimalComplementedBound)
        throw BoundExceeded("minimal_complemented subset scan is limited to order " +
                            std::to_string(kMinimalComplementedBound));

    const unsigned long long full = (1ull << n) - 1;
    std::vector<char> closed(static_cast<size_t>(full) + 1);
    for (unsigned long long mask = 0; mask <= full; ++mask)
        closed[static_cast<size_t>(mask)] = mask_closed(q, mask);

    unsigned long long intersection = full;
    for (unsigned long long mask = 0; mask <= full; ++mask) {
        if (!(mask >> (a - 1) & 1ull))
            continue;
        if (closed[static_cast<size_t>(mask)] && closed[static_cast<size_t>(full & ~mask)])
            intersection &= mask;
    }
    return mask_to_set(intersection, n);
}

bool is_connected(const Table& q) {
    return orbit_decomposition(q).parts.size() == 1;
}

int subquandle_depth(const Table& q) {
    if (q.order() <= 1)
        return 0;
    const auto decomposition = orbit_decomposition(q);
    if (decomposition.parts.size() == 1)
        return 0;
    int deepest = 0;
    for (const auto& part : decomposition.parts)
        deepest = std::max(deepest, subquandle_depth(restrict_to(q, part).table));
    return 1 + deepest;
}

std::vector<std::vector<int>> all_subquandles(const Table& q, int max_order) {
    const int n = q.order();
    if (n > max_order)
        throw BoundExceeded("all_subquandles enumeration is limited to order " +
                            std::to_string(max_order));
    std::vector<std::vector<int>> out;
    const unsigned long long top = 1ull << n;
    for (unsigned long long mask = 0; mask < top; ++mask)
        if (mask_closed(q, mask))
            out.push_back(mask_to_set(mask, n));
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size())
            return x.size() < y.size();
        return x < y;
    });
    return out;
}

Subquandle restrict_to(const Table& q, const std::vector<int>& part) {
    if (!is_closed_subset(q, part))
        throw std::invalid_argument("restriction requires a closed subset");
    std::vector<int> labels = part;
    std::sort(labels.begin(), labels.end());
    std::vector<int> position(static_cast<size_t>(q.order()) + 1, 0);
    const int k = static_cast<int>(labels.size());
    for (int i = 1; i <= k; ++i)
        position[static_cast<size_t>(labels[static_cast<size_t>(i) - 1])] = i;
    std::vector<int> entries(static_cast<size_t>(k) * k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            entries[static_cast<size_t>(i - 1) * k + (j - 1)] = position[static_cast<size_t>(
                q.op(labels[static_cast<size_t>(i) - 1], labels[static_cast<size_t>(j) - 1]))];
    return Subquandle{Table(k, std::move(entries)), std::move(labels)};
}

} // namespace quandle
