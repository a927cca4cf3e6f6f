#include "quandle/generators.hpp"

#include <numeric>

namespace quandle {

namespace {

int floor_mod(long long v, int n) {
    long long m = v % n;
    if (m < 0)
        m += n;
    return static_cast<int>(m);
}

} // namespace

Table trivial(int n) {
    if (n < 1)
        throw std::invalid_argument("trivial quandle order must be at least 1");
    std::vector<int> entries(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            entries[static_cast<size_t>(i - 1) * n + (j - 1)] = i;
    return Table(n, std::move(entries));
}

Table alexander(int n, int t) {
    if (n < 1)
        throw std::invalid_argument("alexander quandle order must be at least 1");
    if (std::gcd(t, n) != 1)
        throw std::invalid_argument("alexander quandle requires gcd(t, n) = 1");
    const int tm = floor_mod(t, n);
    const int um = floor_mod(1LL - t, n); // 1 - t
    std::vector<int> entries(static_cast<size_t>(n) * n);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            entries[static_cast<size_t>(a - 1) * n + (b - 1)] =
                floor_mod(static_cast<long long>(tm) * (a - 1) + static_cast<long long>(um) * (b - 1), n) + 1;
    return Table(n, std::move(entries));
}

Table dihedral(int n) {
    if (n < 1)
        throw std::invalid_argument("dihedral quandle order must be at least 1");
    return alexander(n, -1);
}

Table conjugation(const Table& cayley) {
    const int n = cayley.order();
    if (n < 1)
        throw std::invalid_argument("group table must have order at least 1");

    int identity = 0;
    for (int e = 1; e <= n; ++e) {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i)
            ok = cayley.op(e, i) == i && cayley.op(i, e) == i;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity == 0)
        throw std::invalid_argument("not a group table: no identity element");

    std::vector<int> inverse(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (cayley.op(i, j) == identity && cayley.op(j, i) == identity) {
                inverse[static_cast<size_t>(i)] = j;
                break;
            }
        }
        if (inverse[static_cast<size_t>(i)] == 0)
            throw std::invalid_argument("not a group table: element " + std::to_string(i) +
                                        " has no inverse");
    }

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (cayley.op(cayley.op(i, j), k) != cayley.op(i, cayley.op(j, k)))
                    throw std::invalid_argument("not a group table: multiplication not associative");

    std::vector<int> entries(static_cast<size_t>(n) * n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            entries[static_cast<size_t>(x - 1) * n + (y - 1)] =
                cayley.op(inverse[static_cast<size_t>(y)], cayley.op(x, y));
    return Table(n, std::move(entries));
}

Table product(const Table& q, const Table& q2) {
    const int n = q.order();
    const int m = q2.order();
    const int nm = n * m;
    std::vector<int> entries(static_cast<size_t>(nm) * nm);
    for (int a = 1; a <= n; ++a)
        for (int x = 1; x <= m; ++x)
            for (int b = 1; b <= n; ++b)
                for (int y = 1; y <= m; ++y) {
                    const int row = (a - 1) * m + x;
                    const int col = (b - 1) * m + y;
                    entries[static_cast<size_t>(row - 1) * nm + (col - 1)] =
                        (q.op(a, b) - 1) * m + q2.op(x, y);
                }
    return Table(nm, std::move(entries));
}

} // namespace quandle
