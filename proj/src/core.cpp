#include "quandle/core.hpp"

#include <algorithm>

namespace quandle {

std::string AxiomViolation::describe() const {
    switch (axiom) {
    case Axiom::Idempotence:
        return "axiom (i) at i=" + std::to_string(witness[0]);
    case Axiom::RightInvertibility:
        return "axiom (ii) at column " + std::to_string(witness[0]) + ": value " +
               std::to_string(witness[1]) + " repeats";
    case Axiom::SelfDistributivity:
        return "axiom (iii) at (i,j,k)=(" + std::to_string(witness[0]) + "," +
               std::to_string(witness[1]) + "," + std::to_string(witness[2]) + ")";
    }
    return "unknown axiom";
}

Permutation::Permutation(int n) {
    if (n < 0)
        throw std::invalid_argument("permutation size must be nonnegative");
    images_.resize(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        images_[static_cast<size_t>(i) - 1] = i;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
            throw std::invalid_argument("image vector is not a bijection of 1..n");
        seen[static_cast<size_t>(v) - 1] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int a = 1; a <= size(); ++a)
        inv[static_cast<size_t>(images_[static_cast<size_t>(a) - 1]) - 1] = a;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (int a = 1; a <= size(); ++a)
        if ((*this)(a) != a)
            return false;
    return true;
}

Table::Table(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
    if (n < 0)
        throw std::invalid_argument("table order must be nonnegative");
    if (entries_.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw std::invalid_argument("table must have n*n entries");
    for (int v : entries_)
        if (v < 1 || v > n)
            throw std::invalid_argument("table entry out of range 1..n: " + std::to_string(v));
}

Table Table::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("table must be square");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return Table(n, std::move(entries));
}

int Table::inv_op(int a, int b) const {
    check_index(a);
    check_index(b);
    for (int z = 1; z <= n_; ++z)
        if (op(z, b) == a)
            return z;
    throw std::invalid_argument("column " + std::to_string(b) + " is not a permutation");
}

std::vector<std::vector<int>> Table::rows() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i)
        out[static_cast<size_t>(i)].assign(entries_.begin() + static_cast<long>(i) * n_,
                                           entries_.begin() + static_cast<long>(i + 1) * n_);
    return out;
}

std::optional<AxiomViolation> check_axioms(const Table& t) {
    const int n = t.order();
    for (int i = 1; i <= n; ++i)
        if (t.op(i, i) != i)
            return AxiomViolation{Axiom::Idempotence, {i, 0, 0}};
    std::vector<bool> seen(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        std::fill(seen.begin(), seen.end(), false);
        for (int i = 1; i <= n; ++i) {
            const int v = t.op(i, j);
            if (seen[static_cast<size_t>(v) - 1])
                return AxiomViolation{Axiom::RightInvertibility, {j, v, 0}};
            seen[static_cast<size_t>(v) - 1] = true;
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (t.op(t.op(i, j), k) != t.op(t.op(i, k), t.op(j, k)))
                    return AxiomViolation{Axiom::SelfDistributivity, {i, j, k}};
    return std::nullopt;
}

std::variant<Table, AxiomViolation> validate(Table t) {
    if (auto violation = check_axioms(t))
        return *violation;
    return t;
}

std::variant<Table, AxiomViolation> validate(const std::vector<std::vector<int>>& rows) {
    return validate(Table::from_rows(rows));
}

bool is_quandle(const Table& t) {
    return !check_axioms(t).has_value();
}

Table dual(const Table& q) {
    const int n = q.order();
    std::vector<int> entries(static_cast<size_t>(n) * n);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            entries[static_cast<size_t>(q.op(i, j) - 1) * n + (j - 1)] = i;
    return Table(n, std::move(entries));
}

Permutation column_permutation(const Table& q, int b) {
    const int n = q.order();
    std::vector<int> images(static_cast<size_t>(n));
    for (int a = 1; a <= n; ++a)
        images[static_cast<size_t>(a) - 1] = q.op(a, b);
    return Permutation(std::move(images));
}

} // namespace quandle
