#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Finite quandles as n x n operation matrices, 1-based: entry (i,j) = k
// means x_i > x_j = x_k. Axioms:
//   (i)   x > x = x
//   (ii)  for each y, the map x -> x > y is a bijection
//   (iii) (x > y) > z = (x > z) > (y > z)

namespace quandle {

// Thrown when an operation would exceed its documented search bound.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Axiom {
    Idempotence,        // (i)
    RightInvertibility, // (ii)
    SelfDistributivity, // (iii)
};

struct AxiomViolation {
    Axiom axiom;
    // Idempotence: {i, 0, 0}; RightInvertibility: {column, repeated value, 0};
    // SelfDistributivity: {i, j, k}.
    std::array<int, 3> witness{};

    std::string describe() const;
};

// A bijection of {1..n}, stored as the image vector.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n); // identity
    explicit Permutation(std::vector<int> images);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int a) const { return images_[static_cast<size_t>(a) - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// An n x n matrix with entries in 1..n, row-major. Shape and entry range are
// enforced on construction; the quandle axioms are checked by validate().
// The same container carries group Cayley tables (see generators).
class Table {
public:
    Table() = default; // the empty quandle
    Table(int n, std::vector<int> entries);
    static Table from_rows(const std::vector<std::vector<int>>& rows);

    int order() const { return n_; }
    bool empty() const { return n_ == 0; }

    // x_a > x_b
    int op(int a, int b) const {
        check_index(a);
        check_index(b);
        return entries_[static_cast<size_t>(a - 1) * n_ + (b - 1)];
    }
    // the unique z with z > b = a (dual operation a >^-1 b)
    int inv_op(int a, int b) const;

    const std::vector<int>& entries() const { return entries_; }
    std::vector<std::vector<int>> rows() const;

    friend auto operator<=>(const Table&, const Table&) = default;

private:
    void check_index(int a) const {
        if (a < 1 || a > n_)
            throw std::out_of_range("element index out of range: " + std::to_string(a));
    }

    int n_ = 0;
    std::vector<int> entries_; // row-major, n_ * n_
};

// First violation in documented scan order: axiom (i) by row index, then
// axiom (ii) by column index, then axiom (iii) lexicographically by (i,j,k).
std::optional<AxiomViolation> check_axioms(const Table& t);

std::variant<Table, AxiomViolation> validate(Table t);
std::variant<Table, AxiomViolation> validate(const std::vector<std::vector<int>>& rows);
bool is_quandle(const Table& t);

// The dual quandle: each column replaced by its inverse permutation.
Table dual(const Table& q);

// f_b : a -> a > b.
Permutation column_permutation(const Table& q, int b);

} // namespace quandle
