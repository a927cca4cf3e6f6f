#pragma once

#include "quandle/core.hpp"
#include "quandle/generators.hpp"

#include <vector>

// Shared fixture matrices used across the test suites.

namespace fixtures {

using quandle::Table;

// Alexander quandle of order 3, Z_3 with t = -1
inline Table q3() {
    return Table::from_rows({{1, 3, 2}, {3, 2, 1}, {2, 1, 3}});
}

// orbit decomposition T_3 ⊔ T_1, the singleton acting by a 3-cycle
inline Table t3_t1() {
    return Table::from_rows({{1, 1, 1, 2}, {2, 2, 2, 3}, {3, 3, 3, 1}, {4, 4, 4, 4}});
}

// subquandle depth 2, orbits {1,2} and {3,4}
inline Table depth2_4x4() {
    return Table::from_rows({{1, 1, 2, 2}, {2, 2, 1, 1}, {4, 4, 3, 3}, {3, 3, 4, 4}});
}

// Cartesian square of q3, connected
inline Table q3_x_q3() {
    return Table::from_rows({{1, 3, 2, 7, 9, 8, 4, 6, 5},
                             {3, 2, 1, 9, 8, 7, 6, 5, 4},
                             {2, 1, 3, 8, 7, 9, 5, 4, 6},
                             {7, 9, 8, 4, 6, 5, 1, 3, 2},
                             {9, 8, 7, 6, 5, 4, 3, 2, 1},
                             {8, 7, 9, 5, 4, 6, 2, 1, 3},
                             {4, 6, 5, 1, 3, 2, 7, 9, 8},
                             {6, 5, 4, 3, 2, 1, 9, 8, 7},
                             {5, 4, 6, 2, 1, 3, 8, 7, 9}});
}

// union of three two-element subquandles where {1,2} is not complemented;
// orbits {1,2,5}, {3}, {4}, {6}, depth 2
inline Table six_by_six() {
    return Table::from_rows({{1, 1, 2, 2, 1, 1},
                             {2, 2, 5, 5, 2, 2},
                             {3, 3, 3, 3, 3, 3},
                             {4, 4, 4, 4, 4, 4},
                             {5, 5, 1, 1, 5, 5},
                             {6, 6, 6, 6, 6, 6}});
}

inline std::vector<Table> reference_fixtures() {
    return {q3(), t3_t1(), depth2_4x4(), q3_x_q3(), six_by_six()};
}

// reference fixtures plus a few generated quandles, for property suites
inline std::vector<Table> property_fixtures() {
    auto out = reference_fixtures();
    out.push_back(quandle::trivial(1));
    out.push_back(quandle::trivial(4));
    out.push_back(quandle::dihedral(5));
    out.push_back(quandle::dihedral(9));
    out.push_back(quandle::alexander(5, 2));
    out.push_back(quandle::product(quandle::trivial(2), quandle::dihedral(3)));
    return out;
}

} // namespace fixtures
