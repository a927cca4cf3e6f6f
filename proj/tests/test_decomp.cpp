#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quandle/decomp.hpp"
#include "quandle/generators.hpp"
#include "quandle/isomorph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace quandle;

TEST_CASE("closed subsets") {
    const auto six = fixtures::six_by_six();
    CHECK(is_closed_subset(six, {1, 2}));
    CHECK(is_closed_subset(six, {3, 4}));
    CHECK_FALSE(is_closed_subset(six, {1, 2, 3})); // op(2,3) = 5

    for (const auto& q : fixtures::reference_fixtures())
        for (int a = 1; a <= q.order(); ++a)
            CHECK(is_closed_subset(q, {a}));

    CHECK_FALSE(is_closed_subset(fixtures::depth2_4x4(), {1, 3})); // op(1,3) = 2
    CHECK(is_closed_subset(fixtures::q3(), {}));
    CHECK_THROWS_AS(is_closed_subset(fixtures::q3(), {4}), std::out_of_range);
}

TEST_CASE("complemented subquandles") {
    CHECK(is_complemented(fixtures::depth2_4x4(), {1, 2}));
    CHECK_FALSE(is_complemented(fixtures::six_by_six(), {1, 2}));
    for (const auto& q : fixtures::reference_fixtures()) {
        std::vector<int> full(static_cast<size_t>(q.order()));
        for (int a = 1; a <= q.order(); ++a)
            full[static_cast<size_t>(a) - 1] = a;
        CHECK(is_complemented(q, full));
    }
    // a non-closed subset is a contract violation, not a false result
    CHECK_THROWS_AS(is_complemented(fixtures::depth2_4x4(), {1, 3}), std::invalid_argument);
}

TEST_CASE("orbits") {
    CHECK(orbit(fixtures::q3(), 1) == std::vector<int>{1, 2, 3});
    for (int a = 1; a <= 4; ++a)
        CHECK(orbit(trivial(4), a) == std::vector<int>{a});
    CHECK(orbit(fixtures::t3_t1(), 1) == std::vector<int>{1, 2, 3});

    // forward closure agrees with the definition's two-sided closure
    for (const auto& q : fixtures::property_fixtures())
        for (int a = 1; a <= q.order(); ++a)
            CHECK(orbit(q, a) == oracles::two_sided_orbit(q, a));

    CHECK_THROWS_AS(orbit(fixtures::q3(), 0), std::out_of_range);
    CHECK_THROWS_AS(orbit(fixtures::q3(), 4), std::out_of_range);
}

TEST_CASE("orbit decomposition") {
    using Parts = std::vector<std::vector<int>>;
    CHECK(orbit_decomposition(fixtures::depth2_4x4()).parts == Parts{{1, 2}, {3, 4}});
    CHECK(orbit_decomposition(fixtures::q3_x_q3()).parts ==
          Parts{{1, 2, 3, 4, 5, 6, 7, 8, 9}});
    CHECK(orbit_decomposition(trivial(3)).parts == Parts{{1}, {2}, {3}});
    CHECK(orbit_decomposition(fixtures::six_by_six()).parts == Parts{{1, 2, 5}, {3}, {4}, {6}});

    for (const auto& q : fixtures::property_fixtures()) {
        const auto parts = orbit_decomposition(q).parts;
        int covered = 0;
        for (const auto& part : parts) {
            covered += static_cast<int>(part.size());
            CHECK(is_closed_subset(q, part));
            CHECK(is_complemented(q, part));
            CHECK(is_quandle(restrict_to(q, part).table));
        }
        CHECK(covered == q.order());
    }
}

TEST_CASE("minimal complemented subquandles agree with orbits") {
    CHECK(minimal_complemented(fixtures::depth2_4x4(), 1) == std::vector<int>{1, 2});
    CHECK(minimal_complemented(trivial(3), 2) == std::vector<int>{2});
    for (int a = 1; a <= 9; ++a)
        CHECK(minimal_complemented(fixtures::q3_x_q3(), a).size() == 9);
    for (int a = 1; a <= 3; ++a)
        CHECK(minimal_complemented(fixtures::q3(), a) == std::vector<int>{1, 2, 3});

    // independent oracle: {S(a)} equals the orbit decomposition, on the
    // reference fixtures and the whole census through order 5
    auto subjects = fixtures::reference_fixtures();
    for (int n : {3, 4, 5})
        for (const auto& q : census(n))
            subjects.push_back(q);
    for (const auto& q : subjects) {
        std::set<std::vector<int>> from_oracle;
        for (int a = 1; a <= q.order(); ++a)
            from_oracle.insert(minimal_complemented(q, a));
        std::set<std::vector<int>> from_orbits;
        for (const auto& part : orbit_decomposition(q).parts)
            from_orbits.insert(part);
        CHECK(from_oracle == from_orbits);
    }

    CHECK_THROWS_AS(minimal_complemented(product(fixtures::q3_x_q3(), trivial(2)), 1),
                    BoundExceeded);
}

TEST_CASE("connectedness") {
    CHECK(is_connected(fixtures::q3_x_q3()));
    CHECK_FALSE(is_connected(trivial(2)));
    CHECK(is_connected(dihedral(9)));
    CHECK(is_connected(trivial(1)));
    CHECK_FALSE(is_connected(dihedral(4)));
}

TEST_CASE("subquandle depth") {
    CHECK(subquandle_depth(fixtures::depth2_4x4()) == 2);
    CHECK(subquandle_depth(fixtures::q3_x_q3()) == 0);
    CHECK(subquandle_depth(trivial(3)) == 1);
    CHECK(subquandle_depth(fixtures::six_by_six()) == 2);
    CHECK(subquandle_depth(fixtures::t3_t1()) == 2);
    CHECK(subquandle_depth(trivial(1)) == 0);

    // isomorphism invariance under random relabelings
    std::mt19937 rng(7);
    for (const auto& q : fixtures::reference_fixtures()) {
        const int expected = subquandle_depth(q);
        std::vector<int> images(static_cast<size_t>(q.order()));
        for (int i = 0; i < q.order(); ++i)
            images[static_cast<size_t>(i)] = i + 1;
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(images.begin(), images.end(), rng);
            CHECK(subquandle_depth(relabel(q, Permutation(images))) == expected);
        }
    }
}

TEST_CASE("all subquandles") {
    using Sets = std::vector<std::vector<int>>;
    CHECK(all_subquandles(trivial(2)) == Sets{{}, {1}, {2}, {1, 2}});
    CHECK(all_subquandles(fixtures::q3()) == Sets{{}, {1}, {2}, {3}, {1, 2, 3}});

    // oracle: direct scan over every subset
    for (const auto& q : {fixtures::t3_t1(), fixtures::depth2_4x4(), fixtures::six_by_six()}) {
        std::set<std::vector<int>> expected;
        for (unsigned mask = 0; mask < (1u << q.order()); ++mask) {
            std::vector<int> subset;
            for (int a = 1; a <= q.order(); ++a)
                if (mask >> (a - 1) & 1u)
                    subset.push_back(a);
            if (is_closed_subset(q, subset))
                expected.insert(subset);
        }
        const auto got = all_subquandles(q);
        CHECK(got.size() == expected.size());
        for (const auto& s : got)
            CHECK(expected.count(s) == 1);
        // closed under pairwise intersection
        for (const auto& x : got)
            for (const auto& y : got) {
                std::vector<int> meet;
                std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                                      std::back_inserter(meet));
                CHECK(expected.count(meet) == 1);
            }
    }

    CHECK_THROWS_AS(all_subquandles(product(fixtures::q3_x_q3(), trivial(2))), BoundExceeded);
}

TEST_CASE("restriction relabels parts") {
    const auto six = fixtures::six_by_six();
    const auto sub = restrict_to(six, {1, 2, 5});
    CHECK(sub.labels == std::vector<int>{1, 2, 5});
    CHECK(sub.table == trivial(3));
    CHECK_THROWS_AS(restrict_to(six, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("isomorphic quandles decompose isomorphically") {
    std::mt19937 rng(11);
    for (const auto& q : {fixtures::t3_t1(), fixtures::six_by_six(), dihedral(4)}) {
        auto signature = [](const Table& t) {
            std::multiset<std::pair<int, Table>> sig;
            for (const auto& part : orbit_decomposition(t).parts) {
                auto sub = restrict_to(t, part);
                sig.emplace(static_cast<int>(part.size()), canonical_form(sub.table));
            }
            return sig;
        };
        std::vector<int> images(static_cast<size_t>(q.order()));
        for (int i = 0; i < q.order(); ++i)
            images[static_cast<size_t>(i)] = i + 1;
        std::shuffle(images.begin(), images.end(), rng);
        CHECK(signature(q) == signature(relabel(q, Permutation(images))));
    }
}
