#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quandle/actions.hpp"
#include "quandle/generators.hpp"

#include <algorithm>
#include <set>

using namespace quandle;

TEST_CASE("automorphism recognition") {
    const auto q3 = fixtures::q3();
    for (int b = 1; b <= 3; ++b)
        CHECK(is_automorphism(q3, column_permutation(q3, b)));
    for (const auto& p : oracles::all_permutations(4))
        CHECK(is_automorphism(trivial(4), p));
    CHECK(is_automorphism(q3, Permutation({2, 1, 3})));
    CHECK_THROWS_AS(is_automorphism(q3, Permutation({1, 2})), std::invalid_argument);
}

TEST_CASE("automorphism enumeration") {
    CHECK(automorphisms(trivial(3)).size() == 6);
    CHECK(automorphisms(trivial(1)) == std::vector<Permutation>{Permutation(1)});

    // oracle: filter every bijection
    for (const auto& q : {fixtures::q3(), fixtures::t3_t1(), fixtures::depth2_4x4(), dihedral(5)}) {
        std::vector<Permutation> expected;
        for (const auto& p : oracles::all_permutations(q.order()))
            if (is_automorphism(q, p))
                expected.push_back(p);
        CHECK(automorphisms(q) == expected); // same set, same lexicographic order
    }
    CHECK(automorphisms(fixtures::q3()).size() == 6);

    // group structure: identity, closure under composition and inverse
    for (const auto& q : {fixtures::q3(), fixtures::depth2_4x4()}) {
        const auto auts = automorphisms(q);
        std::set<std::vector<int>> members;
        for (const auto& p : auts)
            members.insert(p.images());
        CHECK(members.count(Permutation(q.order()).images()) == 1);
        for (const auto& p : auts) {
            CHECK(members.count(p.inverse().images()) == 1);
            for (const auto& r : auts) {
                std::vector<int> composed(static_cast<size_t>(q.order()));
                for (int a = 1; a <= q.order(); ++a)
                    composed[static_cast<size_t>(a) - 1] = r(p(a));
                CHECK(members.count(composed) == 1);
            }
        }
        // inner maps are automorphisms
        for (int b = 1; b <= q.order(); ++b)
            CHECK(members.count(column_permutation(q, b).images()) == 1);
    }
}

TEST_CASE("rack action verification") {
    // a quandle acts on itself by its columns
    for (const auto& q : fixtures::property_fixtures())
        CHECK_FALSE(verify_rack_action(self_action(q)).has_value());

    // T_1 acting on T_3 by a 3-cycle
    const RackAction cycle{trivial(1), trivial(3), {Permutation({2, 3, 1})}};
    CHECK_FALSE(verify_rack_action(cycle).has_value());

    // source trivial(2) forces the two maps to commute; (12) and (13) do not
    const RackAction clash{trivial(2), fixtures::q3(),
                           {Permutation({2, 1, 3}), Permutation({3, 2, 1})}};
    const auto violation = verify_rack_action(clash);
    REQUIRE(violation.has_value());
    CHECK(violation->kind == RackActionDefect::RackLaw);
    CHECK(violation->witness == std::array<int, 3>{1, 2, 1});

    // a map that is no automorphism of the target
    const RackAction broken{trivial(1), fixtures::depth2_4x4(), {Permutation({2, 3, 4, 1})}};
    const auto not_auto = verify_rack_action(broken);
    REQUIRE(not_auto.has_value());
    CHECK(not_auto->kind == RackActionDefect::NotAutomorphism);

    CHECK_THROWS_AS(verify_rack_action(RackAction{trivial(2), trivial(3), {Permutation(3)}}),
                    std::invalid_argument);
}

TEST_CASE("rack action enumeration") {
    CHECK(enumerate_rack_actions(trivial(1), trivial(3)).size() == 6);
    for (const auto& q : {trivial(3), fixtures::q3(), fixtures::depth2_4x4()})
        CHECK(enumerate_rack_actions(q, trivial(1)).size() == 1);
    CHECK(enumerate_rack_actions(trivial(2), trivial(2)).size() == 4);

    // enumeration agrees with verification: every output passes, and the
    // count matches a raw filter over all |Aut(S)|^|R| assignments
    for (const auto& [r, s] : {std::pair{trivial(2), fixtures::q3()},
                               std::pair{fixtures::q3(), trivial(2)},
                               std::pair{trivial(2), trivial(3)},
                               std::pair{fixtures::q3(), fixtures::q3()}}) {
        const auto found = enumerate_rack_actions(r, s);
        for (const auto& action : found)
            CHECK_FALSE(verify_rack_action(action).has_value());

        const auto auts = automorphisms(s);
        size_t expected = 0;
        std::vector<size_t> pick(static_cast<size_t>(r.order()), 0);
        while (true) {
            RackAction candidate{r, s, {}};
            for (size_t i = 0; i < pick.size(); ++i)
                candidate.maps.push_back(auts[pick[i]]);
            if (!verify_rack_action(candidate).has_value())
                ++expected;
            size_t c = 0;
            while (c < pick.size() && ++pick[c] == auts.size()) {
                pick[c] = 0;
                ++c;
            }
            if (c == pick.size())
                break;
        }
        CHECK(found.size() == expected);
    }

    // the self action appears among the enumerated actions of q on itself
    const auto q3 = fixtures::q3();
    const auto self = self_action(q3);
    bool present = false;
    for (const auto& action : enumerate_rack_actions(q3, q3))
        present = present || action.maps == self.maps;
    CHECK(present);
}
