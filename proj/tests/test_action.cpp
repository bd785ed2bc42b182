#include "gpd/action.hpp"

#include <doctest.h>

using namespace gpd;

namespace {

GSet swap_action(const FiniteGroupoid& c2) {
    // Non-identity element of C2 swaps {0, 1}.
    std::vector<std::vector<int>> act(2);
    act[static_cast<std::size_t>(c2.identity(0))] = {0, 1};
    act[static_cast<std::size_t>(c2.identity(0) == 0 ? 1 : 0)] = {1, 0};
    return GSet(c2, {2}, std::move(act));
}

GSet trivial_action(const FiniteGroupoid& c2, int points) {
    std::vector<int> ident(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) ident[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> act(2, ident);
    return GSet(c2, {points}, std::move(act));
}

GSet natural_s3_action(const FiniteGroupoid& s3) {
    // Morphism indices follow the lexicographic one-line enumeration of the
    // permutations of {0,1,2}; each acts by its own permutation.
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    return GSet(s3, {3}, std::move(perms));
}

}  // namespace

TEST_CASE("gset validation") {
    FiniteGroupoid c2 = cyclic_group(2);
    CHECK(check_gset(swap_action(c2)).empty());
    CHECK(check_gset(trivial_action(c2, 2)).empty());
    CHECK(check_gset(terminal_gset(pair_groupoid(3))).empty());
    CHECK(check_gset(representable_gset(product(cyclic_group(2), pair_groupoid(2)), 0)).empty());
    CHECK(check_gset(natural_s3_action(symmetric_group(3))).empty());

    // A non-bijective table is caught.
    GSet broken(c2, {2}, {{0, 1}, {0, 0}});
    CHECK(!check_gset(broken).empty());
}

TEST_CASE("action groupoid of the terminal G-set recovers the base") {
    FiniteGroupoid p2 = pair_groupoid(2);
    ActionGroupoid ag = action_groupoid(terminal_gset(p2));
    CHECK(ag.groupoid.object_count() == p2.object_count());
    CHECK(ag.groupoid.morphism_count() == p2.morphism_count());
    CHECK(ag.groupoid.component_count() == p2.component_count());
    CHECK(validate(ag.groupoid).empty());
}

TEST_CASE("action groupoid of the swap and trivial actions") {
    FiniteGroupoid c2 = cyclic_group(2);
    ActionGroupoid sw = action_groupoid(swap_action(c2));
    CHECK(sw.groupoid.object_count() == 2);
    // One morphism per pair (group element, start point).
    CHECK(sw.groupoid.morphism_count() == 4);
    CHECK(sw.groupoid.connected());
    CHECK(validate(sw.groupoid).empty());

    ActionGroupoid tr = action_groupoid(trivial_action(c2, 2));
    CHECK(tr.groupoid.object_count() == 2);
    CHECK(tr.groupoid.component_count() == 2);
    CHECK(tr.groupoid.isotropy_order(0) == 2);
    CHECK(validate(tr.groupoid).empty());
}

TEST_CASE("orbits") {
    FiniteGroupoid c2 = cyclic_group(2);
    CHECK(orbits(swap_action(c2)).members.size() == 1);
    CHECK(orbits(trivial_action(c2, 2)).members.size() == 2);
    CHECK(orbits(natural_s3_action(symmetric_group(3))).members.size() == 1);
}

TEST_CASE("stabilizers") {
    FiniteGroupoid c2 = cyclic_group(2);
    CHECK(stabilizer(trivial_action(c2, 2), 0, 0).morphisms().size() == 2);
    CHECK(stabilizer(swap_action(c2), 0, 0).morphisms().size() == 1);

    FiniteGroupoid s3 = symmetric_group(3);
    CHECK(stabilizer(natural_s3_action(s3), 0, 2).morphisms().size() == 2);
    CHECK_THROWS_AS(stabilizer(swap_action(c2), 0, 5), Error);
}

TEST_CASE("fixed points") {
    FiniteGroupoid c2 = cyclic_group(2);
    GSet sw = swap_action(c2);
    CHECK(fix(sw, c2.identity(0)).size() == 2);
    Mor sigma = c2.identity(0) == 0 ? 1 : 0;
    CHECK(fix(sw, sigma).empty());

    FiniteGroupoid s3 = symmetric_group(3);
    GSet nat = natural_s3_action(s3);
    CHECK(fix(nat, 2) == std::vector<int>{2});  // morphism 2 = [1,0,2]

    FiniteGroupoid p2 = pair_groupoid(2);
    CHECK_THROWS_AS(fix(terminal_gset(p2), 1), Error);  // (0,1) is not an endomorphism
}

TEST_CASE("cauchy-frobenius counts") {
    FiniteGroupoid c2 = cyclic_group(2);
    CHECK(cf_count(swap_action(c2)) == Rat(1));
    CHECK(cf_count(trivial_action(c2, 2)) == Rat(2));
    CHECK(cf_count(natural_s3_action(symmetric_group(3))) == Rat(1));
    CHECK(cf_count(terminal_gset(coproduct(pair_groupoid(2), cyclic_group(3)))) == Rat(2));
}

TEST_CASE("orbit-stabilizer identity") {
    FiniteGroupoid c2 = cyclic_group(2);
    CHECK(orbit_stabilizer_check(swap_action(c2)).empty());
    CHECK(orbit_stabilizer_check(trivial_action(c2, 3)).empty());
    CHECK(orbit_stabilizer_check(natural_s3_action(symmetric_group(3))).empty());
    FiniteGroupoid g = product(cyclic_group(2), pair_groupoid(2));
    CHECK(orbit_stabilizer_check(representable_gset(g, 1)).empty());
}

TEST_CASE("transitivity predicate") {
    FiniteGroupoid c2 = cyclic_group(2);
    CHECK(transitive(swap_action(c2)));
    CHECK(!transitive(trivial_action(c2, 2)));
}

TEST_CASE("gset combinators keep functoriality") {
    FiniteGroupoid g = product(cyclic_group(2), pair_groupoid(2));
    GSet a = representable_gset(g, 0);
    GSet b = terminal_gset(g);
    GSet u = disjoint_union(a, b);
    CHECK(check_gset(u).empty());
    CHECK(u.total_elements() == a.total_elements() + b.total_elements());
    GSet p = product_gset(a, a);
    CHECK(check_gset(p).empty());
    // Counting orbits twice over the union is consistent.
    CHECK(orbits(u).members.size() == orbits(a).members.size() + orbits(b).members.size());
}
