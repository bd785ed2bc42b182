#include "gpd/coset.hpp"

#include <doctest.h>

#include <set>

using namespace gpd;

TEST_CASE("left cosets") {
    FiniteGroupoid p2 = pair_groupoid(2);
    LeftCosetGSet full = left_cosets(p2, Subgroupoid::full(p2));
    CHECK(full.gset.carrier_size == std::vector<int>{1, 1});
    CHECK(check_gset(full.gset).empty());

    LeftCosetGSet disc = left_cosets(p2, Subgroupoid::discrete_wide(p2));
    CHECK(disc.gset.carrier_size == std::vector<int>{2, 2});
    CHECK(check_gset(disc.gset).empty());

    FiniteGroupoid s3 = symmetric_group(3);
    LeftCosetGSet s = left_cosets(s3, closure(s3, {2}, true));
    CHECK(s.gset.carrier_size == std::vector<int>{3});
    CHECK(check_gset(s.gset).empty());

    CHECK_THROWS_AS(left_cosets(s3, Subgroupoid(p2, {0}, {0})), Error);
}

TEST_CASE("double cosets by closure") {
    FiniteGroupoid p2 = pair_groupoid(2);
    Subgroupoid d = Subgroupoid::discrete_wide(p2);
    DoubleCosetPartition dc = double_cosets(p2, d, d);
    CHECK(dc.blocks.size() == 4);
    for (const auto& b : dc.blocks) CHECK(b.size() == 1);

    FiniteGroupoid g = product(cyclic_group(3), pair_groupoid(2));
    DoubleCosetPartition one = double_cosets(g, Subgroupoid::full(g), Subgroupoid::full(g));
    CHECK(one.blocks.size() == 1);

    FiniteGroupoid s3 = symmetric_group(3);
    Subgroupoid h = closure(s3, {2}, true);
    DoubleCosetPartition s = double_cosets(s3, h, h);
    REQUIRE(s.blocks.size() == 2);
    std::multiset<std::size_t> sizes = {s.blocks[0].size(), s.blocks[1].size()};
    CHECK(sizes == std::multiset<std::size_t>{2, 4});

    // Blocks are stable under one more sweep of g -> h g k.
    for (Mor hm : h.morphisms())
        for (Mor a = 0; a < s3.morphism_count(); ++a)
            for (Mor km : h.morphisms()) {
                Mor moved = s3.compose(hm, s3.compose(a, km));
                CHECK(s.block_of[static_cast<std::size_t>(moved)] ==
                      s.block_of[static_cast<std::size_t>(a)]);
            }
}

TEST_CASE("double coset size formula matches brute force everywhere") {
    struct Fixture {
        FiniteGroupoid g;
        Subgroupoid h, k;
    };
    auto make = [](FiniteGroupoid gg, auto hf, auto kf) {
        auto g = std::make_unique<FiniteGroupoid>(std::move(gg));
        Subgroupoid h = hf(*g), k = kf(*g);
        return std::tuple<std::unique_ptr<FiniteGroupoid>, Subgroupoid, Subgroupoid>(
            std::move(g), std::move(h), std::move(k));
    };

    auto discrete = [](const FiniteGroupoid& g) { return Subgroupoid::discrete_wide(g); };
    auto full = [](const FiniteGroupoid& g) { return Subgroupoid::full(g); };
    auto bundle = [](const FiniteGroupoid& g) { return iso_subgroupoid(g); };
    auto gen2 = [](const FiniteGroupoid& g) { return closure(g, {2}, true); };

    std::vector<std::tuple<std::unique_ptr<FiniteGroupoid>, Subgroupoid, Subgroupoid>> fixtures;
    fixtures.push_back(make(pair_groupoid(2), discrete, discrete));
    fixtures.push_back(make(symmetric_group(3), gen2, gen2));
    fixtures.push_back(make(product(cyclic_group(2), pair_groupoid(2)), bundle, bundle));
    fixtures.push_back(make(product(symmetric_group(3), pair_groupoid(2)), bundle, discrete));
    fixtures.push_back(make(coproduct(cyclic_group(4), pair_groupoid(3)), full, bundle));

    for (const auto& [g, h, k] : fixtures) {
        DoubleCosetPartition dc = double_cosets(*g, h, k);
        for (Mor a = 0; a < g->morphism_count(); ++a) {
            DoubleCosetSize f = double_coset_size_formula(*g, h, k, a);
            CHECK(f.size ==
                  static_cast<std::int64_t>(
                      dc.blocks[static_cast<std::size_t>(dc.block_of[static_cast<std::size_t>(a)])].size()));
        }
    }
}

TEST_CASE("size formula spot values") {
    FiniteGroupoid p2 = pair_groupoid(2);
    Subgroupoid d = Subgroupoid::discrete_wide(p2);
    DoubleCosetSize f = double_coset_size_formula(p2, d, d, 1);
    CHECK(f.size == 1);
    CHECK(f.delta == 1);
    CHECK(f.overlap == 1);

    FiniteGroupoid s3 = symmetric_group(3);
    Subgroupoid h = closure(s3, {2}, true);
    // Morphism 5 = [2,1,0] lies outside the subgroup; its block has size 4.
    DoubleCosetSize big = double_coset_size_formula(s3, h, h, 5);
    CHECK(big.size == 4);
    CHECK(big.h_iso == 2);
    CHECK(big.k_iso == 2);
    CHECK(big.overlap == 1);
    // The identity's block is the subgroup itself: the isotropy overlap
    // halves the pair count.
    DoubleCosetSize small = double_coset_size_formula(s3, h, h, 0);
    CHECK(small.size == 2);
    CHECK(small.overlap == 2);

    // Group bundle on both sides of a connected groupoid with isotropy C2:
    // every cross-object block is a full hom set.
    FiniteGroupoid g = product(cyclic_group(2), pair_groupoid(2));
    Subgroupoid b = iso_subgroupoid(g);
    DoubleCosetPartition dc = double_cosets(g, b, b);
    for (Mor a = 0; a < g.morphism_count(); ++a) {
        DoubleCosetSize s = double_coset_size_formula(g, b, b, a);
        CHECK(s.size == 2);
        CHECK(s.size == static_cast<std::int64_t>(
                            dc.blocks[static_cast<std::size_t>(dc.block_of[static_cast<std::size_t>(a)])]
                                .size()));
    }

    // Non-wide subgroupoids are reported, not silently priced at zero.
    FiniteGroupoid pp = pair_groupoid(2);
    CHECK_THROWS_WITH_AS(
        double_coset_size_formula(pp, Subgroupoid(pp, {0}, {pp.identity(0)}),
                                  Subgroupoid::discrete_wide(pp), 0),
        doctest::Contains("not covered"), Error);
}

TEST_CASE("x_hk action") {
    FiniteGroupoid p2 = pair_groupoid(2);
    Subgroupoid d = Subgroupoid::discrete_wide(p2);
    XhkAction x = x_hk_action(p2, d, d);
    CHECK(x.base->object_count() == 4);
    CHECK(x.gset.total_elements() == 4);
    CHECK(check_gset(x.gset).empty());
    CHECK(orbits(x.gset).members.size() == 4);

    // One fiber of size 2; (h, k) sends g to h g k^{-1}, so the identity
    // reaches the other element and there is a single orbit, matching the
    // single double coset of the whole group in itself.
    FiniteGroupoid c2 = cyclic_group(2);
    Subgroupoid fc2 = Subgroupoid::full(c2);
    XhkAction xc = x_hk_action(c2, fc2, fc2);
    CHECK(xc.gset.total_elements() == 2);
    CHECK(orbits(xc.gset).members.size() == 1);
    CHECK(cf_count(xc.gset) == Rat(1));
    CHECK(double_cosets(c2, fc2, fc2).blocks.size() == 1);

    FiniteGroupoid s3 = symmetric_group(3);
    Subgroupoid h = closure(s3, {2}, true);
    XhkAction xs = x_hk_action(s3, h, h);
    CHECK(check_gset(xs.gset).empty());
    CHECK(cf_count(xs.gset) == Rat(2));
    CHECK(orbits(xs.gset).members.size() == double_cosets(s3, h, h).blocks.size());
}

TEST_CASE("comma category") {
    FiniteGroupoid p2 = pair_groupoid(2);
    Subgroupoid d = Subgroupoid::discrete_wide(p2);
    CommaCategory c = comma_category(p2, d, d);
    CHECK(c.groupoid.object_count() == 4);
    CHECK(c.groupoid.morphism_count() == 4);
    CHECK(validate(c.groupoid).empty());
    CHECK(c.groupoid.component_count() == 4);

    FiniteGroupoid c2 = cyclic_group(2);
    Subgroupoid fc2 = Subgroupoid::full(c2);
    CommaCategory cc = comma_category(c2, fc2, fc2);
    CHECK(cc.groupoid.object_count() == 2);
    CHECK(cc.groupoid.morphism_count() == 8);
    CHECK(validate(cc.groupoid).empty());
    CHECK(cc.groupoid.component_count() == 1);
    CHECK(cc.groupoid.hom(0, 0).size() == 2);
    CHECK(cc.groupoid.hom(0, 1).size() == 2);

    FiniteGroupoid s3 = symmetric_group(3);
    Subgroupoid h = closure(s3, {2}, true);
    CommaCategory cs = comma_category(s3, h, h);
    CHECK(cs.groupoid.object_count() == 6);
    CHECK(validate(cs.groupoid).empty());
    CHECK(cs.groupoid.component_count() ==
          static_cast<int>(double_cosets(s3, h, h).blocks.size()));
    // Morphism count: one leg pair (h, k) per object.
    CHECK(cs.groupoid.morphism_count() == 6 * 2 * 2);
}

TEST_CASE("comma category is isomorphic to the action groupoid") {
    FiniteGroupoid p2 = pair_groupoid(2);
    Subgroupoid d = Subgroupoid::discrete_wide(p2);
    CHECK(comma_iso_check(p2, d, d).empty());

    FiniteGroupoid s3 = symmetric_group(3);
    Subgroupoid h = closure(s3, {2}, true);
    auto failures = comma_iso_check(s3, h, h);
    for (const auto& f : failures) MESSAGE(f);
    CHECK(failures.empty());

    FiniteGroupoid g = product(cyclic_group(2), pair_groupoid(2));
    CHECK(comma_iso_check(g, iso_subgroupoid(g), Subgroupoid::discrete_wide(g)).empty());
    CHECK(comma_iso_check(g, Subgroupoid::full(g), iso_subgroupoid(g)).empty());
}
