#include "gpd/groupoid.hpp"

#include <doctest.h>

#include <numeric>

using namespace gpd;

namespace {

GroupoidData pair_data(Obj n) {
    GroupoidData d;
    d.object_count = n;
    for (Obj x = 0; x < n; ++x)
        for (Obj y = 0; y < n; ++y) {
            d.dom.push_back(x);
            d.cod.push_back(y);
            d.inverse.push_back(y * n + x);
        }
    for (Obj x = 0; x < n; ++x) d.identity.push_back(x * n + x);
    for (Obj x = 0; x < n; ++x)
        for (Obj y = 0; y < n; ++y)
            for (Obj z = 0; z < n; ++z)
                d.compose.emplace_back(y * n + z, x * n + y, x * n + z);
    return d;
}

bool roundtrips_to_identity(const FiniteGroupoid& a, const GroupoidFunctor& fwd,
                            const GroupoidFunctor& bwd) {
    for (Obj x = 0; x < a.object_count(); ++x)
        if (bwd.obj_map[static_cast<std::size_t>(fwd.obj_map[static_cast<std::size_t>(x)])] != x)
            return false;
    for (Mor g = 0; g < a.morphism_count(); ++g)
        if (bwd.mor_map[static_cast<std::size_t>(fwd.mor_map[static_cast<std::size_t>(g)])] != g)
            return false;
    return true;
}

}  // namespace

TEST_CASE("pair groupoid basics") {
    FiniteGroupoid p3 = pair_groupoid(3);
    CHECK(p3.object_count() == 3);
    CHECK(p3.morphism_count() == 9);
    CHECK(validate(p3).empty());
    CHECK(p3.connected());
    for (Obj x = 0; x < 3; ++x) CHECK(p3.isotropy_order(x) == 1);

    FiniteGroupoid p1 = pair_groupoid(1);
    CHECK(p1.object_count() == 1);
    CHECK(p1.morphism_count() == 1);

    FiniteGroupoid p2 = pair_groupoid(2);
    CHECK(p2.morphism_count() == 4);
    CHECK(p2.hom(0, 1).size() == 1);

    CHECK_THROWS_AS(pair_groupoid(0), Error);
}

TEST_CASE("validate reports a patched composition") {
    GroupoidData d = pair_data(2);
    // Redirect (0,1) after (1,0) from (1,1) to (1,0): endpoints break.
    for (auto& [g2, g1, r] : d.compose)
        if (g2 == 1 && g1 == 2) r = 2;
    FiniteGroupoid bad(std::move(d));
    auto report = validate(bad);
    CHECK(!report.empty());
    bool found = false;
    for (const auto& v : report)
        if (v.axiom == "compose-endpoints" || v.axiom == "associativity" || v.axiom == "inverse-law")
            found = true;
    CHECK(found);
}

TEST_CASE("validate reports missing compose entries") {
    GroupoidData d = pair_data(2);
    d.compose.pop_back();
    auto report = validate(FiniteGroupoid(std::move(d)));
    REQUIRE(!report.empty());
    bool missing = false;
    for (const auto& v : report) missing |= v.axiom == "compose-missing";
    CHECK(missing);
}

TEST_CASE("groups as one-object groupoids") {
    FiniteGroupoid c2 = cyclic_group(2);
    CHECK(c2.object_count() == 1);
    CHECK(c2.morphism_count() == 2);
    CHECK(validate(cyclic_group(4)).empty());

    FiniteGroupoid s3 = symmetric_group(3);
    CHECK(s3.morphism_count() == 6);
    CHECK(validate(s3).empty());

    // Rock-paper-scissors "winner" table is not associative.
    std::vector<std::vector<int>> rps = {{0, 1, 0}, {1, 1, 2}, {0, 2, 2}};
    CHECK_THROWS_WITH_AS(group_from_table(rps),
                         doctest::Contains("not associative"), Error);
}

TEST_CASE("products") {
    FiniteGroupoid g = product(cyclic_group(2), pair_groupoid(2));
    CHECK(g.object_count() == 2);
    CHECK(g.morphism_count() == 8);
    CHECK(validate(g).empty());
    CHECK(g.connected());
    CHECK(g.isotropy_order(0) == 2);

    FiniteGroupoid c2 = cyclic_group(2);
    FiniteGroupoid triv = pair_groupoid(1);
    FiniteGroupoid same = product(c2, triv);
    CHECK(same.object_count() == c2.object_count());
    CHECK(same.dom_table() == c2.dom_table());
    CHECK(same.cod_table() == c2.cod_table());
    CHECK(same.inverse_table() == c2.inverse_table());

    FiniteGroupoid c6ish = product(cyclic_group(2), cyclic_group(3));
    CHECK(c6ish.object_count() == 1);
    CHECK(c6ish.morphism_count() == 6);
}

TEST_CASE("coproducts and components") {
    FiniteGroupoid a = coproduct(pair_groupoid(2), cyclic_group(2));
    CHECK(a.object_count() == 3);
    CHECK(a.morphism_count() == 6);
    CHECK(a.component_count() == 2);
    CHECK(validate(a).empty());

    FiniteGroupoid bundle = coproduct(cyclic_group(2), cyclic_group(2));
    CHECK(bundle.component_count() == 2);

    FiniteGroupoid b = coproduct(pair_groupoid(2), pair_groupoid(3));
    auto decomp = connected_components(b);
    REQUIRE(decomp.components.size() == 2);
    CHECK(decomp.components[0].objects().size() == 2);
    CHECK(decomp.components[1].objects().size() == 3);
    for (const auto& comp : decomp.components) CHECK(comp.check().empty());

    CHECK(pair_groupoid(4).component_count() == 1);
    CHECK(iso_bundle(pair_groupoid(3)).component_count() == 3);

    // Component counts add under coproduct.
    CHECK(coproduct(a, b).component_count() == a.component_count() + b.component_count());
}

TEST_CASE("isotropy and the group bundle") {
    CHECK(isotropy(pair_groupoid(3), 1).morphisms().size() == 1);
    CHECK(isotropy(product(cyclic_group(2), pair_groupoid(2)), 0).morphisms().size() == 2);
    CHECK(isotropy(symmetric_group(3), 0).morphisms().size() == 6);
    CHECK_THROWS_AS(isotropy(pair_groupoid(2), 5), Error);

    FiniteGroupoid pb = iso_bundle(pair_groupoid(4));
    CHECK(pb.object_count() == 4);
    CHECK(pb.morphism_count() == 4);
    CHECK(validate(pb).empty());

    CHECK(iso_bundle(product(cyclic_group(2), pair_groupoid(2))).morphism_count() == 4);

    FiniteGroupoid s3 = symmetric_group(3);
    FiniteGroupoid s3b = iso_bundle(s3);
    CHECK(s3b.morphism_count() == s3.morphism_count());
    CHECK(validate(s3b).empty());

    FiniteGroupoid p3 = pair_groupoid(3);
    Subgroupoid wide_bundle = iso_subgroupoid(p3);
    CHECK(wide_bundle.wide());
    CHECK(wide_bundle.check().empty());
}

TEST_CASE("hom sets and the hom-size property") {
    CHECK(pair_groupoid(3).hom(0, 2).size() == 1);
    CHECK(coproduct(cyclic_group(2), cyclic_group(2)).hom(0, 1).empty());

    // Within a connected groupoid every hom set has the isotropy size.
    for (const FiniteGroupoid& g :
         {pair_groupoid(3), product(symmetric_group(3), pair_groupoid(2)), cyclic_group(5)}) {
        std::size_t iso = g.isotropy_order(0);
        for (Obj y = 0; y < g.object_count(); ++y)
            for (Obj z = 0; z < g.object_count(); ++z)
                CHECK(g.hom(y, z).size() == iso);
    }
}

TEST_CASE("closure") {
    FiniteGroupoid p2 = pair_groupoid(2);
    Subgroupoid discrete = closure(p2, {}, true);
    CHECK(discrete.wide());
    CHECK(discrete.morphisms().size() == 2);
    CHECK(discrete.check().empty());

    FiniteGroupoid s3 = symmetric_group(3);
    Subgroupoid h = closure(s3, {2}, true);  // morphism 2 is the transposition [1,0,2]
    CHECK(h.morphisms().size() == 2);
    CHECK(h.check().empty());

    std::vector<Mor> all(static_cast<std::size_t>(s3.morphism_count()));
    std::iota(all.begin(), all.end(), 0);
    CHECK(closure(s3, all, true).morphisms().size() == 6);

    // Extensive, monotone, idempotent.
    FiniteGroupoid g = product(cyclic_group(2), pair_groupoid(3));
    for (Mor seed = 0; seed < g.morphism_count(); seed += 5) {
        Subgroupoid c1 = closure(g, {seed}, true);
        CHECK(c1.contains_morphism(seed));
        CHECK(c1.check().empty());
        Subgroupoid c2 = closure(g, c1.morphisms(), true);
        CHECK(c2.morphisms() == c1.morphisms());  // idempotent
        Subgroupoid bigger = closure(g, {seed, g.inverse(seed)}, true);
        for (Mor a : c1.morphisms()) CHECK(bigger.contains_morphism(a));
    }
}

TEST_CASE("subgroupoid invariants catch bad subsets") {
    FiniteGroupoid s3 = symmetric_group(3);
    Subgroupoid not_closed(s3, {0}, {s3.identity(0), 1});  // {e, one transposition-like}
    // morphism 1 is [0,2,1], an involution: closed. Use a 3-cycle instead.
    Subgroupoid cyc(s3, {0}, {s3.identity(0), 3});
    CHECK(!cyc.check().empty());

    FiniteGroupoid p2 = pair_groupoid(2);
    Subgroupoid no_id(p2, {0, 1}, {1, 2});
    CHECK(!no_id.check().empty());
    (void)not_closed;
}

TEST_CASE("structure decomposition witnesses") {
    struct Case {
        FiniteGroupoid g;
        Obj base;
        Mor iso_order;
    };
    std::vector<Case> cases;
    cases.push_back({pair_groupoid(3), 0, 1});
    cases.push_back({product(cyclic_group(2), pair_groupoid(2)), 0, 2});
    cases.push_back({symmetric_group(3), 0, 6});

    for (const auto& c : cases) {
        StructureDecomposition sd = structure_decomposition(c.g, c.base);
        CHECK(sd.isotropy_group.morphism_count() == c.iso_order);
        CHECK(sd.target.object_count() == c.g.object_count());
        CHECK(sd.target.morphism_count() == c.g.morphism_count());
        std::string why;
        CHECK_MESSAGE(is_functor(c.g, sd.target, sd.forward, &why), why);
        CHECK_MESSAGE(is_functor(sd.target, c.g, sd.backward, &why), why);
        CHECK(roundtrips_to_identity(c.g, sd.forward, sd.backward));
        CHECK(roundtrips_to_identity(sd.target, sd.backward, sd.forward));
    }

    CHECK_THROWS_AS(structure_decomposition(coproduct(cyclic_group(2), cyclic_group(2)), 0), Error);
}

TEST_CASE("coset index") {
    FiniteGroupoid p2 = pair_groupoid(2);
    IndexResult r = coset_index(p2, Subgroupoid::discrete_wide(p2));
    CHECK(r.coset_total == 4);
    CHECK(r.formula_value == 4);
    CHECK(r.formula_text == "2 * (1+1)");

    FiniteGroupoid g = product(cyclic_group(2), pair_groupoid(3));
    IndexResult full = coset_index(g, Subgroupoid::full(g));
    CHECK(full.coset_total == g.object_count());

    FiniteGroupoid s3 = symmetric_group(3);
    IndexResult s = coset_index(s3, closure(s3, {2}, true));
    CHECK(s.coset_total == 3);

    // Not wide: one object of the pair groupoid.
    FiniteGroupoid pp = pair_groupoid(2);
    CHECK_THROWS_AS(coset_index(pp, Subgroupoid(pp, {0}, {pp.identity(0)})), Error);
    FiniteGroupoid disc = coproduct(cyclic_group(2), cyclic_group(2));
    CHECK_THROWS_AS(coset_index(disc, Subgroupoid::discrete_wide(disc)), Error);
}

TEST_CASE("structural rejections") {
    GroupoidData d;
    d.object_count = 0;
    CHECK_THROWS_AS(FiniteGroupoid(std::move(d)), Error);

    GroupoidData dup = pair_data(2);
    dup.compose.push_back(dup.compose.front());
    CHECK_THROWS_WITH_AS(FiniteGroupoid(std::move(dup)), doctest::Contains("duplicate"), Error);
}
