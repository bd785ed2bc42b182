#include "gpd/textio.hpp"

#include "gpd/fnspace.hpp"

#include <doctest.h>

using namespace gpd;

TEST_CASE("groupoid serialization round-trips byte-identically") {
    for (const FiniteGroupoid& g :
         {pair_groupoid(3), symmetric_group(3), product(cyclic_group(2), pair_groupoid(2)),
          coproduct(cyclic_group(4), pair_groupoid(2))}) {
        std::string text = serialize_groupoid(g);
        FiniteGroupoid back = parse_groupoid_text(text);
        CHECK(serialize_groupoid(back) == text);
        CHECK(back.object_count() == g.object_count());
        CHECK(back.dom_table() == g.dom_table());
        CHECK(back.inverse_table() == g.inverse_table());
        CHECK(validate(back).empty());
    }
}

TEST_CASE("groupoid parser diagnostics carry line numbers") {
    std::string good = serialize_groupoid(pair_groupoid(2));

    SUBCASE("duplicate key") {
        std::string text = "objects: 2\nobjects: 2\n" + good.substr(good.find("morphisms:"));
        CHECK_THROWS_WITH_AS(parse_groupoid_text(text, "f"), doctest::Contains("f:2: duplicate key"),
                             Error);
    }
    SUBCASE("missing compose entry") {
        std::string text = good.substr(0, good.rfind("3 3 3"));
        CHECK_THROWS_WITH_AS(parse_groupoid_text(text, "f"),
                             doctest::Contains("missing compose entry"), Error);
    }
    SUBCASE("non-composable entry") {
        std::string text = good + "1 1 0\n";
        CHECK_THROWS_WITH_AS(parse_groupoid_text(text, "f"),
                             doctest::Contains("non-composable"), Error);
    }
    SUBCASE("bad token") {
        CHECK_THROWS_WITH_AS(parse_groupoid_text("objects: x\n", "f"),
                             doctest::Contains("f:1:"), Error);
    }
    SUBCASE("comments and blank lines are fine") {
        std::string text = "# header comment\n\n" + good;
        CHECK(parse_groupoid_text(text).morphism_count() == 4);
    }
}

TEST_CASE("subgroupoid files") {
    FiniteGroupoid s3 = symmetric_group(3);
    Subgroupoid h = closure(s3, {2}, true);
    std::string text = serialize_subgroupoid(h);
    Subgroupoid back = parse_subgroupoid_text(s3, text);
    CHECK(back.objects() == h.objects());
    CHECK(back.morphisms() == h.morphisms());
    CHECK(serialize_subgroupoid(back) == text);

    CHECK_THROWS_WITH_AS(parse_subgroupoid_text(s3, "objects: 0\nmorphisms: 99\n", "f"),
                         doctest::Contains("out of range"), Error);
    CHECK_THROWS_WITH_AS(parse_subgroupoid_text(s3, "objects: 0\nobjects: 0\nmorphisms: 0\n", "f"),
                         doctest::Contains("duplicate"), Error);
}

TEST_CASE("gset files") {
    FiniteGroupoid p2 = pair_groupoid(2);
    GSet x = left_cosets(p2, Subgroupoid::discrete_wide(p2)).gset;
    std::string text = serialize_gset(x, "p2.gpd");
    CHECK(gset_base_reference(text) == "p2.gpd");
    GSet back = parse_gset_text(p2, text);
    CHECK(back.carrier_size == x.carrier_size);
    CHECK(back.action == x.action);
    CHECK(serialize_gset(back, "p2.gpd") == text);

    CHECK_THROWS_WITH_AS(parse_gset_text(p2, "sizes: 1 1\n", "f"),
                         doctest::Contains("missing 'gset over:'"), Error);
}

TEST_CASE("representation files") {
    FiniteGroupoid s3 = symmetric_group(3);
    Subgroupoid h = closure(s3, {2}, true);
    Representation r = permutation_rep(left_cosets(s3, h).gset);
    std::string text = serialize_representation(r, "s3.gpd");
    CHECK(representation_base_reference(text) == "s3.gpd");
    Representation back = parse_representation_text(s3, text);
    CHECK(back.dim == r.dim);
    for (std::size_t i = 0; i < r.mat.size(); ++i) CHECK(back.mat[i] == r.mat[i]);
    CHECK(serialize_representation(back, "s3.gpd") == text);

    // Scalar tokens with imaginary parts survive the round trip.
    Representation tw = trivial_rep(cyclic_group(1));
    tw.mat[0].at(0, 0) = GaussRat(Rat(1, 2), Rat(-3, 4));
    std::string twt = serialize_representation(tw, "c1.gpd");
    Representation twb = parse_representation_text(cyclic_group(1), twt);
    // Base differs but the parsed matrix entry is what matters here.
    CHECK(twb.mat[0].at(0, 0) == GaussRat(Rat(1, 2), Rat(-3, 4)));
}

TEST_CASE("function and partition serialization") {
    FiniteGroupoid s3 = symmetric_group(3);
    Subgroupoid h = closure(s3, {2}, true);
    InvariantFunctionSpace f = invariant_function_space(s3, h, h);
    std::string text = serialize_function(f.basis[0]);
    QVec back = parse_function_text(text, f.basis[0].size());
    CHECK(back == f.basis[0]);

    DoubleCosetPartition dc = double_cosets(s3, h, h);
    std::string blocks = serialize_double_cosets(dc);
    CHECK(blocks.find("block 0:") == 0);

    YRep y = y_rep(s3, h);
    NatTransform t = s_map(s3, h, h, f.basis[0], y, y);
    std::string nt = serialize_nat_transform(t);
    CHECK(nt.find("obj 0:") == 0);
}
