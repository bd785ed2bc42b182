#include "gpd/generator.hpp"

#include "gpd/builder.hpp"
#include "gpd/textio.hpp"

#include <doctest.h>

using namespace gpd;

TEST_CASE("generation is deterministic in the seed") {
    for (std::uint64_t seed : {0ull, 1ull, 42ull, 12345ull}) {
        GenInstance a = gen_random(seed, 6, 6);
        GenInstance b = gen_random(seed, 6, 6);
        CHECK(serialize_groupoid(*a.groupoid) == serialize_groupoid(*b.groupoid));
        CHECK(serialize_subgroupoid(*a.h) == serialize_subgroupoid(*b.h));
        CHECK(serialize_subgroupoid(*a.k) == serialize_subgroupoid(*b.k));
        CHECK(a.description == b.description);
    }
    GenInstance a = gen_random(7, 6, 6);
    GenInstance b = gen_random(8, 6, 6);
    CHECK(serialize_groupoid(*a.groupoid) != serialize_groupoid(*b.groupoid));
}

TEST_CASE("generated instances are valid") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GenInstance inst = gen_random(seed, 6, 6);
        CHECK(validate(*inst.groupoid).empty());
        CHECK(inst.h->wide());
        CHECK(inst.k->wide());
        CHECK(inst.h->check().empty());
        CHECK(inst.k->check().empty());
        CHECK(inst.groupoid->object_count() <= 6 * 3);
    }
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GenInstance inst = gen_random_connected(seed, 4, 6);
        CHECK(inst.groupoid->connected());
        CHECK(validate(*inst.groupoid).empty());
    }
}

TEST_CASE("generated G-sets are functorial") {
    GenInstance inst = gen_random_connected(3, 3, 6);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GSet x = gen_random_gset(seed, *inst.groupoid);
        CHECK(check_gset(x).empty());
    }
}

TEST_CASE("builder expressions") {
    CHECK(build_groupoid("pair(3)").morphism_count() == 9);
    CHECK(build_groupoid("cyclic(4)").morphism_count() == 4);
    CHECK(build_groupoid("sym(3)").morphism_count() == 6);
    CHECK(build_groupoid("product(cyclic(2), pair(2))").morphism_count() == 8);
    CHECK(build_groupoid("coproduct(pair(2), cyclic(2))").component_count() == 2);
    CHECK(build_groupoid(" product( sym(3) , pair(2) ) ").morphism_count() == 24);
    CHECK_THROWS_AS(build_groupoid("pair(2) junk"), Error);
    CHECK_THROWS_AS(build_groupoid("ring(2)"), Error);
    CHECK_THROWS_AS(build_groupoid("pair(2"), Error);

    FiniteGroupoid s3 = build_groupoid("sym(3)");
    CHECK(build_subgroupoid(s3, "discrete").morphisms().size() == 1);
    CHECK(build_subgroupoid(s3, "full").morphisms().size() == 6);
    CHECK(build_subgroupoid(s3, "seed:2").morphisms().size() == 2);
    FiniteGroupoid p2 = build_groupoid("pair(2)");
    CHECK(build_subgroupoid(p2, "iso").morphisms().size() == 2);
    CHECK_THROWS_AS(build_subgroupoid(s3, "seed:x"), Error);
}
