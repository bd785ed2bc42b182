#include "gpd/verify.hpp"

#include "gpd/generator.hpp"

#include <doctest.h>

using namespace gpd;

TEST_CASE("verify passes on hand-picked instances") {
    FiniteGroupoid p2 = pair_groupoid(2);
    Subgroupoid d = Subgroupoid::discrete_wide(p2);
    VerificationReport r = verify_instance(p2, d, d, "pair2");
    for (const CheckRow& row : r.rows)
        CHECK_MESSAGE(row.ok, row.check, " expected=", row.expected, " actual=", row.actual);

    FiniteGroupoid s3 = symmetric_group(3);
    Subgroupoid h = closure(s3, {2}, true);
    CHECK(verify_instance(s3, h, h, "s3").all_ok());

    // Spot rows: the double-coset count of the transposition subgroup is 2.
    VerificationReport rs = verify_instance(s3, h, h, "s3");
    bool found = false;
    for (const CheckRow& row : rs.rows)
        if (row.check == "char-count") {
            CHECK(row.expected == "2");
            CHECK(row.actual == "2");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("verify passes on disconnected instances") {
    FiniteGroupoid g = coproduct(cyclic_group(2), product(cyclic_group(3), pair_groupoid(2)));
    Subgroupoid b = iso_subgroupoid(g);
    VerificationReport r = verify_instance(g, b, Subgroupoid::full(g), "mixed");
    for (const CheckRow& row : r.rows)
        CHECK_MESSAGE(row.ok, row.check, "/", row.instance, " expected=", row.expected,
                      " actual=", row.actual);
}

TEST_CASE("verify passes on a batch of generated instances") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        GenInstance inst = gen_random(seed, 4, 6);
        VerificationReport r =
            verify_instance(*inst.groupoid, *inst.h, *inst.k, inst.description);
        for (const CheckRow& row : r.rows)
            CHECK_MESSAGE(row.ok, inst.description, ": ", row.check, " expected=", row.expected,
                          " actual=", row.actual);
    }
}

TEST_CASE("report rendering") {
    FiniteGroupoid p2 = pair_groupoid(2);
    Subgroupoid d = Subgroupoid::discrete_wide(p2);
    VerificationReport r = verify_instance(p2, d, d, "pair2");
    std::string text = r.render(false);
    CHECK(text.find("[ OK ]") != std::string::npos);
    std::string records = r.render(true);
    CHECK(records.find("check=axioms") != std::string::npos);
    CHECK(records.find("status=OK") != std::string::npos);
    CHECK(records.find("status=FAIL") == std::string::npos);
}
