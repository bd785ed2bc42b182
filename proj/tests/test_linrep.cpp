#include "gpd/linrep.hpp"

#include <doctest.h>

using namespace gpd;

namespace {

bool same_rep_tables(const Representation& a, const Representation& b) {
    if (a.dim != b.dim || a.mat.size() != b.mat.size()) return false;
    for (std::size_t i = 0; i < a.mat.size(); ++i)
        if (a.mat[i] != b.mat[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("trivial representation") {
    FiniteGroupoid p3 = pair_groupoid(3);
    Representation tri = trivial_rep(p3);
    CHECK(check_representation(tri).empty());
    Character chi = character(tri);
    for (Obj x = 0; x < 3; ++x)
        CHECK(chi.values[static_cast<std::size_t>(p3.identity(x))] == GaussRat(1));

    // The permutation representation of the terminal G-set is the same
    // functor.
    CHECK(same_rep_tables(tri, permutation_rep(terminal_gset(p3))));
}

TEST_CASE("permutation representations and fixed points") {
    FiniteGroupoid s3 = symmetric_group(3);
    LeftCosetGSet lc = left_cosets(s3, closure(s3, {2}, true));
    Representation perm = permutation_rep(lc.gset);
    CHECK(check_representation(perm).empty());
    CHECK(perm.dim == std::vector<int>{3});
    Character chi = character(perm);
    CHECK(chi.values[static_cast<std::size_t>(s3.identity(0))] == GaussRat(3));

    for (Mor a = 0; a < s3.morphism_count(); ++a)
        CHECK(chi.values[static_cast<std::size_t>(a)] ==
              GaussRat(Rat(static_cast<std::int64_t>(fix(lc.gset, a).size()))));
}

TEST_CASE("characters vanish off endomorphisms") {
    FiniteGroupoid g = product(cyclic_group(2), pair_groupoid(2));
    Representation r = permutation_rep(representable_gset(g, 0));
    CHECK(check_representation(r).empty());
    Character chi = character(r);
    for (Mor a = 0; a < g.morphism_count(); ++a) {
        if (!g.is_endomorphism(a)) CHECK(chi.values[static_cast<std::size_t>(a)].is_zero());
        else if (a == g.identity(g.dom(a)))
            CHECK(chi.values[static_cast<std::size_t>(a)] ==
                  GaussRat(Rat(r.dim[static_cast<std::size_t>(g.dom(a))])));
    }
}

TEST_CASE("character inner products") {
    FiniteGroupoid p2 = pair_groupoid(2);
    Representation tri2 = trivial_rep(p2);
    CHECK(char_inner_product(tri2, tri2) == GaussRat(1));

    // The averaged formula gives 1 on disconnected groupoids as well.
    FiniteGroupoid disc = coproduct(cyclic_group(2), cyclic_group(3));
    Representation trid = trivial_rep(disc);
    CHECK(char_inner_product(trid, trid) == GaussRat(1));

    Subgroupoid d = Subgroupoid::discrete_wide(p2);
    Representation cg = permutation_rep(left_cosets(p2, d).gset);
    CHECK(char_inner_product(cg, cg) == GaussRat(4));

    FiniteGroupoid s3 = symmetric_group(3);
    Subgroupoid h = closure(s3, {2}, true);
    Representation cs = permutation_rep(left_cosets(s3, h).gset);
    CHECK(char_inner_product(cs, cs) == GaussRat(2));

    CHECK_THROWS_AS(char_inner_product(tri2, trid), Error);
}

TEST_CASE("natural transformation space dimensions") {
    FiniteGroupoid p3 = pair_groupoid(3);
    CHECK(nat_space_dim(trivial_rep(p3), trivial_rep(p3)) == 1);

    FiniteGroupoid disc = coproduct(coproduct(cyclic_group(2), cyclic_group(2)), pair_groupoid(2));
    CHECK(nat_space_dim(trivial_rep(disc), trivial_rep(disc)) == 3);

    FiniteGroupoid s3 = symmetric_group(3);
    Subgroupoid h = closure(s3, {2}, true);
    Representation cs = permutation_rep(left_cosets(s3, h).gset);
    CHECK(nat_space_dim(cs, cs) == 2);

    FiniteGroupoid p2 = pair_groupoid(2);
    Subgroupoid d2 = Subgroupoid::discrete_wide(p2);
    Representation cg = permutation_rep(left_cosets(p2, d2).gset);
    CHECK(nat_space_dim(cg, cg) == 4);

    // Basis vectors of the intertwiner space are natural and span the
    // computed dimension.
    auto basis = intertwiner_basis(cs, cs);
    CHECK(basis.size() == 2);
    for (const auto& t : basis) CHECK(check_natural(cs, cs, t).empty());
}

TEST_CASE("restriction") {
    FiniteGroupoid g = product(cyclic_group(2), pair_groupoid(2));
    Subgroupoid bundle = iso_subgroupoid(g);
    Extracted sub = extract(bundle);

    Representation tri = trivial_rep(g);
    Representation rtri = restrict_rep(tri, sub);
    CHECK(same_rep_tables(rtri, trivial_rep(sub.groupoid)));

    Extracted whole = extract(Subgroupoid::full(g));
    Representation perm = permutation_rep(left_cosets(g, bundle).gset);
    CHECK(same_rep_tables(restrict_rep(perm, whole), perm));

    Representation rperm = restrict_rep(perm, sub);
    CHECK(check_representation(rperm).empty());
    for (std::size_t i = 0; i < sub.obj_to_parent.size(); ++i)
        CHECK(rperm.dim[i] == perm.dim[static_cast<std::size_t>(sub.obj_to_parent[i])]);
}

TEST_CASE("induced G-sets match left cosets") {
    struct Case {
        FiniteGroupoid g;
        std::vector<Mor> seed;
    };
    std::vector<Case> cases;
    cases.push_back({pair_groupoid(2), {}});
    cases.push_back({symmetric_group(3), {2}});
    cases.push_back({product(cyclic_group(2), pair_groupoid(2)), {3}});
    cases.push_back({product(symmetric_group(3), pair_groupoid(2)), {9}});

    for (const auto& c : cases) {
        Subgroupoid h = closure(c.g, c.seed, true);
        Extracted eh = extract(h);
        InducedGSet ind = induce_gset(c.g, h, eh, terminal_gset(eh.groupoid));
        CHECK(check_gset(ind.gset).empty());
        LeftCosetGSet lc = left_cosets(c.g, h);
        auto failures = induced_terminal_matches_cosets(c.g, ind, lc);
        for (const auto& f : failures) MESSAGE(f);
        CHECK(failures.empty());
    }

    // Fiber sizes for the discrete subgroupoid of the pair groupoid.
    FiniteGroupoid p2 = pair_groupoid(2);
    Subgroupoid d = Subgroupoid::discrete_wide(p2);
    Extracted ed = extract(d);
    InducedGSet ind = induce_gset(p2, d, ed, terminal_gset(ed.groupoid));
    CHECK(ind.gset.carrier_size == std::vector<int>{2, 2});
}

TEST_CASE("inducing along the identity inclusion returns the same G-set") {
    FiniteGroupoid g = product(cyclic_group(2), pair_groupoid(2));
    Subgroupoid full = Subgroupoid::full(g);
    Extracted ef = extract(full);
    GSet x = representable_gset(ef.groupoid, 0);
    InducedGSet ind = induce_gset(g, full, ef, x);
    CHECK(ind.gset.carrier_size == x.carrier_size);
    CHECK(check_gset(ind.gset).empty());
    CHECK(orbits(ind.gset).members.size() == orbits(x).members.size());
    CHECK(cf_count(ind.gset) == cf_count(x));
}

TEST_CASE("induced representations") {
    FiniteGroupoid s3 = symmetric_group(3);
    Subgroupoid h = closure(s3, {2}, true);
    Extracted eh = extract(h);
    Representation ind = induce_rep(s3, h, eh, trivial_rep(eh.groupoid));
    CHECK(check_representation(ind).empty());
    CHECK(ind.dim == std::vector<int>{3});

    // Same character as the linearized coset G-set, morphism by morphism.
    Character a = character(ind);
    Character b = character(permutation_rep(left_cosets(s3, h).gset));
    CHECK(a.values == b.values);

    // Inducing along the identity inclusion preserves the representation up
    // to isomorphism: equal dimensions and characters.
    FiniteGroupoid g = product(cyclic_group(2), pair_groupoid(2));
    Subgroupoid full = Subgroupoid::full(g);
    Extracted ef = extract(full);
    Representation r = permutation_rep(representable_gset(ef.groupoid, 0));
    Representation ind2 = induce_rep(g, full, ef, r);
    CHECK(check_representation(ind2).empty());
    CHECK(ind2.dim == r.dim);
    CHECK(character(ind2).values == character(r).values);
    CHECK(nat_space_dim(ind2, r) == nat_space_dim(r, r));
}

TEST_CASE("representation validation catches broken tables") {
    FiniteGroupoid c2 = cyclic_group(2);
    Representation bad = trivial_rep(c2);
    bad.mat[1].at(0, 0) = GaussRat(2);  // no longer functorial (sigma^2 = e)
    CHECK(!check_representation(bad).empty());
}
