#include "gpd/action.hpp"

#include "gpd/union_find.hpp"

#include <algorithm>
#include <numeric>

namespace gpd {

GSet::GSet(const FiniteGroupoid& g, std::vector<int> sizes, std::vector<std::vector<int>> act)
    : base(&g), carrier_size(std::move(sizes)), action(std::move(act)) {
    if (static_cast<Obj>(carrier_size.size()) != g.object_count())
        throw Error("gset: carrier table length must equal the object count");
    if (static_cast<Mor>(action.size()) != g.morphism_count())
        throw Error("gset: action table length must equal the morphism count");
    for (int s : carrier_size)
        if (s < 0) throw Error("gset: negative carrier size");
    for (Mor a = 0; a < g.morphism_count(); ++a) {
        const auto& row = action[static_cast<std::size_t>(a)];
        if (static_cast<int>(row.size()) != carrier_size[static_cast<std::size_t>(g.dom(a))])
            throw Error("gset: action row " + std::to_string(a) + " has wrong length");
        for (int img : row)
            if (img < 0 || img >= carrier_size[static_cast<std::size_t>(g.cod(a))])
                throw Error("gset: action row " + std::to_string(a) + " maps out of range");
    }
    offset_.resize(carrier_size.size());
    total_ = 0;
    for (std::size_t i = 0; i < carrier_size.size(); ++i) {
        offset_[i] = total_;
        total_ += carrier_size[i];
    }
}

std::pair<Obj, int> GSet::label(int global) const {
    auto it = std::upper_bound(offset_.begin(), offset_.end(), global);
    Obj x = static_cast<Obj>(it - offset_.begin()) - 1;
    return {x, global - offset_[static_cast<std::size_t>(x)]};
}

std::vector<std::string> check_gset(const GSet& x) {
    std::vector<std::string> bad;
    const FiniteGroupoid& g = *x.base;
    for (Obj o = 0; o < g.object_count(); ++o) {
        const auto& row = x.action[static_cast<std::size_t>(g.identity(o))];
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] != static_cast<int>(i)) {
                bad.push_back("identity of object " + std::to_string(o) + " does not act as identity");
                break;
            }
    }
    for (Mor a = 0; a < g.morphism_count(); ++a) {
        std::vector<char> hit(static_cast<std::size_t>(x.carrier_size[static_cast<std::size_t>(g.cod(a))]), 0);
        for (int img : x.action[static_cast<std::size_t>(a)]) hit[static_cast<std::size_t>(img)] = 1;
        if (std::find(hit.begin(), hit.end(), 0) != hit.end())
            bad.push_back("morphism " + std::to_string(a) + " does not act bijectively");
    }
    g.compose_table().for_each([&](Mor g2, Mor g1, Mor r) {
        const auto& a1 = x.action[static_cast<std::size_t>(g1)];
        const auto& a2 = x.action[static_cast<std::size_t>(g2)];
        const auto& ar = x.action[static_cast<std::size_t>(r)];
        for (std::size_t e = 0; e < a1.size(); ++e)
            if (a2[static_cast<std::size_t>(a1[e])] != ar[e]) {
                bad.push_back("action not functorial at pair (" + std::to_string(g2) + ", " +
                              std::to_string(g1) + ")");
                return;
            }
    });
    return bad;
}

GSet terminal_gset(const FiniteGroupoid& g) {
    std::vector<int> sizes(static_cast<std::size_t>(g.object_count()), 1);
    std::vector<std::vector<int>> act(static_cast<std::size_t>(g.morphism_count()), {0});
    return GSet(g, std::move(sizes), std::move(act));
}

GSet representable_gset(const FiniteGroupoid& g, Obj origin) {
    if (origin < 0 || origin >= g.object_count())
        throw Error("representable_gset: origin out of range");
    // X(y) = hom(origin, y), ordered by morphism index; action post-composes.
    std::vector<std::vector<Mor>> fibers(static_cast<std::size_t>(g.object_count()));
    std::vector<int> pos(static_cast<std::size_t>(g.morphism_count()), -1);
    for (Obj y = 0; y < g.object_count(); ++y) {
        fibers[static_cast<std::size_t>(y)] = g.hom(origin, y);
        for (std::size_t i = 0; i < fibers[static_cast<std::size_t>(y)].size(); ++i)
            pos[static_cast<std::size_t>(fibers[static_cast<std::size_t>(y)][i])] = static_cast<int>(i);
    }
    std::vector<int> sizes(static_cast<std::size_t>(g.object_count()));
    for (Obj y = 0; y < g.object_count(); ++y)
        sizes[static_cast<std::size_t>(y)] = static_cast<int>(fibers[static_cast<std::size_t>(y)].size());
    std::vector<std::vector<int>> act(static_cast<std::size_t>(g.morphism_count()));
    for (Mor a = 0; a < g.morphism_count(); ++a) {
        const auto& from = fibers[static_cast<std::size_t>(g.dom(a))];
        auto& row = act[static_cast<std::size_t>(a)];
        row.resize(from.size());
        for (std::size_t i = 0; i < from.size(); ++i)
            row[i] = pos[static_cast<std::size_t>(g.compose(a, from[i]))];
    }
    return GSet(g, std::move(sizes), std::move(act));
}

GSet disjoint_union(const GSet& x, const GSet& y) {
    if (x.base != y.base) throw Error("disjoint_union: mismatched base groupoids");
    const FiniteGroupoid& g = *x.base;
    std::vector<int> sizes(static_cast<std::size_t>(g.object_count()));
    for (Obj o = 0; o < g.object_count(); ++o)
        sizes[static_cast<std::size_t>(o)] =
            x.carrier_size[static_cast<std::size_t>(o)] + y.carrier_size[static_cast<std::size_t>(o)];
    std::vector<std::vector<int>> act(static_cast<std::size_t>(g.morphism_count()));
    for (Mor a = 0; a < g.morphism_count(); ++a) {
        int shift_dom = x.carrier_size[static_cast<std::size_t>(g.dom(a))];
        int shift_cod = x.carrier_size[static_cast<std::size_t>(g.cod(a))];
        auto& row = act[static_cast<std::size_t>(a)];
        row = x.action[static_cast<std::size_t>(a)];
        for (int e : y.action[static_cast<std::size_t>(a)]) row.push_back(e + shift_cod);
        (void)shift_dom;
    }
    return GSet(g, std::move(sizes), std::move(act));
}

GSet product_gset(const GSet& x, const GSet& y) {
    if (x.base != y.base) throw Error("product_gset: mismatched base groupoids");
    const FiniteGroupoid& g = *x.base;
    std::vector<int> sizes(static_cast<std::size_t>(g.object_count()));
    for (Obj o = 0; o < g.object_count(); ++o)
        sizes[static_cast<std::size_t>(o)] =
            x.carrier_size[static_cast<std::size_t>(o)] * y.carrier_size[static_cast<std::size_t>(o)];
    std::vector<std::vector<int>> act(static_cast<std::size_t>(g.morphism_count()));
    for (Mor a = 0; a < g.morphism_count(); ++a) {
        int yd = y.carrier_size[static_cast<std::size_t>(g.dom(a))];
        int yc = y.carrier_size[static_cast<std::size_t>(g.cod(a))];
        auto& row = act[static_cast<std::size_t>(a)];
        row.resize(static_cast<std::size_t>(sizes[static_cast<std::size_t>(g.dom(a))]));
        for (int ex = 0; ex < x.carrier_size[static_cast<std::size_t>(g.dom(a))]; ++ex)
            for (int ey = 0; ey < yd; ++ey)
                row[static_cast<std::size_t>(ex * yd + ey)] = x.apply(a, ex) * yc + y.apply(a, ey);
    }
    return GSet(g, std::move(sizes), std::move(act));
}

ActionGroupoid action_groupoid(const GSet& x) {
    const FiniteGroupoid& g = *x.base;
    if (x.total_elements() == 0)
        throw Error("action_groupoid: all carriers are empty (the empty groupoid is excluded)");

    std::vector<std::pair<Obj, int>> object_label;
    for (Obj o = 0; o < g.object_count(); ++o)
        for (int e = 0; e < x.carrier_size[static_cast<std::size_t>(o)]; ++e)
            object_label.emplace_back(o, e);

    // Morphism <g, e> for each base morphism g and element e of X(dom g).
    std::vector<int> mor_offset(static_cast<std::size_t>(g.morphism_count()) + 1, 0);
    for (Mor a = 0; a < g.morphism_count(); ++a)
        mor_offset[static_cast<std::size_t>(a) + 1] =
            mor_offset[static_cast<std::size_t>(a)] + x.carrier_size[static_cast<std::size_t>(g.dom(a))];

    std::vector<Mor> morphism_label;
    std::vector<int> morphism_start;
    GroupoidData d;
    d.object_count = static_cast<Obj>(object_label.size());
    for (Mor a = 0; a < g.morphism_count(); ++a)
        for (int e = 0; e < x.carrier_size[static_cast<std::size_t>(g.dom(a))]; ++e) {
            morphism_label.push_back(a);
            morphism_start.push_back(e);
            d.dom.push_back(x.global_id(g.dom(a), e));
            d.cod.push_back(x.global_id(g.cod(a), x.apply(a, e)));
            d.inverse.push_back(mor_offset[static_cast<std::size_t>(g.inverse(a))] + x.apply(a, e));
        }
    d.identity.resize(object_label.size());
    for (std::size_t i = 0; i < object_label.size(); ++i)
        d.identity[i] =
            mor_offset[static_cast<std::size_t>(g.identity(object_label[i].first))] + object_label[i].second;
    g.compose_table().for_each([&](Mor g2, Mor g1, Mor r) {
        for (int e = 0; e < x.carrier_size[static_cast<std::size_t>(g.dom(g1))]; ++e) {
            Mor lift1 = mor_offset[static_cast<std::size_t>(g1)] + e;
            Mor lift2 = mor_offset[static_cast<std::size_t>(g2)] + x.apply(g1, e);
            d.compose.emplace_back(lift2, lift1, mor_offset[static_cast<std::size_t>(r)] + e);
        }
    });

    return ActionGroupoid{FiniteGroupoid(std::move(d)), std::move(object_label),
                          std::move(morphism_label), std::move(morphism_start)};
}

OrbitPartition orbits(const GSet& x) {
    OrbitPartition out;
    if (x.total_elements() == 0) return out;
    ActionGroupoid ag = action_groupoid(x);
    out.orbit_of.resize(static_cast<std::size_t>(x.total_elements()));
    out.members.resize(static_cast<std::size_t>(ag.groupoid.component_count()));
    for (int e = 0; e < x.total_elements(); ++e) {
        int c = ag.groupoid.component_of(static_cast<Obj>(e));
        out.orbit_of[static_cast<std::size_t>(e)] = c;
        out.members[static_cast<std::size_t>(c)].push_back(e);
    }
    return out;
}

Subgroupoid stabilizer(const GSet& x, Obj obj, int elt) {
    const FiniteGroupoid& g = *x.base;
    if (obj < 0 || obj >= g.object_count()) throw Error("stabilizer: object out of range");
    if (elt < 0 || elt >= x.carrier_size[static_cast<std::size_t>(obj)])
        throw Error("stabilizer: element out of range");
    std::vector<Mor> fixers;
    for (Mor a : g.endomorphisms_at(obj))
        if (x.apply(a, elt) == elt) fixers.push_back(a);
    return Subgroupoid(g, {obj}, std::move(fixers));
}

std::vector<int> fix(const GSet& x, Mor g) {
    const FiniteGroupoid& base = *x.base;
    if (g < 0 || g >= base.morphism_count()) throw Error("fix: morphism out of range");
    if (!base.is_endomorphism(g)) throw Error("fix: morphism is not an endomorphism");
    std::vector<int> fixed;
    for (int e = 0; e < x.carrier_size[static_cast<std::size_t>(base.dom(g))]; ++e)
        if (x.apply(g, e) == e) fixed.push_back(e);
    return fixed;
}

Rat cf_sum(const GSet& x) {
    // The average runs per connected component of the base: orbits never
    // cross components, and within one component every orbit meets every
    // fiber, which is what makes the count exact. On a connected base this
    // is the plain average over all endomorphisms.
    const FiniteGroupoid& g = *x.base;
    std::vector<std::int64_t> fixed_total(static_cast<std::size_t>(g.component_count()), 0);
    std::vector<std::int64_t> endo_total(static_cast<std::size_t>(g.component_count()), 0);
    for (Obj o = 0; o < g.object_count(); ++o) {
        std::size_t c = static_cast<std::size_t>(g.component_of(o));
        for (Mor a : g.endomorphisms_at(o)) {
            ++endo_total[c];
            fixed_total[c] += static_cast<std::int64_t>(fix(x, a).size());
        }
    }
    Rat value;
    for (std::size_t c = 0; c < fixed_total.size(); ++c)
        value += Rat(fixed_total[c], endo_total[c]);
    return value;
}

Rat cf_count(const GSet& x) {
    Rat value = cf_sum(x);
    if (denominator(value) != 1)
        throw Error("cf_count: non-integral value " + to_string(value) +
                    " (functoriality is broken somewhere)");
    std::int64_t orbit_count = static_cast<std::int64_t>(orbits(x).members.size());
    if (value != Rat(orbit_count))
        throw Error("cf_count: fixed-point average " + to_string(value) +
                    " disagrees with orbit count " + std::to_string(orbit_count));
    return value;
}

std::vector<std::string> orbit_stabilizer_check(const GSet& x) {
    std::vector<std::string> bad;
    const FiniteGroupoid& g = *x.base;
    OrbitPartition part = orbits(x);
    for (Obj o = 0; o < g.object_count(); ++o) {
        std::vector<std::int64_t> sum(part.members.size(), 0);
        std::vector<char> meets(part.members.size(), 0);
        for (int e = 0; e < x.carrier_size[static_cast<std::size_t>(o)]; ++e) {
            int orb = part.orbit_of[static_cast<std::size_t>(x.global_id(o, e))];
            meets[static_cast<std::size_t>(orb)] = 1;
            sum[static_cast<std::size_t>(orb)] +=
                static_cast<std::int64_t>(stabilizer(x, o, e).morphisms().size());
        }
        std::int64_t iso = static_cast<std::int64_t>(g.isotropy_order(o));
        for (std::size_t orb = 0; orb < part.members.size(); ++orb)
            if (meets[orb] && sum[orb] != iso)
                bad.push_back("object " + std::to_string(o) + ", orbit " + std::to_string(orb) +
                              ": stabilizer sizes sum to " + std::to_string(sum[orb]) +
                              ", isotropy order is " + std::to_string(iso));
    }
    return bad;
}

bool transitive(const GSet& x) { return action_groupoid(x).groupoid.connected(); }

}  // namespace gpd
