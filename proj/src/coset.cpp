#include "gpd/coset.hpp"

#include "gpd/union_find.hpp"

#include <algorithm>

namespace gpd {

namespace {

void require_wide(const Subgroupoid& s, const char* what) {
    if (!s.wide())
        throw Error(std::string(what) +
                    ": not covered for non-wide subgroupoids (objects outside the subgroupoid "
                    "have no cosets)");
}

}  // namespace

DoubleCosetPartition double_cosets(const FiniteGroupoid& g, const Subgroupoid& h,
                                   const Subgroupoid& k) {
    require_wide(h, "double_cosets");
    require_wide(k, "double_cosets");
    UnionFind uf(static_cast<std::size_t>(g.morphism_count()));
    for (Mor hm : h.morphisms())
        for (Mor a : g.morphisms_into(g.dom(hm)))
            uf.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(g.compose(hm, a)));
    for (Mor km : k.morphisms())
        for (Mor a : g.morphisms_from(g.cod(km)))
            uf.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(g.compose(a, km)));

    DoubleCosetPartition out;
    out.block_of = uf.labels();
    int count = out.block_of.empty() ? 0 : *std::max_element(out.block_of.begin(), out.block_of.end()) + 1;
    out.blocks.resize(static_cast<std::size_t>(count));
    for (Mor a = 0; a < g.morphism_count(); ++a)
        out.blocks[static_cast<std::size_t>(out.block_of[static_cast<std::size_t>(a)])].push_back(a);
    for (const auto& b : out.blocks) out.representatives.push_back(b.front());
    return out;
}

LeftCosetGSet left_cosets(const FiniteGroupoid& g, const Subgroupoid& h) {
    require_wide(h, "left_cosets");
    LeftCosetGSet out;
    out.coset_of.assign(static_cast<std::size_t>(g.morphism_count()), -1);
    out.members.resize(static_cast<std::size_t>(g.object_count()));

    std::vector<int> sizes(static_cast<std::size_t>(g.object_count()), 0);
    for (Obj x = 0; x < g.object_count(); ++x) {
        const auto& in = g.morphisms_into(x);
        auto& cosets = out.members[static_cast<std::size_t>(x)];
        for (Mor a : in) {
            if (out.coset_of[static_cast<std::size_t>(a)] >= 0) continue;
            int id = static_cast<int>(cosets.size());
            cosets.emplace_back();
            for (Mor b : in) {
                if (out.coset_of[static_cast<std::size_t>(b)] >= 0) continue;
                if (h.contains_morphism(g.compose(g.inverse(a), b))) {
                    out.coset_of[static_cast<std::size_t>(b)] = id;
                    cosets.back().push_back(b);
                }
            }
        }
        sizes[static_cast<std::size_t>(x)] = static_cast<int>(cosets.size());
    }

    std::vector<std::vector<int>> act(static_cast<std::size_t>(g.morphism_count()));
    for (Mor u = 0; u < g.morphism_count(); ++u) {
        Obj x = g.dom(u);
        auto& row = act[static_cast<std::size_t>(u)];
        row.assign(static_cast<std::size_t>(sizes[static_cast<std::size_t>(x)]), -1);
        for (const auto& coset : out.members[static_cast<std::size_t>(x)]) {
            int from = out.coset_of[static_cast<std::size_t>(coset.front())];
            for (Mor a : coset) {
                int to = out.coset_of[static_cast<std::size_t>(g.compose(u, a))];
                if (row[static_cast<std::size_t>(from)] == -1)
                    row[static_cast<std::size_t>(from)] = to;
                else if (row[static_cast<std::size_t>(from)] != to)
                    throw Error("left_cosets: action is not well-defined at morphism " +
                                std::to_string(u) + " (subgroupoid is not closed?)");
            }
        }
    }
    out.gset = GSet(g, std::move(sizes), std::move(act));
    return out;
}

DoubleCosetSize double_coset_size_formula(const FiniteGroupoid& g, const Subgroupoid& h,
                                          const Subgroupoid& k, Mor mor) {
    require_wide(h, "double_coset_size_formula");
    require_wide(k, "double_coset_size_formula");
    if (mor < 0 || mor >= g.morphism_count())
        throw Error("double_coset_size_formula: morphism out of range");

    SubComponents hc = sub_components(h);
    SubComponents kc = sub_components(k);
    Obj a = g.dom(mor), b = g.cod(mor);

    DoubleCosetSize out;
    out.delta =
        static_cast<std::int64_t>(hc.objects[static_cast<std::size_t>(
                                                 hc.component_of_object[static_cast<std::size_t>(b)])]
                                      .size()) *
        static_cast<std::int64_t>(kc.objects[static_cast<std::size_t>(
                                                 kc.component_of_object[static_cast<std::size_t>(a)])]
                                      .size());
    out.h_iso = static_cast<std::int64_t>(h.isotropy_order(b));
    out.k_iso = static_cast<std::int64_t>(k.isotropy_order(a));

    // |H_b ∩ mor K_a mor^{-1}|: endomorphisms u of H at b with
    // mor^{-1} u mor in K.
    for (Mor u : g.endomorphisms_at(b)) {
        if (!h.contains_morphism(u)) continue;
        Mor conj = g.compose(g.inverse(mor), g.compose(u, mor));
        if (k.contains_morphism(conj)) ++out.overlap;
    }

    std::int64_t numerator = out.delta * out.h_iso * out.k_iso;
    if (numerator % out.overlap != 0)
        throw Error("double_coset_size_formula: overlap does not divide the pair count");
    out.size = numerator / out.overlap;
    return out;
}

Obj XhkAction::base_object(Obj h_local, Obj k_local) const {
    return h_local * k_part.groupoid.object_count() + k_local;
}

XhkAction x_hk_action(const FiniteGroupoid& g, const Subgroupoid& h, const Subgroupoid& k) {
    Extracted h_part = extract(h);
    Extracted k_part = extract(k);
    auto base = std::make_unique<FiniteGroupoid>(product(h_part.groupoid, k_part.groupoid));
    const Obj nk = k_part.groupoid.object_count();
    const Mor mk = k_part.groupoid.morphism_count();

    std::vector<std::vector<Mor>> fiber(static_cast<std::size_t>(base->object_count()));
    std::vector<int> fiber_pos(static_cast<std::size_t>(g.morphism_count()), -1);
    std::vector<int> sizes(static_cast<std::size_t>(base->object_count()));
    for (Obj hs = 0; hs < h_part.groupoid.object_count(); ++hs)
        for (Obj kt = 0; kt < nk; ++kt) {
            Obj bo = hs * nk + kt;
            Obj s = h_part.obj_to_parent[static_cast<std::size_t>(hs)];
            Obj t = k_part.obj_to_parent[static_cast<std::size_t>(kt)];
            fiber[static_cast<std::size_t>(bo)] = g.hom(t, s);
            const auto& f = fiber[static_cast<std::size_t>(bo)];
            for (std::size_t i = 0; i < f.size(); ++i)
                fiber_pos[static_cast<std::size_t>(f[i])] = static_cast<int>(i);
            sizes[static_cast<std::size_t>(bo)] = static_cast<int>(f.size());
        }

    std::vector<std::vector<int>> act(static_cast<std::size_t>(base->morphism_count()));
    for (Mor hm = 0; hm < h_part.groupoid.morphism_count(); ++hm)
        for (Mor km = 0; km < mk; ++km) {
            Mor bm = hm * mk + km;
            Mor hp = h_part.mor_to_parent[static_cast<std::size_t>(hm)];
            Mor kp = k_part.mor_to_parent[static_cast<std::size_t>(km)];
            const auto& from = fiber[static_cast<std::size_t>(base->dom(bm))];
            auto& row = act[static_cast<std::size_t>(bm)];
            row.resize(from.size());
            for (std::size_t i = 0; i < from.size(); ++i) {
                Mor image = g.compose(hp, g.compose(from[i], g.inverse(kp)));
                row[i] = fiber_pos[static_cast<std::size_t>(image)];
            }
        }
    GSet gs(*base, std::move(sizes), std::move(act));
    return XhkAction{std::move(base), std::move(h_part), std::move(k_part), std::move(gs),
                     std::move(fiber), std::move(fiber_pos)};
}

CommaCategory comma_category(const FiniteGroupoid& g, const Subgroupoid& h, const Subgroupoid& k) {
    std::vector<Mor> object_label;
    std::vector<Obj> object_of_parent(static_cast<std::size_t>(g.morphism_count()), -1);
    for (Mor a = 0; a < g.morphism_count(); ++a)
        if (k.contains_object(g.dom(a)) && h.contains_object(g.cod(a))) {
            object_of_parent[static_cast<std::size_t>(a)] = static_cast<Obj>(object_label.size());
            object_label.push_back(a);
        }
    if (object_label.empty())
        throw Error("comma_category: no objects (subgroupoids share no endpoints with G)");

    // Legs at object a: h' from cod a within H, k' from dom a within K,
    // enumerated h'-major. Per-object leg lists are ascending.
    std::vector<std::vector<Mor>> h_out(object_label.size());
    std::vector<std::vector<Mor>> k_out(object_label.size());
    std::vector<int> leg_offset(object_label.size() + 1, 0);
    for (std::size_t i = 0; i < object_label.size(); ++i) {
        Mor a = object_label[i];
        for (Mor hm : g.morphisms_from(g.cod(a)))
            if (h.contains_morphism(hm)) h_out[i].push_back(hm);
        for (Mor km : g.morphisms_from(g.dom(a)))
            if (k.contains_morphism(km)) k_out[i].push_back(km);
        leg_offset[i + 1] =
            leg_offset[i] + static_cast<int>(h_out[i].size() * k_out[i].size());
    }

    auto leg_index = [&](Obj comma_obj, Mor hm, Mor km) -> Mor {
        const auto& hs = h_out[static_cast<std::size_t>(comma_obj)];
        const auto& ks = k_out[static_cast<std::size_t>(comma_obj)];
        auto hit = std::lower_bound(hs.begin(), hs.end(), hm);
        auto kit = std::lower_bound(ks.begin(), ks.end(), km);
        return leg_offset[static_cast<std::size_t>(comma_obj)] +
               static_cast<int>(hit - hs.begin()) * static_cast<int>(ks.size()) +
               static_cast<int>(kit - ks.begin());
    };

    std::vector<std::pair<Mor, Mor>> morphism_label;
    GroupoidData d;
    d.object_count = static_cast<Obj>(object_label.size());
    d.identity.resize(object_label.size());
    for (std::size_t i = 0; i < object_label.size(); ++i) {
        Mor a = object_label[i];
        for (Mor hm : h_out[i])
            for (Mor km : k_out[i]) {
                Mor target = g.compose(hm, g.compose(a, g.inverse(km)));
                Obj ti = object_of_parent[static_cast<std::size_t>(target)];
                morphism_label.emplace_back(km, hm);
                d.dom.push_back(static_cast<Obj>(i));
                d.cod.push_back(ti);
                d.inverse.push_back(leg_index(ti, g.inverse(hm), g.inverse(km)));
            }
        d.identity[i] = leg_index(static_cast<Obj>(i), g.identity(g.cod(a)), g.identity(g.dom(a)));
    }
    for (std::size_t i = 0; i < object_label.size(); ++i) {
        Mor a = object_label[i];
        for (Mor h1 : h_out[i])
            for (Mor k1 : k_out[i]) {
                Mor mid = g.compose(h1, g.compose(a, g.inverse(k1)));
                Obj mi = object_of_parent[static_cast<std::size_t>(mid)];
                Mor first = leg_index(static_cast<Obj>(i), h1, k1);
                for (Mor h2 : h_out[static_cast<std::size_t>(mi)])
                    for (Mor k2 : k_out[static_cast<std::size_t>(mi)]) {
                        Mor second = leg_index(mi, h2, k2);
                        d.compose.emplace_back(
                            second, first,
                            leg_index(static_cast<Obj>(i), g.compose(h2, h1), g.compose(k2, k1)));
                    }
            }
    }
    return CommaCategory{FiniteGroupoid(std::move(d)), std::move(object_label),
                         std::move(morphism_label), std::move(object_of_parent)};
}

std::vector<std::string> comma_iso_check(const FiniteGroupoid& g, const Subgroupoid& h,
                                         const Subgroupoid& k) {
    std::vector<std::string> bad;
    XhkAction x = x_hk_action(g, h, k);
    ActionGroupoid ag = action_groupoid(x.gset);
    CommaCategory comma = comma_category(g, h, k);

    if (ag.groupoid.object_count() != comma.groupoid.object_count())
        bad.push_back("object counts differ: " + std::to_string(ag.groupoid.object_count()) +
                      " vs " + std::to_string(comma.groupoid.object_count()));
    if (ag.groupoid.morphism_count() != comma.groupoid.morphism_count())
        bad.push_back("morphism counts differ: " + std::to_string(ag.groupoid.morphism_count()) +
                      " vs " + std::to_string(comma.groupoid.morphism_count()));
    if (!bad.empty()) return bad;

    const Mor mk = x.k_part.groupoid.morphism_count();
    GroupoidFunctor f;
    f.obj_map.resize(static_cast<std::size_t>(ag.groupoid.object_count()));
    for (Obj o = 0; o < ag.groupoid.object_count(); ++o) {
        auto [base_obj, elt] = ag.object_label[static_cast<std::size_t>(o)];
        Mor parent = x.fiber[static_cast<std::size_t>(base_obj)][static_cast<std::size_t>(elt)];
        f.obj_map[static_cast<std::size_t>(o)] =
            comma.object_of_parent[static_cast<std::size_t>(parent)];
    }
    f.mor_map.resize(static_cast<std::size_t>(ag.groupoid.morphism_count()));
    // Comma morphism lookup by (source object, k, h): scan once and index.
    std::vector<std::vector<std::pair<std::pair<Mor, Mor>, Mor>>> by_source(
        static_cast<std::size_t>(comma.groupoid.object_count()));
    for (Mor cm = 0; cm < comma.groupoid.morphism_count(); ++cm)
        by_source[static_cast<std::size_t>(comma.groupoid.dom(cm))].push_back(
            {comma.morphism_label[static_cast<std::size_t>(cm)], cm});
    for (auto& v : by_source) std::sort(v.begin(), v.end());

    for (Mor am = 0; am < ag.groupoid.morphism_count(); ++am) {
        Mor base_mor = ag.morphism_label[static_cast<std::size_t>(am)];
        Mor hm = base_mor / mk, km = base_mor % mk;
        Mor hp = x.h_part.mor_to_parent[static_cast<std::size_t>(hm)];
        Mor kp = x.k_part.mor_to_parent[static_cast<std::size_t>(km)];
        Obj src = f.obj_map[static_cast<std::size_t>(ag.groupoid.dom(am))];
        const auto& cand = by_source[static_cast<std::size_t>(src)];
        auto it = std::lower_bound(cand.begin(), cand.end(),
                                   std::make_pair(std::make_pair(kp, hp), Mor(-1)));
        if (it == cand.end() || it->first != std::make_pair(kp, hp)) {
            bad.push_back("no comma morphism for leg (" + std::to_string(kp) + ", " +
                          std::to_string(hp) + ") at object " + std::to_string(src));
            return bad;
        }
        f.mor_map[static_cast<std::size_t>(am)] = it->second;
    }

    // Bijectivity on objects and morphisms.
    {
        std::vector<char> seen(static_cast<std::size_t>(comma.groupoid.object_count()), 0);
        for (Obj o : f.obj_map) {
            if (seen[static_cast<std::size_t>(o)]) {
                bad.push_back("object map is not injective");
                break;
            }
            seen[static_cast<std::size_t>(o)] = 1;
        }
    }
    {
        std::vector<char> seen(static_cast<std::size_t>(comma.groupoid.morphism_count()), 0);
        for (Mor mm : f.mor_map) {
            if (seen[static_cast<std::size_t>(mm)]) {
                bad.push_back("morphism map is not injective");
                break;
            }
            seen[static_cast<std::size_t>(mm)] = 1;
        }
    }
    std::string why;
    if (!is_functor(ag.groupoid, comma.groupoid, f, &why))
        bad.push_back("not a functor: " + why);
    return bad;
}

}  // namespace gpd
