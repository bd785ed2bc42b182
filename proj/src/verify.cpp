#include "gpd/verify.hpp"

#include "gpd/action.hpp"
#include "gpd/coset.hpp"
#include "gpd/fnspace.hpp"
#include "gpd/linrep.hpp"

#include <algorithm>
#include <sstream>

namespace gpd {

bool VerificationReport::all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.ok; });
}

void VerificationReport::add(std::string check, std::string instance, std::string expected,
                             std::string actual) {
    bool ok = expected == actual;
    rows.push_back({std::move(check), std::move(instance), std::move(expected), std::move(actual), ok});
}

void VerificationReport::add_status(std::string check, std::string instance,
                                    const std::vector<std::string>& failures) {
    rows.push_back({std::move(check), std::move(instance), "ok",
                    failures.empty() ? "ok" : failures.front(), failures.empty()});
}

std::string VerificationReport::render(bool records) const {
    std::ostringstream os;
    if (records) {
        for (const CheckRow& r : rows)
            os << "check=" << r.check << " instance=" << r.instance << " expected=" << r.expected
               << " actual=" << r.actual << " status=" << (r.ok ? "OK" : "FAIL") << "\n";
        return os.str();
    }
    std::size_t wc = 5, wi = 8;
    for (const CheckRow& r : rows) {
        wc = std::max(wc, r.check.size());
        wi = std::max(wi, r.instance.size());
    }
    for (const CheckRow& r : rows) {
        os << (r.ok ? "[ OK ] " : "[FAIL] ");
        os << r.check << std::string(wc - r.check.size() + 2, ' ');
        os << r.instance << std::string(wi - r.instance.size() + 2, ' ');
        os << "expected=" << r.expected << " actual=" << r.actual << "\n";
    }
    return os.str();
}

namespace {

std::string istr(std::int64_t v) { return std::to_string(v); }

/// Component-local copies of G, H, K. Built fresh per component; everything
/// stays on the stack of the caller.
struct LocalPieces {
    Extracted comp;
    std::vector<Obj> local_objs;
    std::vector<Mor> local_h, local_k;
};

LocalPieces component_pieces(const FiniteGroupoid& g, const Subgroupoid& h, const Subgroupoid& k,
                             const std::vector<Obj>& objects) {
    std::vector<Mor> mors;
    for (Obj x : objects)
        for (Mor a : g.morphisms_into(x)) mors.push_back(a);
    LocalPieces out{extract(Subgroupoid(g, objects, mors)), {}, {}, {}};
    out.local_objs.resize(out.comp.obj_to_parent.size());
    for (std::size_t i = 0; i < out.local_objs.size(); ++i)
        out.local_objs[i] = static_cast<Obj>(i);
    for (Mor a : out.comp.mor_to_parent) {
        if (h.contains_morphism(a))
            out.local_h.push_back(out.comp.mor_from_parent[static_cast<std::size_t>(a)]);
        if (k.contains_morphism(a))
            out.local_k.push_back(out.comp.mor_from_parent[static_cast<std::size_t>(a)]);
    }
    return out;
}

}  // namespace

VerificationReport verify_instance(const FiniteGroupoid& g, const Subgroupoid& h,
                                   const Subgroupoid& k, const std::string& label) {
    VerificationReport rep;
    if (!h.wide() || !k.wide()) throw Error("verify: H and K must be wide subgroupoids");

    {
        auto axioms = validate(g);
        std::vector<std::string> msgs;
        for (const auto& v : axioms) msgs.push_back(v.message);
        rep.add_status("axioms", label, msgs);
        rep.add_status("subgroupoid-h", label, h.check());
        rep.add_status("subgroupoid-k", label, k.check());
    }

    // Per-component structure: hom-set sizes, the product decomposition, the
    // coset-index formula.
    const auto& comps = g.component_objects();
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        std::string inst = label + "/comp" + std::to_string(ci);
        LocalPieces pieces = component_pieces(g, h, k, comps[ci]);
        const FiniteGroupoid& cg = pieces.comp.groupoid;

        std::size_t iso = cg.isotropy_order(0);
        bool hom_ok = true;
        for (Obj y = 0; y < cg.object_count() && hom_ok; ++y)
            for (Obj z = 0; z < cg.object_count() && hom_ok; ++z)
                hom_ok = cg.hom(y, z).size() == iso;
        rep.add("hom-size", inst, istr(static_cast<std::int64_t>(iso)),
                hom_ok ? istr(static_cast<std::int64_t>(iso)) : "mismatch");

        try {
            StructureDecomposition sd = structure_decomposition(cg, 0);
            std::string why;
            bool ok = is_functor(cg, sd.target, sd.forward, &why) &&
                      is_functor(sd.target, cg, sd.backward, &why);
            for (Mor a = 0; ok && a < cg.morphism_count(); ++a)
                ok = sd.backward.mor_map[static_cast<std::size_t>(
                         sd.forward.mor_map[static_cast<std::size_t>(a)])] == a;
            for (Mor p = 0; ok && p < sd.target.morphism_count(); ++p)
                ok = sd.forward.mor_map[static_cast<std::size_t>(
                         sd.backward.mor_map[static_cast<std::size_t>(p)])] == p;
            rep.add("structure-iso", inst, "roundtrip", ok ? "roundtrip" : ("fail: " + why));
        } catch (const Error& e) {
            rep.add("structure-iso", inst, "roundtrip", std::string("error: ") + e.what());
        }

        for (const char* side : {"h", "k"}) {
            const auto& local = side[0] == 'h' ? pieces.local_h : pieces.local_k;
            try {
                Subgroupoid sc(cg, pieces.local_objs, local);
                IndexResult ir = coset_index(cg, sc);
                rep.add(std::string("index-formula-") + side, inst, istr(ir.coset_total),
                        istr(ir.formula_value));
            } catch (const Error& e) {
                rep.add(std::string("index-formula-") + side, inst, "equal",
                        std::string("error: ") + e.what());
            }
        }
    }

    // Double cosets three ways: closure, fixed-point count, comma category.
    DoubleCosetPartition dc = double_cosets(g, h, k);
    {
        XhkAction x = x_hk_action(g, h, k);
        rep.add_status("xhk-functorial", label, check_gset(x.gset));
        OrbitPartition orb = orbits(x.gset);
        rep.add("cf-orbit-count", label, istr(static_cast<std::int64_t>(orb.members.size())),
                to_string(cf_sum(x.gset)));
        rep.add("orbit-count-is-block-count", label, istr(static_cast<std::int64_t>(dc.blocks.size())),
                istr(static_cast<std::int64_t>(orb.members.size())));
        rep.add_status("orbit-stabilizer", label, orbit_stabilizer_check(x.gset));
    }
    {
        std::int64_t matched = 0;
        for (Mor a = 0; a < g.morphism_count(); ++a) {
            DoubleCosetSize f = double_coset_size_formula(g, h, k, a);
            if (f.size == static_cast<std::int64_t>(
                              dc.blocks[static_cast<std::size_t>(dc.block_of[static_cast<std::size_t>(a)])]
                                  .size()))
                ++matched;
        }
        rep.add("double-coset-size-formula", label, istr(g.morphism_count()), istr(matched));
    }
    {
        rep.add_status("comma-iso", label, comma_iso_check(g, h, k));
        CommaCategory comma = comma_category(g, h, k);
        rep.add("comma-component-count", label, istr(static_cast<std::int64_t>(dc.blocks.size())),
                istr(comma.groupoid.component_count()));
    }

    // Cosets, induction, function spaces per side.
    LeftCosetGSet lch = left_cosets(g, h);
    LeftCosetGSet lck = left_cosets(g, k);
    rep.add_status("coset-action-h", label, check_gset(lch.gset));
    rep.add_status("coset-action-k", label, check_gset(lck.gset));

    Extracted eh = extract(h);
    Extracted ek = extract(k);
    {
        InducedGSet ih = induce_gset(g, h, eh, terminal_gset(eh.groupoid));
        rep.add_status("induced-set-vs-cosets-h", label, induced_terminal_matches_cosets(g, ih, lch));
        InducedGSet ik = induce_gset(g, k, ek, terminal_gset(ek.groupoid));
        rep.add_status("induced-set-vs-cosets-k", label, induced_terminal_matches_cosets(g, ik, lck));
    }
    Representation ind_h = induce_rep(g, h, eh, trivial_rep(eh.groupoid));
    Representation ind_k = induce_rep(g, k, ek, trivial_rep(ek.groupoid));
    Representation perm_h = permutation_rep(lch.gset);
    Representation perm_k = permutation_rep(lck.gset);
    {
        std::vector<std::string> fails;
        if (!check_representation(ind_h).empty()) fails.push_back("induced rep over h is invalid");
        if (character(ind_h).values != character(perm_h).values)
            fails.push_back("characters differ (h side)");
        if (!check_representation(ind_k).empty()) fails.push_back("induced rep over k is invalid");
        if (character(ind_k).values != character(perm_k).values)
            fails.push_back("characters differ (k side)");
        rep.add_status("induced-rep-character", label, fails);
    }

    {
        try {
            InvariantFunctionSpace ifs = invariant_function_space(g, h, k);
            rep.add("invariant-function-dim", label, istr(static_cast<std::int64_t>(dc.blocks.size())),
                    istr(ifs.constraint_dim));

            YRep yh = y_rep(g, h);
            YRep yk = y_rep(g, k);
            rep.add_status("theta-iso-h", label, theta_iso_check(g, lch, yh));
            rep.add_status("theta-iso-k", label, theta_iso_check(g, lck, yk));

            std::int64_t ts_ok = 0;
            for (const QVec& phi : ifs.basis) {
                NatTransform t = s_map(g, h, k, phi, yh, yk);
                if (t_map(g, h, k, t, yh, yk) == phi) ++ts_ok;
            }
            rep.add("ts-roundtrip", label, istr(static_cast<std::int64_t>(ifs.basis.size())),
                    istr(ts_ok));

            auto basis = intertwiner_basis(yh.rep, yk.rep);
            rep.add("intertwiner-dim", label, istr(static_cast<std::int64_t>(ifs.basis.size())),
                    istr(static_cast<std::int64_t>(basis.size())));
            std::int64_t st_ok = 0;
            for (const NatTransform& psi : basis) {
                QVec phi = t_map(g, h, k, psi, yh, yk);
                NatTransform again = s_map(g, h, k, phi, yh, yk);
                bool same = again.component.size() == psi.component.size();
                for (std::size_t i = 0; same && i < psi.component.size(); ++i)
                    same = again.component[i] == psi.component[i];
                if (same) ++st_ok;
            }
            rep.add("st-roundtrip", label, istr(static_cast<std::int64_t>(basis.size())), istr(st_ok));
        } catch (const Error& e) {
            rep.add("function-space", label, "ok", std::string("error: ") + e.what());
        }
    }

    // Character counting per component (the averaged pairing is exact on
    // connected groupoids).
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        std::string inst = label + "/comp" + std::to_string(ci);
        LocalPieces pieces = component_pieces(g, h, k, comps[ci]);
        const FiniteGroupoid& cg = pieces.comp.groupoid;
        try {
            Subgroupoid hc(cg, pieces.local_objs, pieces.local_h);
            Subgroupoid kc(cg, pieces.local_objs, pieces.local_k);
            DoubleCosetPartition dcc = double_cosets(cg, hc, kc);
            Extracted ehc = extract(hc);
            Extracted ekc = extract(kc);
            Representation ic_h = induce_rep(cg, hc, ehc, trivial_rep(ehc.groupoid));
            Representation ic_k = induce_rep(cg, kc, ekc, trivial_rep(ekc.groupoid));
            rep.add("char-count", inst, istr(static_cast<std::int64_t>(dcc.blocks.size())),
                    to_string(char_inner_product(ic_h, ic_k)));

            std::vector<Representation> reps;
            reps.push_back(trivial_rep(cg));
            reps.push_back(permutation_rep(left_cosets(cg, hc).gset));
            reps.push_back(permutation_rep(left_cosets(cg, kc).gset));
            reps.push_back(y_rep(cg, hc).rep);
            reps.push_back(y_rep(cg, kc).rep);
            std::int64_t pairs = 0, matched = 0;
            for (std::size_t i = 0; i < reps.size(); ++i)
                for (std::size_t j = i; j < reps.size(); ++j) {
                    ++pairs;
                    GaussRat ip = char_inner_product(reps[i], reps[j]);
                    if (GaussRat(Rat(nat_space_dim(reps[i], reps[j]))) == ip) ++matched;
                }
            rep.add("intertwiner-vs-character", inst, istr(pairs), istr(matched));
        } catch (const Error& e) {
            rep.add("char-count", inst, "ok", std::string("error: ") + e.what());
        }
    }

    return rep;
}

}  // namespace gpd
