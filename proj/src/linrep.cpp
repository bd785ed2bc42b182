#include "gpd/linrep.hpp"

#include "gpd/union_find.hpp"

#include <algorithm>
#include <numeric>

namespace gpd {

namespace {

void require_same_base(const Representation& r, const Representation& r2, const char* what) {
    if (r.base != r2.base) throw Error(std::string(what) + ": representations have different bases");
}

/// Column layout of the intertwiner unknowns: one block per object, entry
/// (row i of r2, column j of r) at block offset + i*dim_r + j.
struct PhiLayout {
    std::vector<std::size_t> offset;
    std::size_t total = 0;

    PhiLayout(const Representation& r, const Representation& r2) {
        const FiniteGroupoid& g = *r.base;
        offset.resize(static_cast<std::size_t>(g.object_count()));
        for (Obj x = 0; x < g.object_count(); ++x) {
            offset[static_cast<std::size_t>(x)] = total;
            total += static_cast<std::size_t>(r.dim[static_cast<std::size_t>(x)]) *
                     static_cast<std::size_t>(r2.dim[static_cast<std::size_t>(x)]);
        }
    }
    std::size_t at(Obj x, int i, int j, const Representation& r) const {
        return offset[static_cast<std::size_t>(x)] +
               static_cast<std::size_t>(i) * static_cast<std::size_t>(r.dim[static_cast<std::size_t>(x)]) +
               static_cast<std::size_t>(j);
    }
};

RowReducer intertwiner_system(const Representation& r, const Representation& r2,
                              const PhiLayout& layout) {
    const FiniteGroupoid& g = *r.base;
    RowReducer reducer(layout.total);
    std::vector<std::pair<std::size_t, GaussRat>> row;
    for (Mor a = 0; a < g.morphism_count(); ++a) {
        Obj x = g.dom(a), y = g.cod(a);
        const QMat& ra = r.mat[static_cast<std::size_t>(a)];
        const QMat& sa = r2.mat[static_cast<std::size_t>(a)];
        // phi_y * r(a) = r2(a) * phi_x, entrywise over (i, j).
        for (int i = 0; i < r2.dim[static_cast<std::size_t>(y)]; ++i)
            for (int j = 0; j < r.dim[static_cast<std::size_t>(x)]; ++j) {
                row.clear();
                for (int t = 0; t < r.dim[static_cast<std::size_t>(y)]; ++t) {
                    const GaussRat& c = ra.at(static_cast<std::size_t>(t), static_cast<std::size_t>(j));
                    if (!c.is_zero()) row.emplace_back(layout.at(y, i, t, r), c);
                }
                for (int t = 0; t < r2.dim[static_cast<std::size_t>(x)]; ++t) {
                    const GaussRat& c = sa.at(static_cast<std::size_t>(i), static_cast<std::size_t>(t));
                    if (!c.is_zero()) row.emplace_back(layout.at(x, t, j, r), -c);
                }
                reducer.add_sparse_row(row);
            }
    }
    return reducer;
}

}  // namespace

std::vector<std::string> check_representation(const Representation& r) {
    std::vector<std::string> bad;
    const FiniteGroupoid& g = *r.base;
    if (static_cast<Obj>(r.dim.size()) != g.object_count() ||
        static_cast<Mor>(r.mat.size()) != g.morphism_count()) {
        bad.push_back("table sizes do not match the base groupoid");
        return bad;
    }
    for (Mor a = 0; a < g.morphism_count(); ++a) {
        const QMat& m = r.mat[static_cast<std::size_t>(a)];
        if (m.rows() != static_cast<std::size_t>(r.dim[static_cast<std::size_t>(g.cod(a))]) ||
            m.cols() != static_cast<std::size_t>(r.dim[static_cast<std::size_t>(g.dom(a))]))
            bad.push_back("matrix " + std::to_string(a) + " has wrong shape");
    }
    if (!bad.empty()) return bad;
    for (Obj x = 0; x < g.object_count(); ++x)
        if (!r.mat[static_cast<std::size_t>(g.identity(x))].is_identity())
            bad.push_back("identity of object " + std::to_string(x) + " is not the identity matrix");
    for (Mor a = 0; a < g.morphism_count(); ++a)
        if (!(r.mat[static_cast<std::size_t>(g.inverse(a))] * r.mat[static_cast<std::size_t>(a)])
                 .is_identity())
            bad.push_back("matrix of morphism " + std::to_string(a) + " is not inverted by its inverse");
    g.compose_table().for_each([&](Mor g2, Mor g1, Mor res) {
        if (r.mat[static_cast<std::size_t>(res)] !=
            r.mat[static_cast<std::size_t>(g2)] * r.mat[static_cast<std::size_t>(g1)])
            bad.push_back("functoriality fails at pair (" + std::to_string(g2) + ", " +
                          std::to_string(g1) + ")");
    });
    return bad;
}

Representation trivial_rep(const FiniteGroupoid& g) {
    Representation r;
    r.base = &g;
    r.dim.assign(static_cast<std::size_t>(g.object_count()), 1);
    r.mat.assign(static_cast<std::size_t>(g.morphism_count()), QMat::identity(1));
    return r;
}

Representation permutation_rep(const GSet& x) {
    Representation r;
    r.base = x.base;
    r.dim = x.carrier_size;
    r.mat.reserve(static_cast<std::size_t>(x.base->morphism_count()));
    for (Mor a = 0; a < x.base->morphism_count(); ++a) {
        QMat m(static_cast<std::size_t>(x.carrier_size[static_cast<std::size_t>(x.base->cod(a))]),
               static_cast<std::size_t>(x.carrier_size[static_cast<std::size_t>(x.base->dom(a))]));
        for (int e = 0; e < x.carrier_size[static_cast<std::size_t>(x.base->dom(a))]; ++e)
            m.at(static_cast<std::size_t>(x.apply(a, e)), static_cast<std::size_t>(e)) = GaussRat(1);
        r.mat.push_back(std::move(m));
    }
    return r;
}

Character character(const Representation& r) {
    Character chi;
    const FiniteGroupoid& g = *r.base;
    chi.values.assign(static_cast<std::size_t>(g.morphism_count()), GaussRat(0));
    for (Mor a = 0; a < g.morphism_count(); ++a)
        if (g.is_endomorphism(a)) chi.values[static_cast<std::size_t>(a)] = r.mat[static_cast<std::size_t>(a)].trace();
    return chi;
}

GaussRat char_inner_product(const Representation& r, const Representation& r2) {
    require_same_base(r, r2, "char_inner_product");
    const FiniteGroupoid& g = *r.base;
    Character a = character(r), b = character(r2);
    GaussRat total;
    for (Obj x = 0; x < g.object_count(); ++x) {
        GaussRat local;
        for (Mor e : g.endomorphisms_at(x))
            local += a.values[static_cast<std::size_t>(e)] * b.values[static_cast<std::size_t>(e)].conj();
        total += local / GaussRat(Rat(static_cast<std::int64_t>(g.isotropy_order(x))));
    }
    return total / GaussRat(Rat(g.object_count()));
}

std::int64_t nat_space_dim(const Representation& r, const Representation& r2) {
    require_same_base(r, r2, "nat_space_dim");
    PhiLayout layout(r, r2);
    RowReducer reducer = intertwiner_system(r, r2, layout);
    return static_cast<std::int64_t>(layout.total - reducer.rank());
}

std::vector<NatTransform> intertwiner_basis(const Representation& r, const Representation& r2) {
    require_same_base(r, r2, "intertwiner_basis");
    const FiniteGroupoid& g = *r.base;
    PhiLayout layout(r, r2);
    RowReducer reducer = intertwiner_system(r, r2, layout);
    std::vector<NatTransform> basis;
    for (const QVec& v : reducer.nullspace_basis()) {
        NatTransform t;
        for (Obj x = 0; x < g.object_count(); ++x) {
            QMat m(static_cast<std::size_t>(r2.dim[static_cast<std::size_t>(x)]),
                   static_cast<std::size_t>(r.dim[static_cast<std::size_t>(x)]));
            for (int i = 0; i < r2.dim[static_cast<std::size_t>(x)]; ++i)
                for (int j = 0; j < r.dim[static_cast<std::size_t>(x)]; ++j)
                    m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v[layout.at(x, i, j, r)];
            t.component.push_back(std::move(m));
        }
        basis.push_back(std::move(t));
    }
    return basis;
}

std::vector<std::string> check_natural(const Representation& r, const Representation& r2,
                                       const NatTransform& t) {
    std::vector<std::string> bad;
    const FiniteGroupoid& g = *r.base;
    if (t.component.size() != static_cast<std::size_t>(g.object_count())) {
        bad.push_back("component count does not match the object count");
        return bad;
    }
    for (Mor a = 0; a < g.morphism_count(); ++a) {
        Obj x = g.dom(a), y = g.cod(a);
        if (t.component[static_cast<std::size_t>(y)] * r.mat[static_cast<std::size_t>(a)] !=
            r2.mat[static_cast<std::size_t>(a)] * t.component[static_cast<std::size_t>(x)])
            bad.push_back("naturality square fails at morphism " + std::to_string(a));
    }
    return bad;
}

Representation restrict_rep(const Representation& r, const Extracted& h) {
    Representation out;
    out.base = &h.groupoid;
    for (Obj x : h.obj_to_parent) out.dim.push_back(r.dim[static_cast<std::size_t>(x)]);
    for (Mor a : h.mor_to_parent) out.mat.push_back(r.mat[static_cast<std::size_t>(a)]);
    return out;
}

InducedGSet induce_gset(const FiniteGroupoid& g, const Subgroupoid& h_sub, const Extracted& h,
                        const GSet& x) {
    if (!h_sub.wide()) throw Error("induce_gset: subgroupoid must be wide");
    if (x.base != &h.groupoid) throw Error("induce_gset: G-set is not over the extracted subgroupoid");

    InducedGSet out;
    const Obj n = g.object_count();
    out.legs.resize(static_cast<std::size_t>(n));
    out.leg_offset.resize(static_cast<std::size_t>(n));
    out.class_of.resize(static_cast<std::size_t>(n));
    std::vector<int> sizes(static_cast<std::size_t>(n), 0);

    // Pair id of <leg, element>, leg-major, per target object.
    std::vector<std::vector<int>> leg_pos(static_cast<std::size_t>(n));
    for (Obj target = 0; target < n; ++target) {
        auto& legs = out.legs[static_cast<std::size_t>(target)];
        auto& offs = out.leg_offset[static_cast<std::size_t>(target)];
        auto& pos = leg_pos[static_cast<std::size_t>(target)];
        pos.assign(static_cast<std::size_t>(g.morphism_count()), -1);
        int total = 0;
        for (Mor l : g.morphisms_into(target)) {
            Obj local = h.obj_from_parent[static_cast<std::size_t>(g.dom(l))];
            if (local < 0) continue;
            pos[static_cast<std::size_t>(l)] = static_cast<int>(legs.size());
            legs.push_back(l);
            offs.push_back(total);
            total += x.carrier_size[static_cast<std::size_t>(local)];
        }
        if (legs.empty())
            throw Error("induce_gset: no legs into object " + std::to_string(target));

        UnionFind uf(static_cast<std::size_t>(total));
        for (Mor hm = 0; hm < h.groupoid.morphism_count(); ++hm) {
            Mor hp = h.mor_to_parent[static_cast<std::size_t>(hm)];
            for (Mor kleg : g.morphisms_into(target)) {
                if (g.dom(kleg) != g.cod(hp)) continue;
                int kpos = pos[static_cast<std::size_t>(kleg)];
                if (kpos < 0) continue;
                Mor l = g.compose(kleg, hp);
                int lpos = pos[static_cast<std::size_t>(l)];
                for (int e = 0; e < x.carrier_size[static_cast<std::size_t>(h.groupoid.dom(hm))]; ++e)
                    uf.unite(static_cast<std::size_t>(offs[static_cast<std::size_t>(lpos)] + e),
                             static_cast<std::size_t>(offs[static_cast<std::size_t>(kpos)] + x.apply(hm, e)));
            }
        }
        out.class_of[static_cast<std::size_t>(target)] = uf.labels();
        const auto& cls = out.class_of[static_cast<std::size_t>(target)];
        sizes[static_cast<std::size_t>(target)] =
            cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
    }

    std::vector<std::vector<int>> act(static_cast<std::size_t>(g.morphism_count()));
    for (Mor u = 0; u < g.morphism_count(); ++u) {
        Obj from = g.dom(u), to = g.cod(u);
        auto& row = act[static_cast<std::size_t>(u)];
        row.assign(static_cast<std::size_t>(sizes[static_cast<std::size_t>(from)]), -1);
        const auto& legs = out.legs[static_cast<std::size_t>(from)];
        const auto& offs = out.leg_offset[static_cast<std::size_t>(from)];
        for (std::size_t li = 0; li < legs.size(); ++li) {
            Mor image_leg = g.compose(u, legs[li]);
            int image_pos = leg_pos[static_cast<std::size_t>(to)][static_cast<std::size_t>(image_leg)];
            Obj local = h.obj_from_parent[static_cast<std::size_t>(g.dom(legs[li]))];
            for (int e = 0; e < x.carrier_size[static_cast<std::size_t>(local)]; ++e) {
                int src = out.class_of[static_cast<std::size_t>(from)]
                                      [static_cast<std::size_t>(offs[li] + e)];
                int dst = out.class_of[static_cast<std::size_t>(to)][static_cast<std::size_t>(
                    out.leg_offset[static_cast<std::size_t>(to)][static_cast<std::size_t>(image_pos)] + e)];
                if (row[static_cast<std::size_t>(src)] == -1)
                    row[static_cast<std::size_t>(src)] = dst;
                else if (row[static_cast<std::size_t>(src)] != dst)
                    throw Error("induce_gset: action not well-defined at morphism " + std::to_string(u));
            }
        }
    }
    out.gset = GSet(g, std::move(sizes), std::move(act));
    return out;
}

std::vector<std::string> induced_terminal_matches_cosets(const FiniteGroupoid& g,
                                                         const InducedGSet& ind,
                                                         const LeftCosetGSet& lc) {
    std::vector<std::string> bad;
    // phi per object: class of <leg, *> -> coset of leg.
    std::vector<std::vector<int>> phi(static_cast<std::size_t>(g.object_count()));
    for (Obj target = 0; target < g.object_count(); ++target) {
        int classes = ind.gset.carrier_size[static_cast<std::size_t>(target)];
        int cosets = lc.gset.carrier_size[static_cast<std::size_t>(target)];
        auto& map = phi[static_cast<std::size_t>(target)];
        map.assign(static_cast<std::size_t>(classes), -1);
        if (classes != cosets) {
            bad.push_back("fiber sizes differ at object " + std::to_string(target) + ": " +
                          std::to_string(classes) + " vs " + std::to_string(cosets));
            continue;
        }
        const auto& legs = ind.legs[static_cast<std::size_t>(target)];
        for (std::size_t li = 0; li < legs.size(); ++li) {
            int cls = ind.class_of[static_cast<std::size_t>(target)][static_cast<std::size_t>(
                ind.leg_offset[static_cast<std::size_t>(target)][li])];
            int coset = lc.coset_of[static_cast<std::size_t>(legs[li])];
            if (map[static_cast<std::size_t>(cls)] == -1)
                map[static_cast<std::size_t>(cls)] = coset;
            else if (map[static_cast<std::size_t>(cls)] != coset)
                bad.push_back("class at object " + std::to_string(target) +
                              " meets two different cosets");
        }
        std::vector<char> hit(static_cast<std::size_t>(cosets), 0);
        for (int c : map) {
            if (c < 0) {
                bad.push_back("unmapped class at object " + std::to_string(target));
                break;
            }
            if (hit[static_cast<std::size_t>(c)]) {
                bad.push_back("map not injective at object " + std::to_string(target));
                break;
            }
            hit[static_cast<std::size_t>(c)] = 1;
        }
    }
    if (!bad.empty()) return bad;
    for (Mor u = 0; u < g.morphism_count(); ++u) {
        Obj from = g.dom(u), to = g.cod(u);
        for (int cls = 0; cls < ind.gset.carrier_size[static_cast<std::size_t>(from)]; ++cls) {
            int lhs = phi[static_cast<std::size_t>(to)][static_cast<std::size_t>(ind.gset.apply(u, cls))];
            int rhs = lc.gset.apply(u, phi[static_cast<std::size_t>(from)][static_cast<std::size_t>(cls)]);
            if (lhs != rhs) {
                bad.push_back("bijection is not equivariant at morphism " + std::to_string(u));
                break;
            }
        }
    }
    return bad;
}

Representation induce_rep(const FiniteGroupoid& g, const Subgroupoid& h_sub, const Extracted& h,
                          const Representation& r) {
    if (!h_sub.wide()) throw Error("induce_rep: subgroupoid must be wide");
    if (r.base != &h.groupoid)
        throw Error("induce_rep: representation is not over the extracted subgroupoid");

    const Obj n = g.object_count();
    struct Fiber {
        std::vector<Mor> legs;
        std::vector<int> gen_offset;  // per leg
        std::vector<int> leg_pos;     // per parent morphism, -1 absent
        int generators = 0;
        RowReducer reducer{0};
        std::vector<std::size_t> free_cols;
    };
    std::vector<Fiber> fibers(static_cast<std::size_t>(n));

    for (Obj target = 0; target < n; ++target) {
        Fiber& fb = fibers[static_cast<std::size_t>(target)];
        fb.leg_pos.assign(static_cast<std::size_t>(g.morphism_count()), -1);
        for (Mor l : g.morphisms_into(target)) {
            Obj local = h.obj_from_parent[static_cast<std::size_t>(g.dom(l))];
            if (local < 0) continue;
            fb.leg_pos[static_cast<std::size_t>(l)] = static_cast<int>(fb.legs.size());
            fb.legs.push_back(l);
            fb.gen_offset.push_back(fb.generators);
            fb.generators += r.dim[static_cast<std::size_t>(local)];
        }
        fb.reducer = RowReducer(static_cast<std::size_t>(fb.generators));
        std::vector<std::pair<std::size_t, GaussRat>> row;
        for (Mor h_loc = 0; h_loc < h.groupoid.morphism_count(); ++h_loc) {
            Mor hp = h.mor_to_parent[static_cast<std::size_t>(h_loc)];
            Obj a_local = h.groupoid.dom(h_loc);
            const QMat& mh = r.mat[static_cast<std::size_t>(h_loc)];
            for (Mor kleg : g.morphisms_into(target)) {
                if (g.dom(kleg) != g.cod(hp)) continue;
                int kpos = fb.leg_pos[static_cast<std::size_t>(kleg)];
                if (kpos < 0) continue;
                int lpos = fb.leg_pos[static_cast<std::size_t>(g.compose(kleg, hp))];
                for (int v = 0; v < r.dim[static_cast<std::size_t>(a_local)]; ++v) {
                    row.clear();
                    row.emplace_back(static_cast<std::size_t>(fb.gen_offset[static_cast<std::size_t>(lpos)] + v),
                                     GaussRat(1));
                    for (int i = 0; i < static_cast<int>(mh.rows()); ++i) {
                        const GaussRat& c = mh.at(static_cast<std::size_t>(i), static_cast<std::size_t>(v));
                        if (!c.is_zero())
                            row.emplace_back(
                                static_cast<std::size_t>(fb.gen_offset[static_cast<std::size_t>(kpos)] + i), -c);
                    }
                    fb.reducer.add_sparse_row(row);
                }
            }
        }
        fb.free_cols = fb.reducer.free_cols();
    }

    Representation out;
    out.base = &g;
    out.dim.resize(static_cast<std::size_t>(n));
    for (Obj target = 0; target < n; ++target)
        out.dim[static_cast<std::size_t>(target)] =
            static_cast<int>(fibers[static_cast<std::size_t>(target)].free_cols.size());

    // Quotient coordinates of a generator vector: reduce, then read the free
    // coordinates.
    auto quotient_coords = [&](const Fiber& fb, QVec vec) {
        QVec rem = fb.reducer.reduce(std::move(vec));
        QVec coords(fb.free_cols.size());
        for (std::size_t i = 0; i < fb.free_cols.size(); ++i) coords[i] = rem[fb.free_cols[i]];
        return coords;
    };

    out.mat.reserve(static_cast<std::size_t>(g.morphism_count()));
    for (Mor u = 0; u < g.morphism_count(); ++u) {
        const Fiber& src = fibers[static_cast<std::size_t>(g.dom(u))];
        const Fiber& dst = fibers[static_cast<std::size_t>(g.cod(u))];
        QMat m(dst.free_cols.size(), src.free_cols.size());
        for (std::size_t c = 0; c < src.free_cols.size(); ++c) {
            // The c-th basis vector is the class of a single generator
            // <leg, v>; its image is the class of <u leg, v>.
            std::size_t gen = src.free_cols[c];
            auto leg_it = std::upper_bound(src.gen_offset.begin(), src.gen_offset.end(),
                                           static_cast<int>(gen));
            std::size_t li = static_cast<std::size_t>(leg_it - src.gen_offset.begin()) - 1;
            int v = static_cast<int>(gen) - src.gen_offset[li];
            Mor image_leg = g.compose(u, src.legs[li]);
            int ipos = dst.leg_pos[static_cast<std::size_t>(image_leg)];
            QVec vec(static_cast<std::size_t>(dst.generators));
            vec[static_cast<std::size_t>(dst.gen_offset[static_cast<std::size_t>(ipos)] + v)] = GaussRat(1);
            QVec coords = quotient_coords(dst, std::move(vec));
            for (std::size_t i = 0; i < coords.size(); ++i) m.at(i, c) = std::move(coords[i]);
        }
        out.mat.push_back(std::move(m));
    }
    return out;
}

}  // namespace gpd
