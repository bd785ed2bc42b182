#include "gpd/fnspace.hpp"

#include <algorithm>

namespace gpd {

namespace {

/// Visits every composable triple (h, g, k) with cod h = cod g and
/// cod k = dom g, passing the indices of h^{-1} g k and g.
template <class F>
void for_each_invariance_pair(const FiniteGroupoid& g, const Subgroupoid& h, const Subgroupoid& k,
                              F&& f) {
    for (Mor a = 0; a < g.morphism_count(); ++a) {
        for (Mor hm : g.morphisms_into(g.cod(a))) {
            if (!h.contains_morphism(hm)) continue;
            Mor left = g.compose(g.inverse(hm), a);
            for (Mor km : g.morphisms_into(g.dom(a))) {
                if (!k.contains_morphism(km)) continue;
                f(g.compose(left, km), a);
            }
        }
    }
}

}  // namespace

InvariantFunctionSpace invariant_function_space(const FiniteGroupoid& g, const Subgroupoid& h,
                                                const Subgroupoid& k) {
    InvariantFunctionSpace out;
    out.partition = double_cosets(g, h, k);
    for (const auto& block : out.partition.blocks) {
        QVec fn(static_cast<std::size_t>(g.morphism_count()));
        for (Mor a : block) fn[static_cast<std::size_t>(a)] = GaussRat(1);
        out.basis.push_back(std::move(fn));
    }

    RowReducer reducer(static_cast<std::size_t>(g.morphism_count()));
    for_each_invariance_pair(g, h, k, [&](Mor moved, Mor orig) {
        if (moved == orig) return;
        reducer.add_sparse_row({{static_cast<std::size_t>(moved), GaussRat(1)},
                                {static_cast<std::size_t>(orig), GaussRat(-1)}});
    });
    out.constraint_dim = g.morphism_count() - static_cast<std::int64_t>(reducer.rank());
    if (out.constraint_dim != static_cast<std::int64_t>(out.basis.size()))
        throw Error("invariant_function_space: constraint rank " + std::to_string(out.constraint_dim) +
                    " disagrees with the block count " + std::to_string(out.basis.size()));
    return out;
}

std::vector<std::string> check_invariant_function(const FiniteGroupoid& g, const Subgroupoid& h,
                                                  const Subgroupoid& k, const QVec& fn) {
    std::vector<std::string> bad;
    if (fn.size() != static_cast<std::size_t>(g.morphism_count())) {
        bad.push_back("function has wrong length");
        return bad;
    }
    for_each_invariance_pair(g, h, k, [&](Mor moved, Mor orig) {
        if (bad.empty() && fn[static_cast<std::size_t>(moved)] != fn[static_cast<std::size_t>(orig)])
            bad.push_back("not invariant: differs on morphisms " + std::to_string(moved) + " and " +
                          std::to_string(orig));
    });
    return bad;
}

YRep y_rep(const FiniteGroupoid& g, const Subgroupoid& h) {
    YRep out;
    out.cosets = left_cosets(g, h);

    // Basis function of coset c at object G: indicator over Mor(-, G),
    // addressed by position within morphisms_into(G).
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(g.object_count()));
    for (Obj o = 0; o < g.object_count(); ++o) {
        const auto& in = g.morphisms_into(o);
        auto& p = pos[static_cast<std::size_t>(o)];
        p.assign(static_cast<std::size_t>(g.morphism_count()), -1);
        for (std::size_t i = 0; i < in.size(); ++i) p[static_cast<std::size_t>(in[i])] = static_cast<int>(i);
    }

    auto basis_fn = [&](Obj o, int coset) {
        const auto& in = g.morphisms_into(o);
        std::vector<char> fn(in.size(), 0);
        for (Mor a : out.cosets.members[static_cast<std::size_t>(o)][static_cast<std::size_t>(coset)])
            fn[static_cast<std::size_t>(pos[static_cast<std::size_t>(o)][static_cast<std::size_t>(a)])] = 1;
        return fn;
    };

    out.rep.base = &g;
    out.rep.dim = out.cosets.gset.carrier_size;
    out.rep.mat.reserve(static_cast<std::size_t>(g.morphism_count()));
    for (Mor u = 0; u < g.morphism_count(); ++u) {
        Obj from = g.dom(u), to = g.cod(u);
        int dfrom = out.rep.dim[static_cast<std::size_t>(from)];
        int dto = out.rep.dim[static_cast<std::size_t>(to)];
        QMat m(static_cast<std::size_t>(dto), static_cast<std::size_t>(dfrom));
        const auto& in_to = g.morphisms_into(to);
        for (int c = 0; c < dfrom; ++c) {
            std::vector<char> src = basis_fn(from, c);
            // Precompose with u^{-1}: image(z) = src(u^{-1} z).
            std::vector<char> img(in_to.size(), 0);
            for (std::size_t zi = 0; zi < in_to.size(); ++zi) {
                Mor pre = g.compose(g.inverse(u), in_to[zi]);
                img[zi] =
                    src[static_cast<std::size_t>(pos[static_cast<std::size_t>(from)][static_cast<std::size_t>(pre)])];
            }
            // The image must be exactly one basis indicator of the target.
            int match = -1;
            for (int c2 = 0; c2 < dto; ++c2)
                if (basis_fn(to, c2) == img) {
                    match = c2;
                    break;
                }
            if (match < 0)
                throw Error("y_rep: precomposition did not land on a coset indicator (morphism " +
                            std::to_string(u) + ")");
            m.at(static_cast<std::size_t>(match), static_cast<std::size_t>(c)) = GaussRat(1);
        }
        out.rep.mat.push_back(std::move(m));
    }
    return out;
}

std::vector<std::string> theta_iso_check(const FiniteGroupoid& g, const LeftCosetGSet& lc,
                                         const YRep& y) {
    std::vector<std::string> bad;
    Representation perm = permutation_rep(lc.gset);

    // theta per object: coset c of lc -> the y-basis element whose indicator
    // function has exactly the members of c.
    std::vector<std::vector<int>> theta(static_cast<std::size_t>(g.object_count()));
    for (Obj o = 0; o < g.object_count(); ++o) {
        int dim_lc = lc.gset.carrier_size[static_cast<std::size_t>(o)];
        int dim_y = y.rep.dim[static_cast<std::size_t>(o)];
        if (dim_lc != dim_y) {
            bad.push_back("fiber dimensions differ at object " + std::to_string(o));
            continue;
        }
        auto& map = theta[static_cast<std::size_t>(o)];
        map.assign(static_cast<std::size_t>(dim_lc), -1);
        std::vector<char> used(static_cast<std::size_t>(dim_y), 0);
        for (int c = 0; c < dim_lc; ++c) {
            const auto& want = lc.members[static_cast<std::size_t>(o)][static_cast<std::size_t>(c)];
            for (int c2 = 0; c2 < dim_y; ++c2) {
                if (used[static_cast<std::size_t>(c2)]) continue;
                if (y.cosets.members[static_cast<std::size_t>(o)][static_cast<std::size_t>(c2)] == want) {
                    map[static_cast<std::size_t>(c)] = c2;
                    used[static_cast<std::size_t>(c2)] = 1;
                    break;
                }
            }
            if (map[static_cast<std::size_t>(c)] < 0) {
                bad.push_back("no matching indicator for coset " + std::to_string(c) + " at object " +
                              std::to_string(o));
                return bad;
            }
        }
    }
    if (!bad.empty()) return bad;

    for (Mor u = 0; u < g.morphism_count(); ++u) {
        Obj from = g.dom(u), to = g.cod(u);
        QMat theta_from(static_cast<std::size_t>(y.rep.dim[static_cast<std::size_t>(from)]),
                        static_cast<std::size_t>(lc.gset.carrier_size[static_cast<std::size_t>(from)]));
        for (std::size_t c = 0; c < theta[static_cast<std::size_t>(from)].size(); ++c)
            theta_from.at(static_cast<std::size_t>(theta[static_cast<std::size_t>(from)][c]), c) = GaussRat(1);
        QMat theta_to(static_cast<std::size_t>(y.rep.dim[static_cast<std::size_t>(to)]),
                      static_cast<std::size_t>(lc.gset.carrier_size[static_cast<std::size_t>(to)]));
        for (std::size_t c = 0; c < theta[static_cast<std::size_t>(to)].size(); ++c)
            theta_to.at(static_cast<std::size_t>(theta[static_cast<std::size_t>(to)][c]), c) = GaussRat(1);
        if (y.rep.mat[static_cast<std::size_t>(u)] * theta_from !=
            theta_to * perm.mat[static_cast<std::size_t>(u)]) {
            bad.push_back("naturality square fails at morphism " + std::to_string(u));
            break;
        }
    }
    return bad;
}

NatTransform s_map(const FiniteGroupoid& g, const Subgroupoid& h, const Subgroupoid& k,
                   const QVec& phi, const YRep& yh, const YRep& yk) {
    auto invariance = check_invariant_function(g, h, k, phi);
    if (!invariance.empty()) throw Error("s_map: " + invariance.front());

    NatTransform out;
    for (Obj o = 0; o < g.object_count(); ++o) {
        const auto& in = g.morphisms_into(o);
        int dim_h = yh.rep.dim[static_cast<std::size_t>(o)];
        int dim_k = yk.rep.dim[static_cast<std::size_t>(o)];
        GaussRat scale = GaussRat(1) / GaussRat(Rat(static_cast<std::int64_t>(g.isotropy_order(o))));
        std::vector<int> pos(static_cast<std::size_t>(g.morphism_count()), -1);
        for (std::size_t i = 0; i < in.size(); ++i) pos[static_cast<std::size_t>(in[i])] = static_cast<int>(i);
        QMat m(static_cast<std::size_t>(dim_k), static_cast<std::size_t>(dim_h));
        for (int c = 0; c < dim_h; ++c) {
            // Image function of the c-th indicator: z -> scale * sum over
            // coset members x of phi(x^{-1} z).
            std::vector<GaussRat> q(in.size());
            for (std::size_t zi = 0; zi < in.size(); ++zi) {
                GaussRat sum;
                for (Mor x : yh.cosets.members[static_cast<std::size_t>(o)][static_cast<std::size_t>(c)])
                    sum += phi[static_cast<std::size_t>(g.compose(g.inverse(x), in[zi]))];
                q[zi] = sum * scale;
            }
            // Express in the K-coset indicator basis: constant per coset.
            for (int c2 = 0; c2 < dim_k; ++c2) {
                const auto& block =
                    yk.cosets.members[static_cast<std::size_t>(o)][static_cast<std::size_t>(c2)];
                const GaussRat& value = q[static_cast<std::size_t>(pos[static_cast<std::size_t>(block.front())])];
                for (Mor member : block)
                    if (q[static_cast<std::size_t>(pos[static_cast<std::size_t>(member)])] != value)
                        throw Error("s_map: image is not right-invariant at object " + std::to_string(o));
                m.at(static_cast<std::size_t>(c2), static_cast<std::size_t>(c)) = value;
            }
        }
        out.component.push_back(std::move(m));
    }

    auto natural = check_natural(yh.rep, yk.rep, out);
    if (!natural.empty()) throw Error("s_map: " + natural.front());
    return out;
}

QVec t_map(const FiniteGroupoid& g, const Subgroupoid& h, const Subgroupoid& k,
           const NatTransform& psi, const YRep& yh, const YRep& yk) {
    auto natural = check_natural(yh.rep, yk.rep, psi);
    if (!natural.empty()) throw Error("t_map: " + natural.front());

    QVec phi(static_cast<std::size_t>(g.morphism_count()));
    for (Obj o = 0; o < g.object_count(); ++o) {
        // delta at o: the identity's coset indicator scaled by
        // |G_o| / (number of H-morphisms into o).
        std::int64_t h_in = 0;
        for (Mor a : g.morphisms_into(o))
            if (h.contains_morphism(a)) ++h_in;
        GaussRat d = GaussRat(Rat(static_cast<std::int64_t>(g.isotropy_order(o)), h_in));
        int c0 = yh.cosets.coset_of[static_cast<std::size_t>(g.identity(o))];

        QVec coords(static_cast<std::size_t>(yh.rep.dim[static_cast<std::size_t>(o)]));
        coords[static_cast<std::size_t>(c0)] = d;
        QVec image = psi.component[static_cast<std::size_t>(o)].apply(coords);
        for (Mor a : g.morphisms_into(o))
            phi[static_cast<std::size_t>(a)] =
                image[static_cast<std::size_t>(yk.cosets.coset_of[static_cast<std::size_t>(a)])];
    }

    auto invariance = check_invariant_function(g, h, k, phi);
    if (!invariance.empty()) throw Error("t_map: " + invariance.front());
    return phi;
}

}  // namespace gpd
