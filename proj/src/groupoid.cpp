#include "gpd/groupoid.hpp"

#include "gpd/union_find.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gpd {

namespace {

std::string fmt(const char* prefix, std::initializer_list<std::int64_t> xs) {
    std::ostringstream os;
    os << prefix;
    bool first = true;
    for (auto x : xs) {
        os << (first ? " " : ", ") << x;
        first = false;
    }
    return os.str();
}

constexpr std::size_t kDenseLimit = 2048;  // dense table up to ~16 MB

}  // namespace

ComposeTable::ComposeTable(std::size_t morphism_count,
                           std::vector<std::tuple<Mor, Mor, Mor>> entries)
    : m_(morphism_count) {
    count_ = entries.size();
    if (m_ <= kDenseLimit) {
        dense_.assign(m_ * m_, -1);
        for (const auto& [g2, g1, r] : entries) {
            std::size_t key = static_cast<std::size_t>(g2) * m_ + static_cast<std::size_t>(g1);
            if (dense_[key] >= 0)
                throw Error("compose table: duplicate entry for pair (" + std::to_string(g2) +
                            ", " + std::to_string(g1) + ")");
            dense_[key] = r;
        }
    } else {
        sparse_.reserve(entries.size());
        for (const auto& [g2, g1, r] : entries)
            sparse_.emplace_back(static_cast<std::uint64_t>(g2) * m_ + static_cast<std::uint64_t>(g1), r);
        std::sort(sparse_.begin(), sparse_.end());
        for (std::size_t i = 1; i < sparse_.size(); ++i)
            if (sparse_[i].first == sparse_[i - 1].first)
                throw Error("compose table: duplicate entry for key " +
                            std::to_string(sparse_[i].first));
    }
}

std::optional<Mor> ComposeTable::find(Mor g2, Mor g1) const {
    if (g2 < 0 || g1 < 0 || static_cast<std::size_t>(g2) >= m_ || static_cast<std::size_t>(g1) >= m_)
        return std::nullopt;
    if (!dense_.empty()) {
        Mor r = dense_[static_cast<std::size_t>(g2) * m_ + static_cast<std::size_t>(g1)];
        if (r < 0) return std::nullopt;
        return r;
    }
    std::uint64_t key = static_cast<std::uint64_t>(g2) * m_ + static_cast<std::uint64_t>(g1);
    auto it = std::lower_bound(sparse_.begin(), sparse_.end(), key,
                               [](const auto& p, std::uint64_t k) { return p.first < k; });
    if (it == sparse_.end() || it->first != key) return std::nullopt;
    return it->second;
}

FiniteGroupoid::FiniteGroupoid(GroupoidData data) {
    n_ = data.object_count;
    m_ = static_cast<Mor>(data.dom.size());
    if (n_ < 1) throw Error("groupoid: at least one object required (the empty groupoid is excluded)");
    if (data.cod.size() != data.dom.size())
        throw Error("groupoid: dom and cod tables differ in length");
    if (static_cast<Obj>(data.identity.size()) != n_)
        throw Error("groupoid: identity table length must equal the object count");
    if (data.inverse.size() != data.dom.size())
        throw Error("groupoid: inverse table length must equal the morphism count");
    if (m_ < n_) throw Error("groupoid: fewer morphisms than objects (identities missing)");

    auto check_obj = [&](Obj x, const char* where) {
        if (x < 0 || x >= n_)
            throw Error(std::string("groupoid: object index out of range in ") + where + ": " +
                        std::to_string(x));
    };
    auto check_mor = [&](Mor g, const char* where) {
        if (g < 0 || g >= m_)
            throw Error(std::string("groupoid: morphism index out of range in ") + where + ": " +
                        std::to_string(g));
    };
    for (Obj x : data.dom) check_obj(x, "dom");
    for (Obj x : data.cod) check_obj(x, "cod");
    for (Mor g : data.identity) check_mor(g, "id");
    for (Mor g : data.inverse) check_mor(g, "inv");
    for (const auto& [g2, g1, r] : data.compose) {
        check_mor(g2, "compose");
        check_mor(g1, "compose");
        check_mor(r, "compose");
    }

    dom_ = std::move(data.dom);
    cod_ = std::move(data.cod);
    identity_ = std::move(data.identity);
    inverse_ = std::move(data.inverse);
    table_ = ComposeTable(static_cast<std::size_t>(m_), std::move(data.compose));

    in_.resize(static_cast<std::size_t>(n_));
    out_.resize(static_cast<std::size_t>(n_));
    endo_.resize(static_cast<std::size_t>(n_));
    for (Mor g = 0; g < m_; ++g) {
        out_[static_cast<std::size_t>(dom_[static_cast<std::size_t>(g)])].push_back(g);
        in_[static_cast<std::size_t>(cod_[static_cast<std::size_t>(g)])].push_back(g);
        if (dom_[static_cast<std::size_t>(g)] == cod_[static_cast<std::size_t>(g)])
            endo_[static_cast<std::size_t>(dom_[static_cast<std::size_t>(g)])].push_back(g);
    }

    UnionFind uf(static_cast<std::size_t>(n_));
    for (Mor g = 0; g < m_; ++g)
        uf.unite(static_cast<std::size_t>(dom_[static_cast<std::size_t>(g)]),
                 static_cast<std::size_t>(cod_[static_cast<std::size_t>(g)]));
    component_of_ = uf.labels();
    component_count_ = component_of_.empty() ? 0 : *std::max_element(component_of_.begin(), component_of_.end()) + 1;
    component_objects_.assign(static_cast<std::size_t>(component_count_), {});
    for (Obj x = 0; x < n_; ++x)
        component_objects_[static_cast<std::size_t>(component_of_[static_cast<std::size_t>(x)])].push_back(x);
}

Mor FiniteGroupoid::compose(Mor g2, Mor g1) const {
    auto r = table_.find(g2, g1);
    if (!r)
        throw Error("compose undefined for pair (" + std::to_string(g2) + ", " +
                    std::to_string(g1) + ")");
    return *r;
}

std::vector<Mor> FiniteGroupoid::hom(Obj x, Obj y) const {
    if (x < 0 || x >= n_ || y < 0 || y >= n_) throw Error("hom: object index out of range");
    std::vector<Mor> result;
    for (Mor g : in_[static_cast<std::size_t>(y)])
        if (dom(g) == x) result.push_back(g);
    return result;
}

std::vector<Mor> FiniteGroupoid::all_endomorphisms() const {
    std::vector<Mor> result;
    for (Mor g = 0; g < m_; ++g)
        if (is_endomorphism(g)) result.push_back(g);
    return result;
}

// Subgroupoid -----------------------------------------------------------

Subgroupoid::Subgroupoid(const FiniteGroupoid& parent, std::vector<Obj> objects,
                         std::vector<Mor> morphisms)
    : parent_(&parent), objects_(std::move(objects)), morphisms_(std::move(morphisms)) {
    std::sort(objects_.begin(), objects_.end());
    objects_.erase(std::unique(objects_.begin(), objects_.end()), objects_.end());
    std::sort(morphisms_.begin(), morphisms_.end());
    morphisms_.erase(std::unique(morphisms_.begin(), morphisms_.end()), morphisms_.end());

    for (Obj x : objects_)
        if (x < 0 || x >= parent.object_count())
            throw Error("subgroupoid: object index out of range: " + std::to_string(x));
    for (Mor g : morphisms_)
        if (g < 0 || g >= parent.morphism_count())
            throw Error("subgroupoid: morphism index out of range: " + std::to_string(g));

    obj_mask_.assign(static_cast<std::size_t>(parent.object_count()), 0);
    mor_mask_.assign(static_cast<std::size_t>(parent.morphism_count()), 0);
    for (Obj x : objects_) obj_mask_[static_cast<std::size_t>(x)] = 1;
    for (Mor g : morphisms_) mor_mask_[static_cast<std::size_t>(g)] = 1;
    wide_ = static_cast<Obj>(objects_.size()) == parent.object_count();
}

std::size_t Subgroupoid::isotropy_order(Obj x) const {
    std::size_t count = 0;
    for (Mor g : parent_->endomorphisms_at(x))
        if (contains_morphism(g)) ++count;
    return count;
}

std::vector<std::string> Subgroupoid::check() const {
    std::vector<std::string> bad;
    const FiniteGroupoid& g = *parent_;
    for (Obj x : objects_)
        if (!contains_morphism(g.identity(x)))
            bad.push_back("missing identity of object " + std::to_string(x));
    for (Mor a : morphisms_) {
        if (!contains_object(g.dom(a)) || !contains_object(g.cod(a)))
            bad.push_back("morphism " + std::to_string(a) + " has an endpoint outside the object set");
        if (!contains_morphism(g.inverse(a)))
            bad.push_back("not closed under inverse at morphism " + std::to_string(a));
    }
    for (Mor a : morphisms_)
        for (Mor b : morphisms_)
            if (g.composable(b, a)) {
                Mor c = g.compose(b, a);
                if (!contains_morphism(c))
                    bad.push_back("not closed under composition: (" + std::to_string(b) + ", " +
                                  std::to_string(a) + ") -> " + std::to_string(c));
            }
    return bad;
}

Subgroupoid Subgroupoid::discrete_wide(const FiniteGroupoid& parent) {
    std::vector<Obj> objs(static_cast<std::size_t>(parent.object_count()));
    std::iota(objs.begin(), objs.end(), 0);
    std::vector<Mor> mors;
    for (Obj x = 0; x < parent.object_count(); ++x) mors.push_back(parent.identity(x));
    return Subgroupoid(parent, std::move(objs), std::move(mors));
}

Subgroupoid Subgroupoid::full(const FiniteGroupoid& parent) {
    std::vector<Obj> objs(static_cast<std::size_t>(parent.object_count()));
    std::iota(objs.begin(), objs.end(), 0);
    std::vector<Mor> mors(static_cast<std::size_t>(parent.morphism_count()));
    std::iota(mors.begin(), mors.end(), 0);
    return Subgroupoid(parent, std::move(objs), std::move(mors));
}

SubComponents sub_components(const Subgroupoid& h) {
    const FiniteGroupoid& g = h.parent();
    UnionFind uf(static_cast<std::size_t>(g.object_count()));
    for (Mor a : h.morphisms())
        uf.unite(static_cast<std::size_t>(g.dom(a)), static_cast<std::size_t>(g.cod(a)));
    SubComponents out;
    out.component_of_object.assign(static_cast<std::size_t>(g.object_count()), -1);
    int next = 0;
    std::vector<int> root_label(static_cast<std::size_t>(g.object_count()), -1);
    for (Obj x : h.objects()) {
        std::size_t r = uf.find(static_cast<std::size_t>(x));
        if (root_label[r] < 0) {
            root_label[r] = next++;
            out.objects.emplace_back();
        }
        out.component_of_object[static_cast<std::size_t>(x)] = root_label[r];
        out.objects[static_cast<std::size_t>(root_label[r])].push_back(x);
    }
    return out;
}

// validate ---------------------------------------------------------------

std::vector<AxiomViolation> validate(const FiniteGroupoid& g) {
    std::vector<AxiomViolation> report;
    const Mor m = g.morphism_count();
    const Obj n = g.object_count();

    for (Obj x = 0; x < n; ++x) {
        Mor e = g.identity(x);
        if (g.dom(e) != x || g.cod(e) != x)
            report.push_back({"identity-endpoints", {x, e},
                              fmt("identity of object has wrong endpoints:", {x, e})});
    }

    // The table must be defined exactly on composable pairs, with coherent
    // endpoints.
    g.compose_table().for_each([&](Mor g2, Mor g1, Mor r) {
        if (!g.composable(g2, g1)) {
            report.push_back({"compose-coherence", {g2, g1},
                              fmt("compose entry for non-composable pair:", {g2, g1})});
            return;
        }
        if (g.dom(r) != g.dom(g1) || g.cod(r) != g.cod(g2))
            report.push_back({"compose-endpoints", {g2, g1, r},
                              fmt("composite has wrong endpoints:", {g2, g1, r})});
    });
    for (Obj w = 0; w < n; ++w)
        for (Mor g1 : g.morphisms_into(w))
            for (Mor g2 : g.morphisms_from(w))
                if (!g.try_compose(g2, g1))
                    report.push_back({"compose-missing", {g2, g1},
                                      fmt("no compose entry for composable pair:", {g2, g1})});

    for (Mor a = 0; a < m; ++a) {
        auto left = g.try_compose(a, g.identity(g.dom(a)));
        if (left && *left != a)
            report.push_back({"identity-law", {a}, fmt("a after id(dom a) differs from a:", {a, *left})});
        auto right = g.try_compose(g.identity(g.cod(a)), a);
        if (right && *right != a)
            report.push_back({"identity-law", {a}, fmt("id(cod a) after a differs from a:", {a, *right})});
    }

    for (Mor a = 0; a < m; ++a) {
        Mor b = g.inverse(a);
        if (g.dom(b) != g.cod(a) || g.cod(b) != g.dom(a)) {
            report.push_back({"inverse-endpoints", {a, b},
                              fmt("inverse has wrong endpoints:", {a, b})});
            continue;
        }
        auto lhs = g.try_compose(b, a);
        if (lhs && *lhs != g.identity(g.dom(a)))
            report.push_back({"inverse-law", {a}, fmt("inv(a) after a is not id(dom a):", {a, *lhs})});
        auto rhs = g.try_compose(a, b);
        if (rhs && *rhs != g.identity(g.cod(a)))
            report.push_back({"inverse-law", {a}, fmt("a after inv(a) is not id(cod a):", {a, *rhs})});
    }

    // Associativity over all composable triples h(gf).
    for (Obj w = 0; w < n; ++w)
        for (Mor f : g.morphisms_into(w))
            for (Mor mid : g.morphisms_from(w)) {
                auto gf = g.try_compose(mid, f);
                if (!gf) continue;
                for (Mor h : g.morphisms_from(g.cod(mid))) {
                    auto hg = g.try_compose(h, mid);
                    if (!hg) continue;
                    auto a = g.try_compose(h, *gf);
                    auto b = g.try_compose(*hg, f);
                    if (a && b && *a != *b)
                        report.push_back({"associativity", {h, mid, f},
                                          fmt("h(gf) differs from (hg)f for triple:", {h, mid, f})});
                }
            }

    return report;
}

// Constructors ------------------------------------------------------------

FiniteGroupoid pair_groupoid(Obj n) {
    if (n < 1) throw Error("pair_groupoid: need at least one object");
    GroupoidData d;
    d.object_count = n;
    Mor m = n * n;
    d.dom.resize(static_cast<std::size_t>(m));
    d.cod.resize(static_cast<std::size_t>(m));
    d.inverse.resize(static_cast<std::size_t>(m));
    d.identity.resize(static_cast<std::size_t>(n));
    for (Obj x = 0; x < n; ++x) {
        for (Obj y = 0; y < n; ++y) {
            Mor g = x * n + y;
            d.dom[static_cast<std::size_t>(g)] = x;
            d.cod[static_cast<std::size_t>(g)] = y;
            d.inverse[static_cast<std::size_t>(g)] = y * n + x;
        }
        d.identity[static_cast<std::size_t>(x)] = x * n + x;
    }
    for (Obj x = 0; x < n; ++x)
        for (Obj y = 0; y < n; ++y)
            for (Obj z = 0; z < n; ++z)
                d.compose.emplace_back(y * n + z, x * n + y, x * n + z);
    return FiniteGroupoid(std::move(d));
}

FiniteGroupoid group_from_table(const std::vector<std::vector<int>>& table) {
    const std::size_t k = table.size();
    if (k == 0) throw Error("group table: empty");
    for (std::size_t a = 0; a < k; ++a) {
        if (table[a].size() != k) throw Error("group table: row " + std::to_string(a) + " has wrong length");
        for (std::size_t b = 0; b < k; ++b)
            if (table[a][b] < 0 || static_cast<std::size_t>(table[a][b]) >= k)
                throw Error("group table: entry out of range at (" + std::to_string(a) + ", " +
                            std::to_string(b) + ")");
    }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c) {
                int lhs = table[static_cast<std::size_t>(table[a][b])][c];
                int rhs = table[a][static_cast<std::size_t>(table[b][c])];
                if (lhs != rhs)
                    throw Error("group table: not associative at triple (" + std::to_string(a) +
                                ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
            }
    int e = -1;
    for (std::size_t cand = 0; cand < k; ++cand) {
        bool ok = true;
        for (std::size_t x = 0; x < k; ++x)
            if (table[cand][x] != static_cast<int>(x) || table[x][cand] != static_cast<int>(x)) {
                ok = false;
                break;
            }
        if (ok) {
            e = static_cast<int>(cand);
            break;
        }
    }
    if (e < 0) throw Error("group table: no identity element");
    std::vector<Mor> inv(k, -1);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b)
            if (table[a][b] == e && table[b][a] == e) {
                inv[a] = static_cast<Mor>(b);
                break;
            }
        if (inv[a] < 0)
            throw Error("group table: element " + std::to_string(a) + " has no inverse");
    }

    GroupoidData d;
    d.object_count = 1;
    d.dom.assign(k, 0);
    d.cod.assign(k, 0);
    d.identity = {static_cast<Mor>(e)};
    d.inverse = std::move(inv);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            d.compose.emplace_back(static_cast<Mor>(a), static_cast<Mor>(b), table[a][b]);
    return FiniteGroupoid(std::move(d));
}

FiniteGroupoid cyclic_group(int n) {
    if (n < 1) throw Error("cyclic_group: order must be positive");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return group_from_table(t);
}

FiniteGroupoid symmetric_group(int n) {
    if (n < 1 || n > 6) throw Error("symmetric_group: supported degrees are 1..6");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::map<std::vector<int>, int> id_of;
    do {
        id_of[p] = static_cast<int>(perms.size());
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    const std::size_t k = perms.size();
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    std::vector<int> comp(static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            for (int i = 0; i < n; ++i)
                comp[static_cast<std::size_t>(i)] =
                    perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
            t[a][b] = id_of.at(comp);
        }
    return group_from_table(t);
}

FiniteGroupoid product(const FiniteGroupoid& g, const FiniteGroupoid& h) {
    GroupoidData d;
    const Obj ng = g.object_count(), nh = h.object_count();
    const Mor mg = g.morphism_count(), mh = h.morphism_count();
    d.object_count = ng * nh;
    d.dom.resize(static_cast<std::size_t>(mg) * static_cast<std::size_t>(mh));
    d.cod.resize(d.dom.size());
    d.inverse.resize(d.dom.size());
    d.identity.resize(static_cast<std::size_t>(d.object_count));
    auto obj = [nh](Obj a, Obj b) { return a * nh + b; };
    auto mor = [mh](Mor a, Mor b) { return a * mh + b; };
    for (Mor a = 0; a < mg; ++a)
        for (Mor b = 0; b < mh; ++b) {
            Mor p = mor(a, b);
            d.dom[static_cast<std::size_t>(p)] = obj(g.dom(a), h.dom(b));
            d.cod[static_cast<std::size_t>(p)] = obj(g.cod(a), h.cod(b));
            d.inverse[static_cast<std::size_t>(p)] = mor(g.inverse(a), h.inverse(b));
        }
    for (Obj x = 0; x < ng; ++x)
        for (Obj y = 0; y < nh; ++y)
            d.identity[static_cast<std::size_t>(obj(x, y))] = mor(g.identity(x), h.identity(y));
    g.compose_table().for_each([&](Mor a2, Mor a1, Mor ar) {
        h.compose_table().for_each([&](Mor b2, Mor b1, Mor br) {
            d.compose.emplace_back(mor(a2, b2), mor(a1, b1), mor(ar, br));
        });
    });
    return FiniteGroupoid(std::move(d));
}

FiniteGroupoid coproduct(const FiniteGroupoid& g, const FiniteGroupoid& h) {
    GroupoidData d;
    const Obj ng = g.object_count();
    const Mor mg = g.morphism_count();
    d.object_count = ng + h.object_count();
    d.dom = g.dom_table();
    d.cod = g.cod_table();
    d.identity = g.identity_table();
    d.inverse = g.inverse_table();
    for (Obj x : h.dom_table()) d.dom.push_back(x + ng);
    for (Obj x : h.cod_table()) d.cod.push_back(x + ng);
    for (Mor e : h.identity_table()) d.identity.push_back(e + mg);
    for (Mor v : h.inverse_table()) d.inverse.push_back(v + mg);
    g.compose_table().for_each([&](Mor g2, Mor g1, Mor r) { d.compose.emplace_back(g2, g1, r); });
    h.compose_table().for_each(
        [&](Mor g2, Mor g1, Mor r) { d.compose.emplace_back(g2 + mg, g1 + mg, r + mg); });
    return FiniteGroupoid(std::move(d));
}

// Structure ----------------------------------------------------------------

ComponentDecomposition connected_components(const FiniteGroupoid& g) {
    ComponentDecomposition out;
    out.component_of_object.assign(static_cast<std::size_t>(g.object_count()), 0);
    for (Obj x = 0; x < g.object_count(); ++x)
        out.component_of_object[static_cast<std::size_t>(x)] = g.component_of(x);
    for (const auto& objs : g.component_objects()) {
        std::vector<Mor> mors;
        for (Obj x : objs)
            for (Mor a : g.morphisms_into(x)) mors.push_back(a);
        out.components.emplace_back(g, objs, std::move(mors));
    }
    return out;
}

Subgroupoid isotropy(const FiniteGroupoid& g, Obj x) {
    if (x < 0 || x >= g.object_count()) throw Error("isotropy: object index out of range");
    return Subgroupoid(g, {x}, g.endomorphisms_at(x));
}

FiniteGroupoid iso_bundle(const FiniteGroupoid& g) {
    std::vector<Mor> endos = g.all_endomorphisms();
    std::vector<Mor> local(static_cast<std::size_t>(g.morphism_count()), -1);
    for (std::size_t i = 0; i < endos.size(); ++i)
        local[static_cast<std::size_t>(endos[i])] = static_cast<Mor>(i);

    GroupoidData d;
    d.object_count = g.object_count();
    for (Mor a : endos) {
        d.dom.push_back(g.dom(a));
        d.cod.push_back(g.cod(a));
        d.inverse.push_back(local[static_cast<std::size_t>(g.inverse(a))]);
    }
    d.identity.resize(static_cast<std::size_t>(g.object_count()));
    for (Obj x = 0; x < g.object_count(); ++x)
        d.identity[static_cast<std::size_t>(x)] = local[static_cast<std::size_t>(g.identity(x))];
    for (Mor a : endos)
        for (Mor b : g.endomorphisms_at(g.dom(a)))
            d.compose.emplace_back(local[static_cast<std::size_t>(b)], local[static_cast<std::size_t>(a)],
                                   local[static_cast<std::size_t>(g.compose(b, a))]);
    return FiniteGroupoid(std::move(d));
}

Subgroupoid iso_subgroupoid(const FiniteGroupoid& g) {
    std::vector<Obj> objs(static_cast<std::size_t>(g.object_count()));
    std::iota(objs.begin(), objs.end(), 0);
    return Subgroupoid(g, std::move(objs), g.all_endomorphisms());
}

Subgroupoid closure(const FiniteGroupoid& g, const std::vector<Mor>& seed, bool make_wide) {
    std::vector<char> in_set(static_cast<std::size_t>(g.morphism_count()), 0);
    std::vector<Mor> members;
    std::vector<Mor> frontier;
    auto add = [&](Mor a) {
        if (a < 0 || a >= g.morphism_count()) throw Error("closure: morphism index out of range");
        if (!in_set[static_cast<std::size_t>(a)]) {
            in_set[static_cast<std::size_t>(a)] = 1;
            members.push_back(a);
            frontier.push_back(a);
        }
    };
    for (Mor a : seed) add(a);
    for (Mor a : seed) {
        add(g.identity(g.dom(a)));
        add(g.identity(g.cod(a)));
    }
    if (make_wide)
        for (Obj x = 0; x < g.object_count(); ++x) add(g.identity(x));

    while (!frontier.empty()) {
        Mor a = frontier.back();
        frontier.pop_back();
        add(g.inverse(a));
        // Compose with every current member in both orders. Membership grows
        // monotonically, so iterating the snapshot plus later frontier pops
        // reaches the fixed point.
        for (std::size_t i = 0; i < members.size(); ++i) {
            Mor b = members[i];
            if (g.composable(b, a)) add(g.compose(b, a));
            if (g.composable(a, b)) add(g.compose(a, b));
        }
    }

    std::vector<Obj> objs;
    if (make_wide) {
        objs.resize(static_cast<std::size_t>(g.object_count()));
        std::iota(objs.begin(), objs.end(), 0);
    } else {
        for (Mor a : members) {
            objs.push_back(g.dom(a));
            objs.push_back(g.cod(a));
        }
    }
    return Subgroupoid(g, std::move(objs), std::move(members));
}

Extracted extract(const Subgroupoid& h) {
    const FiniteGroupoid& g = h.parent();
    std::vector<Obj> obj_to_parent = h.objects();
    std::vector<Mor> mor_to_parent = h.morphisms();
    std::vector<Obj> obj_from_parent(static_cast<std::size_t>(g.object_count()), -1);
    std::vector<Mor> mor_from_parent(static_cast<std::size_t>(g.morphism_count()), -1);
    for (std::size_t i = 0; i < obj_to_parent.size(); ++i)
        obj_from_parent[static_cast<std::size_t>(obj_to_parent[i])] = static_cast<Obj>(i);
    for (std::size_t i = 0; i < mor_to_parent.size(); ++i)
        mor_from_parent[static_cast<std::size_t>(mor_to_parent[i])] = static_cast<Mor>(i);

    GroupoidData d;
    d.object_count = static_cast<Obj>(obj_to_parent.size());
    if (d.object_count == 0) throw Error("extract: subgroupoid has no objects");
    d.identity.resize(obj_to_parent.size());
    for (std::size_t i = 0; i < obj_to_parent.size(); ++i) {
        Mor e = g.identity(obj_to_parent[i]);
        Mor le = mor_from_parent[static_cast<std::size_t>(e)];
        if (le < 0) throw Error("extract: subgroupoid is missing an identity morphism");
        d.identity[i] = le;
    }
    for (Mor a : mor_to_parent) {
        Obj lx = obj_from_parent[static_cast<std::size_t>(g.dom(a))];
        Obj ly = obj_from_parent[static_cast<std::size_t>(g.cod(a))];
        Mor li = mor_from_parent[static_cast<std::size_t>(g.inverse(a))];
        if (lx < 0 || ly < 0 || li < 0)
            throw Error("extract: subgroupoid is not closed (morphism " + std::to_string(a) + ")");
        d.dom.push_back(lx);
        d.cod.push_back(ly);
        d.inverse.push_back(li);
    }
    for (Mor a : mor_to_parent)
        for (Mor b : mor_to_parent)
            if (g.composable(b, a)) {
                Mor c = g.compose(b, a);
                Mor lc = mor_from_parent[static_cast<std::size_t>(c)];
                if (lc < 0)
                    throw Error("extract: subgroupoid is not closed under composition");
                d.compose.emplace_back(mor_from_parent[static_cast<std::size_t>(b)],
                                       mor_from_parent[static_cast<std::size_t>(a)], lc);
            }
    return Extracted{FiniteGroupoid(std::move(d)), std::move(obj_to_parent), std::move(mor_to_parent),
                     std::move(obj_from_parent), std::move(mor_from_parent)};
}

bool is_functor(const FiniteGroupoid& src, const FiniteGroupoid& dst, const GroupoidFunctor& f,
                std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<Obj>(f.obj_map.size()) != src.object_count() ||
        static_cast<Mor>(f.mor_map.size()) != src.morphism_count())
        return fail("map sizes do not match the source groupoid");
    for (Mor a = 0; a < src.morphism_count(); ++a) {
        Mor fa = f.mor_map[static_cast<std::size_t>(a)];
        if (fa < 0 || fa >= dst.morphism_count()) return fail("morphism image out of range");
        if (dst.dom(fa) != f.obj_map[static_cast<std::size_t>(src.dom(a))] ||
            dst.cod(fa) != f.obj_map[static_cast<std::size_t>(src.cod(a))])
            return fail("endpoints not preserved at morphism " + std::to_string(a));
    }
    for (Obj x = 0; x < src.object_count(); ++x)
        if (f.mor_map[static_cast<std::size_t>(src.identity(x))] !=
            dst.identity(f.obj_map[static_cast<std::size_t>(x)]))
            return fail("identity not preserved at object " + std::to_string(x));
    bool ok = true;
    std::string msg;
    src.compose_table().for_each([&](Mor g2, Mor g1, Mor r) {
        if (!ok) return;
        auto image = dst.try_compose(f.mor_map[static_cast<std::size_t>(g2)],
                                     f.mor_map[static_cast<std::size_t>(g1)]);
        if (!image || *image != f.mor_map[static_cast<std::size_t>(r)]) {
            ok = false;
            msg = "composition not preserved at pair (" + std::to_string(g2) + ", " +
                  std::to_string(g1) + ")";
        }
    });
    if (!ok) return fail(msg);
    return true;
}

StructureDecomposition structure_decomposition(const FiniteGroupoid& g, Obj base) {
    if (base < 0 || base >= g.object_count())
        throw Error("structure_decomposition: base object out of range");
    if (!g.connected()) throw Error("structure_decomposition: groupoid is not connected");

    Extracted iso = extract(isotropy(g, base));
    const Obj n = g.object_count();
    FiniteGroupoid pairs = pair_groupoid(n);
    FiniteGroupoid target = product(iso.groupoid, pairs);

    // Transfer morphisms base -> y, lowest index first.
    std::vector<Mor> transfer(static_cast<std::size_t>(n), -1);
    for (Obj y = 0; y < n; ++y) {
        auto hs = g.hom(base, y);
        if (hs.empty()) throw Error("structure_decomposition: internal: missing transfer morphism");
        transfer[static_cast<std::size_t>(y)] = hs.front();
    }

    const Mor pair_m = pairs.morphism_count();  // n*n; product morphism (u, p) = u*n*n + p
    GroupoidFunctor fwd, bwd;
    fwd.obj_map.resize(static_cast<std::size_t>(n));
    fwd.mor_map.resize(static_cast<std::size_t>(g.morphism_count()));
    for (Obj y = 0; y < n; ++y) fwd.obj_map[static_cast<std::size_t>(y)] = y;  // product object (0, y) = y
    for (Mor a = 0; a < g.morphism_count(); ++a) {
        Obj y = g.dom(a), z = g.cod(a);
        Mor u = g.compose(g.inverse(transfer[static_cast<std::size_t>(z)]),
                          g.compose(a, transfer[static_cast<std::size_t>(y)]));
        Mor lu = iso.mor_from_parent[static_cast<std::size_t>(u)];
        fwd.mor_map[static_cast<std::size_t>(a)] = lu * pair_m + (y * n + z);
    }

    bwd.obj_map.resize(static_cast<std::size_t>(n));
    bwd.mor_map.resize(static_cast<std::size_t>(target.morphism_count()));
    for (Obj y = 0; y < n; ++y) bwd.obj_map[static_cast<std::size_t>(y)] = y;
    for (Mor p = 0; p < target.morphism_count(); ++p) {
        Mor lu = p / pair_m;
        Mor pm = p % pair_m;
        Obj y = pm / n, z = pm % n;
        Mor u = iso.mor_to_parent[static_cast<std::size_t>(lu)];
        bwd.mor_map[static_cast<std::size_t>(p)] =
            g.compose(transfer[static_cast<std::size_t>(z)],
                      g.compose(u, g.inverse(transfer[static_cast<std::size_t>(y)])));
    }

    return {std::move(iso.groupoid), std::move(target), std::move(fwd), std::move(bwd)};
}

IndexResult coset_index(const FiniteGroupoid& g, const Subgroupoid& h) {
    if (!h.wide()) throw Error("coset_index: subgroupoid is not wide");
    if (!g.connected()) throw Error("coset_index: groupoid is not connected");

    IndexResult out;
    // Enumerate left cosets of Mor(-, x) per object: a ~ b iff a^{-1} b in H.
    for (Obj x = 0; x < g.object_count(); ++x) {
        const auto& in = g.morphisms_into(x);
        std::vector<char> seen(in.size(), 0);
        for (std::size_t i = 0; i < in.size(); ++i) {
            if (seen[i]) continue;
            ++out.coset_total;
            for (std::size_t j = i; j < in.size(); ++j) {
                if (seen[j]) continue;
                Mor rel = g.compose(g.inverse(in[i]), in[j]);
                if (h.contains_morphism(rel)) seen[j] = 1;
            }
        }
    }

    SubComponents comps = sub_components(h);
    const std::int64_t iso_g = static_cast<std::int64_t>(g.isotropy_order(0));
    std::ostringstream text;
    text << h.objects().size() << " * (";
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < comps.objects.size(); ++i) {
        Obj e_i = comps.objects[i].front();
        std::int64_t hi = static_cast<std::int64_t>(h.isotropy_order(e_i));
        if (iso_g % hi != 0)
            throw Error("coset_index: isotropy order does not divide the ambient isotropy order");
        std::int64_t ratio = iso_g / hi;
        sum += ratio;
        text << (i ? "+" : "") << ratio;
    }
    text << ")";
    out.formula_value = static_cast<std::int64_t>(h.objects().size()) * sum;
    out.formula_text = text.str();
    if (out.formula_value != out.coset_total)
        throw Error("coset_index: closed form disagrees with enumeration (" +
                    std::to_string(out.formula_value) + " vs " + std::to_string(out.coset_total) + ")");
    return out;
}

}  // namespace gpd
