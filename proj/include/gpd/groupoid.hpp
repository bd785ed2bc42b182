#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace gpd {

using Obj = std::int32_t;
using Mor = std::int32_t;

/// Precondition and input errors. Axiom violations discovered by validate()
/// are data, not exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Composition table of a finite groupoid. Dense m*m storage for desk-scale
/// groupoids, sorted sparse pairs above that (derived groupoids such as comma
/// categories can have tens of thousands of morphisms but far fewer
/// composable pairs than m^2).
class ComposeTable {
public:
    ComposeTable() = default;
    ComposeTable(std::size_t morphism_count, std::vector<std::tuple<Mor, Mor, Mor>> entries);

    std::optional<Mor> find(Mor g2, Mor g1) const;
    std::size_t entry_count() const { return count_; }

    /// Visits entries as (g2, g1, result) in lexicographic (g2, g1) order.
    template <class F>
    void for_each(F&& f) const {
        if (!dense_.empty()) {
            for (std::size_t k = 0; k < dense_.size(); ++k)
                if (dense_[k] >= 0)
                    f(static_cast<Mor>(k / m_), static_cast<Mor>(k % m_), dense_[k]);
        } else {
            for (const auto& [key, res] : sparse_)
                f(static_cast<Mor>(key / m_), static_cast<Mor>(key % m_), res);
        }
    }

private:
    std::size_t m_ = 0;
    std::size_t count_ = 0;
    std::vector<Mor> dense_;  // m*m with -1 for undefined; empty in sparse mode
    std::vector<std::pair<std::uint64_t, Mor>> sparse_;  // sorted by g2*m+g1
};

/// Raw tables of a finite groupoid, as read from a file or produced by a
/// constructor. Structurally checked (lengths, index ranges, duplicate
/// compose keys) when turned into a FiniteGroupoid; the groupoid axioms
/// themselves are checked by validate().
struct GroupoidData {
    Obj object_count = 0;
    std::vector<Obj> dom;
    std::vector<Obj> cod;
    std::vector<Mor> identity;
    std::vector<Mor> inverse;
    std::vector<std::tuple<Mor, Mor, Mor>> compose;  // (g2, g1, g2 after g1)
};

/// A finite groupoid with dense integer object and morphism indices and a
/// fully materialized composition table. compose(g2, g1) means "g2 after g1".
/// Immutable after construction.
class FiniteGroupoid {
public:
    explicit FiniteGroupoid(GroupoidData data);

    Obj object_count() const { return n_; }
    Mor morphism_count() const { return m_; }

    Obj dom(Mor g) const { return dom_[static_cast<std::size_t>(g)]; }
    Obj cod(Mor g) const { return cod_[static_cast<std::size_t>(g)]; }
    Mor identity(Obj x) const { return identity_[static_cast<std::size_t>(x)]; }
    Mor inverse(Mor g) const { return inverse_[static_cast<std::size_t>(g)]; }

    bool composable(Mor g2, Mor g1) const { return dom(g2) == cod(g1); }
    std::optional<Mor> try_compose(Mor g2, Mor g1) const { return table_.find(g2, g1); }
    Mor compose(Mor g2, Mor g1) const;

    /// Morphisms with the given endpoints, ascending. hom(x, x) is the
    /// isotropy group's morphism set.
    std::vector<Mor> hom(Obj x, Obj y) const;
    const std::vector<Mor>& morphisms_into(Obj x) const { return in_[static_cast<std::size_t>(x)]; }
    const std::vector<Mor>& morphisms_from(Obj x) const { return out_[static_cast<std::size_t>(x)]; }
    const std::vector<Mor>& endomorphisms_at(Obj x) const { return endo_[static_cast<std::size_t>(x)]; }
    std::vector<Mor> all_endomorphisms() const;
    bool is_endomorphism(Mor g) const { return dom(g) == cod(g); }
    std::size_t isotropy_order(Obj x) const { return endo_[static_cast<std::size_t>(x)].size(); }

    int component_of(Obj x) const { return component_of_[static_cast<std::size_t>(x)]; }
    int component_count() const { return component_count_; }
    bool connected() const { return component_count_ == 1; }
    /// Objects of each component, ascending within and across components
    /// (components are numbered by their smallest object).
    const std::vector<std::vector<Obj>>& component_objects() const { return component_objects_; }

    const ComposeTable& compose_table() const { return table_; }

    const std::vector<Obj>& dom_table() const { return dom_; }
    const std::vector<Obj>& cod_table() const { return cod_; }
    const std::vector<Mor>& identity_table() const { return identity_; }
    const std::vector<Mor>& inverse_table() const { return inverse_; }

private:
    Obj n_ = 0;
    Mor m_ = 0;
    std::vector<Obj> dom_, cod_;
    std::vector<Mor> identity_, inverse_;
    ComposeTable table_;
    std::vector<std::vector<Mor>> in_, out_, endo_;
    std::vector<int> component_of_;
    int component_count_ = 0;
    std::vector<std::vector<Obj>> component_objects_;
};

/// A subset of a parent groupoid's objects and morphisms that forms a
/// groupoid on its own. wide() means it contains every parent object.
class Subgroupoid {
public:
    Subgroupoid(const FiniteGroupoid& parent, std::vector<Obj> objects, std::vector<Mor> morphisms);

    const FiniteGroupoid& parent() const { return *parent_; }
    const std::vector<Obj>& objects() const { return objects_; }
    const std::vector<Mor>& morphisms() const { return morphisms_; }
    bool wide() const { return wide_; }

    bool contains_object(Obj x) const { return obj_mask_[static_cast<std::size_t>(x)] != 0; }
    bool contains_morphism(Mor g) const { return mor_mask_[static_cast<std::size_t>(g)] != 0; }

    std::size_t isotropy_order(Obj x) const;

    /// Subgroupoid invariant violations as human-readable messages
    /// (identities present, closure under compose and inverse, endpoints
    /// inside the object set). Empty = valid.
    std::vector<std::string> check() const;

    static Subgroupoid discrete_wide(const FiniteGroupoid& parent);
    static Subgroupoid full(const FiniteGroupoid& parent);

private:
    const FiniteGroupoid* parent_;
    std::vector<Obj> objects_;
    std::vector<Mor> morphisms_;
    std::vector<char> obj_mask_, mor_mask_;
    bool wide_ = false;
};

/// Connected-component structure of a subgroupoid, in parent labels.
/// Components are numbered by their smallest object.
struct SubComponents {
    std::vector<int> component_of_object;  // indexed by parent object, -1 if absent
    std::vector<std::vector<Obj>> objects;
};
SubComponents sub_components(const Subgroupoid& h);

/// A violated axiom with the witnessing indices.
struct AxiomViolation {
    std::string axiom;
    std::vector<std::int64_t> witness;
    std::string message;
};

/// Exhaustive scan of the groupoid axioms; empty report means valid.
std::vector<AxiomViolation> validate(const FiniteGroupoid& g);

// Constructors ---------------------------------------------------------

/// One morphism (x, y) for each ordered pair of n objects; morphism (x, y)
/// has index x*n + y.
FiniteGroupoid pair_groupoid(Obj n);

/// One-object groupoid from a Cayley table t[a][b] = a*b. Rejects tables
/// that are not groups, naming the failing element or triple.
FiniteGroupoid group_from_table(const std::vector<std::vector<int>>& table);

FiniteGroupoid cyclic_group(int n);
/// Morphisms are the permutations of {0..n-1} in lexicographic one-line
/// order; composition applies the right factor first. n <= 6.
FiniteGroupoid symmetric_group(int n);

/// Object (a, b) has index a*H.object_count() + b; morphism (g, h) has index
/// g*H.morphism_count() + h.
FiniteGroupoid product(const FiniteGroupoid& g, const FiniteGroupoid& h);
/// G's objects and morphisms first, then H's, shifted.
FiniteGroupoid coproduct(const FiniteGroupoid& g, const FiniteGroupoid& h);

// Structure ------------------------------------------------------------

struct ComponentDecomposition {
    std::vector<int> component_of_object;
    std::vector<Subgroupoid> components;  // full subgroupoids on each object class
};
ComponentDecomposition connected_components(const FiniteGroupoid& g);

/// One-object subgroupoid of all endomorphisms at x.
Subgroupoid isotropy(const FiniteGroupoid& g, Obj x);

/// Same objects, only the endomorphisms, composition inherited.
FiniteGroupoid iso_bundle(const FiniteGroupoid& g);
/// The group bundle as a wide subgroupoid of g.
Subgroupoid iso_subgroupoid(const FiniteGroupoid& g);

/// Smallest subgroupoid containing the seed morphisms, their endpoints'
/// identities, and (when make_wide) every identity.
Subgroupoid closure(const FiniteGroupoid& g, const std::vector<Mor>& seed, bool make_wide);

/// A subgroupoid re-indexed as a standalone groupoid plus label maps.
struct Extracted {
    FiniteGroupoid groupoid;
    std::vector<Obj> obj_to_parent;
    std::vector<Mor> mor_to_parent;
    std::vector<Obj> obj_from_parent;  // -1 where absent
    std::vector<Mor> mor_from_parent;  // -1 where absent
};
Extracted extract(const Subgroupoid& h);

/// Object and morphism maps of a functor between two groupoids.
struct GroupoidFunctor {
    std::vector<Obj> obj_map;
    std::vector<Mor> mor_map;
};
/// Checks identity, endpoint, and composition preservation exhaustively.
bool is_functor(const FiniteGroupoid& src, const FiniteGroupoid& dst, const GroupoidFunctor& f,
                std::string* why = nullptr);

/// Witness of the decomposition of a connected groupoid as
/// isotropy(base) x pair groupoid: mutually inverse functors between g and
/// the product, built from the lowest-index transfer morphisms base -> y.
struct StructureDecomposition {
    FiniteGroupoid isotropy_group;  // one object
    FiniteGroupoid target;          // product(isotropy_group, pair_groupoid(n))
    GroupoidFunctor forward;        // g -> target
    GroupoidFunctor backward;       // target -> g
};
StructureDecomposition structure_decomposition(const FiniteGroupoid& g, Obj base);

/// Total left-coset count of a wide subgroupoid of a connected groupoid,
/// with the closed-form decomposition |H_0| * sum of isotropy index ratios.
struct IndexResult {
    std::int64_t coset_total = 0;    // enumerated
    std::int64_t formula_value = 0;  // |H_0| * sum_i (|G_e| / |H_{e_i}|)
    std::string formula_text;
};
IndexResult coset_index(const FiniteGroupoid& g, const Subgroupoid& h);

}  // namespace gpd
