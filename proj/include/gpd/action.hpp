#pragma once

#include "gpd/groupoid.hpp"
#include "gpd/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gpd {

/// A functor from a groupoid to finite sets: per-object carrier sizes and a
/// bijection table per morphism. Elements of X(x) are 0..carrier_size[x]-1;
/// they also carry dense global ids, object-major. The base groupoid is
/// referenced, not owned.
struct GSet {
    const FiniteGroupoid* base = nullptr;
    std::vector<int> carrier_size;            // per object
    std::vector<std::vector<int>> action;     // per morphism: image of each element

    GSet() = default;
    GSet(const FiniteGroupoid& g, std::vector<int> sizes, std::vector<std::vector<int>> act);

    int total_elements() const { return total_; }
    int global_id(Obj x, int elt) const { return offset_[static_cast<std::size_t>(x)] + elt; }
    std::pair<Obj, int> label(int global) const;
    int apply(Mor g, int elt) const { return action[static_cast<std::size_t>(g)][static_cast<std::size_t>(elt)]; }

private:
    std::vector<int> offset_;
    int total_ = 0;
};

/// Functoriality, identity, and bijectivity violations; empty = valid G-set.
std::vector<std::string> check_gset(const GSet& x);

GSet terminal_gset(const FiniteGroupoid& g);
/// The represented G-set Mor(origin, -) with post-composition action.
GSet representable_gset(const FiniteGroupoid& g, Obj origin);
GSet disjoint_union(const GSet& x, const GSet& y);
GSet product_gset(const GSet& x, const GSet& y);

/// The category of elements of a G-set: objects are pairs (base object,
/// element), a morphism is a base morphism together with a start element.
struct ActionGroupoid {
    FiniteGroupoid groupoid;
    std::vector<std::pair<Obj, int>> object_label;  // action-groupoid object -> (base object, element)
    std::vector<Mor> morphism_label;                // action-groupoid morphism -> base morphism
    std::vector<int> morphism_start;                // start element (in the fiber over dom)
};
ActionGroupoid action_groupoid(const GSet& x);

/// Orbits as connected components of the action groupoid, projected back to
/// global element ids. Orbits are numbered by their smallest member.
struct OrbitPartition {
    std::vector<int> orbit_of;              // per global element id
    std::vector<std::vector<int>> members;  // per orbit, ascending global ids
};
OrbitPartition orbits(const GSet& x);

/// One-object subgroupoid of the base: endomorphisms at x fixing the element.
Subgroupoid stabilizer(const GSet& x, Obj obj, int elt);

/// Elements of X(dom g) fixed by an endomorphism g.
std::vector<int> fix(const GSet& x, Mor g);

/// Average fixed-point count over the endomorphisms of the base, taken per
/// connected component and summed (the plain average when the base is
/// connected), as an exact rational. Throws if the value is not an integer
/// or disagrees with the orbit count; either signals a functoriality bug,
/// not numerical error.
Rat cf_count(const GSet& x);
/// The summation side only, without the orbit cross-check.
Rat cf_sum(const GSet& x);

/// For every base object and every orbit meeting its fiber, the stabilizer
/// sizes over the intersection must sum to the isotropy order. Returns all
/// failures.
std::vector<std::string> orbit_stabilizer_check(const GSet& x);

bool transitive(const GSet& x);

}  // namespace gpd
