#pragma once

#include "gpd/action.hpp"
#include "gpd/coset.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/qlinalg.hpp"
#include "gpd/rational.hpp"

#include <string>
#include <vector>

namespace gpd {

/// A functor to finite-dimensional vector spaces over the Gaussian
/// rationals: one dimension per object, one invertible matrix per morphism
/// (mat[g] maps the fiber over dom g to the fiber over cod g). The base
/// groupoid is referenced, not owned.
struct Representation {
    const FiniteGroupoid* base = nullptr;
    std::vector<int> dim;
    std::vector<QMat> mat;
};

/// Identity, functoriality, and invertibility violations; empty = valid.
std::vector<std::string> check_representation(const Representation& r);

/// The trace function of a representation, indexed by morphism. Zero off
/// endomorphisms (the induced map on the total space has zero diagonal
/// blocks there).
struct Character {
    std::vector<GaussRat> values;
};

Representation trivial_rep(const FiniteGroupoid& g);
Representation permutation_rep(const GSet& x);
Character character(const Representation& r);

/// (1/|G_0|) sum over objects x of the isotropy-group pairing
/// (1/|G_x|) sum_{g in G_x} chi(g) * conj(chi'(g)). Exact.
GaussRat char_inner_product(const Representation& r, const Representation& r2);

/// Dimension of the space of natural transformations r -> r2: the solution
/// space of phi_{cod g} mat_r[g] = mat_{r2}[g] phi_{dom g} over all g, with
/// the per-object matrices phi as unknowns, by exact elimination.
std::int64_t nat_space_dim(const Representation& r, const Representation& r2);

/// A natural transformation as per-object matrices (component[x] maps the
/// fiber of r over x to the fiber of r2).
struct NatTransform {
    std::vector<QMat> component;
};
/// Deterministic basis of the full intertwiner space (nullspace of the
/// constraint system, lowest-index pivots).
std::vector<NatTransform> intertwiner_basis(const Representation& r, const Representation& r2);
/// Naturality violations of a given family; empty = natural.
std::vector<std::string> check_natural(const Representation& r, const Representation& r2,
                                       const NatTransform& t);

/// Restriction along the inclusion of an extracted subgroupoid.
Representation restrict_rep(const Representation& r, const Extracted& h);

/// Left Kan extension of an H-set along the inclusion of a wide subgroupoid:
/// the fiber over an object glues pairs (leg, element) over all legs landing
/// there, modulo <k h, x> ~ <k, X(h) x>; the action post-composes legs.
/// Well-definedness of the action is checked during construction.
struct InducedGSet {
    GSet gset;
    /// class_of[object][pair id] with pairs enumerated leg-major (legs are
    /// the parent morphisms into the object whose dom lies in H, ascending).
    std::vector<std::vector<int>> class_of;
    std::vector<std::vector<Mor>> legs;        // per object
    std::vector<std::vector<int>> leg_offset;  // per object: pair id base of each leg
};
InducedGSet induce_gset(const FiniteGroupoid& g, const Subgroupoid& h_sub, const Extracted& h,
                        const GSet& x);

/// Checks that the induced terminal H-set is isomorphic to the left-coset
/// G-set via class of <leg, *> -> coset of leg. Returns all failures.
std::vector<std::string> induced_terminal_matches_cosets(const FiniteGroupoid& g,
                                                         const InducedGSet& ind,
                                                         const LeftCosetGSet& lc);

/// Left Kan extension of a representation of a wide subgroupoid: per object,
/// the quotient of the sum of fibers over all legs by the glueing relations
/// e_{k h} x v - e_k x (mat[h] v); the quotient basis is chosen by exact row
/// reduction with lowest-index pivots, and the action post-composes legs.
Representation induce_rep(const FiniteGroupoid& g, const Subgroupoid& h_sub, const Extracted& h,
                          const Representation& r);

}  // namespace gpd
