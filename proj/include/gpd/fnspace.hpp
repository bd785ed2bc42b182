#pragma once

#include "gpd/coset.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/linrep.hpp"
#include "gpd/qlinalg.hpp"

#include <string>
#include <vector>

namespace gpd {

/// Functions on the morphism set invariant under g -> h^{-1} g k, as dense
/// coefficient vectors indexed by morphism. The indicator basis comes from
/// the double-coset partition; constraint_dim recomputes the dimension
/// independently by exact elimination over one equation per composable
/// triple. Construction asserts the two agree.
struct InvariantFunctionSpace {
    DoubleCosetPartition partition;
    std::vector<QVec> basis;  // one 0/1 indicator per block
    std::int64_t constraint_dim = 0;
};
InvariantFunctionSpace invariant_function_space(const FiniteGroupoid& g, const Subgroupoid& h,
                                                const Subgroupoid& k);

/// Membership test for the invariance constraints; empty = invariant.
std::vector<std::string> check_invariant_function(const FiniteGroupoid& g, const Subgroupoid& h,
                                                  const Subgroupoid& k, const QVec& fn);

/// The representation of right-H-invariant functions on incoming morphisms.
/// The fiber basis over an object is one indicator function per left coset;
/// matrices are computed by literal precomposition with g^{-1} on function
/// vectors and then matched against the target basis, which re-derives the
/// permutation action instead of copying it from the coset G-set.
struct YRep {
    Representation rep;
    LeftCosetGSet cosets;  // coset structure labelling the basis
};
YRep y_rep(const FiniteGroupoid& g, const Subgroupoid& h);

/// Verifies the basis-level isomorphism between the linearized coset G-set
/// and the function representation: coset -> its indicator function must be
/// bijective per object and natural in every morphism. Returns failures.
std::vector<std::string> theta_iso_check(const FiniteGroupoid& g, const LeftCosetGSet& lc,
                                         const YRep& y);

/// Intertwiner Y_H -> Y_K built from an invariant function:
/// (S phi)_G(f)(g) = (1/|G_G|) * sum over x into G of phi(x^{-1} g) f(x).
/// The scale makes the map inverse to t_map for every wide H, K; for
/// connected subgroupoids it matches the usual |(Iso G)_1| convention up to
/// the compensating factor in t_map's delta. Rejects non-invariant phi;
/// checks the result is natural.
NatTransform s_map(const FiniteGroupoid& g, const Subgroupoid& h, const Subgroupoid& k,
                   const QVec& phi, const YRep& yh, const YRep& yk);

/// Invariant function from an intertwiner: g -> psi_{cod g}(delta_{cod g})(g)
/// with delta_G the H-indicator scaled by |G_G| / |Mor_H(-, G)|. Rejects
/// non-natural psi; checks the result is invariant.
QVec t_map(const FiniteGroupoid& g, const Subgroupoid& h, const Subgroupoid& k,
           const NatTransform& psi, const YRep& yh, const YRep& yk);

}  // namespace gpd
