#pragma once

#include "gpd/action.hpp"
#include "gpd/groupoid.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gpd {

/// Partition of the morphism set into (H, K)-double cosets: the equivalence
/// closure of g ~ h g k over composable h in H, k in K. Blocks are numbered
/// and represented by their lowest morphism index.
struct DoubleCosetPartition {
    std::vector<int> block_of;              // per morphism
    std::vector<std::vector<Mor>> blocks;   // ascending members
    std::vector<Mor> representatives;       // lowest index per block
};
DoubleCosetPartition double_cosets(const FiniteGroupoid& g, const Subgroupoid& h,
                                   const Subgroupoid& k);

/// Left-coset G-set: the fiber over x is Mor(-, x) modulo a ~ b iff
/// a^{-1} b in H; a morphism g sends the coset of a to the coset of g a.
/// Well-definedness of the action is checked during construction.
struct LeftCosetGSet {
    GSet gset;
    std::vector<int> coset_of;                        // per parent morphism: coset id at its cod
    std::vector<std::vector<std::vector<Mor>>> members;  // [object][coset] ascending morphisms
};
LeftCosetGSet left_cosets(const FiniteGroupoid& g, const Subgroupoid& h);

/// Closed form for |HgK| with the factor structure exposed:
/// delta * |H_cod| * |K_dom| / overlap, where delta counts the objects of the
/// H- and K-components through cod g and dom g, and overlap is
/// |H_cod ∩ g K_dom g^{-1}|. Computed without enumerating the block.
struct DoubleCosetSize {
    std::int64_t size = 0;
    std::int64_t delta = 0;     // |(H_lambda)_0| * |(K_mu)_0|
    std::int64_t h_iso = 0;     // |H_{cod g}|
    std::int64_t k_iso = 0;     // |K_{dom g}|
    std::int64_t overlap = 0;   // |H_{cod g} ∩ g K_{dom g} g^{-1}|
};
DoubleCosetSize double_coset_size_formula(const FiniteGroupoid& g, const Subgroupoid& h,
                                          const Subgroupoid& k, Mor mor);

/// The (H x K)-set whose fiber over (s, t) is G(t, s), acted on by
/// (h, k): g -> h g k^{-1}. Owns the product base groupoid.
struct XhkAction {
    std::unique_ptr<FiniteGroupoid> base;  // product of the extracted H and K
    Extracted h_part, k_part;
    GSet gset;                               // over *base
    std::vector<std::vector<Mor>> fiber;     // per base object: parent morphisms, ascending
    std::vector<int> fiber_pos;              // per parent morphism: index within its fiber

    Obj base_object(Obj h_local, Obj k_local) const;
};
XhkAction x_hk_action(const FiniteGroupoid& g, const Subgroupoid& h, const Subgroupoid& k);

/// The comma category of the two inclusions: objects are morphisms of G with
/// dom in K and cod in H; a morphism g -> g' is a pair (k, h) with
/// g' = h g k^{-1}.
struct CommaCategory {
    FiniteGroupoid groupoid;
    std::vector<Mor> object_label;                   // comma object -> parent morphism
    std::vector<std::pair<Mor, Mor>> morphism_label;  // comma morphism -> (k, h)
    std::vector<Obj> object_of_parent;               // parent morphism -> comma object (-1 none)
};
CommaCategory comma_category(const FiniteGroupoid& g, const Subgroupoid& h, const Subgroupoid& k);

/// Builds the canonical functor from the action groupoid of X_{H,K} to the
/// comma category ((s,t),g) -> g, (h,k) -> (k,h), and verifies it is
/// bijective on objects and morphisms and preserves identities and
/// composition. Returns all failures.
std::vector<std::string> comma_iso_check(const FiniteGroupoid& g, const Subgroupoid& h,
                                         const Subgroupoid& k);

}  // namespace gpd
