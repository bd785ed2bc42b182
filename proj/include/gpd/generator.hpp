#pragma once

#include "gpd/action.hpp"
#include "gpd/groupoid.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace gpd {

/// A seeded test instance: a groupoid and two wide subgroupoids grown by
/// closure of random morphism seeds. Deterministic in the arguments
/// (std::mt19937_64 with modulo draws; no library distributions, whose
/// sequences vary across standard libraries).
struct GenInstance {
    std::unique_ptr<FiniteGroupoid> groupoid;
    std::optional<Subgroupoid> h, k;
    std::string description;
};

/// One to three components, each a product of a small group (cyclic, or the
/// symmetric group on three letters when the order budget allows) with a
/// pair groupoid.
GenInstance gen_random(std::uint64_t seed, int max_objects, int max_group_order);
/// Same shapes, restricted to a single component.
GenInstance gen_random_connected(std::uint64_t seed, int max_objects, int max_group_order);

/// A seeded G-set over an existing groupoid: disjoint unions of terminal,
/// representable, and coset pieces.
GSet gen_random_gset(std::uint64_t seed, const FiniteGroupoid& g);

}  // namespace gpd
