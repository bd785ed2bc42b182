#pragma once

#include "gpd/groupoid.hpp"

#include <string>

namespace gpd {

/// Builder expressions over
///   pair(n) | cyclic(n) | sym(n) | product(e, e) | coproduct(e, e) | file(path)
/// Whitespace-insensitive outside of file paths. Throws Error with the
/// offending position on malformed input.
FiniteGroupoid build_groupoid(const std::string& expr);

/// Subgroupoid specs relative to a parent groupoid:
///   discrete           identities only, wide
///   full               the whole groupoid
///   iso                the group bundle, wide
///   seed:3,5           wide closure of the listed morphism indices
///   file:path | path   subset file
Subgroupoid build_subgroupoid(const FiniteGroupoid& parent, const std::string& spec);

}  // namespace gpd
