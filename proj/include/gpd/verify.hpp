#pragma once

#include "gpd/groupoid.hpp"

#include <string>
#include <vector>

namespace gpd {

struct CheckRow {
    std::string check;
    std::string instance;
    std::string expected;
    std::string actual;
    bool ok = false;
};

struct VerificationReport {
    std::vector<CheckRow> rows;

    bool all_ok() const;
    void add(std::string check, std::string instance, std::string expected, std::string actual);
    void add_status(std::string check, std::string instance, const std::vector<std::string>& failures);

    /// "text" renders an aligned table; "records" one machine-readable
    /// key=value line per row.
    std::string render(bool records) const;
};

/// Runs every theorem check on one (G, H, K) instance with wide H and K:
/// axioms and subgroupoid closure, hom-set sizes, the structure
/// decomposition and the coset-index formula per component, the fixed-point
/// orbit count and orbit-stabilizer identity for X_{H,K}, double-coset sizes
/// against the closed form, the comma-category comparison, induction of the
/// terminal set and of the trivial representation, the invariant-function
/// dimension, the coset/function-space isomorphism, the S/T round trips, and
/// the character-count and intertwiner-dimension identities (the latter two
/// per connected component, where the averaged inner product is exact).
VerificationReport verify_instance(const FiniteGroupoid& g, const Subgroupoid& h,
                                   const Subgroupoid& k, const std::string& label);

}  // namespace gpd
