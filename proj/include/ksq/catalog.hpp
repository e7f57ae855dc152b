#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ksq/distribution.hpp"
#include "ksq/quantum.hpp"
#include "ksq/scenario.hpp"

namespace ksq {

struct CatalogState {
    std::string name;
    QuantumState state;
};

struct CatalogFixture {
    std::string name;
    QuasiDistribution distribution;
};

/// A built-in scenario plus, when a quantum realization exists, its vectors
/// and reference preparations, and any reference distributions.
struct CatalogEntry {
    Scenario scenario;
    std::vector<ComplexVector> vectors;  // empty: no quantum realization
    std::vector<CatalogState> states;
    std::vector<CatalogFixture> fixtures;
    /// Reference preparation for entries without a quantum realization.
    std::optional<EventProbabilities> default_probabilities;

    int dimension() const {
        return vectors.empty() ? 0 : static_cast<int>(vectors.front().size());
    }
    const CatalogFixture* find_fixture(std::string_view name) const;
};

/// Built-in entries: "kcbs" (5 cyclic events, d=3), "specker" (3 pairwise
/// complete contexts, no quantum realization), "cabello18" (18 events, d=4,
/// 9 complete bases among its orthogonality contexts).
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_catalog_entry(std::string_view name);

/// Exact occurrence probabilities under the maximally mixed state: 1/d per
/// event, since rank-one projectors have unit trace.
EventProbabilities maximally_mixed_probabilities(int n_events, int dimension);

/// Probabilities for a named reference preparation of a catalog entry.
/// "maxmixed" is exact (rational 1/d); other named states go through the
/// Born rule in float mode.
EventProbabilities reference_probabilities(const CatalogEntry& entry,
                                           std::string_view state_name);

}  // namespace ksq
