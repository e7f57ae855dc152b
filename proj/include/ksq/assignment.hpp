#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksq/scenario.hpp"

namespace ksq {

/// A deterministic {0,1} outcome for every event of a scenario.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

    /// All-zeros assignment ("no event occurs").
    static Assignment zeros(int n) {
        return Assignment(std::vector<std::uint8_t>(n, 0));
    }
    /// Single 1 at event index i.
    static Assignment unit(int n, int i) {
        auto a = zeros(n);
        a.bits_[i] = 1;
        return a;
    }
    /// Parses "0101…"; throws std::invalid_argument on other characters.
    static Assignment from_string(const std::string& s);

    int size() const { return static_cast<int>(bits_.size()); }
    bool bit(int i) const { return bits_[i] != 0; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    int ones_count() const;

    std::string to_string() const;
    /// Outcome string over the given event indices, in the given order.
    std::string restrict_to(const std::vector<int>& members) const;

    bool operator==(const Assignment&) const = default;
    bool operator<(const Assignment& o) const { return bits_ < o.bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

/// True iff every context of s has at most one member assigned 1.
/// Throws std::invalid_argument when lengths differ.
bool satisfies_exclusivity(const Scenario& s, const Assignment& a);

/// True iff every complete context of s has exactly one member assigned 1.
/// Throws std::invalid_argument when lengths differ.
bool satisfies_completeness(const Scenario& s, const Assignment& a);

/// Thrown when an enumeration or search exceeds its configured resource cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
    std::size_t max_results = std::size_t{1} << 20;
};

/// All assignments satisfying exclusivity, in lexicographic order of their
/// bit strings; these are exactly the independent sets of the exclusivity
/// graph. Throws ResourceLimitError past options.max_results.
std::vector<Assignment> enumerate_exclusive_assignments(
    const Scenario& s, const EnumerationOptions& options = {});

struct KsSearchOptions {
    std::uint64_t max_nodes = std::uint64_t{1} << 26;
};

/// Outcome of the Kochen-Specker colorability decision.
struct KsResult {
    bool satisfiable = false;
    std::optional<Assignment> witness;  // set iff satisfiable
    std::uint64_t nodes = 0;            // decision nodes expanded
};

/// Decides whether some assignment satisfies exclusivity on all contexts and
/// completeness on all complete contexts, by exhaustive backtracking with
/// constraint propagation. Deterministic; throws ResourceLimitError if the
/// node cap is exceeded.
KsResult ks_colorability(const Scenario& s, const KsSearchOptions& options = {});

}  // namespace ksq
