#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ksq {

/// A jointly measurable set of mutually exclusive events, identified by
/// event indices. When `complete` is set, exactly one member occurs in any
/// admissible deterministic assignment; otherwise at most one.
struct Context {
    std::vector<int> members;
    bool complete = false;

    bool operator==(const Context&) const = default;
};

/// A measurement scenario: N labelled events plus a hypergraph of contexts.
/// Construction is permissive so that malformed inputs can be inspected with
/// validate_scenario; operations other than validation assume a valid value.
/// Immutable after construction.
class Scenario {
public:
    Scenario() = default;
    Scenario(std::string name, std::vector<std::string> events,
             std::vector<Context> contexts);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& events() const { return events_; }
    const std::vector<Context>& contexts() const { return contexts_; }
    int size() const { return static_cast<int>(events_.size()); }

    int complete_context_count() const;
    /// Contexts containing event index i.
    std::vector<int> contexts_of(int event) const;

    bool operator==(const Scenario&) const = default;

private:
    std::string name_;
    std::vector<std::string> events_;
    std::vector<Context> contexts_;  // members sorted ascending per context
};

/// One invariant violation found by validate_scenario. Indices are -1 when
/// the violation is not tied to a particular context or event.
struct Violation {
    std::string message;
    int context_index = -1;
    int event_index = -1;
};

/// Checks every Scenario invariant and returns the violations found (empty
/// for a valid scenario). Violations are data, not errors.
std::vector<Violation> validate_scenario(const Scenario& s);

/// Pairwise exclusivity relations: an edge per pair of events that co-appear
/// in at least one context.
class ExclusivityGraph {
public:
    ExclusivityGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_edge(int a, int b) const;
    int degree(int v) const;

private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;  // a < b, sorted, distinct
};

ExclusivityGraph exclusivity_graph(const Scenario& s);

/// Relaxes completeness and restores it through one auxiliary event: appends
/// a new event (labelled "ω0" or a primed variant if taken), demotes every
/// context to exclusive-only, and adds a single complete context spanning
/// all N+1 events.
Scenario augment_scenario(const Scenario& s);

}  // namespace ksq
