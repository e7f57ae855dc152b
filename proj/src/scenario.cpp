#include "ksq/scenario.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ksq {

Scenario::Scenario(std::string name, std::vector<std::string> events,
                   std::vector<Context> contexts)
    : name_(std::move(name)),
      events_(std::move(events)),
      contexts_(std::move(contexts)) {
    // Canonical member order. Duplicates are kept so validation can see them.
    for (auto& c : contexts_) std::sort(c.members.begin(), c.members.end());
}

int Scenario::complete_context_count() const {
    return static_cast<int>(
        std::count_if(contexts_.begin(), contexts_.end(),
                      [](const Context& c) { return c.complete; }));
}

std::vector<int> Scenario::contexts_of(int event) const {
    std::vector<int> out;
    for (int ci = 0; ci < static_cast<int>(contexts_.size()); ++ci) {
        const auto& m = contexts_[ci].members;
        if (std::binary_search(m.begin(), m.end(), event)) out.push_back(ci);
    }
    return out;
}

std::vector<Violation> validate_scenario(const Scenario& s) {
    std::vector<Violation> out;
    const int n = s.size();
    if (n < 1) out.push_back({"scenario has no events", -1, -1});

    std::map<std::vector<int>, int> seen;  // normalized member set -> first index
    for (int ci = 0; ci < static_cast<int>(s.contexts().size()); ++ci) {
        const Context& c = s.contexts()[ci];
        for (std::size_t k = 0; k < c.members.size(); ++k) {
            int e = c.members[k];
            if (e < 0 || e >= n) {
                out.push_back({"context references out-of-range event index " +
                                   std::to_string(e),
                               ci, e});
            }
            if (k > 0 && c.members[k] == c.members[k - 1]) {
                out.push_back({"context lists event index " + std::to_string(e) +
                                   " more than once",
                               ci, e});
            }
        }
        std::vector<int> key(c.members);
        key.erase(std::unique(key.begin(), key.end()), key.end());
        if (key.size() < 2) {
            out.push_back({"context has fewer than 2 events", ci, -1});
        }
        auto [it, inserted] = seen.emplace(std::move(key), ci);
        if (!inserted) {
            out.push_back({"context duplicates the member set of context " +
                               std::to_string(it->second),
                           ci, -1});
        }
    }
    return out;
}

ExclusivityGraph::ExclusivityGraph(int vertex_count,
                                   std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (auto& [a, b] : edges_)
        if (a > b) std::swap(a, b);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool ExclusivityGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), std::pair{a, b});
}

int ExclusivityGraph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges_)
        if (a == v || b == v) ++d;
    return d;
}

ExclusivityGraph exclusivity_graph(const Scenario& s) {
    std::vector<std::pair<int, int>> edges;
    for (const Context& c : s.contexts()) {
        for (std::size_t i = 0; i < c.members.size(); ++i)
            for (std::size_t j = i + 1; j < c.members.size(); ++j)
                if (c.members[i] != c.members[j])
                    edges.emplace_back(c.members[i], c.members[j]);
    }
    return ExclusivityGraph(s.size(), std::move(edges));
}

Scenario augment_scenario(const Scenario& s) {
    std::vector<std::string> events = s.events();
    std::string label = "ω0";
    while (std::find(events.begin(), events.end(), label) != events.end())
        label += "'";
    events.push_back(label);

    std::vector<Context> contexts;
    contexts.reserve(s.contexts().size() + 1);
    for (const Context& c : s.contexts()) contexts.push_back({c.members, false});

    Context full;
    full.complete = true;
    for (int i = 0; i < static_cast<int>(events.size()); ++i)
        full.members.push_back(i);
    contexts.push_back(std::move(full));

    return Scenario(s.name() + "_aug", std::move(events), std::move(contexts));
}

}  // namespace ksq
