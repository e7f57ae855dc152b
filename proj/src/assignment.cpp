#include "ksq/assignment.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ksq {

Assignment Assignment::from_string(const std::string& s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char ch : s) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("assignment string must be over {0,1}");
        bits.push_back(ch == '1' ? 1 : 0);
    }
    return Assignment(std::move(bits));
}

int Assignment::ones_count() const {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string Assignment::to_string() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out[i] = '1';
    return out;
}

std::string Assignment::restrict_to(const std::vector<int>& members) const {
    std::string out(members.size(), '0');
    for (std::size_t k = 0; k < members.size(); ++k)
        if (bits_[members[k]]) out[k] = '1';
    return out;
}

namespace {

void require_matching_length(const Scenario& s, const Assignment& a) {
    if (a.size() != s.size())
        throw std::invalid_argument("assignment length " + std::to_string(a.size()) +
                                    " does not match scenario size " +
                                    std::to_string(s.size()));
}

}  // namespace

bool satisfies_exclusivity(const Scenario& s, const Assignment& a) {
    require_matching_length(s, a);
    for (const Context& c : s.contexts()) {
        int ones = 0;
        for (int e : c.members)
            if (a.bit(e) && ++ones > 1) return false;
    }
    return true;
}

bool satisfies_completeness(const Scenario& s, const Assignment& a) {
    require_matching_length(s, a);
    for (const Context& c : s.contexts()) {
        if (!c.complete) continue;
        int ones = 0;
        for (int e : c.members)
            if (a.bit(e)) ++ones;
        if (ones != 1) return false;
    }
    return true;
}

namespace {

struct ExclusiveEnumerator {
    const std::size_t cap;
    std::vector<std::vector<int>> contexts_of;  // event -> context indices
    std::vector<int> ones;                      // per-context count in prefix
    std::vector<std::uint8_t> bits;
    std::vector<Assignment> out;

    explicit ExclusiveEnumerator(const Scenario& s, std::size_t cap_)
        : cap(cap_), ones(s.contexts().size(), 0), bits(s.size(), 0) {
        contexts_of.resize(s.size());
        for (int ci = 0; ci < static_cast<int>(s.contexts().size()); ++ci)
            for (int e : s.contexts()[ci].members) contexts_of[e].push_back(ci);
    }

    void recurse(int i) {
        if (i == static_cast<int>(bits.size())) {
            if (out.size() >= cap)
                throw ResourceLimitError(
                    "exclusive-assignment enumeration exceeds cap of " +
                    std::to_string(cap));
            out.emplace_back(bits);
            return;
        }
        bits[i] = 0;
        recurse(i + 1);
        bool free = true;
        for (int ci : contexts_of[i])
            if (ones[ci] > 0) { free = false; break; }
        if (free) {
            bits[i] = 1;
            for (int ci : contexts_of[i]) ++ones[ci];
            recurse(i + 1);
            for (int ci : contexts_of[i]) --ones[ci];
            bits[i] = 0;
        }
    }
};

}  // namespace

std::vector<Assignment> enumerate_exclusive_assignments(
    const Scenario& s, const EnumerationOptions& options) {
    ExclusiveEnumerator en(s, options.max_results);
    if (s.size() > 0) en.recurse(0);
    return en.out;
}

namespace {

// Backtracking state for ks_colorability. Events are decided in descending
// order of context-membership count (ties by lowest index); after each
// decision, at-most-one and exactly-one constraints are propagated to
// fixpoint through a work queue.
class KsSearch {
public:
    KsSearch(const Scenario& s, std::uint64_t max_nodes)
        : scenario_(s),
          max_nodes_(max_nodes),
          value_(s.size(), -1),
          ones_(s.contexts().size(), 0),
          unassigned_(s.contexts().size(), 0) {
        contexts_of_.resize(s.size());
        for (int ci = 0; ci < static_cast<int>(s.contexts().size()); ++ci) {
            const auto& m = s.contexts()[ci].members;
            unassigned_[ci] = static_cast<int>(m.size());
            for (int e : m) contexts_of_[e].push_back(ci);
        }
        order_.resize(s.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [this](int a, int b) {
            return contexts_of_[a].size() > contexts_of_[b].size();
        });
    }

    KsResult run() {
        KsResult result;
        result.satisfiable = search();
        result.nodes = nodes_;
        if (result.satisfiable) {
            std::vector<std::uint8_t> bits(value_.size());
            for (std::size_t i = 0; i < value_.size(); ++i)
                bits[i] = value_[i] == 1 ? 1 : 0;
            result.witness = Assignment(std::move(bits));
        }
        return result;
    }

private:
    bool search() {
        int event = next_unassigned();
        if (event < 0) return true;  // propagation keeps partial states consistent
        for (int v = 0; v <= 1; ++v) {
            if (++nodes_ > max_nodes_)
                throw ResourceLimitError("ks_colorability exceeds node cap of " +
                                         std::to_string(max_nodes_));
            std::size_t mark = trail_.size();
            if (assign_and_propagate(event, v) && search()) return true;
            undo_to(mark);
        }
        return false;
    }

    int next_unassigned() const {
        for (int e : order_)
            if (value_[e] < 0) return e;
        return -1;
    }

    bool assign_and_propagate(int event, int v) {
        queue_.clear();
        queue_.emplace_back(event, v);
        while (!queue_.empty()) {
            auto [e, val] = queue_.back();
            queue_.pop_back();
            if (value_[e] >= 0) {
                if (value_[e] != val) return false;
                continue;
            }
            value_[e] = static_cast<signed char>(val);
            trail_.push_back(e);
            for (int ci : contexts_of_[e]) {
                --unassigned_[ci];
                if (val == 1 && ++ones_[ci] > 1) return false;
                const Context& c = scenario_.contexts()[ci];
                if (ones_[ci] == 1) {
                    // at-most-one: remaining members must be 0
                    for (int m : c.members)
                        if (value_[m] < 0) queue_.emplace_back(m, 0);
                } else if (c.complete && ones_[ci] == 0) {
                    if (unassigned_[ci] == 0) return false;  // exactly-one unmet
                    if (unassigned_[ci] == 1) {
                        for (int m : c.members)
                            if (value_[m] < 0) queue_.emplace_back(m, 1);
                    }
                }
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            int e = trail_.back();
            trail_.pop_back();
            for (int ci : contexts_of_[e]) {
                ++unassigned_[ci];
                if (value_[e] == 1) --ones_[ci];
            }
            value_[e] = -1;
        }
    }

    const Scenario& scenario_;
    const std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    std::vector<signed char> value_;
    std::vector<int> ones_;
    std::vector<int> unassigned_;
    std::vector<std::vector<int>> contexts_of_;
    std::vector<int> order_;
    std::vector<int> trail_;
    std::vector<std::pair<int, int>> queue_;
};

}  // namespace

KsResult ks_colorability(const Scenario& s, const KsSearchOptions& options) {
    return KsSearch(s, options.max_nodes).run();
}

}  // namespace ksq
