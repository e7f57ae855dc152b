#pragma once

#include <vector>

#include "ksq/distribution.hpp"
#include "ksq/scenario.hpp"

namespace ksq {

/// Target marginal tables, one per constrained context. Imposed as full
/// per-context outcome equalities. Internally consistent: every table sums
/// to 1 and contexts sharing an event agree on its occurrence probability.
class MarginalConstraintSet {
public:
    static MarginalConstraintSet from_tables(std::vector<MarginalTable> tables);

    /// The exclusivity-shaped targets induced by event probabilities: in each
    /// context of s the single-occurrence outcome of event i gets p_i, the
    /// all-zeros outcome gets 1 - Σ p_j, and outcomes with two or more
    /// occurrences get 0.
    static MarginalConstraintSet from_event_probabilities(
        const Scenario& s, const EventProbabilities& p);

    /// The marginals a given distribution induces on its scenario's contexts.
    static MarginalConstraintSet from_distribution(const QuasiDistribution& q);

    const std::vector<MarginalTable>& tables() const { return tables_; }
    NumericMode mode() const { return mode_; }

private:
    MarginalConstraintSet(NumericMode mode, std::vector<MarginalTable> tables)
        : mode_(mode), tables_(std::move(tables)) {}

    NumericMode mode_ = NumericMode::Rational;
    std::vector<MarginalTable> tables_;
};

enum class LpStatus { Optimal, Infeasible };

struct LPSolution {
    LpStatus status = LpStatus::Infeasible;
    NumericMode mode = NumericMode::Rational;
    /// Weight per support assignment, in support order; empty when infeasible.
    std::vector<Scalar> weights;
    /// Total negative mass of the weights; zero(mode) when infeasible.
    Scalar objective;
};

struct LpOptions {
    std::size_t max_support = 4096;
    /// Canonical tie-breaking: refine the optimum to the lexicographically
    /// smallest weight vector in support order. Applied in rational mode.
    bool lexicographic_tiebreak = true;
};

/// Decides whether a proper (nonnegative) JPD over the given support
/// reproduces every target table. Optimal solutions carry objective 0;
/// Infeasible means only signed solutions (or none at all) exist.
LPSolution jpd_feasible(const Scenario& s, const MarginalConstraintSet& targets,
                        const std::vector<Assignment>& support,
                        const LpOptions& options = {});

/// Minimizes total negative mass Σ max(0, -q) over signed weight vectors on
/// the support that reproduce every target table and sum to 1, via the
/// standard split q = q+ - q- minimizing Σ q-. Infeasible means the marginal
/// equations admit no signed solution over this support.
LPSolution min_negativity_jqd(const Scenario& s,
                              const MarginalConstraintSet& targets,
                              const std::vector<Assignment>& support,
                              const LpOptions& options = {});

}  // namespace ksq
