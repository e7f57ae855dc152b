#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ksq/assignment.hpp"
#include "ksq/scalar.hpp"
#include "ksq/scenario.hpp"

namespace ksq {

/// Per-event occurrence probabilities p_i = p(A_i = 1), all in [0,1],
/// in a single numeric mode.
class EventProbabilities {
public:
    static EventProbabilities from_rationals(std::vector<Rational> values);
    static EventProbabilities from_doubles(std::vector<double> values);
    static EventProbabilities from_scalars(std::vector<Scalar> values);

    NumericMode mode() const { return mode_; }
    int size() const { return static_cast<int>(values_.size()); }
    const Scalar& operator[](int i) const { return values_[i]; }
    const std::vector<Scalar>& values() const { return values_; }
    Scalar sum() const { return scalar_sum(values_.begin(), values_.end(), mode_); }

private:
    EventProbabilities(NumericMode mode, std::vector<Scalar> values)
        : mode_(mode), values_(std::move(values)) {}

    NumericMode mode_;
    std::vector<Scalar> values_;
};

/// The outcome table of one context: a weight for each of the 2^n outcome
/// strings over the context's members (sorted ascending). Weights sum to 1
/// but may be negative for quasidistributions. n is capped at 16.
class MarginalTable {
public:
    MarginalTable(Context context, std::vector<Scalar> weights, NumericMode mode);

    const Context& context() const { return context_; }
    int arity() const { return static_cast<int>(context_.members.size()); }
    NumericMode mode() const { return mode_; }
    std::size_t size() const { return weights_.size(); }

    const Scalar& weight(std::size_t index) const { return weights_[index]; }
    const Scalar& weight(const std::string& outcome) const;
    /// Outcome string for a table index; character k is the bit of the k-th
    /// (ascending) member, most significant first: index 1 of a pair is "01".
    std::string outcome_string(std::size_t index) const;
    static std::size_t outcome_index(const std::string& outcome);

    bool operator==(const MarginalTable&) const = default;

private:
    Context context_;
    NumericMode mode_;
    std::vector<Scalar> weights_;
};

/// A signed weight per support assignment, summing to 1 (exactly in rational
/// mode, within 1e-9 in float mode). Support assignments are distinct.
/// Immutable after construction.
class QuasiDistribution {
public:
    QuasiDistribution(Scenario scenario,
                      std::vector<std::pair<Assignment, Scalar>> support,
                      NumericMode mode);

    const Scenario& scenario() const { return scenario_; }
    NumericMode mode() const { return mode_; }
    const std::vector<std::pair<Assignment, Scalar>>& support() const {
        return support_;
    }
    /// Weight of the given assignment; zero(mode) when outside the support.
    Scalar weight(const Assignment& a) const;

private:
    Scenario scenario_;
    NumericMode mode_;
    std::vector<std::pair<Assignment, Scalar>> support_;
};

/// The relaxed-completeness quasidistribution over {ω0, ω1, …, ωN}: every
/// single-event assignment ωi carries p_i and the all-zeros assignment ω0
/// carries 1 - Σ p_i, which is negative exactly when the p_i overshoot 1.
QuasiDistribution construct_jqd(const Scenario& s, const EventProbabilities& p);

/// Sums support weights over all assignments agreeing with each outcome of
/// the context. Accepts any context with valid, distinct member indices
/// (it need not be listed in the scenario). Normalization is preserved.
MarginalTable marginalize(const QuasiDistribution& q, const Context& c);

/// Total weight of {a_i = 1} per event: the single-event marginals.
std::vector<Scalar> event_marginals(const QuasiDistribution& q);

struct ObservableExclusivityCheck {
    int context_index = -1;
    bool exclusive = false;
    /// Outcomes with two or more 1s whose marginal weight is not zero.
    std::vector<std::pair<std::string, Scalar>> violations;
};

/// Per context: does every marginal outcome with >= 2 occurring events have
/// zero weight? Exact in rational mode, within tol in float mode.
std::vector<ObservableExclusivityCheck> verify_observable_exclusivity(
    const QuasiDistribution& q, double tol = 1e-9);

struct ObservableCompletenessCheck {
    int context_index = -1;
    Scalar none_weight;     // marginal weight of the all-zeros outcome
    bool none_is_zero = false;
    bool required = false;  // context is flagged complete
    bool ok = false;        // !required || none_is_zero
};

/// Per context: reports the all-zeros marginal weight (the probability that
/// no event of the context occurs); contexts flagged complete must have it
/// exactly zero.
std::vector<ObservableCompletenessCheck> verify_observable_completeness(
    const QuasiDistribution& q, double tol = 1e-9);

/// Total negative mass Σ max(0, -w); zero iff q is a proper JPD.
Scalar negativity(const QuasiDistribution& q);

/// Alternate accessor (Σ|w| - 1)/2; agrees with negativity for any
/// normalized distribution.
Scalar l1_negativity(const QuasiDistribution& q);

}  // namespace ksq
