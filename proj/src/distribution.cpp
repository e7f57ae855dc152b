#include "ksq/distribution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

namespace ksq {

namespace {

constexpr double kFloatNormTol = 1e-9;
constexpr int kMaxTableArity = 16;

void require_mode(const std::vector<Scalar>& values, NumericMode mode,
                  const char* what) {
    for (const Scalar& v : values)
        if (v.mode() != mode)
            throw std::invalid_argument(std::string(what) +
                                        ": mixed numeric modes");
}

void require_unit_interval(const Scalar& v) {
    bool ok;
    if (v.is_rational())
        ok = v.rational() >= 0 && v.rational() <= 1;
    else
        ok = v.to_double() >= 0.0 && v.to_double() <= 1.0;
    if (!ok)
        throw std::invalid_argument("event probability " + v.str() +
                                    " outside [0,1]");
}

}  // namespace

EventProbabilities EventProbabilities::from_rationals(std::vector<Rational> values) {
    std::vector<Scalar> s;
    s.reserve(values.size());
    for (auto& r : values) s.emplace_back(std::move(r));
    return from_scalars(std::move(s));
}

EventProbabilities EventProbabilities::from_doubles(std::vector<double> values) {
    std::vector<Scalar> s;
    s.reserve(values.size());
    for (double d : values) s.emplace_back(d);
    return from_scalars(std::move(s));
}

EventProbabilities EventProbabilities::from_scalars(std::vector<Scalar> values) {
    if (values.empty())
        throw std::invalid_argument("event probabilities: empty vector");
    NumericMode mode = values.front().mode();
    require_mode(values, mode, "event probabilities");
    for (const Scalar& v : values) require_unit_interval(v);
    return EventProbabilities(mode, std::move(values));
}

MarginalTable::MarginalTable(Context context, std::vector<Scalar> weights,
                             NumericMode mode)
    : context_(std::move(context)), mode_(mode), weights_(std::move(weights)) {
    const int n = static_cast<int>(context_.members.size());
    if (n > kMaxTableArity)
        throw std::invalid_argument("marginal table arity " + std::to_string(n) +
                                    " exceeds limit of 16");
    for (int k = 1; k < n; ++k)
        if (context_.members[k] <= context_.members[k - 1])
            throw std::invalid_argument(
                "marginal table members must be strictly ascending");
    if (weights_.size() != (std::size_t{1} << n))
        throw std::invalid_argument("marginal table needs 2^n weights");
    require_mode(weights_, mode_, "marginal table");
}

const Scalar& MarginalTable::weight(const std::string& outcome) const {
    if (outcome.size() != context_.members.size())
        throw std::invalid_argument("outcome arity mismatch");
    return weights_[outcome_index(outcome)];
}

std::string MarginalTable::outcome_string(std::size_t index) const {
    const int n = arity();
    std::string out(n, '0');
    for (int k = 0; k < n; ++k)
        if (index >> (n - 1 - k) & 1) out[k] = '1';
    return out;
}

std::size_t MarginalTable::outcome_index(const std::string& outcome) {
    std::size_t index = 0;
    for (char ch : outcome) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("outcome string must be over {0,1}");
        index = index << 1 | (ch == '1' ? 1 : 0);
    }
    return index;
}

QuasiDistribution::QuasiDistribution(
    Scenario scenario, std::vector<std::pair<Assignment, Scalar>> support,
    NumericMode mode)
    : scenario_(std::move(scenario)), mode_(mode), support_(std::move(support)) {
    std::set<Assignment> seen;
    Scalar total = Scalar::zero(mode_);
    for (const auto& [a, w] : support_) {
        if (a.size() != scenario_.size())
            throw std::invalid_argument("support assignment length mismatch");
        if (!seen.insert(a).second)
            throw std::invalid_argument("duplicate support assignment " +
                                        a.to_string());
        if (w.mode() != mode_)
            throw std::invalid_argument("support weight numeric mode mismatch");
        total += w;
    }
    bool normalized = mode_ == NumericMode::Rational
                          ? total.rational() == 1
                          : std::abs(total.to_double() - 1.0) <= kFloatNormTol;
    if (!normalized)
        throw std::invalid_argument("support weights sum to " + total.str() +
                                    ", not 1");
}

Scalar QuasiDistribution::weight(const Assignment& a) const {
    for (const auto& [sa, w] : support_)
        if (sa == a) return w;
    return Scalar::zero(mode_);
}

QuasiDistribution construct_jqd(const Scenario& s, const EventProbabilities& p) {
    if (p.size() != s.size())
        throw std::invalid_argument("probability vector length mismatch");
    const NumericMode mode = p.mode();
    std::vector<std::pair<Assignment, Scalar>> support;
    support.reserve(s.size() + 1);
    support.emplace_back(Assignment::zeros(s.size()),
                         Scalar::one(mode) - p.sum());
    for (int i = 0; i < s.size(); ++i)
        support.emplace_back(Assignment::unit(s.size(), i), p[i]);
    return QuasiDistribution(s, std::move(support), mode);
}

MarginalTable marginalize(const QuasiDistribution& q, const Context& c) {
    Context ctx = c;
    std::sort(ctx.members.begin(), ctx.members.end());
    const int n = static_cast<int>(ctx.members.size());
    if (n < 1 || n > kMaxTableArity)
        throw std::invalid_argument("marginal context arity out of range");
    for (int k = 0; k < n; ++k) {
        int e = ctx.members[k];
        if (e < 0 || e >= q.scenario().size())
            throw std::invalid_argument("marginal context member out of range");
        if (k > 0 && ctx.members[k] == ctx.members[k - 1])
            throw std::invalid_argument("marginal context member repeated");
    }

    std::vector<Scalar> weights(std::size_t{1} << n, Scalar::zero(q.mode()));
    for (const auto& [a, w] : q.support()) {
        std::size_t index = 0;
        for (int k = 0; k < n; ++k)
            index = index << 1 | (a.bit(ctx.members[k]) ? 1 : 0);
        weights[index] += w;
    }
    return MarginalTable(std::move(ctx), std::move(weights), q.mode());
}

std::vector<Scalar> event_marginals(const QuasiDistribution& q) {
    std::vector<Scalar> out(q.scenario().size(), Scalar::zero(q.mode()));
    for (const auto& [a, w] : q.support())
        for (int i = 0; i < a.size(); ++i)
            if (a.bit(i)) out[i] += w;
    return out;
}

std::vector<ObservableExclusivityCheck> verify_observable_exclusivity(
    const QuasiDistribution& q, double tol) {
    std::vector<ObservableExclusivityCheck> out;
    const auto& contexts = q.scenario().contexts();
    for (int ci = 0; ci < static_cast<int>(contexts.size()); ++ci) {
        MarginalTable table = marginalize(q, contexts[ci]);
        ObservableExclusivityCheck check;
        check.context_index = ci;
        for (std::size_t o = 0; o < table.size(); ++o) {
            if (std::popcount(o) < 2) continue;
            if (!table.weight(o).is_zero(tol))
                check.violations.emplace_back(table.outcome_string(o),
                                              table.weight(o));
        }
        check.exclusive = check.violations.empty();
        out.push_back(std::move(check));
    }
    return out;
}

std::vector<ObservableCompletenessCheck> verify_observable_completeness(
    const QuasiDistribution& q, double tol) {
    std::vector<ObservableCompletenessCheck> out;
    const auto& contexts = q.scenario().contexts();
    for (int ci = 0; ci < static_cast<int>(contexts.size()); ++ci) {
        MarginalTable table = marginalize(q, contexts[ci]);
        ObservableCompletenessCheck check;
        check.context_index = ci;
        check.none_weight = table.weight(std::size_t{0});
        check.none_is_zero = check.none_weight.is_zero(tol);
        check.required = contexts[ci].complete;
        check.ok = !check.required || check.none_is_zero;
        out.push_back(std::move(check));
    }
    return out;
}

Scalar negativity(const QuasiDistribution& q) {
    Scalar total = Scalar::zero(q.mode());
    for (const auto& [a, w] : q.support()) total += w.negative_part();
    return total;
}

Scalar l1_negativity(const QuasiDistribution& q) {
    Scalar total = Scalar::zero(q.mode());
    for (const auto& [a, w] : q.support()) total += w.abs();
    Scalar half = q.mode() == NumericMode::Rational
                      ? Scalar(Rational(1, 2))
                      : Scalar(0.5);
    return (total - Scalar::one(q.mode())) * half;
}

}  // namespace ksq
