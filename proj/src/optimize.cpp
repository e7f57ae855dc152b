#include "ksq/optimize.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ksq/lp.hpp"

namespace ksq {

namespace {

constexpr double kFloatTol = 1e-9;

void require_same_occurrence(const Scalar& a, const Scalar& b, int event) {
    bool equal = a.mode() == NumericMode::Rational
                     ? a == b
                     : std::abs(a.to_double() - b.to_double()) <= kFloatTol;
    if (!equal)
        throw std::invalid_argument(
            "marginal targets disagree on event " + std::to_string(event) +
            ": " + a.str() + " vs " + b.str());
}

Scalar occurrence_probability(const MarginalTable& t, int member_position) {
    Scalar total = Scalar::zero(t.mode());
    const int n = t.arity();
    for (std::size_t o = 0; o < t.size(); ++o)
        if (o >> (n - 1 - member_position) & 1) total += t.weight(o);
    return total;
}

}  // namespace

MarginalConstraintSet MarginalConstraintSet::from_tables(
    std::vector<MarginalTable> tables) {
    if (tables.empty())
        throw std::invalid_argument("marginal constraint set needs a table");
    const NumericMode mode = tables.front().mode();
    std::vector<std::pair<int, Scalar>> occurrence;  // event -> p(event = 1)
    for (const MarginalTable& t : tables) {
        if (t.mode() != mode)
            throw std::invalid_argument("marginal tables mix numeric modes");
        Scalar total = Scalar::zero(mode);
        for (std::size_t o = 0; o < t.size(); ++o) total += t.weight(o);
        bool normalized = mode == NumericMode::Rational
                              ? total.rational() == 1
                              : std::abs(total.to_double() - 1.0) <= kFloatTol;
        if (!normalized)
            throw std::invalid_argument("marginal table sums to " + total.str() +
                                        ", not 1");
        for (int k = 0; k < t.arity(); ++k) {
            int event = t.context().members[k];
            Scalar p = occurrence_probability(t, k);
            auto it = std::find_if(occurrence.begin(), occurrence.end(),
                                   [&](const auto& e) { return e.first == event; });
            if (it == occurrence.end())
                occurrence.emplace_back(event, p);
            else
                require_same_occurrence(it->second, p, event);
        }
    }
    return MarginalConstraintSet(mode, std::move(tables));
}

MarginalConstraintSet MarginalConstraintSet::from_event_probabilities(
    const Scenario& s, const EventProbabilities& p) {
    if (p.size() != s.size())
        throw std::invalid_argument("probability vector length mismatch");
    const NumericMode mode = p.mode();
    std::vector<MarginalTable> tables;
    tables.reserve(s.contexts().size());
    for (const Context& c : s.contexts()) {
        const int n = static_cast<int>(c.members.size());
        std::vector<Scalar> weights(std::size_t{1} << n, Scalar::zero(mode));
        Scalar in_context = Scalar::zero(mode);
        for (int k = 0; k < n; ++k) {
            in_context += p[c.members[k]];
            weights[std::size_t{1} << (n - 1 - k)] = p[c.members[k]];
        }
        weights[0] = Scalar::one(mode) - in_context;
        tables.emplace_back(c, std::move(weights), mode);
    }
    return MarginalConstraintSet(mode, std::move(tables));
}

MarginalConstraintSet MarginalConstraintSet::from_distribution(
    const QuasiDistribution& q) {
    std::vector<MarginalTable> tables;
    tables.reserve(q.scenario().contexts().size());
    for (const Context& c : q.scenario().contexts())
        tables.push_back(marginalize(q, c));
    return MarginalConstraintSet(q.mode(), std::move(tables));
}

namespace {

struct RowSystem {
    std::vector<std::vector<Scalar>> rows;  // coefficients over support columns
    std::vector<Scalar> rhs;
};

void validate_support(const Scenario& s, const std::vector<Assignment>& support,
                      const LpOptions& options) {
    if (support.empty())
        throw std::invalid_argument("LP support must be nonempty");
    if (support.size() > options.max_support)
        throw ResourceLimitError("LP support of " +
                                 std::to_string(support.size()) +
                                 " exceeds cap of " +
                                 std::to_string(options.max_support));
    std::set<Assignment> seen;
    for (const Assignment& a : support) {
        if (a.size() != s.size())
            throw std::invalid_argument("support assignment length mismatch");
        if (!seen.insert(a).second)
            throw std::invalid_argument("duplicate support assignment " +
                                        a.to_string());
    }
}

RowSystem build_rows(const Scenario& s, const MarginalConstraintSet& targets,
                     const std::vector<Assignment>& support) {
    const NumericMode mode = targets.mode();
    RowSystem sys;
    for (const MarginalTable& t : targets.tables()) {
        const auto& members = t.context().members;
        for (int e : members)
            if (e < 0 || e >= s.size())
                throw std::invalid_argument(
                    "target context member out of range for scenario");
        const int n = static_cast<int>(members.size());
        // one equality per outcome of the context
        std::vector<std::vector<Scalar>> rows(
            t.size(), std::vector<Scalar>(support.size(), Scalar::zero(mode)));
        for (std::size_t col = 0; col < support.size(); ++col) {
            std::size_t o = 0;
            for (int k = 0; k < n; ++k)
                o = o << 1 | (support[col].bit(members[k]) ? 1 : 0);
            rows[o][col] = Scalar::one(mode);
        }
        for (std::size_t o = 0; o < t.size(); ++o) {
            sys.rows.push_back(std::move(rows[o]));
            sys.rhs.push_back(t.weight(o));
        }
    }
    sys.rows.emplace_back(support.size(), Scalar::one(mode));
    sys.rhs.push_back(Scalar::one(mode));
    return sys;
}

template <typename T>
T to_field(const Scalar& s);
template <>
Rational to_field<Rational>(const Scalar& s) { return s.rational(); }
template <>
double to_field<double>(const Scalar& s) { return s.to_double(); }

Scalar to_scalar(const Rational& v) { return Scalar(v); }
Scalar to_scalar(double v) { return Scalar(v); }

// Split formulation q = qp - qm: column k is q_k+, column n+k is q_k-.
// When split is false the variables are the weights themselves (q >= 0).
template <typename T>
struct FieldProblem {
    std::vector<std::vector<T>> a;
    std::vector<T> b;
    std::size_t n = 0;  // support size
    bool split = false;

    std::size_t cols() const { return split ? 2 * n : n; }

    static FieldProblem build(const RowSystem& sys, std::size_t n, bool split) {
        FieldProblem p;
        p.n = n;
        p.split = split;
        for (std::size_t r = 0; r < sys.rows.size(); ++r) {
            std::vector<T> row(p.cols(), T{});
            for (std::size_t k = 0; k < n; ++k) {
                T v = to_field<T>(sys.rows[r][k]);
                row[k] = v;
                if (split) row[n + k] = -v;
            }
            p.a.push_back(std::move(row));
            p.b.push_back(to_field<T>(sys.rhs[r]));
        }
        return p;
    }

    /// Cost of the weight q_k (maps to +1 on q_k+ and -1 on q_k-).
    std::vector<T> weight_cost(std::size_t k) const {
        std::vector<T> c(cols(), T{});
        c[k] = T(1);
        if (split) c[n + k] = T(-1);
        return c;
    }

    void fix_weight(std::size_t k, const T& value) {
        a.push_back(weight_cost(k));
        b.push_back(value);
    }

    void fix_cost(const std::vector<T>& cost, const T& value) {
        a.push_back(cost);
        b.push_back(value);
    }

    std::vector<T> weights_of(const std::vector<T>& x) const {
        std::vector<T> w(n);
        for (std::size_t k = 0; k < n; ++k)
            w[k] = split ? x[k] - x[n + k] : x[k];
        return w;
    }
};

template <typename T>
lp::SimplexOutcome<T> run(const FieldProblem<T>& p, const std::vector<T>& cost) {
    return lp::SimplexSolver<T>(p.a, p.b, cost).solve();
}

// Lexicographically smallest weight vector among the optima: fix the
// objective value, then minimize and fix each weight in support order.
// Rational-mode refinement; each step is a fresh solve with one more row.
template <typename T>
std::vector<T> lexicographic_min(FieldProblem<T> p, const std::vector<T>& cost,
                                 const T& optimum) {
    p.fix_cost(cost, optimum);
    std::vector<T> weights(p.n);
    for (std::size_t k = 0; k < p.n; ++k) {
        auto step = run(p, p.weight_cost(k));
        weights[k] = step.objective;
        p.fix_weight(k, step.objective);
    }
    return weights;
}

constexpr std::size_t kLexRefineMaxSupport = 64;

template <typename T>
LPSolution solve_feasibility(const RowSystem& sys, std::size_t n,
                             const LpOptions& options) {
    auto problem = FieldProblem<T>::build(sys, n, false);
    std::vector<T> zero_cost(problem.cols(), T{});
    auto outcome = run(problem, zero_cost);
    LPSolution sol;
    sol.mode = std::is_same_v<T, Rational> ? NumericMode::Rational
                                           : NumericMode::Float;
    sol.objective = Scalar::zero(sol.mode);
    if (outcome.status != lp::SimplexStatus::Optimal) return sol;
    sol.status = LpStatus::Optimal;
    std::vector<T> weights = problem.weights_of(outcome.x);
    if (options.lexicographic_tiebreak && std::is_same_v<T, Rational> &&
        n <= kLexRefineMaxSupport)
        weights = lexicographic_min(problem, zero_cost, T{});
    for (const T& w : weights) sol.weights.push_back(to_scalar(w));
    return sol;
}

template <typename T>
LPSolution solve_min_negativity(const RowSystem& sys, std::size_t n,
                                const LpOptions& options) {
    auto problem = FieldProblem<T>::build(sys, n, true);
    std::vector<T> cost(problem.cols(), T{});
    for (std::size_t k = 0; k < n; ++k) cost[n + k] = T(1);
    auto outcome = run(problem, cost);
    LPSolution sol;
    sol.mode = std::is_same_v<T, Rational> ? NumericMode::Rational
                                           : NumericMode::Float;
    sol.objective = Scalar::zero(sol.mode);
    if (outcome.status != lp::SimplexStatus::Optimal) return sol;
    sol.status = LpStatus::Optimal;
    sol.objective = to_scalar(outcome.objective);
    std::vector<T> weights = problem.weights_of(outcome.x);
    if (options.lexicographic_tiebreak && std::is_same_v<T, Rational> &&
        n <= kLexRefineMaxSupport)
        weights = lexicographic_min(problem, cost, outcome.objective);
    for (const T& w : weights) sol.weights.push_back(to_scalar(w));
    return sol;
}

}  // namespace

LPSolution jpd_feasible(const Scenario& s, const MarginalConstraintSet& targets,
                        const std::vector<Assignment>& support,
                        const LpOptions& options) {
    validate_support(s, support, options);
    RowSystem sys = build_rows(s, targets, support);
    return targets.mode() == NumericMode::Rational
               ? solve_feasibility<Rational>(sys, support.size(), options)
               : solve_feasibility<double>(sys, support.size(), options);
}

LPSolution min_negativity_jqd(const Scenario& s,
                              const MarginalConstraintSet& targets,
                              const std::vector<Assignment>& support,
                              const LpOptions& options) {
    validate_support(s, support, options);
    RowSystem sys = build_rows(s, targets, support);
    return targets.mode() == NumericMode::Rational
               ? solve_min_negativity<Rational>(sys, support.size(), options)
               : solve_min_negativity<double>(sys, support.size(), options);
}

}  // namespace ksq
