#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "ksq/scalar.hpp"

namespace ksq::lp {

template <typename T>
struct LpTraits;

template <>
struct LpTraits<Rational> {
    static bool is_zero(const Rational& v) { return v == 0; }
    static bool is_feasible_zero(const Rational& v) { return v == 0; }
    static bool is_negative(const Rational& v) { return v < 0; }
    static bool is_positive(const Rational& v) { return v > 0; }
};

template <>
struct LpTraits<double> {
    static constexpr double kPivotEps = 1e-11;
    static constexpr double kFeasEps = 1e-9;
    static bool is_zero(double v) { return std::abs(v) <= kPivotEps; }
    static bool is_feasible_zero(double v) { return std::abs(v) <= kFeasEps; }
    static bool is_negative(double v) { return v < -kPivotEps; }
    static bool is_positive(double v) { return v > kPivotEps; }
};

enum class SimplexStatus { Optimal, Infeasible, Unbounded };

template <typename T>
struct SimplexOutcome {
    SimplexStatus status = SimplexStatus::Infeasible;
    std::vector<T> x;  // length n on Optimal
    T objective{};
};

/// Two-phase dense simplex for min c·x subject to Ax = b, x >= 0, with
/// Bland's anti-cycling rule (lowest-index entering column; ratio ties go to
/// the lowest-index basic variable). Exact over Rational; over double all
/// comparisons use the LpTraits tolerances. Redundant equality rows are
/// detected and dropped after phase 1, so duplicated or linearly dependent
/// constraints are accepted.
template <typename T>
class SimplexSolver {
public:
    SimplexSolver(std::vector<std::vector<T>> a, std::vector<T> b,
                  std::vector<T> c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        rows_ = a_.size();
        cols_ = c_.size();
        for (std::size_t r = 0; r < rows_; ++r)
            if (LpTraits<T>::is_negative(b_[r])) {
                for (auto& v : a_[r]) v = -v;
                b_[r] = -b_[r];
            }
    }

    SimplexOutcome<T> solve() {
        if (!phase_one()) return {SimplexStatus::Infeasible, {}, T{}};
        drop_artificials();
        SimplexStatus status = phase_two();
        SimplexOutcome<T> out;
        out.status = status;
        if (status == SimplexStatus::Optimal) {
            out.x.assign(cols_, T{});
            for (std::size_t r = 0; r < rows_; ++r)
                if (basis_[r] < cols_) out.x[basis_[r]] = b_[r];
            out.objective = objective_;
        }
        return out;
    }

private:
    // Appends one artificial column per row and minimizes their sum.
    bool phase_one() {
        total_cols_ = cols_ + rows_;
        basis_.resize(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            a_[r].resize(total_cols_, T{});
            a_[r][cols_ + r] = T(1);
            basis_[r] = cols_ + r;
        }
        reduced_.assign(total_cols_, T{});
        objective_ = T{};
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= a_[r][j];
            objective_ += b_[r];
        }
        if (iterate() != SimplexStatus::Optimal) return false;  // cannot be unbounded
        return LpTraits<T>::is_feasible_zero(objective_);
    }

    // Pivots remaining artificials out of the basis; rows that cannot be
    // pivoted are linearly dependent on the others and are removed.
    void drop_artificials() {
        for (std::size_t r = 0; r < rows_;) {
            if (basis_[r] < cols_) {
                ++r;
                continue;
            }
            std::size_t pivot_col = cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (!LpTraits<T>::is_zero(a_[r][j])) { pivot_col = j; break; }
            if (pivot_col < cols_) {
                pivot(r, pivot_col);
                ++r;
            } else {
                a_.erase(a_.begin() + r);
                b_.erase(b_.begin() + r);
                basis_.erase(basis_.begin() + r);
                --rows_;
            }
        }
        for (auto& row : a_) row.resize(cols_);
        total_cols_ = cols_;
    }

    SimplexStatus phase_two() {
        reduced_ = c_;
        objective_ = T{};
        for (std::size_t r = 0; r < rows_; ++r) {
            const T coeff = c_[basis_[r]];
            if (LpTraits<T>::is_zero(coeff)) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                reduced_[j] -= coeff * a_[r][j];
            objective_ += coeff * b_[r];
        }
        return iterate();
    }

    SimplexStatus iterate() {
        for (;;) {
            std::size_t entering = total_cols_;
            for (std::size_t j = 0; j < total_cols_; ++j)
                if (LpTraits<T>::is_negative(reduced_[j])) { entering = j; break; }
            if (entering == total_cols_) return SimplexStatus::Optimal;

            std::size_t leaving = rows_;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (!LpTraits<T>::is_positive(a_[r][entering])) continue;
                if (leaving == rows_) { leaving = r; continue; }
                const T lhs = b_[r] * a_[leaving][entering];
                const T rhs = b_[leaving] * a_[r][entering];
                if (lhs < rhs || (lhs == rhs && basis_[r] < basis_[leaving]))
                    leaving = r;
            }
            if (leaving == rows_) return SimplexStatus::Unbounded;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const T inv = a_[row][col];
        for (auto& v : a_[row]) v = v / inv;
        b_[row] = b_[row] / inv;
        a_[row][col] = T(1);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || LpTraits<T>::is_zero(a_[r][col])) continue;
            const T factor = a_[r][col];
            for (std::size_t j = 0; j < total_cols_; ++j)
                a_[r][j] -= factor * a_[row][j];
            b_[r] -= factor * b_[row];
            a_[r][col] = T{};
        }
        if (!LpTraits<T>::is_zero(reduced_[col])) {
            const T factor = reduced_[col];
            for (std::size_t j = 0; j < total_cols_; ++j)
                reduced_[j] -= factor * a_[row][j];
            objective_ += factor * b_[row];
            reduced_[col] = T{};
        }
        basis_[row] = col;
    }

    std::vector<std::vector<T>> a_;
    std::vector<T> b_;
    std::vector<T> c_;
    std::vector<T> reduced_;
    std::vector<std::size_t> basis_;
    T objective_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t total_cols_ = 0;
};

}  // namespace ksq::lp
