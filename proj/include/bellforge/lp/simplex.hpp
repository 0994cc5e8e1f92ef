// Copyright 2026 The Bellforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "bellforge/core.hpp"

namespace bellforge::lp {

/// Equality-form LP: minimize cost.x subject to A x = rhs, lower <= x <= upper.
/// Columns are given in compressed sparse column form. Lower bounds must be
/// finite; upper bounds may be +inf.
struct SparseLp {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<int64_t> col_start;  // size n_cols + 1
    std::vector<int> row_idx;
    std::vector<double> values;
    std::vector<double> cost;
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<double> rhs;
};

/// Declares that `col` can seed the starting basis owning `owner_row`.
/// The hinted columns must not touch each other's owner rows, so that the
/// seeded basis is triangular up to row permutation.
struct CrashHint {
    int col = 0;
    int owner_row = 0;
};

struct SimplexOptions {
    double feas_tol = 1e-9;
    double opt_tol = 1e-9;
    int64_t max_iterations = 0;           // 0: 50 * n_rows + 20000
    double max_basis_bytes = 3.5e9;       // dense inverse guard
    int window = 0;                       // 0: auto block size for inverse updates
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpSolution {
    SolveStatus status = SolveStatus::Optimal;
    double objective = 0.0;
    std::vector<double> x;       // structural variables
    std::vector<double> duals;   // one multiplier per equality row
    bool dual_possibly_nonunique = false;
    int64_t iterations = 0;
    int refactorizations = 0;
};

/// Bounded-variable revised simplex with a dense explicit basis inverse.
///
/// The inverse is updated lazily: pivots accumulate in a rank-k window
/// (B^-1 = M0 - S R) and are flushed into M0 with one GEMM, which keeps the
/// per-iteration cost compute-bound instead of bandwidth-bound on large
/// models. Entering variables are priced by the Dantzig rule from an
/// incrementally maintained reduced-cost vector; optimality is only declared
/// after a from-scratch recomputation of the duals. A Harris-style two-pass
/// ratio test picks large pivots among near-ties, and Bland's rule engages
/// after a long run of degenerate steps, which makes cycling impossible.
class SimplexSolver {
  public:
    LpSolution solve(const SparseLp& lp, const std::vector<CrashHint>& crash = {},
                     const SimplexOptions& options = {}) {
        opts_ = options;
        load(lp);

        const double basis_bytes =
            static_cast<double>(m_) * static_cast<double>(m_) * 8.0 + static_cast<double>(m_) * window_ * 16.0;
        if (basis_bytes > opts_.max_basis_bytes) {
            throw CapacityError("basis inverse exceeds the memory guard");
        }

        bool crashed = false;
        if (!crash.empty()) {
            crashed = try_crash(crash);
        }
        if (!crashed) {
            install_artificial_basis();
            phase_ = 1;
            set_phase_costs();
            const SolveStatus st = iterate();
            if (st != SolveStatus::Optimal) {
                return finish(st);
            }
            if (current_objective() > 1e-8 * (1.0 + rhs_norm_)) {
                return finish(SolveStatus::Infeasible);
            }
            fix_artificials();
        }
        phase_ = 2;
        set_phase_costs();
        const SolveStatus st = iterate();
        return finish(st);
    }

  private:
    enum class VarStatus : uint8_t { AtLower, AtUpper, Basic, Fixed };

    static constexpr double kInf = std::numeric_limits<double>::infinity();

    // ---- setup -------------------------------------------------------

    void load(const SparseLp& lp) {
        if (lp.n_rows < 1 || lp.n_cols < 0) {
            throw ParameterError("LP must have at least one row");
        }
        m_ = lp.n_rows;
        n_struct_ = lp.n_cols;
        n_total_ = n_struct_ + m_;

        col_start_.assign(n_total_ + 1, 0);
        const int64_t struct_nnz = lp.col_start.empty() ? 0 : lp.col_start.back();
        row_idx_.resize(struct_nnz + m_);
        values_.resize(struct_nnz + m_);
        for (int j = 0; j < n_struct_; ++j) {
            col_start_[j] = lp.col_start[j];
        }
        col_start_[n_struct_] = struct_nnz;
        std::copy(lp.row_idx.begin(), lp.row_idx.end(), row_idx_.begin());
        std::copy(lp.values.begin(), lp.values.end(), values_.begin());
        for (int j = 0; j < m_; ++j) {
            col_start_[n_struct_ + 1 + j] = struct_nnz + j + 1;
            row_idx_[struct_nnz + j] = j;
            values_[struct_nnz + j] = 1.0;
        }

        lower_.assign(n_total_, 0.0);
        upper_.assign(n_total_, 0.0);
        cost_.assign(n_total_, 0.0);
        for (int j = 0; j < n_struct_; ++j) {
            lower_[j] = lp.lower[j];
            upper_[j] = lp.upper[j];
            cost_[j] = lp.cost[j];
            if (!std::isfinite(lower_[j])) {
                throw ParameterError("lower bounds must be finite");
            }
            if (upper_[j] < lower_[j]) {
                throw ParameterError("upper bound below lower bound");
            }
        }
        for (int j = n_struct_; j < n_total_; ++j) {
            lower_[j] = 0.0;
            upper_[j] = kInf;  // phase 1 bounds; fixed to zero afterwards
        }

        rhs_ = Eigen::Map<const Eigen::VectorXd>(lp.rhs.data(), m_);
        rhs_norm_ = rhs_.cwiseAbs().maxCoeff();

        status_.assign(n_total_, VarStatus::AtLower);
        xval_.assign(n_total_, 0.0);
        for (int j = 0; j < n_struct_; ++j) {
            xval_[j] = lower_[j];
            if (lower_[j] == upper_[j]) {
                status_[j] = VarStatus::Fixed;
            }
        }

        // Effective rhs with nonbasic variables at their bound values.
        b_eff_ = rhs_;
        for (int j = 0; j < n_struct_; ++j) {
            if (xval_[j] != 0.0) {
                add_column_multiple(j, -xval_[j], b_eff_);
            }
        }

        // Flip rows so that the all-artificial start is feasible.
        row_sign_.assign(m_, 1.0);
        for (int r = 0; r < m_; ++r) {
            if (b_eff_(r) < 0.0) {
                row_sign_[r] = -1.0;
            }
        }
        bool any_flip = false;
        for (int r = 0; r < m_; ++r) {
            any_flip = any_flip || row_sign_[r] < 0.0;
        }
        if (any_flip) {
            for (int64_t t = 0; t < struct_nnz; ++t) {
                values_[t] *= row_sign_[row_idx_[t]];
            }
            for (int r = 0; r < m_; ++r) {
                b_eff_(r) *= row_sign_[r];
                rhs_(r) *= row_sign_[r];
            }
        }

        window_ = opts_.window > 0 ? opts_.window : std::clamp(m_ / 64, 8, 48);
        basis_.assign(m_, -1);
        pos_in_basis_.assign(n_total_, -1);
        x_basic_ = Eigen::VectorXd::Zero(m_);
        d_.assign(n_total_, 0.0);
        m0_.resize(m_, m_);
        win_s_.resize(m_, window_);
        win_r_.resize(window_, m_);
        win_count_ = 0;
        iterations_ = 0;
        refactorizations_ = 0;
        degenerate_streak_ = 0;
        bland_ = false;
        y_ = Eigen::VectorXd::Zero(m_);
    }

    void install_artificial_basis() {
        m0_.setIdentity();
        win_count_ = 0;
        for (int r = 0; r < m_; ++r) {
            const int art = n_struct_ + r;
            basis_[r] = art;
            pos_in_basis_[art] = r;
            status_[art] = VarStatus::Basic;
        }
        x_basic_ = b_eff_;
    }

    bool try_crash(const std::vector<CrashHint>& crash) {
        std::vector<char> is_owner(m_, 0);
        for (const CrashHint& h : crash) {
            if (h.col < 0 || h.col >= n_struct_ || h.owner_row < 0 || h.owner_row >= m_ || is_owner[h.owner_row]) {
                return false;
            }
            is_owner[h.owner_row] = 1;
        }
        // Hinted columns may only touch their own owner row among owner rows.
        for (const CrashHint& h : crash) {
            for (int64_t t = col_start_[h.col]; t < col_start_[h.col + 1]; ++t) {
                const int r = row_idx_[t];
                if (r != h.owner_row && is_owner[r]) {
                    return false;
                }
            }
        }
        m0_.setIdentity();
        win_count_ = 0;
        for (int r = 0; r < m_; ++r) {
            const int art = n_struct_ + r;
            basis_[r] = art;
            pos_in_basis_[art] = r;
            status_[art] = VarStatus::Basic;
            lower_[art] = upper_[art] = 0.0;
        }
        for (const CrashHint& h : crash) {
            double pivot = 0.0;
            for (int64_t t = col_start_[h.col]; t < col_start_[h.col + 1]; ++t) {
                if (row_idx_[t] == h.owner_row) {
                    pivot = values_[t];
                }
            }
            if (std::abs(pivot) < 1e-12) {
                return false;
            }
            const int art = n_struct_ + h.owner_row;
            basis_[h.owner_row] = h.col;
            pos_in_basis_[art] = -1;
            status_[art] = VarStatus::Fixed;
            xval_[art] = 0.0;
            pos_in_basis_[h.col] = h.owner_row;
            status_[h.col] = VarStatus::Basic;
            m0_(h.owner_row, h.owner_row) = 1.0 / pivot;
            for (int64_t t = col_start_[h.col]; t < col_start_[h.col + 1]; ++t) {
                const int r = row_idx_[t];
                if (r != h.owner_row) {
                    m0_(r, h.owner_row) = -values_[t] / pivot;
                }
            }
        }
        x_basic_.noalias() = m0_ * b_eff_;
        for (int r = 0; r < m_; ++r) {
            const int j = basis_[r];
            if (x_basic_(r) < lower_[j] - 1e-7 || x_basic_(r) > upper_bound_or_inf(j) + 1e-7) {
                return false;  // hints did not produce a feasible start
            }
        }
        return true;
    }

    void fix_artificials() {
        for (int j = n_struct_; j < n_total_; ++j) {
            lower_[j] = upper_[j] = 0.0;
            if (status_[j] != VarStatus::Basic) {
                status_[j] = VarStatus::Fixed;
                xval_[j] = 0.0;
            }
        }
    }

    void set_phase_costs() {
        cur_cost_.assign(n_total_, 0.0);
        if (phase_ == 1) {
            for (int j = n_struct_; j < n_total_; ++j) {
                cur_cost_[j] = 1.0;
            }
        } else {
            for (int j = 0; j < n_struct_; ++j) {
                cur_cost_[j] = cost_[j];
            }
        }
        recompute_duals_and_reduced_costs();
    }

    // ---- inverse bookkeeping ----------------------------------------

    void flush_window() {
        if (win_count_ == 0) {
            return;
        }
        m0_.noalias() -= win_s_.leftCols(win_count_) * win_r_.topRows(win_count_);
        win_count_ = 0;
        x_basic_.noalias() = m0_ * b_eff_;  // cheap next to the GEMM; curbs drift
    }

    /// w = (current B^-1) * column j of A.
    void ftran_column(int j, Eigen::VectorXd& w) const {
        w.setZero();
        for (int64_t t = col_start_[j]; t < col_start_[j + 1]; ++t) {
            w.noalias() += values_[t] * m0_.col(row_idx_[t]);
        }
        for (int i = 0; i < win_count_; ++i) {
            const double dot = sparse_dot_row(win_r_.row(i), j);
            if (dot != 0.0) {
                w.noalias() -= dot * win_s_.col(i);
            }
        }
    }

    /// rho = row p of the current B^-1.
    void pivot_row(int p, Eigen::VectorXd& rho) const {
        rho = m0_.row(p);
        for (int i = 0; i < win_count_; ++i) {
            const double f = win_s_(p, i);
            if (f != 0.0) {
                rho.noalias() -= f * win_r_.row(i).transpose();
            }
        }
    }

    double sparse_dot_row(const Eigen::RowVectorXd& row, int j) const {
        double acc = 0.0;
        for (int64_t t = col_start_[j]; t < col_start_[j + 1]; ++t) {
            acc += values_[t] * row(row_idx_[t]);
        }
        return acc;
    }

    double sparse_dot_vec(const Eigen::VectorXd& v, int j) const {
        double acc = 0.0;
        for (int64_t t = col_start_[j]; t < col_start_[j + 1]; ++t) {
            acc += values_[t] * v(row_idx_[t]);
        }
        return acc;
    }

    void add_column_multiple(int j, double factor, Eigen::VectorXd& target) const {
        for (int64_t t = col_start_[j]; t < col_start_[j + 1]; ++t) {
            target(row_idx_[t]) += factor * values_[t];
        }
    }

    void recompute_duals_and_reduced_costs() {
        Eigen::VectorXd cb(m_);
        for (int r = 0; r < m_; ++r) {
            cb(r) = cur_cost_[basis_[r]];
        }
        y_.noalias() = m0_.transpose() * cb;
        for (int i = 0; i < win_count_; ++i) {
            const double f = win_s_.col(i).dot(cb);
            if (f != 0.0) {
                y_.noalias() -= f * win_r_.row(i).transpose();
            }
        }
        for (int j = 0; j < n_total_; ++j) {
            if (status_[j] == VarStatus::Basic) {
                d_[j] = 0.0;
            } else {
                d_[j] = cur_cost_[j] - sparse_dot_vec(y_, j);
            }
        }
    }

    void refactorize() {
        win_count_ = 0;
        Eigen::MatrixXd basis_matrix = Eigen::MatrixXd::Zero(m_, m_);
        for (int r = 0; r < m_; ++r) {
            const int j = basis_[r];
            for (int64_t t = col_start_[j]; t < col_start_[j + 1]; ++t) {
                basis_matrix(row_idx_[t], r) = values_[t];
            }
        }
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_matrix);
        m0_ = lu.inverse();
        if (!m0_.allFinite()) {
            throw SolverError("basis refactorization failed (singular basis)");
        }
        x_basic_.noalias() = m0_ * b_eff_;
        recompute_duals_and_reduced_costs();
        ++refactorizations_;
    }

    // ---- simplex iterations ------------------------------------------

    double upper_bound_or_inf(int j) const { return upper_[j]; }

    double current_objective() const {
        double obj = 0.0;
        for (int j = 0; j < n_total_; ++j) {
            obj += cur_cost_[j] * variable_value(j);
        }
        return obj;
    }

    double variable_value(int j) const {
        return status_[j] == VarStatus::Basic ? x_basic_(pos_in_basis_[j]) : xval_[j];
    }

    bool eligible(int j, int* dir) const {
        if (status_[j] == VarStatus::AtLower) {
            if (d_[j] < -opts_.opt_tol) {
                *dir = 1;
                return true;
            }
        } else if (status_[j] == VarStatus::AtUpper) {
            if (d_[j] > opts_.opt_tol) {
                *dir = -1;
                return true;
            }
        }
        return false;
    }

    int choose_entering(int* dir) const {
        int best = -1;
        double best_score = 0.0;
        for (int j = 0; j < n_total_; ++j) {
            int dj = 0;
            if (!eligible(j, &dj)) {
                continue;
            }
            if (bland_) {
                *dir = dj;
                return j;
            }
            const double score = std::abs(d_[j]);
            if (score > best_score) {
                best_score = score;
                best = j;
                *dir = dj;
            }
        }
        return best;
    }

    SolveStatus iterate() {
        const int64_t max_iter = opts_.max_iterations > 0 ? opts_.max_iterations : 50LL * m_ + 20000;
        Eigen::VectorXd w(m_);
        Eigen::VectorXd rho(m_);
        int optimality_rechecks = 0;

        while (true) {
            if (iterations_ >= max_iter) {
                return SolveStatus::IterationLimit;
            }
            int dir = 0;
            int q = choose_entering(&dir);
            if (q < 0) {
                // confirm with freshly computed duals before declaring optimal
                flush_window();
                recompute_duals_and_reduced_costs();
                q = choose_entering(&dir);
                if (q < 0) {
                    return SolveStatus::Optimal;
                }
                if (++optimality_rechecks > 100) {
                    return SolveStatus::IterationLimit;
                }
            }

            ftran_column(q, w);

            // Harris two-pass ratio test.
            const double span = upper_[q] - lower_[q];
            double t_relaxed = std::isfinite(span) ? span : kInf;
            for (int i = 0; i < m_; ++i) {
                const double alpha = dir * w(i);
                const int jb = basis_[i];
                if (alpha > 1e-11) {
                    const double room = x_basic_(i) - lower_[jb] + opts_.feas_tol;
                    t_relaxed = std::min(t_relaxed, room / alpha);
                } else if (alpha < -1e-11 && std::isfinite(upper_[jb])) {
                    const double room = upper_[jb] - x_basic_(i) + opts_.feas_tol;
                    t_relaxed = std::min(t_relaxed, room / (-alpha));
                }
            }
            if (t_relaxed == kInf) {
                return SolveStatus::Unbounded;
            }
            t_relaxed = std::max(t_relaxed, 0.0);

            int leave_pos = -1;
            double leave_t = kInf;
            double leave_pivot = 0.0;
            bool leave_at_upper = false;
            for (int i = 0; i < m_; ++i) {
                const double alpha = dir * w(i);
                const int jb = basis_[i];
                double t_exact = kInf;
                bool hits_upper = false;
                if (alpha > 1e-11) {
                    t_exact = (x_basic_(i) - lower_[jb]) / alpha;
                } else if (alpha < -1e-11 && std::isfinite(upper_[jb])) {
                    t_exact = (upper_[jb] - x_basic_(i)) / (-alpha);
                    hits_upper = true;
                } else {
                    continue;
                }
                if (t_exact > t_relaxed) {
                    continue;
                }
                bool better = false;
                if (bland_) {
                    better = leave_pos < 0 || (t_exact < leave_t - 1e-15) ||
                             (t_exact <= leave_t + 1e-15 && jb < basis_[leave_pos]);
                } else {
                    better = leave_pos < 0 || std::abs(alpha) > std::abs(leave_pivot);
                }
                if (better) {
                    leave_pos = i;
                    leave_t = t_exact;
                    leave_pivot = alpha;
                    leave_at_upper = hits_upper;
                }
            }

            if (leave_pos < 0 || (std::isfinite(span) && span <= leave_t)) {
                // Bound flip: entering variable moves to its opposite bound.
                const double t = span;
                x_basic_.noalias() -= (t * dir) * w;
                const double old = xval_[q];
                xval_[q] = (dir > 0) ? upper_[q] : lower_[q];
                status_[q] = (dir > 0) ? VarStatus::AtUpper : VarStatus::AtLower;
                add_column_multiple(q, old - xval_[q], b_eff_);
                ++iterations_;
                track_degeneracy(t);
                continue;
            }

            const double t = std::max(leave_t, 0.0);
            if (std::abs(w(leave_pos)) < 1e-10) {
                // Pivot too small to trust: rebuild the inverse and retry.
                if (refactorizations_ < 5 + phase_ * 5) {
                    refactorize();
                    continue;
                }
                return SolveStatus::IterationLimit;
            }

            pivot_row(leave_pos, rho);

            // Reduced-cost update: only nonbasic columns move; the leaving
            // column picks up -theta.
            const double theta = d_[q] / w(leave_pos);
            for (int j = 0; j < n_total_; ++j) {
                if (status_[j] == VarStatus::Basic || status_[j] == VarStatus::Fixed || j == q) {
                    continue;
                }
                const double a = sparse_dot_vec(rho, j);
                if (a != 0.0) {
                    d_[j] -= theta * a;
                }
            }

            // Primal update.
            x_basic_.noalias() -= (t * dir) * w;
            const double enter_value = xval_[q] + dir * t;
            const int leaving = basis_[leave_pos];
            const double leave_bound = leave_at_upper ? upper_[leaving] : lower_[leaving];
            x_basic_(leave_pos) = enter_value;

            // Window entry: B^-1 <- E B^-1 recorded as a rank-1 correction.
            win_s_.col(win_count_) = w / w(leave_pos);
            win_s_(leave_pos, win_count_) = (w(leave_pos) - 1.0) / w(leave_pos);
            win_r_.row(win_count_) = rho.transpose();
            ++win_count_;

            // Status bookkeeping.
            basis_[leave_pos] = q;
            pos_in_basis_[q] = leave_pos;
            status_[q] = VarStatus::Basic;
            const bool leaving_fixed = lower_[leaving] == upper_[leaving];
            status_[leaving] = leaving_fixed ? VarStatus::Fixed : (leave_at_upper ? VarStatus::AtUpper : VarStatus::AtLower);
            pos_in_basis_[leaving] = -1;
            xval_[leaving] = leave_bound;
            if (leave_bound != 0.0) {
                add_column_multiple(leaving, -leave_bound, b_eff_);
            }
            if (xval_[q] != 0.0) {
                add_column_multiple(q, xval_[q], b_eff_);
            }
            d_[leaving] = -theta;
            d_[q] = 0.0;

            if (win_count_ == window_) {
                flush_window();
            }
            ++iterations_;
            track_degeneracy(t);
        }
    }

    void track_degeneracy(double t) {
        if (t <= 1e-12) {
            ++degenerate_streak_;
            if (!bland_ && degenerate_streak_ > std::max<int64_t>(1000, 2LL * m_)) {
                bland_ = true;
            }
        } else {
            degenerate_streak_ = 0;
            bland_ = false;
        }
    }

    // ---- wrap-up ------------------------------------------------------

    LpSolution finish(SolveStatus st) {
        LpSolution sol;
        sol.status = st;
        sol.iterations = iterations_;
        sol.refactorizations = refactorizations_;
        sol.x.assign(n_struct_, 0.0);
        sol.duals.assign(m_, 0.0);
        if (st != SolveStatus::Optimal) {
            return sol;
        }

        flush_window();
        x_basic_.noalias() = m0_ * b_eff_;
        recompute_duals_and_reduced_costs();

        // Residual audit; rebuild the inverse once if drift crept in.
        for (int audit = 0; audit < 3; ++audit) {
            Eigen::VectorXd residual = rhs_;
            for (int j = 0; j < n_total_; ++j) {
                const double v = variable_value(j);
                if (v != 0.0) {
                    add_column_multiple(j, -v, residual);
                }
            }
            residual *= -1.0;
            if (residual.cwiseAbs().maxCoeff() <= 1e-7 * (1.0 + rhs_norm_)) {
                break;
            }
            refactorize();
            const SolveStatus st2 = iterate();
            if (st2 != SolveStatus::Optimal) {
                sol.status = st2;
                return sol;
            }
            flush_window();
            x_basic_.noalias() = m0_ * b_eff_;
            recompute_duals_and_reduced_costs();
        }

        for (int j = 0; j < n_struct_; ++j) {
            sol.x[j] = variable_value(j);
        }
        double obj = 0.0;
        for (int j = 0; j < n_struct_; ++j) {
            obj += cost_[j] * sol.x[j];
        }
        sol.objective = obj;
        for (int r = 0; r < m_; ++r) {
            sol.duals[r] = y_(r) * row_sign_[r];
        }

        bool degen = false;
        for (int r = 0; r < m_ && !degen; ++r) {
            const int j = basis_[r];
            if (x_basic_(r) < lower_[j] + 1e-9 || (std::isfinite(upper_[j]) && x_basic_(r) > upper_[j] - 1e-9)) {
                degen = true;
            }
        }
        for (int j = 0; j < n_total_ && !degen; ++j) {
            if (status_[j] != VarStatus::Basic && status_[j] != VarStatus::Fixed && std::abs(d_[j]) < 1e-9) {
                degen = true;
            }
        }
        sol.dual_possibly_nonunique = degen;
        return sol;
    }

    // ---- state ---------------------------------------------------------

    SimplexOptions opts_;
    int m_ = 0;
    int n_struct_ = 0;
    int n_total_ = 0;
    int phase_ = 2;
    int window_ = 16;
    std::vector<int64_t> col_start_;
    std::vector<int> row_idx_;
    std::vector<double> values_;
    std::vector<double> lower_;
    std::vector<double> upper_;
    std::vector<double> cost_;
    std::vector<double> cur_cost_;
    std::vector<double> row_sign_;
    Eigen::VectorXd rhs_;
    Eigen::VectorXd b_eff_;
    double rhs_norm_ = 0.0;
    std::vector<VarStatus> status_;
    std::vector<double> xval_;
    std::vector<int> basis_;
    std::vector<int> pos_in_basis_;
    Eigen::VectorXd x_basic_;
    std::vector<double> d_;
    Eigen::MatrixXd m0_;
    Eigen::MatrixXd win_s_;
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> win_r_;
    int win_count_ = 0;
    int64_t iterations_ = 0;
    int refactorizations_ = 0;
    int64_t degenerate_streak_ = 0;
    bool bland_ = false;
    Eigen::VectorXd y_;
};

}  // namespace bellforge::lp
