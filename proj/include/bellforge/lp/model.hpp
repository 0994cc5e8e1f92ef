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

#include <cstdint>
#include <vector>

#include "bellforge/behavior.hpp"
#include "bellforge/core.hpp"

namespace bellforge::lp {

/// Strength below this threshold counts as "not violated".
inline constexpr double kEpsilonViolation = 1e-6;

/// Desk-scale cap on the number of deterministic strategies.
inline constexpr int64_t kStrategyCap = int64_t{1} << 20;

/// A local deterministic strategy: per party, one +/-1 outcome per setting.
/// Encoded as one bitmask per party (bit s = outcome bit for setting s,
/// bit value 0 <-> outcome +1).
struct DeterministicStrategy {
    std::vector<uint32_t> outcome_bits;

    int outcome_bit(int party, int setting) const { return static_cast<int>((outcome_bits[party] >> setting) & 1); }

    /// Outcome-combination index r produced under setting combination s.
    int64_t outcome_index(const std::vector<int>& settings) const {
        const int n = static_cast<int>(outcome_bits.size());
        int64_t r = 0;
        for (int i = 0; i < n; ++i) {
            r |= static_cast<int64_t>(outcome_bit(i, settings[i])) << (n - 1 - i);
        }
        return r;
    }
};

inline int64_t strategy_count(const std::vector<int>& shape) {
    int64_t total = 1;
    for (int m : shape) {
        if (m < 1 || m > 30) {
            throw ParameterError("setting count out of range");
        }
        const int64_t per_party = int64_t{1} << m;
        if (total > (int64_t{1} << 62) / per_party) {
            throw CapacityError("strategy count overflow");
        }
        total *= per_party;
    }
    return total;
}

/// Strategy with global index `lambda` (mixed radix over per-party bases
/// 2^{m_i}, party 0 most significant).
inline DeterministicStrategy unrank_strategy(int64_t lambda, const std::vector<int>& shape) {
    const int n = static_cast<int>(shape.size());
    DeterministicStrategy s;
    s.outcome_bits.resize(n);
    for (int i = n - 1; i >= 0; --i) {
        const int64_t base = int64_t{1} << shape[i];
        s.outcome_bits[i] = static_cast<uint32_t>(lambda % base);
        lambda /= base;
    }
    return s;
}

/// The visibility LP in equality form.
///
/// Variables: one weight q_lambda per deterministic strategy, plus the
/// visibility v. Rows: for every (setting combination s, outcome
/// combination r),
///     sum_lambda q_lambda D_lambda(r|s) - v (p(r|s) - 2^-N) = 2^-N,
/// plus the normalization row sum_lambda q_lambda = 1.
/// Bounds: q >= 0, 0 <= v <= 1. Objective: maximize v.
///
/// The strategy part of the matrix is purely structural (each strategy
/// column holds a single 1 in every setting block); columns are generated
/// from the shape rather than stored.
struct LPModel {
    std::vector<int> shape;
    int64_t n_strategies = 0;
    int64_t n_rows = 0;           // setting blocks * outcomes + 1
    double noise_level = 0.0;     // 2^-N, the rhs of every outcome row
    std::vector<double> v_column; // -(p - 2^-N) per (s, r) row

    int n_parties() const { return static_cast<int>(shape.size()); }
    int64_t n_outcome_rows() const { return n_rows - 1; }
    int64_t n_variables() const { return n_strategies + 1; }

    /// Row index of strategy lambda's unit entry in setting block s.
    int64_t strategy_row(const DeterministicStrategy& strat, int64_t s_index, const std::vector<int>& combo) const {
        return s_index * (int64_t{1} << n_parties()) + strat.outcome_index(combo);
    }
};

inline LPModel build_visibility_lp(const Behavior& behavior) {
    LPModel model;
    model.shape = behavior.shape;
    model.n_strategies = strategy_count(behavior.shape);
    if (model.n_strategies > kStrategyCap) {
        throw CapacityError("scenario exceeds the strategy capacity cap");
    }
    const int64_t outcome_rows = behavior.n_entries();
    model.n_rows = outcome_rows + 1;
    model.noise_level = 1.0 / static_cast<double>(behavior.n_outcomes());
    model.v_column.resize(outcome_rows);
    for (int64_t i = 0; i < outcome_rows; ++i) {
        model.v_column[i] = -(behavior.p[i] - model.noise_level);
    }
    return model;
}

}  // namespace bellforge::lp
