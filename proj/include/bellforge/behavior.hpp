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
#include <cstdint>
#include <vector>

#include "bellforge/core.hpp"
#include "bellforge/observable.hpp"
#include "bellforge/state.hpp"

namespace bellforge {

/// Joint conditional outcome distribution p(r|s).
///
/// Storage is row-major with the setting combination s as the major index
/// (mixed radix over the shape, party 0 most significant) and the outcome
/// combination r as the minor index (one bit per party, party 0 most
/// significant, bit 0 <-> outcome +1).
struct Behavior {
    std::vector<int> shape;
    std::vector<double> p;

    Behavior() = default;
    Behavior(std::vector<int> shape_in, std::vector<double> probs) : shape(std::move(shape_in)), p(std::move(probs)) {
        validate();
    }

    int n_parties() const { return static_cast<int>(shape.size()); }
    int64_t n_setting_combos() const { return checked_product(shape); }
    int64_t n_outcomes() const { return int64_t{1} << n_parties(); }
    int64_t n_entries() const { return n_setting_combos() * n_outcomes(); }

    double at(int64_t s, int64_t r) const { return p[s * n_outcomes() + r]; }

    void validate() {
        if (shape.empty()) {
            throw ParameterError("behavior needs at least one party");
        }
        const int64_t expected = n_entries();
        if (static_cast<int64_t>(p.size()) != expected) {
            throw ParameterError("behavior tensor has wrong size");
        }
        const int64_t d = n_outcomes();
        for (int64_t s = 0; s < n_setting_combos(); ++s) {
            double block = 0.0;
            for (int64_t r = 0; r < d; ++r) {
                double& v = p[s * d + r];
                if (v < 0.0) {
                    if (v < -1e-12) {
                        throw ParameterError("behavior entry below -1e-12");
                    }
                    v = 0.0;
                }
                if (v > 1.0 + 1e-12) {
                    throw ParameterError("behavior entry above 1");
                }
                block += v;
            }
            if (std::abs(block - 1.0) > 1e-9) {
                throw ParameterError("behavior block is not normalized");
            }
        }
    }
};

/// p(r|s) = <psi| (x)_i Pi_{r_i}(a^{(i)}_{s_i}) |psi> for every setting
/// combination and outcome combination.
inline Behavior compute_behavior(const StateVector& state, const MeasurementSetup& setup) {
    const int n = state.n_qubits;
    if (setup.n_parties() != n) {
        throw ParameterError("party count of setup does not match qubit count");
    }
    const std::vector<int> shape = setup.shape();
    const int64_t n_combos = checked_product(shape);
    const int64_t d = int64_t{1} << n;

    // Per-party, per-setting eigenbasis transforms.
    std::vector<std::vector<Eigen::Matrix2cd>> basis(n);
    for (int i = 0; i < n; ++i) {
        basis[i].reserve(shape[i]);
        for (const Observable& o : setup.parties[i]) {
            basis[i].push_back(eigenbasis_rows(o));
        }
    }

    std::vector<double> probs(static_cast<size_t>(n_combos) * d);
    Eigen::VectorXcd work(d);
    std::vector<int> combo(n, 0);
    int64_t s = 0;
    do {
        work = state.amplitudes;
        for (int i = 0; i < n; ++i) {
            const Eigen::Matrix2cd& u = basis[i][combo[i]];
            // Apply u on qubit i (bit position n-1-i).
            const int64_t stride = int64_t{1} << (n - 1 - i);
            for (int64_t base = 0; base < d; base += 2 * stride) {
                for (int64_t off = 0; off < stride; ++off) {
                    const int64_t i0 = base + off;
                    const int64_t i1 = i0 + stride;
                    const std::complex<double> a0 = work(i0);
                    const std::complex<double> a1 = work(i1);
                    work(i0) = u(0, 0) * a0 + u(0, 1) * a1;
                    work(i1) = u(1, 0) * a0 + u(1, 1) * a1;
                }
            }
        }
        double* out = probs.data() + s * d;
        for (int64_t r = 0; r < d; ++r) {
            out[r] = std::norm(work(r));
        }
        ++s;
    } while (next_multi_index(combo, shape));

    return Behavior(shape, std::move(probs));
}

/// Expectations of products of +/-1 outcomes for every non-empty subset of
/// parties and every setting combination of that subset. Marginal values
/// are evaluated with the remaining parties at setting 0 (well defined for
/// no-signaling behaviors).
class CorrelationTable {
  public:
    CorrelationTable() = default;

    explicit CorrelationTable(const Behavior& b) : shape_(b.shape) {
        const int n = b.n_parties();
        const int64_t d = b.n_outcomes();
        const uint32_t n_masks = uint32_t{1} << n;
        offsets_.assign(n_masks, 0);
        int64_t total = 0;
        for (uint32_t mask = 1; mask < n_masks; ++mask) {
            offsets_[mask] = total;
            total += subset_combos(mask);
        }
        values_.assign(total, 0.0);

        std::vector<int> sub_shape;
        std::vector<int> sub_combo;
        std::vector<int> full_combo(n, 0);
        for (uint32_t mask = 1; mask < n_masks; ++mask) {
            sub_shape.clear();
            std::vector<int> members;
            for (int i = 0; i < n; ++i) {
                if (mask & (uint32_t{1} << i)) {
                    members.push_back(i);
                    sub_shape.push_back(shape_[i]);
                }
            }
            sub_combo.assign(members.size(), 0);
            int64_t flat = 0;
            do {
                std::fill(full_combo.begin(), full_combo.end(), 0);
                for (size_t j = 0; j < members.size(); ++j) {
                    full_combo[members[j]] = sub_combo[j];
                }
                const int64_t s = flat_index(full_combo, shape_);
                double e = 0.0;
                for (int64_t r = 0; r < d; ++r) {
                    int parity = 0;
                    for (int i : members) {
                        parity ^= static_cast<int>((r >> (n - 1 - i)) & 1);
                    }
                    e += parity ? -b.p[s * d + r] : b.p[s * d + r];
                }
                values_[offsets_[mask] + flat] = e;
                ++flat;
            } while (next_multi_index(sub_combo, sub_shape));
        }
    }

    int n_parties() const { return static_cast<int>(shape_.size()); }
    const std::vector<int>& shape() const { return shape_; }

    /// Expectation over the parties in `mask`; `settings` lists the setting
    /// index of each member party in increasing party order.
    double value(uint32_t mask, const std::vector<int>& settings) const {
        int64_t flat = 0;
        size_t j = 0;
        for (int i = 0; i < n_parties(); ++i) {
            if (mask & (uint32_t{1} << i)) {
                flat = flat * shape_[i] + settings[j++];
            }
        }
        return values_[offsets_[mask] + flat];
    }

    /// Full two-party correlation <a_i b_j> (only for two-party tables).
    double pair(int i, int j) const { return values_[offsets_[3] + int64_t{i} * shape_[1] + j]; }

    /// Single-party marginal <x_i> for party `party`.
    double marginal(int party, int setting) const {
        return values_[offsets_[uint32_t{1} << party] + setting];
    }

  private:
    int64_t subset_combos(uint32_t mask) const {
        int64_t c = 1;
        for (int i = 0; i < n_parties(); ++i) {
            if (mask & (uint32_t{1} << i)) {
                c *= shape_[i];
            }
        }
        return c;
    }

    std::vector<int> shape_;
    std::vector<int64_t> offsets_;
    std::vector<double> values_;
};

inline CorrelationTable expectation_values(const Behavior& b) { return CorrelationTable(b); }

/// Sub-tensor over the kept setting indices; party i keeps kept[i].
inline Behavior restrict_behavior(const Behavior& b, const std::vector<std::vector<int>>& kept) {
    const int n = b.n_parties();
    if (static_cast<int>(kept.size()) != n) {
        throw ParameterError("kept-settings list count must match party count");
    }
    std::vector<int> new_shape(n);
    for (int i = 0; i < n; ++i) {
        if (kept[i].empty()) {
            throw ParameterError("kept list must be non-empty");
        }
        for (int idx : kept[i]) {
            if (idx < 0 || idx >= b.shape[i]) {
                throw ParameterError("kept setting index out of range");
            }
        }
        new_shape[i] = static_cast<int>(kept[i].size());
    }
    const int64_t d = b.n_outcomes();
    std::vector<double> probs(static_cast<size_t>(checked_product(new_shape)) * d);
    std::vector<int> combo(n, 0);
    std::vector<int> orig(n, 0);
    int64_t s_new = 0;
    do {
        for (int i = 0; i < n; ++i) {
            orig[i] = kept[i][combo[i]];
        }
        const int64_t s_old = flat_index(orig, b.shape);
        std::copy_n(b.p.data() + s_old * d, d, probs.data() + s_new * d);
        ++s_new;
    } while (next_multi_index(combo, new_shape));
    return Behavior(new_shape, std::move(probs));
}

}  // namespace bellforge
