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
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "bellforge/core.hpp"
#include "bellforge/rng.hpp"

namespace bellforge {

/// Pure N-qubit state. Basis states are ordered lexicographically with
/// qubit 0 (the first party) as the most significant bit.
struct StateVector {
    int n_qubits = 0;
    Eigen::VectorXcd amplitudes;

    StateVector() = default;
    StateVector(int n, Eigen::VectorXcd amps) : n_qubits(n), amplitudes(std::move(amps)) { validate(); }

    int64_t dim() const { return int64_t{1} << n_qubits; }

    void validate() const {
        if (n_qubits < 1 || n_qubits > 30) {
            throw ParameterError("qubit count out of range");
        }
        if (amplitudes.size() != dim()) {
            throw ParameterError("amplitude vector length is not 2^n_qubits");
        }
        const double norm2 = amplitudes.squaredNorm();
        if (std::abs(norm2 - 1.0) > 1e-12) {
            throw ParameterError("state vector is not normalized");
        }
    }
};

enum class StateFamily { Ghz, W, Dicke, LinearCluster, RingCluster, Product };

/// Family selector plus its parameters (alpha for GHZ, k for Dicke).
struct StateSpec {
    StateFamily family = StateFamily::Ghz;
    double ghz_alpha = std::numbers::pi / 4.0;
    int dicke_k = 1;
};

inline StateVector ghz_state(int n_qubits, double alpha) {
    if (n_qubits < 2) {
        throw ParameterError("GHZ needs at least 2 qubits");
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(int64_t{1} << n_qubits);
    amps(0) = std::cos(alpha);
    amps(amps.size() - 1) = std::sin(alpha);
    return {n_qubits, std::move(amps)};
}

/// Symmetric superposition of all basis states with exactly k excitations.
inline StateVector dicke_state(int n_qubits, int k) {
    if (n_qubits < 2) {
        throw ParameterError("Dicke needs at least 2 qubits");
    }
    if (k < 1 || k > n_qubits - 1) {
        throw ParameterError("Dicke excitation number must satisfy 1 <= k <= n-1");
    }
    const int64_t d = int64_t{1} << n_qubits;
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(d);
    int64_t count = 0;
    for (int64_t b = 0; b < d; ++b) {
        if (std::popcount(static_cast<uint64_t>(b)) == k) {
            amps(b) = 1.0;
            ++count;
        }
    }
    amps /= std::sqrt(static_cast<double>(count));
    return {n_qubits, std::move(amps)};
}

inline StateVector w_state(int n_qubits) { return dicke_state(n_qubits, 1); }

namespace detail {
// |+>^N with controlled-Z along the given edges: amplitude of basis state b
// is 2^{-N/2} * (-1)^{#edges whose both endpoints are 1 in b}.
inline StateVector graph_state(int n_qubits, const std::vector<std::pair<int, int>>& edges) {
    const int64_t d = int64_t{1} << n_qubits;
    const double a = std::pow(2.0, -0.5 * n_qubits);
    Eigen::VectorXcd amps(d);
    for (int64_t b = 0; b < d; ++b) {
        int flips = 0;
        for (const auto& [u, v] : edges) {
            const int bu = static_cast<int>((b >> (n_qubits - 1 - u)) & 1);
            const int bv = static_cast<int>((b >> (n_qubits - 1 - v)) & 1);
            flips += bu & bv;
        }
        amps(b) = (flips & 1) ? -a : a;
    }
    return {n_qubits, std::move(amps)};
}
}  // namespace detail

inline StateVector linear_cluster_state(int n_qubits) {
    if (n_qubits < 2) {
        throw ParameterError("cluster state needs at least 2 qubits");
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n_qubits; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return detail::graph_state(n_qubits, edges);
}

inline StateVector ring_cluster_state(int n_qubits) {
    if (n_qubits < 3) {
        throw ParameterError("ring cluster state needs at least 3 qubits");
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n_qubits; ++i) {
        edges.emplace_back(i, i + 1);
    }
    edges.emplace_back(n_qubits - 1, 0);
    return detail::graph_state(n_qubits, edges);
}

inline StateVector product_state(int n_qubits) {
    if (n_qubits < 1) {
        throw ParameterError("product state needs at least 1 qubit");
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(int64_t{1} << n_qubits);
    amps(0) = 1.0;
    return {n_qubits, std::move(amps)};
}

inline StateVector make_named_state(const StateSpec& spec, int n_qubits) {
    switch (spec.family) {
        case StateFamily::Ghz:
            return ghz_state(n_qubits, spec.ghz_alpha);
        case StateFamily::W:
            return w_state(n_qubits);
        case StateFamily::Dicke:
            return dicke_state(n_qubits, spec.dicke_k);
        case StateFamily::LinearCluster:
            return linear_cluster_state(n_qubits);
        case StateFamily::RingCluster:
            return ring_cluster_state(n_qubits);
        case StateFamily::Product:
            return product_state(n_qubits);
    }
    throw ParameterError("unknown state family");
}

/// Haar-uniform pure state: i.i.d. standard complex Gaussian amplitudes,
/// normalized.
inline StateVector sample_random_pure_state(int n_qubits, TrialRng& rng) {
    if (n_qubits < 1) {
        throw ParameterError("qubit count must be positive");
    }
    const int64_t d = int64_t{1} << n_qubits;
    Eigen::VectorXcd amps(d);
    for (int64_t i = 0; i < d; ++i) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        amps(i) = std::complex<double>(re, im);
    }
    amps /= amps.norm();
    return {n_qubits, std::move(amps)};
}

}  // namespace bellforge
