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
#include <cmath>
#include <numbers>
#include <vector>

#include "bellforge/core.hpp"
#include "bellforge/rng.hpp"

namespace bellforge {

/// Dichotomic +/-1 qubit observable n.sigma, defined by its unit Bloch vector.
struct Observable {
    Eigen::Vector3d bloch{0.0, 0.0, 1.0};

    Observable() = default;
    explicit Observable(const Eigen::Vector3d& n) : bloch(n) { validate(); }
    Observable(double nx, double ny, double nz) : bloch(nx, ny, nz) { validate(); }

    void validate() const {
        if (std::abs(bloch.norm() - 1.0) > 1e-12) {
            throw ParameterError("Bloch vector is not unit length");
        }
    }
};

inline const Observable kSigmaX{1.0, 0.0, 0.0};
inline const Observable kSigmaY{0.0, 1.0, 0.0};
inline const Observable kSigmaZ{0.0, 0.0, 1.0};

/// Uniform point on the unit 2-sphere (Haar measure on dichotomic
/// projective qubit observables).
inline Observable sample_random_observable(TrialRng& rng) {
    const double z = 1.0 - 2.0 * rng.uniform01();
    const double phi = 2.0 * std::numbers::pi * rng.uniform01();
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    Eigen::Vector3d n(s * std::cos(phi), s * std::sin(phi), z);
    n /= n.norm();
    return Observable(n);
}

/// Per-party measurement settings; party i holds shape()[i] observables.
struct MeasurementSetup {
    std::vector<std::vector<Observable>> parties;

    MeasurementSetup() = default;
    explicit MeasurementSetup(std::vector<std::vector<Observable>> p) : parties(std::move(p)) { validate(); }

    int n_parties() const { return static_cast<int>(parties.size()); }

    std::vector<int> shape() const {
        std::vector<int> s;
        s.reserve(parties.size());
        for (const auto& p : parties) {
            s.push_back(static_cast<int>(p.size()));
        }
        return s;
    }

    void validate() const {
        if (parties.empty()) {
            throw ParameterError("setup needs at least one party");
        }
        for (const auto& p : parties) {
            if (p.empty()) {
                throw ParameterError("every party needs at least one observable");
            }
        }
    }
};

/// Fresh Haar-random observables for every party and setting.
/// Draw order is party-major, setting-minor.
inline MeasurementSetup sample_random_setup(const std::vector<int>& shape, TrialRng& rng) {
    std::vector<std::vector<Observable>> parties;
    parties.reserve(shape.size());
    for (int m : shape) {
        if (m < 1) {
            throw ParameterError("setting count must be positive");
        }
        std::vector<Observable> obs;
        obs.reserve(m);
        for (int j = 0; j < m; ++j) {
            obs.push_back(sample_random_observable(rng));
        }
        parties.push_back(std::move(obs));
    }
    return MeasurementSetup(std::move(parties));
}

/// Rows of the 2x2 unitary mapping the observable eigenbasis to the
/// computational basis: row 0 = <+n|, row 1 = <-n|.
inline Eigen::Matrix2cd eigenbasis_rows(const Observable& o) {
    const double theta = std::acos(std::clamp(o.bloch.z(), -1.0, 1.0));
    const double phi = std::atan2(o.bloch.y(), o.bloch.x());
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const std::complex<double> e_minus(std::cos(phi), -std::sin(phi));
    Eigen::Matrix2cd u;
    // |+n> = (c, s e^{i phi}),  |-n> = (s, -c e^{i phi})
    u(0, 0) = c;
    u(0, 1) = s * e_minus;
    u(1, 0) = s;
    u(1, 1) = -c * e_minus;
    return u;
}

}  // namespace bellforge
