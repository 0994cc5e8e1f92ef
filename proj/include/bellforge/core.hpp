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

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellforge {

inline constexpr const char* kVersion = "0.1.0";

/// Raised when an argument violates an operation's precondition.
class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a scenario exceeds the configured desk-scale capacity.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised by the LP layer on infeasible models or non-convergence.
class SolverError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline int64_t checked_product(const std::vector<int>& dims) {
    int64_t p = 1;
    for (int d : dims) {
        if (d <= 0) {
            throw ParameterError("dimension must be positive");
        }
        if (p > (int64_t{1} << 62) / d) {
            throw CapacityError("dimension product overflow");
        }
        p *= d;
    }
    return p;
}

/// Odometer increment over a mixed-radix index, last position fastest.
/// Returns false once the index wraps back to all zeros.
inline bool next_multi_index(std::vector<int>& idx, const std::vector<int>& shape) {
    for (int i = static_cast<int>(shape.size()) - 1; i >= 0; --i) {
        if (++idx[i] < shape[i]) {
            return true;
        }
        idx[i] = 0;
    }
    return false;
}

inline int64_t flat_index(const std::vector<int>& idx, const std::vector<int>& shape) {
    int64_t f = 0;
    for (size_t i = 0; i < shape.size(); ++i) {
        f = f * shape[i] + idx[i];
    }
    return f;
}

/// Exact (order-independent) accumulator for doubles in [0, 1].
///
/// Values are rounded to a 2^-64 fixed-point grid and summed in 128-bit
/// integer arithmetic, so merging partial sums is associative and
/// commutative bit-for-bit regardless of how trials were partitioned
/// across workers or runs.
class FixedPointSum {
  public:
    void add(double x) {
        if (!(x >= 0.0 && x <= 1.0)) {
            throw ParameterError("FixedPointSum::add expects a value in [0, 1]");
        }
        sum_ += to_fixed(x);
    }

    void merge(const FixedPointSum& other) { sum_ += other.sum_; }

    bool operator==(const FixedPointSum& other) const { return sum_ == other.sum_; }

    /// Sum divided by `n`, as a double.
    double mean(int64_t n) const {
        if (n <= 0) {
            return 0.0;
        }
        return (static_cast<double>(sum_) * 0x1.0p-64) / static_cast<double>(n);
    }

    double value() const { return static_cast<double>(sum_) * 0x1.0p-64; }

  private:
    static __int128 to_fixed(double x) {
        if (x == 0.0) {
            return 0;
        }
        int exp = 0;
        const double frac = std::frexp(x, &exp);  // x = frac * 2^exp, frac in [0.5, 1)
        const auto mant = static_cast<int64_t>(std::ldexp(frac, 53));  // exact 53-bit integer
        const int shift = exp + 64 - 53;
        if (shift >= 0) {
            return static_cast<__int128>(mant) << shift;
        }
        const int down = -shift;
        if (down > 62) {
            return 0;
        }
        // round to nearest on the 2^-64 grid
        return static_cast<__int128>((mant + (int64_t{1} << (down - 1))) >> down);
    }

    __int128 sum_ = 0;
};

}  // namespace bellforge
