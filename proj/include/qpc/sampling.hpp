// Copyright 2026 The qpc Authors
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

// Seeded samplers for property checks. Fixed engine, fixed algorithms, so a
// seed reproduces the same sequence on every platform.

#ifndef QPC_SAMPLING_HPP_
#define QPC_SAMPLING_HPP_

#include <cmath>
#include <cstdint>
#include <random>

#include "qpc/phase_space.hpp"

namespace qpc {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : seed_(seed), engine_(seed) {}

  // Uniform on [lo, hi). Built from raw engine bits rather than
  // std::uniform_real_distribution, whose output is implementation-defined.
  double uniform(double lo = 0, double hi = 1) {
    return lo + (hi - lo) * static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in the closed unit ball (rejection from the cube).
  BlochVector<double> ball() {
    for (;;) {
      BlochVector<double> r(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
      if (r.squaredNorm() <= 1) return r;
    }
  }

  // Uniform on the unit sphere.
  BlochVector<double> sphere() {
    for (;;) {
      const BlochVector<double> r = ball();
      const double n = r.norm();
      if (n > 1e-3) return r / n;
    }
  }

  // Uniform on the probability simplex (normalized exponentials).
  ProbVector4<double> simplex() {
    Vector4<double> v;
    for (int i = 0; i < 4; ++i) v(i) = -std::log1p(-uniform());
    return ProbVector4<double>(v / v.sum(), ProbMode::NonNegative);
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace qpc

#endif  // QPC_SAMPLING_HPP_
