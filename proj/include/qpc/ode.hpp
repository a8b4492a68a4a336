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

// Dormand-Prince 5(4) with local extrapolation, for fixed-size Eigen states.

#ifndef QPC_ODE_HPP_
#define QPC_ODE_HPP_

#include <algorithm>
#include <cmath>

#include "qpc/error.hpp"

namespace qpc {

template <typename Scalar>
struct OdeOptions {
  Scalar local_tol = Scalar(1e-14);  // max-norm of the embedded error estimate
  Scalar initial_step = Scalar(1e-4);
  Scalar max_step = Scalar(1e-2);
  Scalar min_step = Scalar(1e-15);
  long max_steps = 10'000'000;
};

template <typename Scalar>
struct OdeStats {
  long accepted = 0;
  long rejected = 0;
};

// Advances `y` from t0 to t1 (t1 > t0). `step` carries the step-size
// suggestion between calls so that consecutive segments stay warm.
template <typename Rhs, typename State, typename Scalar>
State integrate_dopri(const Rhs& f, Scalar t0, Scalar t1, State y, Scalar& step,
                      const OdeOptions<Scalar>& opts, OdeStats<Scalar>* stats = nullptr) {
  // Butcher tableau.
  constexpr Scalar c2 = Scalar(1) / 5, c3 = Scalar(3) / 10, c4 = Scalar(4) / 5, c5 = Scalar(8) / 9;
  constexpr Scalar a21 = Scalar(1) / 5;
  constexpr Scalar a31 = Scalar(3) / 40, a32 = Scalar(9) / 40;
  constexpr Scalar a41 = Scalar(44) / 45, a42 = Scalar(-56) / 15, a43 = Scalar(32) / 9;
  constexpr Scalar a51 = Scalar(19372) / 6561, a52 = Scalar(-25360) / 2187, a53 = Scalar(64448) / 6561,
                   a54 = Scalar(-212) / 729;
  constexpr Scalar a61 = Scalar(9017) / 3168, a62 = Scalar(-355) / 33, a63 = Scalar(46732) / 5247,
                   a64 = Scalar(49) / 176, a65 = Scalar(-5103) / 18656;
  constexpr Scalar b1 = Scalar(35) / 384, b3 = Scalar(500) / 1113, b4 = Scalar(125) / 192,
                   b5 = Scalar(-2187) / 6784, b6 = Scalar(11) / 84;
  // b - b* (fifth minus fourth order weights).
  constexpr Scalar e1 = Scalar(71) / 57600, e3 = Scalar(-71) / 16695, e4 = Scalar(71) / 1920,
                   e5 = Scalar(-17253) / 339200, e6 = Scalar(22) / 525, e7 = Scalar(-1) / 40;

  Scalar t = t0;
  Scalar h = std::clamp(step > 0 ? step : opts.initial_step, opts.min_step, opts.max_step);
  long taken = 0;
  while (t < t1) {
    if (++taken > opts.max_steps) throw Error(ErrorCode::IntegrationFailure, "step budget exhausted");
    const bool last = t + h >= t1;
    const Scalar hs = last ? t1 - t : h;

    const State k1 = f(t, y);
    const State k2 = f(t + c2 * hs, State(y + hs * (a21 * k1)));
    const State k3 = f(t + c3 * hs, State(y + hs * (a31 * k1 + a32 * k2)));
    const State k4 = f(t + c4 * hs, State(y + hs * (a41 * k1 + a42 * k2 + a43 * k3)));
    const State k5 = f(t + c5 * hs, State(y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)));
    const State k6 = f(t + hs, State(y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)));
    const State next = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const State k7 = f(t + hs, next);
    const State err_vec = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    const Scalar err = err_vec.cwiseAbs().maxCoeff();

    if (!std::isfinite(err)) throw Error(ErrorCode::IntegrationFailure, "non-finite derivative");
    const Scalar factor =
        err == 0 ? Scalar(5) : std::clamp(Scalar(0.9) * std::pow(opts.local_tol / err, Scalar(0.2)),
                                          Scalar(0.2), Scalar(5));
    if (err <= opts.local_tol) {
      t = last ? t1 : t + hs;
      y = next;
      if (stats) ++stats->accepted;
      // A truncated final step says nothing about the natural step size.
      if (!last) h = std::min(opts.max_step, hs * factor);
    } else {
      if (stats) ++stats->rejected;
      h = hs * factor;
      if (h < opts.min_step) throw Error(ErrorCode::IntegrationFailure, "step size underflow");
    }
  }
  step = h;
  return y;
}

}  // namespace qpc

#endif  // QPC_ODE_HPP_
