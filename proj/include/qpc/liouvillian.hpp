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

// Evolution along the boundary of the Wootters chip, with p playing the role
// of time. Each marginal follows a 2x2 transition generator; in Hilbert space
// the same motion is a Lindblad equation with two jump operators whose rates
// have opposite signs and swap sign at p = 1/2.
//
// For p > 1/2 the factor 1 - 2p under the square roots in the jump operators
// turns negative. The dissipators below use |1 - 2p| and carry the sign in
// gamma, which gives the same right-hand side on both sides of 1/2.

#ifndef QPC_LIOUVILLIAN_HPP_
#define QPC_LIOUVILLIAN_HPP_

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "qpc/chip.hpp"
#include "qpc/ode.hpp"

namespace qpc {

template <typename Scalar>
inline constexpr Scalar kEpsSingular = Scalar(1e-6);

// Off-diagonal rate `rate`; matrix = rate * [[-1, 1], [1, -1]].
template <typename Scalar>
struct TransitionGenerator2 {
  Scalar rate;
  Matrix2<Scalar> matrix;

  static TransitionGenerator2 from_rate(Scalar rate) {
    Matrix2<Scalar> m;
    m << -rate, rate, rate, -rate;
    return {rate, m};
  }
};

namespace detail {

template <typename Scalar>
void require_regular(Scalar p, Scalar eps) {
  require_unit_interval(p, "p");
  if (!(p > 0 && p < 1)) throw Error(ErrorCode::OutOfRange, "p must lie strictly inside (0, 1)");
  if (std::abs(p - Scalar(0.5)) <= eps) {
    throw Error(ErrorCode::SingularParameter, "generator diverges at p = 1/2");
  }
}

// (1-p)^2 + p^2
template <typename Scalar>
Scalar spread(Scalar p) {
  return (1 - p) * (1 - p) + p * p;
}

}  // namespace detail

// x = 1/(1-2p) drives P = (p, 1-p); y = -(1-2p) / (4p(1-p)((1-p)^2+p^2))
// drives Q along either Wootters boundary branch.
template <typename Scalar>
std::pair<TransitionGenerator2<Scalar>, TransitionGenerator2<Scalar>> marginal_generators(
    Scalar p, NonDeduced<Scalar> eps = kEpsSingular<Scalar>) {
  detail::require_regular(p, eps);
  const Scalar x = 1 / (1 - 2 * p);
  const Scalar y = -(1 - 2 * p) / (4 * p * (1 - p) * detail::spread(p));
  return {TransitionGenerator2<Scalar>::from_rate(x), TransitionGenerator2<Scalar>::from_rate(y)};
}

// L1 (x) I + I (x) L2. The two terms commute, so this equals
// log(exp(L1) (x) exp(L2)).
template <typename Scalar>
Matrix4<Scalar> combined_generator(Scalar p, NonDeduced<Scalar> eps = kEpsSingular<Scalar>) {
  const auto [g1, g2] = marginal_generators(p, eps);
  const Matrix2<Scalar> id = Matrix2<Scalar>::Identity();
  Matrix4<Scalar> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.template block<2, 2>(2 * i, 2 * j) = g1.matrix(i, j) * id + (i == j ? g2.matrix : Matrix2<Scalar>::Zero());
    }
  }
  return out;
}

// The fully simplified 4x4 generator, entry by entry.
template <typename Scalar>
Matrix4<Scalar> combined_generator_closed_form(Scalar p, NonDeduced<Scalar> eps = kEpsSingular<Scalar>) {
  detail::require_regular(p, eps);
  const Scalar u = (p - 1) * p;
  const Scalar diag = (8 * u * (u + 1) + 1) / (4 * u * (2 * p - 1) * (2 * u + 1));
  const Scalar near = (1 - 2 * p) / (4 * u * (2 * u + 1));
  const Scalar far = 1 / (1 - 2 * p);
  Matrix4<Scalar> m;
  m << diag, near, far, 0,
       near, diag, 0, far,
       far, 0, diag, near,
       0, far, near, diag;
  return m;
}

template <typename Scalar>
struct JumpOperators {
  Matrix2c<Scalar> l1;
  Matrix2c<Scalar> l2;
  Scalar gamma1;
  Scalar gamma2;
};

// gamma1 = -gamma2 = +1 for p <= 1/2 and -1 above.
template <typename Scalar>
Scalar damping_sign(Scalar p) {
  return p <= Scalar(0.5) ? Scalar(1) : Scalar(-1);
}

// L1 = (I + sigma_z)/sqrt|1-2p|, L2 = (1/2) sqrt(|1-2p| / (p(1-p)(1-2p(1-p)))) sigma_x.
template <typename Scalar>
JumpOperators<Scalar> jump_operators(Scalar p, NonDeduced<Scalar> eps = kEpsSingular<Scalar>) {
  detail::require_regular(p, eps);
  const Scalar a = std::abs(1 - 2 * p);
  const Matrix2c<Scalar> l1 = (identity2<Scalar>() + pauli<Scalar>(Axis::Z)) / std::sqrt(a);
  const Matrix2c<Scalar> l2 =
      Scalar(0.5) * std::sqrt(a / (p * (1 - p) * (1 - 2 * p * (1 - p)))) * pauli<Scalar>(Axis::X);
  const Scalar g = damping_sign(p);
  return {l1, l2, g, -g};
}

template <typename Scalar>
DensityMatrix<Scalar> dissipator(const Matrix2c<Scalar>& l, const DensityMatrix<Scalar>& rho) {
  const Matrix2c<Scalar> ldl = l.adjoint() * l;
  return l * rho * l.adjoint() - Scalar(0.5) * (ldl * rho + rho * ldl);
}

// d rho / dp
template <typename Scalar>
DensityMatrix<Scalar> lindblad_rhs(Scalar p, const DensityMatrix<Scalar>& rho,
                                   NonDeduced<Scalar> eps = kEpsSingular<Scalar>) {
  const auto ops = jump_operators(p, eps);
  return ops.gamma1 * dissipator(ops.l1, rho) + ops.gamma2 * dissipator(ops.l2, rho);
}

// Pure state on the Wootters chip boundary: (2p-1, (2p-1)(2q-1), 2q-1).
template <typename Scalar>
BlochVector<Scalar> wootters_boundary_bloch(Scalar p, Branch branch) {
  const Scalar q = boundary_q(p, branch, BasisKind::Wootters);
  return chip_bloch(ChipPoint<Scalar>{p, q, Orientation::O1, BasisKind::Wootters});
}

template <typename Scalar>
struct TrajectorySample {
  Scalar p;
  DensityMatrix<Scalar> rho;
};

template <typename Scalar>
struct Trajectory {
  std::vector<TrajectorySample<Scalar>> samples;
  Branch branch;
  OdeStats<Scalar> stats;
};

template <typename Scalar>
struct EvolveOptions {
  OdeOptions<Scalar> ode;
  Scalar eps_singular = kEpsSingular<Scalar>;
  Scalar tol_traj = Scalar(1e-4);
};

// Largest Bloch-vector distance between a sample and the analytic boundary.
template <typename Scalar>
Scalar trajectory_deviation(const Trajectory<Scalar>& traj) {
  Scalar worst = 0;
  for (const auto& s : traj.samples) {
    const BlochVector<Scalar> r = density_to_bloch(s.rho, kTolPhys<Scalar>);
    worst = std::max(worst, (r - wootters_boundary_bloch(s.p, traj.branch)).norm());
  }
  return worst;
}

// Integrates the master equation from the boundary state at p0 and samples
// it at steps + 1 evenly spaced p in [p0, p1]. The generator is never
// evaluated within eps_singular of p = 1/2: the state is carried across by
// reflecting (x, y) -> (-x, -y), the symmetry of the boundary curve under
// p -> 1 - p. Throws IntegrationFailure if any sample strays further than
// tol_traj from the analytic boundary.
template <typename Scalar>
Trajectory<Scalar> evolve_boundary(Scalar p0, Scalar p1, Branch branch, int steps,
                                   const EvolveOptions<Scalar>& opts = {}) {
  const Scalar half(0.5);
  const Scalar eps = opts.eps_singular;
  if (!(p0 > 0 && p1 < 1 && p0 <= p1)) {
    throw Error(ErrorCode::OutOfRange, "evolution needs 0 < p0 <= p1 < 1");
  }
  if (steps < 1) throw Error(ErrorCode::OutOfRange, "steps must be positive");
  if (std::abs(p0 - half) <= 2 * eps) {
    throw Error(ErrorCode::SingularParameter, "cannot start inside the p = 1/2 crossing gap");
  }

  Trajectory<Scalar> traj{{}, branch, {}};
  DensityMatrix<Scalar> rho = bloch_to_density(wootters_boundary_bloch(p0, branch));
  traj.samples.push_back({p0, rho});
  if (p0 == p1) return traj;

  const Matrix2c<Scalar> sz = pauli<Scalar>(Axis::Z);
  auto rhs = [&](Scalar p, const DensityMatrix<Scalar>& r) { return lindblad_rhs(p, r, eps); };
  Scalar p = p0;
  Scalar h = opts.ode.initial_step;
  // Twice the exclusion width keeps every Runge-Kutta stage clear of it.
  const Scalar gap_lo = half - 2 * eps;
  const Scalar gap_hi = half + 2 * eps;

  for (int k = 1; k <= steps; ++k) {
    const Scalar target = k == steps ? p1 : p0 + (p1 - p0) * k / steps;
    if (p < gap_lo && target > gap_lo) {
      rho = integrate_dopri(rhs, p, gap_lo, rho, h, opts.ode, &traj.stats);
      p = gap_lo;
    }
    if (p == gap_lo && target > gap_lo && target < gap_hi) {
      // Inside the gap: x and y vanish at p = 1/2, z varies only at second order.
      BlochVector<Scalar> r = density_to_bloch(rho, kTolPhys<Scalar>);
      r.template head<2>().setZero();
      traj.samples.push_back({target, bloch_to_density(r)});
      continue;
    }
    if (p == gap_lo && target >= gap_hi) {
      rho = sz * rho * sz;
      p = gap_hi;
      h = opts.ode.initial_step;
    }
    if (target > p) {
      rho = integrate_dopri(rhs, p, target, rho, h, opts.ode, &traj.stats);
      p = target;
    }
    traj.samples.push_back({target, rho});
  }

  if (trajectory_deviation(traj) > opts.tol_traj) {
    throw Error(ErrorCode::IntegrationFailure, "trajectory left the chip boundary beyond tolerance");
  }
  return traj;
}

template <typename Scalar>
Scalar binary_entropy(Scalar x) {
  return entropy_term(x) + entropy_term(1 - x);
}

// Shannon entropy (bits) of P x Q on the Wootters boundary.
template <typename Scalar>
Scalar chip_entropy(Scalar p, Branch branch) {
  if (!(p > 0 && p < 1)) throw Error(ErrorCode::OutOfRange, "chip_entropy needs 0 < p < 1");
  return binary_entropy(p) + binary_entropy(boundary_q(p, branch, BasisKind::Wootters));
}

// Shannon entropy (bits) of the product of the two marginals of rho's
// Wootters quasi-distribution.
template <typename Scalar>
Scalar marginal_entropy(const DensityMatrix<Scalar>& rho) {
  const BlochVector<Scalar> r = density_to_bloch(rho, kTolPhys<Scalar>);
  return binary_entropy((1 + r(0)) / 2) + binary_entropy((1 + r(2)) / 2);
}

template <typename Scalar>
struct EntropyExtremum {
  Scalar p;
  Scalar entropy;
};

// Maximum of chip_entropy over (0, 1/2) by Brent's method; the curve is
// symmetric under p -> 1 - p.
template <typename Scalar = double>
EntropyExtremum<Scalar> max_chip_entropy(Branch branch = Branch::Minus) {
  const auto neg = [branch](Scalar p) { return -chip_entropy(p, branch); };
  std::uintmax_t iters = 200;
  const auto [p, value] = boost::math::tools::brent_find_minima(neg, Scalar(1e-6), Scalar(0.5) - Scalar(1e-9),
                                                                std::numeric_limits<Scalar>::digits / 2, iters);
  return {p, -value};
}

}  // namespace qpc

#endif  // QPC_LIOUVILLIAN_HPP_
