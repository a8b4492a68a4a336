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

#include "qpc/checks.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <memory>
#include <string>

#include "qpc/channels.hpp"
#include "qpc/liouvillian.hpp"
#include "qpc/measurement.hpp"

namespace qpc {
namespace {

constexpr double kEntropyMax = 1.35226;

class Recorder {
 public:
  Recorder(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  // Passes when the measured error is within `threshold`.
  void error_below(const std::string& name, double threshold, const std::function<double()>& measure) {
    run(name, threshold, measure, [threshold](double v) { return v <= threshold; });
  }

  // Passes when the measured witness exceeds `threshold`.
  void witness_above(const std::string& name, double threshold, const std::function<double()>& measure) {
    run(name, threshold, measure, [threshold](double v) { return v > threshold; });
  }

  // Passes when the predicate holds; value is the number of violations.
  void holds(const std::string& name, const std::function<double()>& count_violations) {
    run(name, 0, count_violations, [](double v) { return v == 0; });
  }

 private:
  void run(const std::string& name, double threshold, const std::function<double()>& measure,
           const std::function<bool(double)>& ok) {
    try {
      const double v = measure();
      out_.push_back({suite_, name, std::isfinite(v) && ok(v), v, threshold, ""});
    } catch (const std::exception& e) {
      out_.push_back({suite_, name, false, std::nan(""), threshold, e.what()});
    }
  }

  std::string suite_;
  std::vector<CheckResult>& out_;
};

double max_abs(const auto& m) { return m.cwiseAbs().maxCoeff(); }

// Uniform point of the physical O1 QBism chip.
std::pair<double, double> chip_sample(Sampler& rng) {
  const auto [lo, hi] = qbism_support<double>();
  const double p = rng.uniform(lo, hi);
  const double qlo = boundary_q(p, Branch::Minus, BasisKind::QBismSIC);
  const double qhi = boundary_q(p, Branch::Plus, BasisKind::QBismSIC);
  return {p, rng.uniform(qlo, qhi)};
}

void core_suite(Recorder& rec, const CheckOptions& opts) {
  rec.error_below("bloch-density-roundtrip", 1e-12, [&] {
    Sampler rng(opts.seed);
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const BlochVectord r = rng.ball();
      worst = std::max(worst, (density_to_bloch(bloch_to_density(r)) - r).norm());
    }
    return worst;
  });
  rec.error_below("eigenvalues-vs-eigensolver", 1e-10, [&] {
    Sampler rng(opts.seed + 1);
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const ProbVector4d prob = rng.simplex();
      const DensityMatrixd rho = prob_to_density(prob, basis(BasisKind::QBismSIC));
      Eigen::SelfAdjointEigenSolver<Matrix2cd> solver(rho, Eigen::EigenvaluesOnly);
      const auto closed = sic_eigenvalues(prob);
      const auto direct = eigenvalues_2x2(rho);
      worst = std::max({worst, std::abs(closed.lambda_plus - solver.eigenvalues()(1)),
                        std::abs(closed.lambda_minus - solver.eigenvalues()(0)),
                        std::abs(direct.lambda_plus - solver.eigenvalues()(1)),
                        std::abs(direct.lambda_minus - solver.eigenvalues()(0))});
    }
    return worst;
  });
  rec.error_below("eigenvalue-trace", 1e-12, [&] {
    Sampler rng(opts.seed + 2);
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const auto ev = eigenvalues_2x2(bloch_to_density(rng.ball()));
      worst = std::max(worst, std::abs(ev.lambda_plus + ev.lambda_minus - 1));
    }
    return worst;
  });
  rec.holds("physical-iff-unit-ball", [&] {
    Sampler rng(opts.seed + 3);
    double bad = 0;
    for (int i = 0; i < opts.samples / 10; ++i) {
      const BlochVectord dir = rng.sphere();
      for (double radius : {0.0, 0.5, 0.999, 1 - 1e-6, 1.0, 1 + 1e-6, 1.001, 1.5}) {
        const BlochVectord r = radius * dir;
        if (is_physical(bloch_to_density(r)) != (radius <= 1)) ++bad;
        if (bloch_is_physical(r) != (radius <= 1)) ++bad;
      }
    }
    return bad;
  });
}

void phase_space_suite(Recorder& rec, const CheckOptions& opts) {
  rec.error_below("rotation-orthogonal", 1e-12, [] {
    const Matrix4<double>& m = simplex_rotation<double>();
    return std::max(max_abs(m.transpose() * m - Matrix4<double>::Identity()), std::abs(m.determinant() - 1));
  });
  rec.error_below("rotation-entries", 1e-12, [] {
    Matrix4<double> expected;
    expected << 3, 3, 3, 3, -3, 5, -1, -1, -3, -1, 5, -1, -3, -1, -1, 5;
    return max_abs(simplex_rotation<double>() - expected / 6);
  });
  rec.error_below("first-rotated-coordinate", 1e-12, [&] {
    Sampler rng(opts.seed + 10);
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const Vector4<double> rotated = simplex_rotation<double>() * rng.simplex().values();
      worst = std::max(worst, std::abs(rotated(0) - 0.5));
    }
    return worst;
  });
  for (auto kind : {BasisKind::QBismSIC, BasisKind::Wootters}) {
    rec.error_below("density-prob-roundtrip-" + std::string(to_string(kind)), 1e-12, [&opts, kind] {
      Sampler rng(opts.seed + 11);
      const auto& b = basis(kind);
      double worst = 0;
      for (int i = 0; i < opts.samples; ++i) {
        const DensityMatrixd rho = bloch_to_density(rng.ball());
        worst = std::max(worst, max_abs(prob_to_density(density_to_prob(rho, b), b) - rho));
      }
      return worst;
    });
  }
  rec.error_below("bloch-prob-affine-inverse", 1e-12, [] {
    double worst = 0;
    for (const BlochVectord& r : {BlochVectord(0, 0, 0), BlochVectord(1, 0, 0), BlochVectord(0, 1, 0),
                                  BlochVectord(0, 0, 1)}) {
      worst = std::max(worst, (prob_to_bloch(bloch_to_prob(r)) - r).norm());
      const ProbVector4d prob = bloch_to_prob(r);
      worst = std::max(worst, max_abs(bloch_to_prob(prob_to_bloch(prob)).values() - prob.values()));
    }
    return worst;
  });
  rec.holds("sic-probabilities-in-half-interval", [&] {
    Sampler rng(opts.seed + 12);
    double bad = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const auto v = bloch_to_prob(rng.ball()).values();
      if (v.minCoeff() < -kTolAlg<double> || v.maxCoeff() > 0.5 + kTolAlg<double>) ++bad;
    }
    return bad;
  });
  rec.error_below("vertex-projection", 1e-12, [] {
    const ProbVector4d vertex(Vector4<double>(1, 0, 0, 0), ProbMode::NonNegative);
    return (simplex_project(vertex) - TetraPointd::Constant(-0.5)).norm();
  });
}

void chip_suite(Recorder& rec, const CheckOptions& opts) {
  rec.holds("surface-inside-tetrahedron", [] {
    double bad = 0;
    for (int i = 0; i <= 100; ++i) {
      for (int j = 0; j <= 100; ++j) {
        for (auto o : {Orientation::O1, Orientation::O2, Orientation::O3}) {
          const TetraPointd pt = chip_surface(ChipPointd{i / 100.0, j / 100.0, o});
          if (simplex_unproject(pt).minCoeff() < -kTolAlg<double>) ++bad;
        }
      }
    }
    return bad;
  });
  for (auto kind : {BasisKind::QBismSIC, BasisKind::Wootters}) {
    rec.error_below("boundary-purity-" + std::string(to_string(kind)), 1e-10, [&opts, kind] {
      Sampler rng(opts.seed + 20);
      const auto [lo, hi] = support<double>(kind);
      double worst = 0;
      for (int i = 0; i < opts.samples; ++i) {
        const double p = rng.uniform(lo, hi);
        for (auto br : {Branch::Plus, Branch::Minus}) {
          const double q = boundary_q(p, br, kind);
          worst = std::max(worst, std::abs(chip_bloch(ChipPointd{p, q, Orientation::O1, kind}).norm() - 1));
        }
      }
      return worst;
    });
  }
  rec.error_below("boundary-closed-form", 1e-10, [&] {
    Sampler rng(opts.seed + 21);
    const auto [lo, hi] = qbism_support<double>();
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const double p = rng.uniform(lo, hi);
      for (auto br : {Branch::Plus, Branch::Minus}) {
        const BlochVectord via_q = chip_bloch(ChipPointd{p, boundary_q(p, br, BasisKind::QBismSIC)});
        worst = std::max(worst, (boundary_bloch(p, br) - via_q).norm());
      }
    }
    return worst;
  });
  rec.error_below("boundary-insphere-radius", 1e-10, [&] {
    Sampler rng(opts.seed + 22);
    const auto [lo, hi] = qbism_support<double>();
    const double radius = 1 / (2 * std::sqrt(3.0));
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const double p = rng.uniform(lo, hi);
      for (auto br : {Branch::Plus, Branch::Minus}) {
        const ChipPointd pt{p, boundary_q(p, br, BasisKind::QBismSIC)};
        worst = std::max(worst, std::abs(chip_surface(pt).norm() - radius));
      }
    }
    return worst;
  });
  rec.error_below("phi-zero-on-chip", 1e-12, [&] {
    Sampler rng(opts.seed + 23);
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const double p = rng.uniform(0.01, 0.99);
      const double q = rng.uniform(0.01, 0.99);
      worst = std::max(worst, std::abs(matthews_phi(outer_product(p, q))));
      const auto [cp, cq] = chip_sample(rng);
      worst = std::max(worst, std::abs(matthews_phi(chip_bloch(ChipPointd{cp, cq}))));
    }
    return worst;
  });
  rec.error_below("phi-zero-set-is-surface", 1e-6, [] {
    // Grid points almost never sit on the surface, so check both directions:
    // phi vanishes at (x, xz/sqrt3, z), and off the surface |phi| >= |residual| / 3
    // (the denominator sqrt((3-x^2)(3-z^2)) is at most 3 in the ball).
    const int n = 50;
    const auto c = [n](int i) { return -1 + 2.0 * i / (n - 1); };
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const BlochVectord on(c(i), c(i) * c(k) / std::sqrt(3.0), c(k));
        if (on.norm() <= 1) worst = std::max(worst, std::abs(matthews_phi(bloch_to_prob(on))));
        for (int j = 0; j < n; ++j) {
          const BlochVectord r(c(i), c(j), c(k));
          if (r.norm() > 1) continue;
          const double gap = std::abs(bloch_surface_residual(r, Orientation::O1)) / 3 -
                             std::abs(matthews_phi(bloch_to_prob(r)));
          worst = std::max(worst, gap);
        }
      }
    }
    return worst;
  });
  rec.error_below("factorize-roundtrip", 1e-10, [&] {
    Sampler rng(opts.seed + 24);
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const double p = rng.uniform();
      const double q = rng.uniform();
      const auto pq = factorize(outer_product(p, q));
      if (!pq) return std::numeric_limits<double>::infinity();
      worst = std::max({worst, std::abs(pq->first - p), std::abs(pq->second - q)});
    }
    return worst;
  });
  rec.error_below("support-endpoints", 1e-12, [] {
    const auto [lo, hi] = qbism_support<double>();
    const double h = 1 / std::sqrt(3.0);
    return std::max(std::abs(lo - (1 - h) / 2), std::abs(hi - (1 + h) / 2));
  });
  rec.error_below("orientation-surfaces", 1e-12, [&] {
    Sampler rng(opts.seed + 25);
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const double p = rng.uniform();
      const double q = rng.uniform();
      for (auto o : {Orientation::O1, Orientation::O2, Orientation::O3}) {
        const ProbVector4d prob = chip_probability(ChipPointd{p, q, o});
        worst = std::max({worst, std::abs(surface_residual(prob, o)),
                          std::abs(bloch_surface_residual(prob_to_bloch(prob), o))});
      }
    }
    return worst;
  });
  rec.error_below("sigma-maps-o1-to-o2", 1e-12, [&] {
    Sampler rng(opts.seed + 26);
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const ProbVector4d prob = outer_product(rng.uniform(), rng.uniform());
      for (auto s : {Sigma::Sigma1, Sigma::Sigma2}) {
        worst = std::max(worst, std::abs(surface_residual(permute_orientation(prob, s), Orientation::O2)));
      }
    }
    return worst;
  });
}

void measurement_suite(Recorder& rec, const CheckOptions& opts) {
  rec.holds("povms-valid", [] {
    double bad = qbism_povm<double>().is_valid() ? 0 : 1;
    for (auto a : {Axis::X, Axis::Y, Axis::Z}) bad += coarse_povm<double>(a).is_valid() ? 0 : 1;
    return bad;
  });
  rec.error_below("coarse-vs-pauli", 1e-12, [&] {
    Sampler rng(opts.seed + 30);
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const DensityMatrixd rho = bloch_to_density(rng.ball());
      for (auto a : {Axis::X, Axis::Y, Axis::Z}) {
        const double coarse = born_probabilities(coarse_povm<double>(a), rho)[0];
        // The first coarse outcome pairs with -1 for x and z but +1 for y.
        const auto pauli = pauli_probabilities(rho, a).probs[a == Axis::Y ? 1 : 0];
        worst = std::max(worst, std::abs(coarse - rescale_projective(pauli)));
      }
    }
    return worst;
  });
  rec.error_below("sic-born-matches-chart", 1e-12, [&] {
    Sampler rng(opts.seed + 31);
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const BlochVectord r = rng.ball();
      const auto born = born_probabilities(qbism_povm<double>(), bloch_to_density(r));
      const auto chart = bloch_to_prob(r).values();
      for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(born[k] - chart(k)));
    }
    return worst;
  });
  rec.error_below("reconstruction-roundtrip", 1e-10, [&] {
    Sampler rng(opts.seed + 32);
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const auto [p, q] = chip_sample(rng);
      const BlochVectord r = chip_bloch(ChipPointd{p, q});
      const DensityMatrixd rho = bloch_to_density(r);
      const auto rec_state = reconstruct_from_projective(pauli_probabilities(rho, Axis::Z, 1e-9).probs[0],
                                                         pauli_probabilities(rho, Axis::X, 1e-9).probs[0]);
      if (!rec_state.physical) return std::numeric_limits<double>::infinity();
      worst = std::max({worst, std::abs(rec_state.p - p), std::abs(rec_state.q - q), (rec_state.bloch - r).norm()});
    }
    return worst;
  });
  rec.witness_above("non-chip-state-not-recovered", 0.1, [] {
    const BlochVectord r(0, 1, 0);
    const DensityMatrixd rho = bloch_to_density(r);
    const auto out = reconstruct_from_projective(pauli_probabilities(rho, Axis::Z).probs[0],
                                                 pauli_probabilities(rho, Axis::X).probs[0]);
    return (out.bloch - r).norm();
  });
}

void channels_suite(Recorder& rec, const CheckOptions& opts) {
  rec.error_below("kraus-completeness", 1e-12, [] {
    double worst = 0;
    for (auto kind : kAllChannels) {
      for (double xi : {0.0, 0.25, 0.5, 0.75, 1.0}) worst = std::max(worst, make_channel(kind, xi).completeness_error());
    }
    return worst;
  });
  const auto grid = chip_grid<double>(20);
  for (auto kind : {ChannelKind::BitFlip, ChannelKind::PhaseFlip, ChannelKind::PhaseDamping}) {
    rec.error_below("preserves-" + std::string(to_string(kind)), 1e-12, [&grid, kind] {
      const auto info = preserves_chip(kind);
      if (!info.preserves) return std::numeric_limits<double>::infinity();
      double worst = 0;
      for (double xi : {0.05, 1.0 / 3, 0.5, 0.8, 0.95}) {
        for (const auto& [p, q] : grid) {
          const auto [pp, qq] = info.reparametrize(p, q, xi);
          worst = std::max(worst, (chip_image(kind, xi, p, q) - chip_bloch(ChipPointd{pp, qq})).norm());
        }
      }
      return worst;
    });
  }
  for (auto kind : {ChannelKind::BitPhaseFlip, ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping}) {
    rec.witness_above("leaves-chip-" + std::string(to_string(kind)), 1e-2, [kind] {
      const auto info = preserves_chip(kind);
      return info.preserves || !info.witness ? 0.0 : std::abs(info.witness->residual);
    });
  }
  for (auto kind : {ChannelKind::BitFlip, ChannelKind::PhaseFlip, ChannelKind::Depolarizing,
                    ChannelKind::PhaseDamping}) {
    rec.error_below("table-matches-kraus-" + std::string(to_string(kind)), 1e-12, [&grid, kind] {
      double worst = 0;
      for (double xi : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (const auto& [p, q] : grid) {
          worst = std::max(worst, (chip_image_table(kind, xi, p, q) - chip_image(kind, xi, p, q)).norm());
        }
      }
      return worst;
    });
  }
  // The published forms for these two differ from the Kraus maps only in x.
  for (auto kind : {ChannelKind::BitPhaseFlip, ChannelKind::AmplitudeDamping}) {
    rec.error_below("table-yz-match-kraus-" + std::string(to_string(kind)), 1e-12, [&grid, kind] {
      double worst = 0;
      for (double xi : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (const auto& [p, q] : grid) {
          const BlochVectord d = chip_image_table(kind, xi, p, q) - chip_image(kind, xi, p, q);
          worst = std::max(worst, d.tail<2>().norm());
        }
      }
      return worst;
    });
  }
  rec.holds("outputs-physical", [&] {
    Sampler rng(opts.seed + 40);
    double bad = 0;
    for (int i = 0; i < opts.samples; ++i) {
      const DensityMatrixd rho = bloch_to_density(rng.ball());
      const double xi = rng.uniform();
      for (auto kind : kAllChannels) {
        if (!bloch_is_physical(density_to_bloch(apply_channel(make_channel(kind, xi), rho)))) ++bad;
      }
    }
    return bad;
  });
}

// log of a symmetric positive-definite matrix through its eigenbasis.
Matrix4<double> spd_log(const Matrix4<double>& m) {
  Eigen::SelfAdjointEigenSolver<Matrix4<double>> es(m);
  return es.eigenvectors() * es.eigenvalues().array().log().matrix().asDiagonal() * es.eigenvectors().transpose();
}

Matrix4<double> kron(const Matrix2<double>& a, const Matrix2<double>& b) {
  Matrix4<double> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  }
  return out;
}

void liouvillian_suite(Recorder& rec, const CheckOptions& opts) {
  std::vector<double> ps;
  for (int i = 0; i < 10; ++i) {
    ps.push_back(0.05 + 0.35 * i / 9);
    ps.push_back(0.60 + 0.35 * i / 9);
  }
  rec.error_below("generator-closed-form", 1e-9, [&] {
    double worst = 0;
    for (double p : ps) worst = std::max(worst, max_abs(combined_generator(p) - combined_generator_closed_form(p)));
    return worst;
  });
  rec.error_below("generator-matrix-log", 1e-9, [&] {
    double worst = 0;
    for (double p : ps) {
      const auto [g1, g2] = marginal_generators(p);
      const Matrix2<double> e1 = g1.matrix.exp();
      const Matrix2<double> e2 = g2.matrix.exp();
      worst = std::max(worst, max_abs(spd_log(kron(e1, e2)) - combined_generator_closed_form(p)));
    }
    return worst;
  });
  rec.error_below("generator-zero-sums", 1e-9, [&] {
    double worst = 0;
    for (double p : ps) {
      const Matrix4<double> g = combined_generator(p);
      worst = std::max({worst, max_abs(g.rowwise().sum()), max_abs(g.colwise().sum())});
    }
    return worst;
  });
  rec.error_below("marginal-derivatives", 1e-6, [&] {
    const double h = 1e-6;
    double worst = 0;
    for (double p : ps) {
      const auto [g1, g2] = marginal_generators(p);
      const auto q = [](double t) { return boundary_q(t, Branch::Minus, BasisKind::Wootters); };
      const Eigen::Vector2d dp(1, -1);
      const Eigen::Vector2d dq = Eigen::Vector2d((q(p + h) - q(p - h)) / (2 * h), -(q(p + h) - q(p - h)) / (2 * h));
      const Eigen::Vector2d pv(p, 1 - p);
      const Eigen::Vector2d qv(q(p), 1 - q(p));
      worst = std::max({worst, (g1.matrix * pv - dp).norm(), (g2.matrix * qv - dq).norm() / std::max(1.0, dq.norm())});
    }
    return worst;
  });
  rec.holds("marginal-stochasticity", [&] {
    double bad = 0;
    for (double p : ps) {
      const auto [g1, g2] = marginal_generators(p);
      // Below 1/2 exp(L1) is stochastic and exp(L2) backward-stochastic; above 1/2 the roles swap.
      const double s = p < 0.5 ? 1 : -1;
      if (Matrix2<double>(s * g1.matrix).exp().minCoeff() < 0) ++bad;
      if (Matrix2<double>(-s * g2.matrix).exp().minCoeff() < 0) ++bad;
    }
    return bad;
  });
  rec.holds("rate-signs", [&] {
    double bad = 0;
    for (double p : ps) {
      const auto ops = jump_operators(p);
      if (ops.gamma1 + ops.gamma2 != 0) ++bad;
      if (ops.gamma1 != (p <= 0.5 ? 1.0 : -1.0)) ++bad;
    }
    return bad;
  });
  for (auto br : {Branch::Minus, Branch::Plus}) {
    const std::string tag(to_string(br));
    const auto traj = std::make_shared<Trajectory<double>>();
    rec.error_below("trajectory-fidelity-" + tag, 1e-4, [traj, br] {
      *traj = evolve_boundary(1e-3, 1 - 1e-3, br, 1000);
      return trajectory_deviation(*traj);
    });
    rec.error_below("trajectory-purity-" + tag, 1e-6, [traj] {
      if (traj->samples.empty()) return std::numeric_limits<double>::infinity();
      double worst = 0;
      for (const auto& s : traj->samples) worst = std::max(worst, von_neumann_entropy(s.rho));
      return worst;
    });
    rec.error_below("trajectory-normalization-" + tag, 1e-9, [traj] {
      if (traj->samples.empty()) return std::numeric_limits<double>::infinity();
      double worst = 0;
      for (const auto& s : traj->samples) {
        const auto prob = density_to_prob(s.rho, basis(BasisKind::Wootters), kTolPhys<double>);
        worst = std::max(worst, std::abs(prob.values().sum() - 1));
      }
      return worst;
    });
    rec.holds("trajectory-entropy-bounds-" + tag, [traj] {
      if (traj->samples.empty()) return 1.0;
      double bad = 0;
      for (const auto& s : traj->samples) {
        const double h = marginal_entropy(s.rho);
        if (h < 1 - 1e-6 || h > kEntropyMax + 1e-3) ++bad;
      }
      return bad;
    });
  }
  rec.error_below("trajectory-purity-random-intervals", 1e-6, [&] {
    // Each run integrates a full trajectory, hence the reduced count.
    Sampler rng(opts.seed + 60);
    double worst = 0;
    for (int i = 0; i < std::max(1, opts.samples / 50); ++i) {
      double a = rng.uniform(1e-3, 1 - 1e-3), b = rng.uniform(1e-3, 1 - 1e-3);
      if (a > b) std::swap(a, b);
      if (std::abs(a - 0.5) < 1e-5) continue;
      const int steps = 1 + static_cast<int>(rng.uniform(0, 60));
      const auto traj = evolve_boundary(a, b, i % 2 ? Branch::Plus : Branch::Minus, steps);
      for (const auto& s : traj.samples) worst = std::max(worst, von_neumann_entropy(s.rho));
    }
    return worst;
  });
  rec.error_below("entropy-minimum-at-half", 1e-9, [] {
    return std::max(std::abs(chip_entropy(0.5, Branch::Minus) - 1), std::abs(chip_entropy(0.5, Branch::Plus) - 1));
  });
  rec.error_below("entropy-maximum", 1e-4, [] { return std::abs(max_chip_entropy().entropy - kEntropyMax); });
}

}  // namespace

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> names{"core", "phase-space", "chip", "measurement", "channels", "liouvillian",
                                              "all"};
  return names;
}

std::vector<CheckResult> run_check_suite(std::string_view suite, const CheckOptions& opts) {
  using SuiteFn = void (*)(Recorder&, const CheckOptions&);
  const std::vector<std::pair<std::string, SuiteFn>> table{
      {"core", core_suite},         {"phase-space", phase_space_suite}, {"chip", chip_suite},
      {"measurement", measurement_suite}, {"channels", channels_suite},     {"liouvillian", liouvillian_suite}};
  if (opts.samples < 1) throw Error(ErrorCode::OutOfRange, "check sample count must be positive");
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [name, fn] : table) {
    if (suite != "all" && suite != name) continue;
    found = true;
    Recorder rec(name, out);
    fn(rec, opts);
  }
  if (!found) throw Error(ErrorCode::OutOfRange, "unknown check suite: " + std::string(suite));
  return out;
}

}  // namespace qpc
