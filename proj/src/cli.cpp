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

#include "qpc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <string>

#include "qpc/channels.hpp"
#include "qpc/checks.hpp"
#include "qpc/export.hpp"
#include "qpc/liouvillian.hpp"
#include "qpc/measurement.hpp"

namespace qpc {
namespace {

struct OutputOptions {
  ExportFormat format = ExportFormat::Csv;
  std::string path;
};

struct SurfaceOptions {
  int chip = 1;
  BasisKind basis = BasisKind::QBismSIC;
  int grid = 101;
  bool physical = false;
};

struct BoundaryOptions {
  BasisKind basis = BasisKind::QBismSIC;
  Branch branch = Branch::Minus;
  int samples = 101;
};

struct ReconstructOptions {
  double pz = 0.5;
  double px = 0.5;
};

struct ChannelOptions {
  ChannelKind kind = ChannelKind::BitFlip;
  double xi = 1.0 / 3;
  int grid = 101;
};

struct EvolveOptionsCli {
  double p0 = 1e-3;
  double p1 = 1 - 1e-3;
  Branch branch = Branch::Minus;
  int steps = 1000;
};

struct CheckCliOptions {
  std::string suite = "all";
  std::uint64_t seed = kDefaultSeed;
  int samples = 10'000;
  bool json = false;
};

const std::map<std::string, BasisKind> kBasisNames{{"qbism", BasisKind::QBismSIC},
                                                   {"wootters", BasisKind::Wootters}};
const std::map<std::string, Branch> kBranchNames{{"plus", Branch::Plus}, {"minus", Branch::Minus}};
const std::map<std::string, ExportFormat> kFormatNames{{"csv", ExportFormat::Csv}, {"json", ExportFormat::Json}};

std::map<std::string, ChannelKind> channel_names() {
  std::map<std::string, ChannelKind> m;
  for (auto kind : kAllChannels) m.emplace(std::string(to_string(kind)), kind);
  return m;
}

// Enum-valued option given by name; the name is validated before the
// callback runs, so the lookup cannot fail.
template <typename Enum>
CLI::Option* add_enum_option(CLI::App* cmd, const std::string& flag, Enum& target,
                             const std::map<std::string, Enum>& names, const std::string& help) {
  return cmd
      ->add_option_function<std::string>(
          flag, [&target, &names](const std::string& v) { target = names.at(v); }, help)
      ->transform(CLI::IsMember(names, CLI::ignore_case));
}

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  add_enum_option(cmd, "--format", out.format, kFormatNames, "Output format: csv or json");
  cmd->add_option("--out", out.path, "Write to this file instead of standard output");
}

ExportTable cmd_surface(const SurfaceOptions& o) {
  ExportTable table("surface", {"p", "q", "u", "v", "w"});
  table.parameters() = {{"chip", o.chip}, {"basis", to_string(o.basis)}, {"grid", o.grid}, {"physical", o.physical}};
  const auto orientation = static_cast<Orientation>(o.chip - 1);
  for (int i = 0; i < o.grid; ++i) {
    for (int j = 0; j < o.grid; ++j) {
      const ChipPointd pt{double(i) / (o.grid - 1), double(j) / (o.grid - 1), orientation, o.basis};
      if (o.physical && !bloch_is_physical(chip_bloch(pt))) continue;
      const TetraPointd uvw = chip_surface(pt);
      table.add_row({pt.p, pt.q, uvw(0), uvw(1), uvw(2)});
    }
  }
  return table;
}

ExportTable cmd_boundary(const BoundaryOptions& o) {
  ExportTable table("boundary", {"p", "q", "x", "y", "z"});
  table.parameters() = {{"basis", to_string(o.basis)}, {"branch", to_string(o.branch)}, {"samples", o.samples}};
  auto [lo, hi] = support<double>(o.basis);
  if (o.basis == BasisKind::Wootters) {
    // q(p) is continuous on [0, 1] but the endpoints are the degenerate poles.
    lo = 0;
    hi = 1;
  }
  for (int i = 0; i < o.samples; ++i) {
    const double p = lo + (hi - lo) * i / (o.samples - 1);
    const double q = boundary_q(p, o.branch, o.basis);
    const BlochVectord r = chip_bloch(ChipPointd{p, q, Orientation::O1, o.basis});
    table.add_row({p, q, r(0), r(1), r(2)});
  }
  return table;
}

ExportTable cmd_phi_field(int grid) {
  ExportTable table("phi-field", {"x", "y", "z", "phi"});
  table.parameters() = {{"grid", grid}};
  const auto coord = [grid](int i) { return -1 + 2.0 * i / (grid - 1); };
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      for (int k = 0; k < grid; ++k) {
        const BlochVectord r(coord(i), coord(j), coord(k));
        if (!bloch_is_physical(r, kTolAlg<double>)) continue;
        table.add_row({r(0), r(1), r(2), matthews_phi(r)});
      }
    }
  }
  return table;
}

ExportTable cmd_channel(const ChannelOptions& o) {
  ExportTable table("channel", {"p", "q", "x_in", "y_in", "z_in", "x", "y", "z", "residual"});
  table.parameters() = {{"name", to_string(o.kind)}, {"xi", o.xi}, {"grid", o.grid}};
  for (const auto& [p, q] : chip_grid<double>(o.grid)) {
    const BlochVectord in = chip_bloch(ChipPointd{p, q});
    const BlochVectord r = chip_image(o.kind, o.xi, p, q);
    table.add_row({p, q, in(0), in(1), in(2), r(0), r(1), r(2), bloch_surface_residual(r, Orientation::O1)});
  }
  return table;
}

ExportTable cmd_evolve(const EvolveOptionsCli& o) {
  ExportTable table("evolve", {"p", "x", "y", "z", "deviation", "von_neumann", "shannon"});
  table.parameters() = {{"p0", o.p0}, {"p1", o.p1}, {"branch", to_string(o.branch)}, {"steps", o.steps}};
  const auto traj = evolve_boundary(o.p0, o.p1, o.branch, o.steps);
  for (const auto& s : traj.samples) {
    const BlochVectord r = density_to_bloch(s.rho, kTolPhys<double>);
    const double dev = (r - wootters_boundary_bloch(s.p, o.branch)).norm();
    table.add_row({s.p, r(0), r(1), r(2), dev, von_neumann_entropy(s.rho), marginal_entropy(s.rho)});
  }
  return table;
}

int cmd_reconstruct(const ReconstructOptions& o, std::ostream& os) {
  const auto rec = reconstruct_from_projective(o.pz, o.px);
  nlohmann::ordered_json doc;
  doc["metadata"] = {{"command", "reconstruct"},
                     {"parameters", {{"pz", o.pz}, {"px", o.px}}},
                     {"version", std::string(kToolVersion)}};
  const auto& v = rec.prob.values();
  doc["records"] = nlohmann::ordered_json::array({{{"p", rec.p},
                                                   {"q", rec.q},
                                                   {"prob", {v(0), v(1), v(2), v(3)}},
                                                   {"bloch", {rec.bloch(0), rec.bloch(1), rec.bloch(2)}},
                                                   {"physical", rec.physical}}});
  os << doc.dump(2) << "\n";
  return rec.physical ? kExitOk : kExitNumerical;
}

int cmd_check(const CheckCliOptions& o, std::ostream& os, std::ostream& err) {
  const auto results = run_check_suite(o.suite, {o.seed, o.samples});
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (o.json) {
    nlohmann::ordered_json doc;
    doc["metadata"] = {{"command", "check"},
                       {"parameters", {{"suite", o.suite}, {"seed", o.seed}, {"samples", o.samples}}},
                       {"version", std::string(kToolVersion)}};
    auto& records = doc["records"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      records.push_back({{"suite", r.suite},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"value", std::isfinite(r.value) ? nlohmann::ordered_json(r.value) : nullptr},
                         {"threshold", r.threshold},
                         {"detail", r.detail}});
    }
    os << doc.dump(2) << "\n";
  } else {
    os << "seed " << o.seed << " samples " << o.samples << "\n";
    for (const auto& r : results) {
      os << (r.passed ? "PASS" : "FAIL") << "\t" << r.suite << "/" << r.name << "\tvalue=" << format_number(r.value)
         << "\tthreshold=" << format_number(r.threshold);
      if (!r.detail.empty()) os << "\t" << r.detail;
      os << "\n";
    }
  }
  for (const auto& r : results) {
    if (!r.passed) err << "FAIL " << r.suite << "/" << r.name << "\n";
  }
  return ok ? kExitOk : kExitNumerical;
}

// Runs `produce` and writes its table to --out or `out`.
int emit(const OutputOptions& o, std::ostream& out, std::ostream& err, const std::function<ExportTable()>& produce) {
  const ExportTable table = produce();
  if (o.path.empty()) {
    table.write(out, o.format);
    return kExitOk;
  }
  std::ofstream file(o.path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << o.path << " for writing\n";
    return kExitUsage;
  }
  table.write(file, o.format);
  return file ? kExitOk : kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Qubit probability chips: surfaces, fields, channels and boundary evolution", "qpc");
  app.set_version_flag("--version", std::string(kToolVersion));
  app.set_config("--config", "", "Read options from a key=value config file")->envname("QPC_CONFIG");
  app.require_subcommand(1);

  const auto positive_grid = CLI::Range(2, 100'000);

  OutputOptions surface_out;
  SurfaceOptions surface;
  auto* sc = app.add_subcommand("surface", "Sample a chip surface in the projected tetrahedron");
  sc->add_option("--chip", surface.chip, "Chip orientation (1, 2 or 3)")->check(CLI::Range(1, 3));
  add_enum_option(sc, "--basis", surface.basis, kBasisNames, "qbism or wootters");
  sc->add_option("--grid", surface.grid, "Points per axis")->check(positive_grid);
  sc->add_flag("--physical", surface.physical, "Keep only points that are physical states");
  add_output_options(sc, surface_out);

  OutputOptions boundary_out;
  BoundaryOptions boundary;
  auto* bc = app.add_subcommand("boundary", "Sample the pure-state boundary of the O1 chip");
  add_enum_option(bc, "--basis", boundary.basis, kBasisNames, "qbism or wootters");
  add_enum_option(bc, "--branch", boundary.branch, kBranchNames, "plus or minus");
  bc->add_option("--samples", boundary.samples, "Number of p samples")->check(positive_grid);
  add_output_options(bc, boundary_out);

  OutputOptions phi_out;
  int phi_grid = 101;
  auto* pc = app.add_subcommand("phi-field", "Matthews correlation over the Bloch ball");
  pc->add_option("--grid", phi_grid, "Points per axis")->check(positive_grid);
  add_output_options(pc, phi_out);

  ReconstructOptions reconstruct;
  std::string reconstruct_path;
  auto* rc = app.add_subcommand("reconstruct", "Rebuild a chip state from Pauli-Z and Pauli-X probabilities");
  rc->add_option("--pz", reconstruct.pz, "Probability of the -1 outcome of Pauli-Z")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  rc->add_option("--px", reconstruct.px, "Probability of the -1 outcome of Pauli-X")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  rc->add_option("--out", reconstruct_path, "Write to this file instead of standard output");

  OutputOptions channel_out;
  ChannelOptions channel;
  auto* cc = app.add_subcommand("channel", "Apply a noise channel to a grid on the O1 chip");
  const auto channels = channel_names();
  add_enum_option(cc, "--name", channel.kind, channels, "Channel name")->required();
  cc->add_option("--xi", channel.xi, "Error rate in [0, 1]")->check(CLI::Range(0.0, 1.0));
  cc->add_option("--grid", channel.grid, "Points per axis")->check(positive_grid);
  add_output_options(cc, channel_out);

  OutputOptions evolve_out;
  EvolveOptionsCli evolve;
  auto* ec = app.add_subcommand("evolve", "Integrate the boundary master equation over p");
  ec->add_option("--p0", evolve.p0, "Start of the p interval")->check(CLI::Range(0.0, 1.0));
  ec->add_option("--p1", evolve.p1, "End of the p interval")->check(CLI::Range(0.0, 1.0));
  add_enum_option(ec, "--branch", evolve.branch, kBranchNames, "plus or minus");
  ec->add_option("--steps", evolve.steps, "Number of output intervals")->check(CLI::Range(1, 10'000'000));
  add_output_options(ec, evolve_out);

  CheckCliOptions check;
  auto* kc = app.add_subcommand("check", "Run randomized invariant suites");
  kc->add_option("suite", check.suite, "Suite name")->check(CLI::IsMember(check_suites()));
  kc->add_option("--seed", check.seed, "Random seed");
  kc->add_option("--samples", check.samples, "Samples per randomized check")->check(CLI::Range(1, 100'000'000));
  kc->add_flag("--json", check.json, "Report as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sc->parsed()) return emit(surface_out, out, err, [&] { return cmd_surface(surface); });
    if (bc->parsed()) return emit(boundary_out, out, err, [&] { return cmd_boundary(boundary); });
    if (pc->parsed()) return emit(phi_out, out, err, [&] { return cmd_phi_field(phi_grid); });
    if (cc->parsed()) return emit(channel_out, out, err, [&] { return cmd_channel(channel); });
    if (ec->parsed()) return emit(evolve_out, out, err, [&] { return cmd_evolve(evolve); });
    if (kc->parsed()) return cmd_check(check, out, err);
    if (rc->parsed()) {
      if (reconstruct_path.empty()) return cmd_reconstruct(reconstruct, out);
      std::ofstream file(reconstruct_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << reconstruct_path << " for writing\n";
        return kExitUsage;
      }
      return cmd_reconstruct(reconstruct, file);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::OutOfRange ? kExitUsage : kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace qpc
