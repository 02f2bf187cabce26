#include "scenario.hpp"
#include "textio.hpp"

#include "subchain/checks.hpp"
#include "subchain/dickespace.hpp"
#include "subchain/kernels.hpp"
#include "subchain/parallel.hpp"
#include "subchain/spectrum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace subchain;
using namespace subchain::tools;

namespace {

int cmd_spectrum(int n, double a, const std::string& models_csv, int points,
                 const std::string& out_file, bool validate, bool degrees,
                 const std::string& scenario_file) {
  if (!scenario_file.empty()) {
    const Scenario sc = load_scenario(scenario_file);
    run_spectrum_scenario(std::get<SpectrumScenario>(sc), ".");
    return 0;
  }
  if (degrees) a *= M_PI / 180.0;

  std::vector<ChainConfig> models;
  std::string item;
  std::istringstream ss(models_csv);
  while (std::getline(ss, item, ','))
    if (!item.empty()) models.push_back(parse_model_spec(item, n, a, degrees));
  if (models.empty()) throw std::runtime_error("no models requested");

  if (validate) {
    const SpectralGrid grid = SpectralGrid::uniform(points, a);
    for (const ChainConfig& cfg : models) {
      const Eigen::MatrixXd decay_part = coupling_matrix(cfg).real();
      double peak = 0.0, worst = 0.0;
      for (double x : grid.points) {
        const double exact = gamma_exact_with_matrix(decay_part, x);
        peak = std::max(peak, exact);
        worst = std::max(worst, std::abs(gamma_sinc_approx(cfg, x) - exact));
      }
      std::printf("%s: max |gamma_exact - gamma_sinc| = %.6g (%.2f%% of peak %.6g)\n",
                  model_label(cfg).c_str(), worst, 100.0 * worst / peak, peak);
    }
    if (out_file.empty()) return 0;
  }
  if (out_file.empty())
    throw CLI::ValidationError("--out is required unless --validate is given");
  write_spectrum_csv(n, a, models, points, out_file);
  return 0;
}

int cmd_dynamics(const std::vector<std::string>& files,
                 const std::string& out_dir) {
  // independent scenarios may run concurrently (SUBCHAIN_THREADS caps this)
  std::vector<std::string> errors(files.size());
  parallel_for(static_cast<int>(files.size()), [&](int i) {
    try {
      const Scenario sc = load_scenario(files[i]);
      const auto* dyn = std::get_if<DynamicsScenario>(&sc);
      if (!dyn)
        throw std::runtime_error(files[i] + ": not a dynamics scenario");
      run_dynamics_scenario(*dyn,
                            std::filesystem::path(files[i]).parent_path(),
                            out_dir);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  int failures = 0;
  for (const auto& e : errors)
    if (!e.empty()) {
      std::cerr << "error: " << e << "\n";
      ++failures;
    }
  return failures == 0 ? 0 : 1;
}

int cmd_intensity(const std::string& scenario_file, const IntensityScenario& flags,
                  bool have_flags, const std::string& out_dir) {
  if (!scenario_file.empty()) {
    const Scenario sc = load_scenario(scenario_file);
    const auto* in = std::get_if<IntensityScenario>(&sc);
    if (!in)
      throw std::runtime_error(scenario_file + ": not an intensity scenario");
    run_intensity_scenario(*in,
                           std::filesystem::path(scenario_file).parent_path(),
                           out_dir);
    return 0;
  }
  if (!have_flags)
    throw CLI::ValidationError("either --scenario or --out-csv with chain/plane flags is required");
  run_intensity_scenario(flags, ".", out_dir);
  return 0;
}

int cmd_validate(bool quick, const std::string& json_file, bool mutate) {
  CheckOptions opts;
  opts.quick = quick;
  opts.mutate_kernel_sign = mutate;
  const auto results = run_validation(opts);
  for (const auto& r : results)
    std::printf("%s %s: measured %.3g (tolerance %.3g)%s%s\n",
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.measured,
                r.tolerance, r.detail.empty() ? "" : " - ", r.detail.c_str());
  if (!json_file.empty()) {
    nlohmann::json j;
    j["all_pass"] = all_pass(results);
    j["quick"] = quick;
    j["checks"] = nlohmann::json::array();
    for (const auto& r : results)
      j["checks"].push_back({{"name", r.name},
                             {"pass", r.pass},
                             {"measured", r.measured},
                             {"tolerance", r.tolerance},
                             {"detail", r.detail}});
    write_file_atomic(json_file, j.dump(2) + "\n");
  }
  return all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"collective decay spectra, coupled-dipole dynamics and "
               "radiated-intensity maps for a single-excitation atomic chain"};
  app.require_subcommand(1);

  auto* sp = app.add_subcommand(
      "spectrum", "decay-rate and shift curves over the Brillouin zone");
  int sp_n = 10;
  double sp_a = M_PI_2;
  std::string sp_models = "scalar";
  int sp_points = 1024;
  std::string sp_out, sp_scenario;
  bool sp_validate = false, sp_degrees = false;
  sp->add_option("--n", sp_n, "number of atoms")->check(CLI::PositiveNumber);
  sp->add_option("--a", sp_a, "lattice phase k0*d (radians unless --degrees)");
  sp->add_option("--models,--model", sp_models,
                 "comma list: scalar,vector:<delta>[,...]");
  sp->add_option("--points", sp_points, "grid points")->check(CLI::Range(2, 1 << 20));
  sp->add_option("--out", sp_out, "output CSV path");
  sp->add_flag("--validate", sp_validate, "print max |exact - sinc| deviation");
  sp->add_flag("--degrees", sp_degrees, "interpret angles in degrees");
  sp->add_option("--scenario", sp_scenario, "run a spectrum scenario file")
      ->check(CLI::ExistingFile);

  auto* dy = app.add_subcommand(
      "dynamics", "integrate scenario files and write their outputs");
  std::vector<std::string> dy_files;
  std::string dy_outdir = ".";
  dy->add_option("scenarios", dy_files, "scenario JSON file(s)")
      ->required()
      ->check(CLI::ExistingFile);
  dy->add_option("--outdir", dy_outdir, "directory for output files");

  auto* in = app.add_subcommand("intensity",
                                "radiated-intensity raster over a plane");
  std::string in_scenario, in_outdir = ".";
  int in_n = 50, in_res = 200, in_j0 = 1;
  double in_a = 1.0, in_delta = M_PI_2, in_offset = 5.0;
  double in_u0 = -20.0, in_u1 = 20.0, in_v0 = -20.0, in_v1 = 20.0;
  std::string in_model = "scalar", in_state = "uniform", in_normal = "x",
              in_axis = "x", in_csv, in_pgm;
  bool in_degrees = false;
  in->add_option("--scenario", in_scenario, "run an intensity scenario file")
      ->check(CLI::ExistingFile);
  in->add_option("--n", in_n, "number of atoms");
  in->add_option("--a", in_a, "lattice phase k0*d");
  in->add_option("--model", in_model, "scalar or vector");
  in->add_option("--delta", in_delta, "dipole angle for the vectorial model");
  in->add_option("--state", in_state,
                 "uniform|most_subradiant|timed_dicke|single_excited|zero");
  in->add_option("--j0", in_j0, "excited site for single_excited");
  in->add_option("--plane-normal", in_normal, "x|y|z");
  in->add_option("--offset", in_offset, "plane offset, units of d");
  in->add_option("--u-min", in_u0, "in-plane u range");
  in->add_option("--u-max", in_u1, "in-plane u range");
  in->add_option("--v-min", in_v0, "in-plane v range");
  in->add_option("--v-max", in_v1, "in-plane v range");
  in->add_option("--res", in_res, "pixels per axis");
  in->add_option("--dipole-axis", in_axis, "x|y|z");
  in->add_option("--out-csv", in_csv, "CSV raster path");
  in->add_option("--out-pgm", in_pgm, "PGM raster path");
  in->add_option("--outdir", in_outdir, "directory for output files");
  in->add_flag("--degrees", in_degrees, "interpret angles in degrees");

  auto* va = app.add_subcommand("validate",
                                "run the oracle and property suites");
  bool va_quick = false, va_mutate = false;
  std::string va_json;
  va->add_flag("--quick", va_quick, "subset that finishes in a few seconds");
  va->add_option("--json", va_json, "write a JSON report");
  va->add_flag("--mutate-kernel", va_mutate)->group("");  // test hook, hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, bad flags exit 2
  }

  try {
    if (sp->parsed())
      return cmd_spectrum(sp_n, sp_a, sp_models, sp_points, sp_out, sp_validate,
                          sp_degrees, sp_scenario);
    if (dy->parsed()) return cmd_dynamics(dy_files, dy_outdir);
    if (in->parsed()) {
      IntensityScenario flags;
      const bool have_flags = !in_csv.empty() || !in_pgm.empty();
      if (have_flags) {
        if (in_degrees) {
          in_a *= M_PI / 180.0;
          in_delta *= M_PI / 180.0;
        }
        flags.chain = in_model == "scalar"
                          ? ChainConfig::scalar(in_n, in_a)
                          : ChainConfig::vectorial(in_n, in_a, in_delta);
        using Kind = InitialStateSpec::Kind;
        if (in_state == "uniform") flags.state.kind = Kind::Uniform;
        else if (in_state == "most_subradiant") flags.state.kind = Kind::MostSubradiant;
        else if (in_state == "timed_dicke") flags.state.kind = Kind::TimedDicke;
        else if (in_state == "zero") flags.state.kind = Kind::Zero;
        else if (in_state == "single_excited") {
          flags.state.kind = Kind::SingleExcited;
          flags.state.j0 = in_j0;
        } else {
          throw std::runtime_error("unknown state '" + in_state + "'");
        }
        flags.plane.normal =
            in_normal == "x" ? Axis::X : in_normal == "y" ? Axis::Y : Axis::Z;
        flags.plane.offset = in_offset;
        flags.plane.u_min = in_u0;
        flags.plane.u_max = in_u1;
        flags.plane.v_min = in_v0;
        flags.plane.v_max = in_v1;
        flags.plane.resolution = in_res;
        flags.dipole_axis = in_axis == "x"   ? Eigen::Vector3d::UnitX()
                            : in_axis == "y" ? Eigen::Vector3d::UnitY()
                                             : Eigen::Vector3d::UnitZ();
        if (in_csv.empty()) throw std::runtime_error("--out-csv is required");
        flags.csv = in_csv;
        if (!in_pgm.empty()) flags.pgm = in_pgm;
      }
      return cmd_intensity(in_scenario, flags, have_flags, in_outdir);
    }
    if (va->parsed()) return cmd_validate(va_quick, va_json, va_mutate);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
