#include "scenario.hpp"

#include "textio.hpp"

#include "subchain/dickespace.hpp"
#include "subchain/kernels.hpp"
#include "subchain/parallel.hpp"
#include "subchain/spectrum.hpp"
#include "subchain/states.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace subchain::tools {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int line_of_byte(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

Axis parse_axis(const std::string& s) {
  if (s == "x" || s == "X") return Axis::X;
  if (s == "y" || s == "Y") return Axis::Y;
  if (s == "z" || s == "Z") return Axis::Z;
  throw std::runtime_error("axis must be one of x, y, z (got '" + s + "')");
}

Eigen::Vector3d parse_axis_vector(const json& j) {
  if (j.is_string()) {
    switch (parse_axis(j.get<std::string>())) {
      case Axis::X: return Eigen::Vector3d::UnitX();
      case Axis::Y: return Eigen::Vector3d::UnitY();
      default: return Eigen::Vector3d::UnitZ();
    }
  }
  if (j.is_array() && j.size() == 3)
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
  throw std::runtime_error("dipole_axis must be \"x\"/\"y\"/\"z\" or a 3-vector");
}

ChainConfig parse_chain(const json& j) {
  ChainConfig cfg;
  cfg.n_atoms = j.at("n").get<int>();
  cfg.a = j.at("a").get<double>();
  const std::string model = j.value("model", "scalar");
  if (model == "scalar") {
    cfg.model = Model::Scalar;
  } else if (model == "vectorial" || model == "vector") {
    cfg.model = Model::Vectorial;
    cfg.delta = j.at("delta").get<double>();
  } else {
    throw std::runtime_error("chain.model must be \"scalar\" or \"vectorial\"");
  }
  cfg.validate();
  return cfg;
}

InitialStateSpec parse_initial_state(const json& j) {
  InitialStateSpec st;
  const std::string type = j.at("type").get<std::string>();
  using Kind = InitialStateSpec::Kind;
  if (type == "single_excited") {
    st.kind = Kind::SingleExcited;
    st.j0 = j.at("j0").get<int>();
  } else if (type == "most_subradiant") {
    st.kind = Kind::MostSubradiant;
  } else if (type == "timed_dicke") {
    st.kind = Kind::TimedDicke;
  } else if (type == "uniform") {
    st.kind = Kind::Uniform;
  } else if (type == "zero") {
    st.kind = Kind::Zero;
  } else if (type == "explicit") {
    st.kind = Kind::Explicit;
    st.file = j.at("file").get<std::string>();
  } else {
    throw std::runtime_error("unknown initial state type '" + type + "'");
  }
  return st;
}

DriveConfig parse_drive(const json& j) {
  DriveConfig drive;
  drive.rabi = j.value("rabi", 0.0);
  drive.detuning = j.value("detuning", 0.0);
  if (j.contains("t_off")) {
    const auto& t = j.at("t_off");
    if (t.is_string() && t.get<std::string>() == "inf")
      drive.t_off = drive_always_on;
    else
      drive.t_off = t.get<double>();
  } else if (drive.rabi != 0.0) {
    drive.t_off = drive_always_on;
  }
  drive.validate();
  return drive;
}

PlaneSpec parse_plane(const json& j) {
  PlaneSpec plane;
  plane.normal = parse_axis(j.at("normal").get<std::string>());
  plane.offset = j.at("offset").get<double>();
  plane.u_min = j.at("u_min").get<double>();
  plane.u_max = j.at("u_max").get<double>();
  plane.v_min = j.at("v_min").get<double>();
  plane.v_max = j.at("v_max").get<double>();
  plane.resolution = j.value("resolution", 200);
  return plane;
}

OutputSpec parse_output(const json& j) {
  OutputSpec out;
  const std::string type = j.at("type").get<std::string>();
  using Kind = OutputSpec::Kind;
  if (type == "density_series") {
    out.kind = Kind::DensitySeries;
  } else if (type == "mean_excitation") {
    out.kind = Kind::MeanExcitation;
    out.stride = j.value("stride", 1);
    if (out.stride < 1) throw std::runtime_error("mean_excitation stride must be >= 1");
  } else if (type == "beta_snapshots") {
    out.kind = Kind::BetaSnapshots;
  } else if (type == "field_map") {
    out.kind = Kind::FieldMap;
    out.plane = parse_plane(j.at("plane"));
    if (j.contains("dipole_axis")) out.dipole_axis = parse_axis_vector(j.at("dipole_axis"));
    if (j.contains("pgm")) out.pgm = j.at("pgm").get<std::string>();
  } else {
    throw std::runtime_error("unknown output type '" + type + "'");
  }
  out.file = j.at("file").get<std::string>();
  return out;
}

DipoleState load_explicit_state(const ChainConfig& cfg,
                                const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file " + path.string());
  DipoleState st;
  st.beta = Eigen::VectorXcd::Zero(cfg.n_atoms);
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (row >= cfg.n_atoms)
      throw std::runtime_error(path.string() + ": more rows than atoms");
    double re = 0.0, im = 0.0;
    char comma = ',';
    std::istringstream ls(line);
    if (!(ls >> re >> comma >> im))
      throw std::runtime_error(path.string() + ": expected 're,im' rows");
    st.beta[row++] = Complex(re, im);
  }
  if (row != cfg.n_atoms)
    throw std::runtime_error(path.string() + ": expected " +
                             std::to_string(cfg.n_atoms) + " rows, got " +
                             std::to_string(row));
  return st;
}

std::string drive_comment(const DriveConfig& d) {
  std::string t_off = std::isinf(d.t_off) ? "inf" : fmtg(d.t_off);
  return "rabi=" + fmtg(d.rabi) + " detuning=" + fmtg(d.detuning) +
         " t_off=" + t_off;
}

std::string chain_comment(const ChainConfig& cfg) {
  std::string s = "n=" + std::to_string(cfg.n_atoms) + " a=" + fmt17(cfg.a);
  if (cfg.model == Model::Scalar) return s + " model=scalar";
  return s + " model=vectorial delta=" + fmt17(cfg.delta);
}

}  // namespace

DipoleState InitialStateSpec::build(const ChainConfig& cfg,
                                    const std::filesystem::path& base_dir) const {
  switch (kind) {
    case Kind::SingleExcited: return single_excited(cfg, j0);
    case Kind::MostSubradiant: return most_subradiant(cfg);
    case Kind::TimedDicke: return timed_dicke(cfg);
    case Kind::Uniform: return uniform(cfg);
    case Kind::Zero: return zero_state(cfg);
    case Kind::Explicit:
      return load_explicit_state(cfg, file.is_absolute() ? file : base_dir / file);
  }
  throw std::logic_error("unreachable");
}

std::string InitialStateSpec::label() const {
  switch (kind) {
    case Kind::SingleExcited: return "single_excited j0=" + std::to_string(j0);
    case Kind::MostSubradiant: return "most_subradiant";
    case Kind::TimedDicke: return "timed_dicke";
    case Kind::Uniform: return "uniform";
    case Kind::Zero: return "zero";
    case Kind::Explicit: return "explicit " + file.string();
  }
  return {};
}

void DynamicsScenario::validate(const std::filesystem::path& base_dir) const {
  chain.validate();
  drive.validate();
  integration.validate();
  if (outputs.empty())
    throw std::runtime_error("scenario output list must not be empty");
  if (grid_points < 2) throw std::runtime_error("grid_points must be >= 2");
  if (initial_state.kind == InitialStateSpec::Kind::Explicit) {
    const auto p = initial_state.file.is_absolute() ? initial_state.file
                                                    : base_dir / initial_state.file;
    if (!std::filesystem::exists(p))
      throw std::runtime_error("referenced state file does not exist: " + p.string());
  }
  const bool needs_snapshots =
      std::any_of(outputs.begin(), outputs.end(), [](const OutputSpec& o) {
        return o.kind == OutputSpec::Kind::DensitySeries ||
               o.kind == OutputSpec::Kind::BetaSnapshots;
      });
  if (needs_snapshots && integration.snapshot_times.empty())
    throw std::runtime_error(
        "density/beta outputs need at least one snapshot time");
}

Scenario load_scenario(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path.string() + ":" +
                             std::to_string(line_of_byte(text, e.byte)) +
                             ": " + e.what());
  }
  try {
    const int version = j.at("version").get<int>();
    if (version != 1)
      throw std::runtime_error("unsupported scenario version " +
                               std::to_string(version));
    const std::string command = j.value("command", "dynamics");
    if (command == "dynamics") {
      DynamicsScenario sc;
      sc.version = version;
      sc.description = j.value("description", "");
      sc.chain = parse_chain(j.at("chain"));
      sc.initial_state = parse_initial_state(j.at("initial_state"));
      if (j.contains("drive")) sc.drive = parse_drive(j.at("drive"));
      const auto& ji = j.at("integration");
      sc.integration.dt = ji.value("dt", 1e-3);
      sc.integration.t_end = ji.at("t_end").get<double>();
      if (ji.contains("snapshot_times"))
        sc.integration.snapshot_times =
            ji.at("snapshot_times").get<std::vector<double>>();
      sc.grid_points = j.value("grid_points", 1024);
      for (const auto& jo : j.at("outputs")) sc.outputs.push_back(parse_output(jo));
      sc.validate(path.parent_path());
      return sc;
    }
    if (command == "spectrum") {
      SpectrumScenario sc;
      sc.version = version;
      sc.description = j.value("description", "");
      sc.n = j.at("n").get<int>();
      sc.a = j.at("a").get<double>();
      sc.models = j.at("models").get<std::vector<std::string>>();
      sc.points = j.value("points", 1024);
      sc.file = j.at("file").get<std::string>();
      return sc;
    }
    if (command == "intensity") {
      IntensityScenario sc;
      sc.version = version;
      sc.description = j.value("description", "");
      sc.chain = parse_chain(j.at("chain"));
      sc.state = parse_initial_state(j.at("state"));
      sc.plane = parse_plane(j.at("plane"));
      if (j.contains("dipole_axis"))
        sc.dipole_axis = parse_axis_vector(j.at("dipole_axis"));
      sc.csv = j.at("csv").get<std::string>();
      if (j.contains("pgm")) sc.pgm = j.at("pgm").get<std::string>();
      return sc;
    }
    throw std::runtime_error("unknown command '" + command + "'");
  } catch (const json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void run_dynamics_scenario(const DynamicsScenario& sc,
                           const std::filesystem::path& base_dir,
                           const std::filesystem::path& out_dir) {
  sc.validate(base_dir);
  const DipoleState initial = sc.initial_state.build(sc.chain, base_dir);
  const Trajectory traj = integrate(initial, sc.chain, sc.drive, sc.integration);

  const std::string comment =
      "subchain dynamics " + chain_comment(sc.chain) +
      " state=" + sc.initial_state.label() + " " + drive_comment(sc.drive) +
      " dt=" + fmtg(sc.integration.dt) + " t_end=" + fmtg(sc.integration.t_end) +
      " grid_points=" + std::to_string(sc.grid_points);

  for (const OutputSpec& out : sc.outputs) {
    const auto target = out_dir / out.file;
    switch (out.kind) {
      case OutputSpec::Kind::DensitySeries: {
        const auto grid = SpectralGrid::uniform(sc.grid_points, sc.chain.a);
        std::vector<SpectralDensity> series;
        series.reserve(traj.snapshots.size());
        for (const auto& snap : traj.snapshots) series.push_back(density(snap, grid));
        CsvBuilder csv(comment);
        std::vector<std::string> cols{"x"};
        for (const auto& snap : traj.snapshots)
          cols.push_back("P_t" + fmtg(snap.time));
        csv.header(cols);
        for (int i = 0; i < grid.size(); ++i) {
          std::vector<double> row{grid.points[i]};
          for (const auto& dens : series) row.push_back(dens.p[i]);
          csv.row(row);
        }
        write_file_atomic(target, csv.str());
        break;
      }
      case OutputSpec::Kind::MeanExcitation: {
        CsvBuilder csv(comment);
        csv.header({"t", "mean_excitation"});
        for (std::size_t k = 0; k < traj.times.size(); ++k) {
          if (k % static_cast<std::size_t>(out.stride) != 0 &&
              k + 1 != traj.times.size())
            continue;
          csv.row({traj.times[k], traj.mean_excitation_series[k]});
        }
        write_file_atomic(target, csv.str());
        break;
      }
      case OutputSpec::Kind::BetaSnapshots: {
        CsvBuilder csv(comment);
        std::vector<std::string> cols{"j"};
        for (const auto& snap : traj.snapshots) {
          cols.push_back("re_t" + fmtg(snap.time));
          cols.push_back("im_t" + fmtg(snap.time));
        }
        csv.header(cols);
        for (int jdx = 0; jdx < sc.chain.n_atoms; ++jdx) {
          std::vector<double> row{static_cast<double>(jdx + 1)};
          for (const auto& snap : traj.snapshots) {
            row.push_back(snap.beta[jdx].real());
            row.push_back(snap.beta[jdx].imag());
          }
          csv.row(row);
        }
        write_file_atomic(target, csv.str());
        break;
      }
      case OutputSpec::Kind::FieldMap: {
        // rendered from the final state of the run
        const FieldMap map = intensity_map(out.plane, traj.final_state,
                                           sc.chain, out.dipole_axis);
        write_file_atomic(
            target, csv_matrix(comment + " t=" + fmtg(traj.final_state.time),
                               map.intensity, out.plane.resolution,
                               out.plane.resolution));
        if (!out.pgm.empty())
          write_file_atomic(out_dir / out.pgm,
                            pgm_matrix(map.intensity, out.plane.resolution,
                                       out.plane.resolution));
        break;
      }
    }
  }
}

ChainConfig parse_model_spec(const std::string& spec, int n, double a,
                             bool degrees) {
  if (spec == "scalar") return ChainConfig::scalar(n, a);
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  if ((head == "vector" || head == "vectorial") && colon != std::string::npos) {
    double delta = std::stod(spec.substr(colon + 1));
    if (degrees) delta *= M_PI / 180.0;
    return ChainConfig::vectorial(n, a, delta);
  }
  throw std::runtime_error("model must be 'scalar' or 'vector:<delta>' (got '" +
                           spec + "')");
}

std::string model_label(const ChainConfig& cfg) {
  if (cfg.model == Model::Scalar) return "scalar";
  return "vector_" + fmtg(cfg.delta);
}

void write_spectrum_csv(int n, double a,
                        const std::vector<ChainConfig>& models,
                        int points, const std::filesystem::path& out_file) {
  if (!(a > 0.0 && a < M_PI))
    throw std::runtime_error(
        "spectrum needs 0 < a < pi (light line inside the Brillouin zone)");
  const SpectralGrid grid = SpectralGrid::uniform(points, a);

  std::string comment = "subchain spectrum n=" + std::to_string(n) +
                        " a=" + fmt17(a) + " points=" + std::to_string(points) +
                        " models=";
  for (std::size_t m = 0; m < models.size(); ++m) {
    if (m) comment += ';';
    comment += model_label(models[m]);
  }
  CsvBuilder csv(comment);

  std::vector<std::string> cols{"x"};
  for (const auto& cfg : models) {
    const std::string label = model_label(cfg);
    cols.push_back(label + "_gamma_exact");
    cols.push_back(label + "_gamma_sinc");
    cols.push_back(label + "_gamma_infinite");
    cols.push_back(label + "_omega_finite");
    cols.push_back(label + "_omega_infinite");
  }
  csv.header(cols);

  // five curves per model over the grid, grid-parallel with fixed slots
  std::vector<std::vector<double>> table(models.size() * 5,
                                         std::vector<double>(grid.size()));
  for (std::size_t m = 0; m < models.size(); ++m) {
    const ChainConfig& cfg = models[m];
    const Eigen::MatrixXd decay_part = coupling_matrix(cfg).real();
    parallel_for(grid.size(), [&, m](int i) {
      const double x = grid.points[i];
      table[m * 5 + 0][i] = gamma_exact_with_matrix(decay_part, x);
      table[m * 5 + 1][i] = gamma_sinc_approx(cfg, x);
      table[m * 5 + 2][i] = gamma_infinite(cfg.a, x, cfg.model, cfg.delta).value;
      table[m * 5 + 3][i] = omega_finite(cfg, x);
      table[m * 5 + 4][i] = omega_infinite(cfg.a, x, cfg.model, cfg.delta);
    });
  }
  for (int i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid.points[i]};
    for (std::size_t c = 0; c < table.size(); ++c) row.push_back(table[c][i]);
    csv.row(row);
  }
  write_file_atomic(out_file, csv.str());
}

void run_spectrum_scenario(const SpectrumScenario& sc,
                           const std::filesystem::path& out_dir) {
  std::vector<ChainConfig> models;
  for (const auto& m : sc.models)
    models.push_back(parse_model_spec(m, sc.n, sc.a, false));
  if (models.empty()) throw std::runtime_error("spectrum scenario needs models");
  write_spectrum_csv(sc.n, sc.a, models, sc.points, out_dir / sc.file);
}

void run_intensity_scenario(const IntensityScenario& sc,
                            const std::filesystem::path& base_dir,
                            const std::filesystem::path& out_dir) {
  const DipoleState state = sc.state.build(sc.chain, base_dir);
  const FieldMap map = intensity_map(sc.plane, state, sc.chain, sc.dipole_axis);
  const std::string comment =
      "subchain intensity " + chain_comment(sc.chain) +
      " state=" + sc.state.label() + " plane_offset=" + fmtg(sc.plane.offset) +
      " resolution=" + std::to_string(sc.plane.resolution);
  write_file_atomic(out_dir / sc.csv,
                    csv_matrix(comment, map.intensity, sc.plane.resolution,
                               sc.plane.resolution));
  if (!sc.pgm.empty())
    write_file_atomic(out_dir / sc.pgm,
                      pgm_matrix(map.intensity, sc.plane.resolution,
                                 sc.plane.resolution));
}

}  // namespace subchain::tools
