#pragma once

#include "subchain/dynamics.hpp"
#include "subchain/radiation.hpp"
#include "subchain/types.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace subchain::tools {

struct InitialStateSpec {
  enum class Kind { SingleExcited, MostSubradiant, TimedDicke, Uniform, Zero, Explicit };
  Kind kind = Kind::Uniform;
  int j0 = 1;                       // SingleExcited
  std::filesystem::path file;      // Explicit

  DipoleState build(const ChainConfig& cfg,
                    const std::filesystem::path& base_dir) const;
  std::string label() const;
};

struct OutputSpec {
  enum class Kind { DensitySeries, MeanExcitation, BetaSnapshots, FieldMap };
  Kind kind = Kind::DensitySeries;
  std::filesystem::path file;
  std::filesystem::path pgm;        // FieldMap only, optional
  int stride = 1;                   // MeanExcitation row thinning
  PlaneSpec plane;                  // FieldMap
  Eigen::Vector3d dipole_axis = Eigen::Vector3d::UnitX();
};

/// One reproducible run: chain + initial state + drive + integration,
/// with a list of file outputs.
struct DynamicsScenario {
  int version = 1;
  std::string description;
  ChainConfig chain;
  InitialStateSpec initial_state;
  DriveConfig drive = DriveConfig::off();
  IntegrationConfig integration;
  int grid_points = 1024;
  std::vector<OutputSpec> outputs;

  void validate(const std::filesystem::path& base_dir) const;
};

struct SpectrumScenario {
  int version = 1;
  std::string description;
  int n = 10;
  double a = 1.0;
  std::vector<std::string> models;   // "scalar" or "vector:<delta>"
  int points = 1024;
  std::filesystem::path file;
};

struct IntensityScenario {
  int version = 1;
  std::string description;
  ChainConfig chain;
  InitialStateSpec state;
  PlaneSpec plane;
  Eigen::Vector3d dipole_axis = Eigen::Vector3d::UnitX();
  std::filesystem::path csv;
  std::filesystem::path pgm;        // optional
};

using Scenario = std::variant<DynamicsScenario, SpectrumScenario, IntensityScenario>;

/// Parse a scenario JSON file. Throws std::runtime_error with the file
/// name and line number on malformed input.
Scenario load_scenario(const std::filesystem::path& path);

/// Execute and write every output under out_dir.
void run_dynamics_scenario(const DynamicsScenario& sc,
                           const std::filesystem::path& base_dir,
                           const std::filesystem::path& out_dir);
void run_spectrum_scenario(const SpectrumScenario& sc,
                           const std::filesystem::path& out_dir);
void run_intensity_scenario(const IntensityScenario& sc,
                            const std::filesystem::path& base_dir,
                            const std::filesystem::path& out_dir);

/// Model-list entry ("scalar", "vector:<delta>") to a chain config.
ChainConfig parse_model_spec(const std::string& spec, int n, double a,
                             bool degrees);
std::string model_label(const ChainConfig& cfg);

/// Shared by the spectrum command and spectrum scenarios.
void write_spectrum_csv(int n, double a,
                        const std::vector<ChainConfig>& models,
                        int points, const std::filesystem::path& out_file);

}  // namespace subchain::tools
