#pragma once

// Experiment configuration: JSON with a "schema_version" field, validated
// against every forward-solver precondition before any compute starts.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "irsp/forward_solver.hpp"
#include "irsp/presets.hpp"

namespace irsp {

inline constexpr int kSchemaVersion = 1;

// Invalid or inconsistent configuration; the message names the constraint.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SupportConfig {
  std::string shape = "ball";  // ball | box
  Vec3 center = Vec3::Zero();
  double radius = 0.5;                   // ball
  Vec3 half_extent = Vec3::Constant(0.5);  // box
};

struct ShellConfig {
  double radius = 1.0;
  int count = 16;
};

struct ReceiverConfig {
  std::vector<ShellConfig> shells;  // Fibonacci points on centered spheres
  std::vector<Vec3> positions;      // explicit list, appended after the shells
  std::optional<double> min_distance;
};

struct FrequencyConfig {
  std::vector<double> values;  // explicit list
  double band_K = 0.0;         // > 0 selects the band [1, K]
  double spacing = 0.25;
};

struct RecoveryConfig {
  double lambda = 1e-6;
  int coarsen = 2;
  bool nonneg = true;
  bool extrapolate = false;
  std::string source = "estimates";  // estimates | exact
  std::vector<double> lambda_sweep;
};

struct ErgodicConfig {
  std::size_t realization = 0;
};

struct VerifyConfig {
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::size_t realizations = 400;
};

struct ExperimentConfig {
  int schema_version = kSchemaVersion;
  double L = 2.0;
  int n = 16;
  SupportConfig support;
  PresetParams strength;
  std::string strength_file;  // strength volume written by simulate; replaces the preset
  double s = 1.0;
  ReceiverConfig receivers;
  FrequencyConfig frequencies;
  std::size_t realizations = 1;
  std::uint64_t master_seed = 1;
  int quadrature_order = 0;
  bool divergence_free = false;
  bool magnetic = false;
  std::size_t saved_sources = 1;  // realizations whose J volumes are written
  RecoveryConfig recovery;
  ErgodicConfig ergodic;
  VerifyConfig verify;
  std::string output = "out";
};

// Parses and checks field types and ranges. Throws ConfigError.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const ExperimentConfig& config);
// SHA-256 of the canonical JSON dump.
std::string config_hash(const ExperimentConfig& config);

// Points on a centered sphere by the Fibonacci spiral.
std::vector<Vec3> fibonacci_sphere(double radius, int count);

// Geometry and data derived from a config, fully validated.
struct Experiment {
  ExperimentConfig config;
  StrengthField strength;
  ReceiverSet receivers;
  std::vector<double> ks;
  QuadratureOptions quadrature;
  [[nodiscard]] const GridSpec& grid() const { return strength.grid; }
};

// Builds the grid, strength and receivers and checks the support guard, the
// receiver clearance and the resolution rule. Throws ConfigError.
Experiment build_experiment(const ExperimentConfig& config);

std::vector<double> frequency_values(const FrequencyConfig& f);

}  // namespace irsp
