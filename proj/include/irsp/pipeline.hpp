#pragma once

// Batch stages over an output directory: simulate -> moments -> ergodic /
// recover, plus a property suite. Every stage records its inputs, outputs,
// digests and timing in manifest.json.

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "irsp/config.hpp"
#include "irsp/estimators.hpp"

namespace irsp {

inline constexpr const char* kArtifactVersion = "1.0.0";

struct StageResult {
  bool passed = true;            // verification outcome; always true for data stages
  std::vector<std::string> inputs;   // file names relative to the output directory
  std::vector<std::string> outputs;
  nlohmann::json summary = nlohmann::json::object();
};

StageResult cmd_simulate(const Experiment& ex, const std::filesystem::path& out);
StageResult cmd_moments(const Experiment& ex, const std::filesystem::path& out);
StageResult cmd_ergodic(const Experiment& ex, const std::filesystem::path& out);
StageResult cmd_recover(const Experiment& ex, const std::filesystem::path& out);
StageResult cmd_verify(const Experiment& ex, const std::filesystem::path& out);

// Runs one stage by name and merges its record into out/manifest.json.
StageResult run_stage(const std::string& name, const Experiment& ex, const std::filesystem::path& out);

// Reads ensemble.csv back against the experiment geometry.
FieldEnsemble read_ensemble(const Experiment& ex, const std::filesystem::path& path);
void write_ensemble(const FieldEnsemble& ens, const std::filesystem::path& path, bool magnetic);

// Per-(receiver, k, j, l) tables: value and optional standard error.
void write_matrix_table(const std::filesystem::path& path, const ReceiverSet& receivers,
                        const std::vector<double>& ks, const std::vector<Mat3c>& values,
                        const std::vector<Mat3c>* stderrs, const std::vector<double>* defect = nullptr);
// Reads a table written by write_matrix_table into values[ik * receivers + ir].
std::vector<Mat3c> read_matrix_table(const std::filesystem::path& path, const ReceiverSet& receivers,
                                     const std::vector<double>& ks);

}  // namespace irsp
