#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "collusion/classifier.hpp"
#include "collusion/feature_io.hpp"
#include "collusion/pipeline.hpp"
#include "collusion/ranking.hpp"

namespace cli {

struct PipelineConfig {
  std::string corpus;
  std::string profiles;
  std::vector<std::string> hashtags;
  std::string labels;
  int window_days = 7;
  int interval_mins = 60;
  std::string schema;
  std::string cutoff = "2015-07-01";
  std::string today;
  std::uint64_t seed = 1;
  std::string task = "organized";
  std::vector<std::string> variants{"all"};
  std::vector<std::string> models{"rf"};
  std::string out = ".";
  double variance_kept = 0.95;
  std::size_t folds = 10;
  collusion::ModelParams params;

  // command specific
  bool histograms = false;
  std::string features;
  std::vector<std::string> trainsets;
  std::string model_file;
  collusion::RankOptions rank;
  std::size_t organized = 100;
  std::size_t organic = 100;
};

/// JSON rendering of the resolved configuration, logged before every run.
std::string config_to_json(const std::string& command, const PipelineConfig& cfg);

int run_inspect(const PipelineConfig& cfg);
int run_collect(const PipelineConfig& cfg);
int run_features(const PipelineConfig& cfg);
int run_trainset(const PipelineConfig& cfg);
int run_train(const PipelineConfig& cfg);
int run_eval(const PipelineConfig& cfg);
int run_rank(const PipelineConfig& cfg);
int run_overlap(const PipelineConfig& cfg);
int run_synth(const PipelineConfig& cfg);

/// Per-feature bucket histograms averaged by organization label: one CSV and
/// one SVG bar chart per user feature under dir.
void write_histograms(const std::filesystem::path& dir, const collusion::FeatureSchema& schema,
                      const std::vector<collusion::FeatureRow>& rows);

}  // namespace cli
