#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "collusion/error.hpp"
#include "commands.hpp"

namespace {

enum Exit : int { kOk = 0, kInputError = 3, kSchemaMismatch = 4, kInvalidArgument = 5, kOther = 6 };

int report_error(const char* kind, const std::string& message, int code) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  cli::PipelineConfig cfg;
  CLI::App app{"Detect organized posting behaviour in hashtag collections."};
  app.name("collusion_kit");
  app.set_config("--config", "", "TOML/INI file with option values; flags override it");
  app.require_subcommand(1);
  app.fallthrough();
  app.get_formatter()->column_width(34);

  app.add_option("--corpus", cfg.corpus, "Tweet JSONL file or directory");
  app.add_option("--profiles", cfg.profiles, "Profile JSONL file (default: found next to the corpus)");
  app.add_option("--hashtag", cfg.hashtags, "Traced hashtag; repeatable");
  app.add_option("--labels", cfg.labels,
                 "Label CSV hashtag,organization,politicality,camp (default: labels.csv in the corpus directory)");
  app.add_option("--window-days", cfg.window_days, "Expansion window in days")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--interval-mins", cfg.interval_mins, "Temporal slice length in minutes")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--schema", cfg.schema, "Bucket schema override (JSON)");
  app.add_option("--cutoff", cfg.cutoff, "Registration cutoff date")->capture_default_str();
  app.add_option("--today", cfg.today, "Reference date for per-day rates (default: last corpus day)");
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--task", cfg.task, "Classification task")
      ->capture_default_str()
      ->check(CLI::IsMember({"organized", "political", "camp"}));
  app.add_option("--variant", cfg.variants, "Data set variant; repeatable")
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "pca", "no-traced", "pca-no-traced"}));
  app.add_option("--model", cfg.models, "Classifier; repeatable")
      ->capture_default_str()
      ->check(CLI::IsMember({"rf", "logreg", "svm"}));
  app.add_option("--out", cfg.out, "Output directory")->capture_default_str();
  app.add_option("--variance-kept", cfg.variance_kept, "PCA variance share to keep")
      ->capture_default_str()
      ->check(CLI::Range(1e-9, 1.0));
  app.add_option("--folds", cfg.folds, "Cross-validation folds")
      ->capture_default_str()
      ->check(CLI::Range(2, 1000));
  app.add_option("--trees", cfg.params.forest.trees, "Random forest trees")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--max-features", cfg.params.forest.max_features,
                 "Features tried per split (0: ceil(sqrt(d)))")
      ->capture_default_str();
  app.add_option("--l2", cfg.params.logistic.l2, "Logistic regression L2 strength")
      ->capture_default_str();
  app.add_option("--max-epochs", cfg.params.logistic.max_epochs, "Logistic regression iteration cap")
      ->capture_default_str();
  app.add_option("--svm-lambda", cfg.params.svm.lambda, "Linear SVM regularization")
      ->capture_default_str();
  app.add_option("--svm-epochs", cfg.params.svm.epochs, "Linear SVM epochs")->capture_default_str();

  auto* inspect = app.add_subcommand("inspect", "Per-hashtag inspection statistics");
  auto* collect = app.add_subcommand("collect", "Build collections and dump their expanded sets");
  auto* features = app.add_subcommand("features", "Extract one feature row per collection");
  features->add_flag("--histograms", cfg.histograms, "Also write per-feature histogram CSV/SVG");
  auto* trainset = app.add_subcommand("trainset", "Turn a feature CSV into labelled training sets");
  trainset->add_option("--features", cfg.features, "features.csv written by 'features'")->required();
  auto* train = app.add_subcommand("train", "Fit a classifier and save it");
  train->add_option("--trainset", cfg.trainsets, "Trainset CSV")->required()->expected(1);
  auto* eval = app.add_subcommand("eval", "Cross-validate classifiers or score a saved model");
  eval->add_option("--trainset", cfg.trainsets, "Trainset CSV; repeatable")->required();
  eval->add_option("--model-file", cfg.model_file, "Score this saved model instead of running CV");
  auto* rank = app.add_subcommand("rank", "Best-first feature subset ranking");
  rank->add_option("--trainset", cfg.trainsets, "Trainset CSV")->required()->expected(1);
  rank->add_option("--top-k", cfg.rank.top_k, "Features to report")->capture_default_str();
  rank->add_option("--stall-limit", cfg.rank.stall_limit, "Non-improving expansions before stopping")
      ->capture_default_str();
  rank->add_option("--rank-folds", cfg.rank.folds, "Folds used to score a subset")
      ->capture_default_str();
  rank->add_option("--rank-trees", cfg.rank.forest.trees, "Trees used to score a subset")
      ->capture_default_str();
  auto* overlap = app.add_subcommand("overlap", "Users shared by two traced hashtags");
  auto* synth = app.add_subcommand("synth", "Write a labelled synthetic corpus");
  synth->add_option("--organized", cfg.organized, "Organized collections")->capture_default_str();
  synth->add_option("--organic", cfg.organic, "Organic collections")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const std::vector<std::pair<CLI::App*, int (*)(const cli::PipelineConfig&)>> commands = {
      {inspect, cli::run_inspect}, {collect, cli::run_collect},   {features, cli::run_features},
      {trainset, cli::run_trainset}, {train, cli::run_train},     {eval, cli::run_eval},
      {rank, cli::run_rank},       {overlap, cli::run_overlap}, {synth, cli::run_synth}};
  try {
    for (const auto& [sub, run] : commands) {
      if (!sub->parsed()) continue;
      std::cerr << "config " << cli::config_to_json(sub->get_name(), cfg) << '\n';
      return run(cfg);
    }
  } catch (const collusion::SchemaMismatch& e) {
    return report_error("schema_mismatch", e.what(), kSchemaMismatch);
  } catch (const collusion::InputError& e) {
    return report_error("input_error", e.what(), kInputError);
  } catch (const collusion::InvalidArgument& e) {
    return report_error("invalid_argument", e.what(), kInvalidArgument);
  } catch (const std::exception& e) {
    return report_error("error", e.what(), kOther);
  }
  return kOk;
}
