#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "collusion/corpus.hpp"
#include "collusion/corpus_io.hpp"
#include "collusion/dataset.hpp"
#include "collusion/error.hpp"
#include "collusion/evaluation.hpp"
#include "collusion/parallel.hpp"
#include "collusion/pca.hpp"
#include "collusion/synth.hpp"

namespace cli {
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace collusion;

namespace {

std::string normalize_tag(std::string tag) {
  if (!tag.empty() && tag.front() == '#') tag.erase(0, 1);
  for (char& c : tag) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return tag;
}

TweetStore load_store(const PipelineConfig& cfg) {
  if (cfg.corpus.empty()) throw InvalidArgument("--corpus is required");
  TweetStore store =
      cfg.profiles.empty() ? load_corpus(cfg.corpus) : load_corpus(cfg.corpus, cfg.profiles);
  const auto& r = store.report();
  std::cerr << "loaded " << r.tweets_loaded << " tweets (" << r.tweets_skipped << " skipped, "
            << r.duplicate_tweets << " duplicates), " << r.profiles_loaded << " profiles ("
            << r.profiles_skipped << " skipped)\n";
  return store;
}

PipelineOptions pipeline_options(const PipelineConfig& cfg) {
  PipelineOptions o;
  o.window_days = cfg.window_days;
  o.interval = Seconds{std::int64_t(cfg.interval_mins) * 60};
  o.cutoff = parse_date(cfg.cutoff);
  if (!cfg.today.empty()) o.today = parse_date(cfg.today);
  return o;
}

FeatureSchema schema_for(const PipelineConfig& cfg, const fs::path& fallback = {}) {
  if (!cfg.schema.empty()) return FeatureSchema::load(cfg.schema);
  if (!fallback.empty() && fs::exists(fallback)) return FeatureSchema::load(fallback);
  return FeatureSchema::default_schema();
}

std::map<std::string, LabelTriple> labels_for(const PipelineConfig& cfg) {
  if (!cfg.labels.empty()) return read_labels_csv(cfg.labels);
  if (cfg.corpus.empty()) return {};
  const fs::path corpus = cfg.corpus;
  const fs::path guess =
      fs::is_directory(corpus) ? corpus / "labels.csv" : corpus.parent_path() / "labels.csv";
  if (fs::exists(guess)) return read_labels_csv(guess);
  return {};
}

std::vector<std::string> hashtags_for(const PipelineConfig& cfg,
                                      const std::map<std::string, LabelTriple>& labels) {
  std::vector<std::string> tags;
  for (const auto& h : cfg.hashtags) tags.push_back(normalize_tag(h));
  if (tags.empty()) {
    for (const auto& [tag, label] : labels) tags.push_back(tag);
  }
  if (tags.empty()) throw InvalidArgument("no hashtag given (use --hashtag or a labels file)");
  return tags;
}

fs::path out_dir(const PipelineConfig& cfg) {
  const fs::path dir = cfg.out;
  fs::create_directories(dir);
  return dir;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  return out;
}

json metrics_json(const ClassificationMetrics& m) {
  json j;
  j["accuracy"] = m.accuracy;
  j["precision"] = m.precision;
  j["recall"] = m.recall;
  j["f_measure"] = m.f_measure;
  if (m.roc_auc) j["roc_auc"] = *m.roc_auc;
  return j;
}

ModelKind model_kind(const std::string& name) {
  auto k = parse_model(name);
  if (!k) throw InvalidArgument("unknown model '" + name + "'");
  return *k;
}

}  // namespace

std::string config_to_json(const std::string& command, const PipelineConfig& cfg) {
  json j;
  j["command"] = command;
  j["corpus"] = cfg.corpus;
  j["profiles"] = cfg.profiles;
  j["hashtags"] = cfg.hashtags;
  j["labels"] = cfg.labels;
  j["window_days"] = cfg.window_days;
  j["interval_mins"] = cfg.interval_mins;
  j["schema"] = cfg.schema;
  j["cutoff"] = cfg.cutoff;
  j["today"] = cfg.today;
  j["seed"] = cfg.seed;
  j["task"] = cfg.task;
  j["variants"] = cfg.variants;
  j["models"] = cfg.models;
  j["out"] = cfg.out;
  j["variance_kept"] = cfg.variance_kept;
  j["folds"] = cfg.folds;
  j["rf"] = json::parse(params_to_json(ModelKind::RandomForest, cfg.params));
  j["logreg"] = json::parse(params_to_json(ModelKind::LogisticRegression, cfg.params));
  j["svm"] = json::parse(params_to_json(ModelKind::LinearSVM, cfg.params));
  j["histograms"] = cfg.histograms;
  j["features"] = cfg.features;
  j["trainsets"] = cfg.trainsets;
  j["model_file"] = cfg.model_file;
  j["rank"] = {{"top_k", cfg.rank.top_k},
               {"stall_limit", cfg.rank.stall_limit},
               {"folds", cfg.rank.folds},
               {"trees", cfg.rank.forest.trees}};
  j["synth"] = {{"organized", cfg.organized}, {"organic", cfg.organic}};
  j["threads"] = worker_count();
  return j.dump();
}

int run_inspect(const PipelineConfig& cfg) {
  const TweetStore store = load_store(cfg);
  std::vector<std::string> tags;
  for (const auto& h : cfg.hashtags) tags.push_back(normalize_tag(h));

  std::vector<std::pair<std::string, InspectionStats>> rows;
  if (tags.empty()) {
    rows.emplace_back("*", inspection_stats(store.tweets()));
  }
  for (const auto& tag : tags) {
    std::vector<Tweet> tweets;
    for (const Tweet* t : store.by_hashtag(tag)) tweets.push_back(*t);
    if (tweets.empty()) throw InputError("no tweet carries #" + tag);
    rows.emplace_back(tag, inspection_stats(tweets));
  }

  auto csv = open_out(out_dir(cfg) / "inspect.csv");
  csv << "hashtag,tweets,distinct_word_pct,tweets_per_user,retweet_pct,hashtags_var,hashtags_std\n";
  std::printf("%-24s %9s %8s %6s %8s %8s %8s\n", "hashtag", "#tweets", "DW%", "TPU", "RT%",
              "var", "std");
  for (const auto& [tag, s] : rows) {
    std::printf("%-24s %9zu %8.2f %6.2f %8.2f %8.2f %8.2f\n", tag.c_str(), s.tweet_count,
                s.distinct_word_pct, s.tweets_per_user_mean, s.retweet_pct,
                s.hashtags_per_tweet_var, s.hashtags_per_tweet_std);
    csv << tag << ',' << s.tweet_count << ',' << format_number(s.distinct_word_pct) << ','
        << format_number(s.tweets_per_user_mean) << ',' << format_number(s.retweet_pct) << ','
        << format_number(s.hashtags_per_tweet_var) << ','
        << format_number(s.hashtags_per_tweet_std) << '\n';
  }
  return 0;
}

int run_collect(const PipelineConfig& cfg) {
  const TweetStore store = load_store(cfg);
  const auto tags = hashtags_for(cfg, labels_for(cfg));
  const auto options = pipeline_options(cfg);
  const fs::path dir = out_dir(cfg);
  std::printf("%-24s %8s %9s %7s %9s %7s\n", "hashtag", "seed", "expanded", "users",
              "no-profile", "slices");
  for (const auto& tag : tags) {
    const Collection c = build_collection(store, tag, options.window_days);
    std::size_t missing = 0;
    for (const auto& [id, p] : c.users) missing += p ? 0 : 1;
    const auto slices = partition_intervals(c, options.interval);
    std::printf("%-24s %8zu %9zu %7zu %9zu %7zu\n", tag.c_str(), c.seed_tweets.size(),
                c.expanded_tweets.size(), c.users.size(), missing, slices.size());
    auto out = open_out(dir / ("collection_" + tag + ".jsonl"));
    for (const auto& t : c.expanded_tweets) out << tweet_to_json_line(t) << '\n';
  }
  return 0;
}

int run_features(const PipelineConfig& cfg) {
  const TweetStore store = load_store(cfg);
  const auto labels = labels_for(cfg);
  const auto tags = hashtags_for(cfg, labels);
  const auto options = pipeline_options(cfg);
  const FeatureSchema schema = schema_for(cfg);
  const LexiconSentimentScorer scorer;

  std::vector<std::optional<FeatureRow>> rows(tags.size());
  std::vector<std::string> failures(tags.size());
  parallel_for(tags.size(), [&](std::size_t i) {
    try {
      auto features = extract_features(store, tags[i], options, schema, scorer);
      if (const auto it = labels.find(tags[i]); it != labels.end()) {
        features.row.labels = it->second;
      }
      rows[i] = std::move(features.row);
    } catch (const Error& e) {
      failures[i] = e.what();
    }
  });

  std::vector<FeatureRow> written;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (rows[i]) {
      written.push_back(std::move(*rows[i]));
    } else {
      std::cerr << "skipping #" << tags[i] << ": " << failures[i] << '\n';
    }
  }
  if (written.empty()) throw InputError("no collection produced a feature row");

  const fs::path dir = out_dir(cfg);
  auto csv = open_out(dir / "features.csv");
  write_feature_csv(csv, schema, written);
  schema.save(dir / "schema.json");
  if (cfg.histograms) write_histograms(dir / "histograms", schema, written);
  std::cout << "wrote " << written.size() << " rows x " << schema.width() << " columns to "
            << (dir / "features.csv").string() << " (schema " << schema.hash() << ")\n";
  return 0;
}

int run_trainset(const PipelineConfig& cfg) {
  const fs::path features = cfg.features;
  const FeatureSchema schema = schema_for(cfg, features.parent_path() / "schema.json");
  const FeatureTable table = read_feature_csv(features);
  const Task task = *parse_task(cfg.task);
  const Dataset data = make_dataset(table.rows, table.columns, schema, task);
  if (data.size() < table.rows.size()) {
    std::cerr << (table.rows.size() - data.size()) << " rows lack a " << cfg.task
              << " label and were left out\n";
  }
  const fs::path dir = out_dir(cfg);
  for (const auto& name : cfg.variants) {
    const Variant variant = *parse_variant(name);
    Dataset d;
    switch (variant) {
      case Variant::All: d = data; break;
      case Variant::NoTraced: d = ablate_traced_features(data).data; break;
      case Variant::Pca: d = pca_fit_transform(data, cfg.variance_kept); break;
      case Variant::PcaNoTraced:
        d = pca_fit_transform(ablate_traced_features(data).data, cfg.variance_kept);
        break;
    }
    const fs::path path = dir / ("trainset_" + cfg.task + "_" + name + ".csv");
    save_trainset(path, d, variant);
    std::cout << path.string() << ": " << d.size() << " rows x " << d.width() << " columns, hash "
              << d.schema_hash() << '\n';
  }
  return 0;
}

int run_train(const PipelineConfig& cfg) {
  const Trainset ts = load_trainset(cfg.trainsets.at(0));
  const fs::path dir = out_dir(cfg);
  for (const auto& name : cfg.models) {
    const ModelKind kind = model_kind(name);
    const Model model = train(kind, ts.data, cfg.params, cfg.seed);
    std::size_t correct = 0;
    std::vector<double> row(ts.data.width());
    for (std::size_t i = 0; i < ts.data.size(); ++i) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        row[j] = ts.data.rows(Eigen::Index(i), Eigen::Index(j));
      }
      correct += model->predict(row).label == ts.data.labels[i] ? 1 : 0;
    }
    const fs::path path = dir / ("model_" + name + "_" + std::string(task_name(ts.data.task)) +
                                 "_" + std::string(variant_name(ts.variant)) + ".bin");
    save_model(path, *model, ts.schema_hash);
    std::printf("%s: training accuracy %.4f, schema %s\n", path.string().c_str(),
                double(correct) / double(ts.data.size()), ts.schema_hash.c_str());
  }
  return 0;
}

int run_eval(const PipelineConfig& cfg) {
  const fs::path dir = out_dir(cfg);
  if (!cfg.model_file.empty()) {
    const LoadedModel model = load_model(cfg.model_file);
    json all = json::array();
    for (const auto& path : cfg.trainsets) {
      const Trainset ts = load_trainset(path);
      const auto predictions = score_rows(model, ts.data);
      ConfusionMatrix cm(ts.data.num_classes());
      std::vector<double> scores;
      std::vector<int> positive;
      for (std::size_t i = 0; i < predictions.size(); ++i) {
        cm.add(ts.data.labels[i], predictions[i].label);
        if (ts.data.num_classes() == 2) {
          scores.push_back(predictions[i].scores[1]);
          positive.push_back(ts.data.labels[i] == 1 ? 1 : 0);
        }
      }
      ClassificationMetrics m = metrics_from(cm);
      if (ts.data.num_classes() == 2) m.roc_auc = roc_auc(scores, positive);
      json j;
      j["trainset"] = path;
      j["model"] = std::string(model_name(model.model->kind()));
      j["schema_hash"] = model.schema_hash;
      j["rows"] = ts.data.size();
      j["metrics"] = metrics_json(m);
      std::printf("%s on %s: accuracy %.4f F %.4f\n", std::string(model_name(model.model->kind())).c_str(),
                  path.c_str(), m.accuracy, m.f_measure);
      all.push_back(std::move(j));
    }
    open_out(dir / "holdout_report.json") << all.dump(2) << '\n';
    return 0;
  }

  std::vector<ModelReport> reports;
  for (const auto& path : cfg.trainsets) {
    const Trainset ts = load_trainset(path);
    for (const auto& name : cfg.models) {
      ModelReport r = evaluate_cv(model_kind(name), ts.data, cfg.folds, cfg.seed, cfg.params);
      r.variant = std::string(variant_name(ts.variant));
      if (!r.stratified) {
        std::cerr << "warning: " << path << " has a class with fewer than " << cfg.folds
                  << " rows; some folds miss that class\n";
      }
      reports.push_back(std::move(r));
    }
  }
  json all = json::array();
  for (const auto& r : reports) all.push_back(json::parse(report_to_json(r)));
  open_out(dir / "report.json") << all.dump(2) << '\n';
  const std::string table = report_table(reports);
  open_out(dir / "report.txt") << table;
  std::cout << table;
  return 0;
}

int run_rank(const PipelineConfig& cfg) {
  const Trainset ts = load_trainset(cfg.trainsets.at(0));
  const FeatureRanking ranking = rank_features(ts.data, cfg.seed, cfg.rank);
  json j;
  j["trainset"] = cfg.trainsets.at(0);
  j["schema_hash"] = ts.schema_hash;
  j["seed"] = cfg.seed;
  j["best_merit"] = ranking.best_merit;
  j["subsets_evaluated"] = ranking.subsets_evaluated;
  auto& features = j["features"] = json::array();
  for (std::size_t i = 0; i < ranking.names.size(); ++i) {
    features.push_back({{"name", ranking.names[i]}, {"merit", ranking.scores[i]}});
    std::printf("%zu. %-40s %.4f\n", i + 1, ranking.names[i].c_str(), ranking.scores[i]);
  }
  open_out(out_dir(cfg) / "ranking.json") << j.dump(2) << '\n';
  return 0;
}

int run_overlap(const PipelineConfig& cfg) {
  if (cfg.hashtags.size() != 2) throw InvalidArgument("overlap needs exactly two --hashtag values");
  const TweetStore store = load_store(cfg);
  const Collection a = build_collection(store, cfg.hashtags[0], cfg.window_days);
  const Collection b = build_collection(store, cfg.hashtags[1], cfg.window_days);
  const OverlapReport r = user_overlap(a, b, parse_date(cfg.cutoff));
  std::printf("#%s and #%s share %zu users (%.2f%% of #%s's %zu users)\n",
              a.traced_hashtag.c_str(), b.traced_hashtag.c_str(), r.count, r.pct_of_a,
              a.traced_hashtag.c_str(), a.users.size());
  std::printf("registered after %s: %zu; without profile: %zu\n", cfg.cutoff.c_str(),
              r.registered_after_cutoff, r.without_profile);
  std::printf("%-6s %8s\n", "year", "users");
  for (const auto& [year, n] : r.registration_years) std::printf("%-6d %8zu\n", year, n);

  json j;
  j["a"] = a.traced_hashtag;
  j["b"] = b.traced_hashtag;
  j["a_users"] = a.users.size();
  j["shared"] = r.count;
  j["pct_of_a"] = r.pct_of_a;
  j["cutoff"] = cfg.cutoff;
  j["registered_after_cutoff"] = r.registered_after_cutoff;
  j["without_profile"] = r.without_profile;
  auto& years = j["registration_years"] = json::object();
  for (const auto& [year, n] : r.registration_years) years[std::to_string(year)] = n;
  open_out(out_dir(cfg) / "overlap.json") << j.dump(2) << '\n';
  return 0;
}

int run_synth(const PipelineConfig& cfg) {
  const auto collections = generate_dataset(cfg.organized, cfg.organic, cfg.seed);
  const fs::path dir = out_dir(cfg);
  write_corpus(dir, collections);
  std::size_t tweets = 0;
  for (const auto& c : collections) tweets += c.tweets.size();
  std::cout << "wrote " << collections.size() << " collections, " << tweets << " tweets to "
            << dir.string() << '\n';
  return 0;
}

}  // namespace cli
