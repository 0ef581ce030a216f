#include "collusion/ranking.hpp"

#include <algorithm>
#include <set>

#include "collusion/error.hpp"
#include "collusion/evaluation.hpp"
#include "collusion/parallel.hpp"

namespace collusion {
namespace {

struct Node {
  std::vector<std::size_t> order;   // acceptance order
  std::vector<std::size_t> sorted;  // same columns, ascending
  std::vector<double> merits;       // merit after each acceptance
  double merit = 0;
};

// Open-list priority: higher merit first, then the lexicographically smaller
// column set.
bool before(const Node& a, const Node& b) {
  if (a.merit != b.merit) return a.merit > b.merit;
  return a.sorted < b.sorted;
}

double majority_rate(const Dataset& data) {
  std::vector<std::size_t> counts(data.num_classes(), 0);
  for (int l : data.labels) ++counts[std::size_t(l)];
  return double(*std::max_element(counts.begin(), counts.end())) / double(data.size());
}

}  // namespace

double subset_merit(const Dataset& data, std::span<const std::size_t> columns,
                    const RankOptions& options, std::uint64_t seed) {
  if (columns.empty()) return majority_rate(data);
  ModelParams params;
  params.forest = options.forest;
  const Dataset subset = data.select_columns(columns);
  return evaluate_cv(ModelKind::RandomForest, subset, options.folds, seed, params).pooled.accuracy;
}

FeatureRanking rank_features(const Dataset& data, std::uint64_t seed, const RankOptions& options) {
  data.validate();
  if (options.top_k == 0) throw InvalidArgument("top_k must be positive");
  const std::size_t d = data.width();
  const std::size_t max_size = std::min(options.top_k, d);

  FeatureRanking ranking;
  Node best;
  best.merit = subset_merit(data, {}, options, seed);
  ranking.subsets_evaluated = 1;
  std::vector<Node> open{best};
  std::set<std::vector<std::size_t>> seen{{}};
  std::size_t stall = 0;

  while (!open.empty() && stall < options.stall_limit) {
    const auto it = std::min_element(open.begin(), open.end(), before);
    const Node parent = *it;
    open.erase(it);
    if (parent.sorted.size() >= max_size) continue;

    std::vector<Node> children;
    for (std::size_t c = 0; c < d; ++c) {
      if (std::binary_search(parent.sorted.begin(), parent.sorted.end(), c)) continue;
      Node child = parent;
      child.order.push_back(c);
      child.sorted.insert(std::upper_bound(child.sorted.begin(), child.sorted.end(), c), c);
      if (!seen.insert(child.sorted).second) continue;
      children.push_back(std::move(child));
    }
    parallel_for(children.size(), [&](std::size_t i) {
      children[i].merit = subset_merit(data, children[i].sorted, options, seed);
      children[i].merits.push_back(children[i].merit);
    });
    ranking.subsets_evaluated += children.size();

    bool improved = false;
    for (auto& child : children) {  // column order, so the first of equal merits wins
      if (child.merit > best.merit) {
        best = child;
        improved = true;
      }
      open.push_back(std::move(child));
    }
    stall = improved ? 0 : stall + 1;
  }

  for (std::size_t i = 0; i < best.order.size(); ++i) {
    ranking.columns.push_back(best.order[i]);
    ranking.names.push_back(data.column_names[best.order[i]]);
    ranking.scores.push_back(best.merits[i]);
  }
  ranking.best_merit = best.merit;
  return ranking;
}

}  // namespace collusion
