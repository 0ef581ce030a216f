#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "collusion/classifier.hpp"

namespace collusion {

struct RankOptions {
  std::size_t top_k = 5;
  /// Consecutive expansions without a better subset before the search stops.
  std::size_t stall_limit = 5;
  /// Cross-validation folds used to score a subset.
  std::size_t folds = 5;
  ForestParams forest{.trees = 30};
};

struct FeatureRanking {
  std::vector<std::string> names;   // accepted features, in acceptance order
  std::vector<std::size_t> columns;
  std::vector<double> scores;       // subset merit right after each acceptance
  double best_merit = 0;
  std::size_t subsets_evaluated = 0;
};

/// Random-forest cross-validated accuracy on the given columns. Depends only
/// on (data, columns, options, seed).
double subset_merit(const Dataset& data, std::span<const std::size_t> columns,
                    const RankOptions& options, std::uint64_t seed);

/// Best-first forward search over column subsets scored by subset_merit.
/// Equal merits are broken by column order; a subset only replaces the best
/// one when strictly better.
FeatureRanking rank_features(const Dataset& data, std::uint64_t seed,
                             const RankOptions& options = {});

}  // namespace collusion
