#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace collusion {

using Folds = std::vector<std::vector<std::size_t>>;

/// Shuffled split of [0, n) into k folds whose sizes differ by at most one.
/// Throws InvalidArgument unless 2 <= k <= n.
Folds kfold_split(std::size_t n, std::size_t k, std::uint64_t seed);

struct StratifiedFolds {
  Folds folds;
  /// False when some class has fewer than k members, so some folds cannot
  /// hold it. The deal is still class-interleaved in that case.
  bool stratified = true;
};

/// Folds with sizes within one of each other and, per class, counts within
/// one of each other (for any class sizes). Deterministic for a seed.
StratifiedFolds stratified_kfold(std::span<const int> labels, std::size_t k, std::uint64_t seed);

}  // namespace collusion
