#include "collusion/kfold.hpp"

#include <map>

#include "collusion/error.hpp"
#include "collusion/rng.hpp"

namespace collusion {
namespace {

void check(std::size_t n, std::size_t k) {
  if (k < 2) throw InvalidArgument("k-fold needs k >= 2");
  if (k > n) {
    throw InvalidArgument("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  }
}

}  // namespace

Folds kfold_split(std::size_t n, std::size_t k, std::uint64_t seed) {
  check(n, k);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order);
  Folds folds(k);
  for (std::size_t i = 0; i < n; ++i) folds[i % k].push_back(order[i]);
  return folds;
}

StratifiedFolds stratified_kfold(std::span<const int> labels, std::size_t k, std::uint64_t seed) {
  check(labels.size(), k);
  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);
  bool every_fold_sees_every_class = true;
  for (const auto& [cls, members] : by_class) every_fold_sees_every_class &= members.size() >= k;
  // Deal each shuffled class round-robin, continuing where the previous class
  // stopped so overall fold sizes stay within one.
  Rng rng(seed);
  Folds folds(k);
  std::size_t next = 0;
  for (auto& [cls, members] : by_class) {
    rng.shuffle(members);
    for (auto idx : members) folds[next++ % k].push_back(idx);
  }
  return {std::move(folds), every_fold_sees_every_class};
}

}  // namespace collusion
