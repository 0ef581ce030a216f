#include "collusion/random_forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "binary_io.hpp"
#include "collusion/error.hpp"
#include "collusion/parallel.hpp"
#include "collusion/rng.hpp"

namespace collusion {
namespace {

struct Split {
  int feature = -1;
  double threshold = 0;
  double score = -1;  // sum over children of (sum of squared class counts / size)
};

// Largest value of sum_c count_c^2 / n over both children; maximizing it
// minimizes the size-weighted Gini impurity.
Split best_split_on(const Eigen::MatrixXd& X, std::span<const int> y, std::size_t classes,
                    const std::vector<std::size_t>& idx, int feature, std::size_t min_leaf,
                    std::vector<std::pair<double, int>>& scratch) {
  scratch.clear();
  for (auto i : idx) scratch.emplace_back(X(Eigen::Index(i), feature), y[i]);
  std::sort(scratch.begin(), scratch.end());
  Split best;
  if (scratch.front().first == scratch.back().first) return best;

  std::vector<double> left(classes, 0), right(classes, 0);
  for (const auto& [v, c] : scratch) right[std::size_t(c)] += 1;
  double left_sq = 0, right_sq = 0;
  for (double r : right) right_sq += r * r;
  const std::size_t n = scratch.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto c = std::size_t(scratch[k].second);
    left_sq += 2 * left[c] + 1;
    right_sq -= 2 * right[c] - 1;
    left[c] += 1;
    right[c] -= 1;
    const std::size_t nl = k + 1, nr = n - nl;
    if (scratch[k].first == scratch[k + 1].first) continue;
    if (nl < min_leaf || nr < min_leaf) continue;
    const double score = left_sq / double(nl) + right_sq / double(nr);
    if (score > best.score) {
      const double a = scratch[k].first, b = scratch[k + 1].first;
      double mid = a + (b - a) / 2;
      if (mid >= b) mid = a;
      best = {feature, mid, score};
    }
  }
  return best;
}

}  // namespace

DecisionTree DecisionTree::grow(const Eigen::MatrixXd& X, std::span<const int> y,
                                std::size_t classes, std::span<const std::size_t> sample,
                                const ForestParams& params, std::uint64_t seed) {
  const auto d = static_cast<std::size_t>(X.cols());
  const std::size_t mtry =
      params.max_features > 0
          ? std::min<std::size_t>(std::size_t(params.max_features), d)
          : std::max<std::size_t>(1, std::size_t(std::ceil(std::sqrt(double(d)))));
  const std::size_t min_leaf = std::size_t(std::max(1, params.min_leaf));
  Rng rng(seed);

  DecisionTree tree;
  struct Pending {
    int node;
    std::vector<std::size_t> idx;
    int depth;
  };
  std::vector<Pending> stack;
  tree.nodes_.emplace_back();
  stack.push_back({0, std::vector<std::size_t>(sample.begin(), sample.end()), 0});

  std::vector<std::size_t> features(d);
  std::vector<std::pair<double, int>> scratch;
  while (!stack.empty()) {
    Pending job = std::move(stack.back());
    stack.pop_back();

    std::vector<double> counts(classes, 0);
    for (auto i : job.idx) counts[std::size_t(y[i])] += 1;
    double parent_sq = 0;
    for (double c : counts) parent_sq += c * c;
    const double n = double(job.idx.size());
    const bool pure = std::count_if(counts.begin(), counts.end(), [](double c) { return c > 0; }) <= 1;
    const bool depth_capped = params.max_depth > 0 && job.depth >= params.max_depth;

    Split best;
    if (!pure && !depth_capped && job.idx.size() >= 2 * min_leaf) {
      std::iota(features.begin(), features.end(), std::size_t{0});
      for (std::size_t k = 0; k < mtry; ++k) {
        const auto j = k + std::size_t(rng.below(d - k));
        std::swap(features[k], features[j]);
        const Split s = best_split_on(X, y, classes, job.idx, int(features[k]), min_leaf, scratch);
        if (s.score > best.score) best = s;
      }
    }
    // A split must strictly lower the weighted impurity.
    if (best.feature < 0 || best.score <= parent_sq / n * (1 + 1e-12)) {
      tree.nodes_[std::size_t(job.node)].class_counts = std::move(counts);
      continue;
    }

    std::vector<std::size_t> left, right;
    for (auto i : job.idx) {
      (X(Eigen::Index(i), best.feature) <= best.threshold ? left : right).push_back(i);
    }
    const int left_id = int(tree.nodes_.size());
    tree.nodes_.emplace_back();
    const int right_id = int(tree.nodes_.size());
    tree.nodes_.emplace_back();
    Node& node = tree.nodes_[std::size_t(job.node)];
    node.feature = best.feature;
    node.threshold = best.threshold;
    node.left = left_id;
    node.right = right_id;
    stack.push_back({right_id, std::move(right), job.depth + 1});
    stack.push_back({left_id, std::move(left), job.depth + 1});
  }
  return tree;
}

const DecisionTree::Node& DecisionTree::leaf_for(std::span<const double> row) const {
  const Node* node = &nodes_.front();
  while (node->feature >= 0) {
    node = &nodes_[std::size_t(row[std::size_t(node->feature)] <= node->threshold ? node->left
                                                                                   : node->right)];
  }
  return *node;
}

int DecisionTree::vote(std::span<const double> row) const {
  const auto& counts = leaf_for(row).class_counts;
  return int(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

std::size_t DecisionTree::depth() const {
  std::vector<std::size_t> depth(nodes_.size(), 0);
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    deepest = std::max(deepest, depth[i]);
    if (nodes_[i].feature >= 0) {
      depth[std::size_t(nodes_[i].left)] = depth[i] + 1;
      depth[std::size_t(nodes_[i].right)] = depth[i] + 1;
    }
  }
  return deepest;
}

void DecisionTree::write(std::ostream& out) const {
  binary::put<std::uint64_t>(out, nodes_.size());
  for (const auto& n : nodes_) {
    binary::put<std::int32_t>(out, n.feature);
    if (n.feature >= 0) {
      binary::put<double>(out, n.threshold);
      binary::put<std::int32_t>(out, n.left);
      binary::put<std::int32_t>(out, n.right);
    } else {
      for (double c : n.class_counts) binary::put<double>(out, c);
    }
  }
}

DecisionTree DecisionTree::read(std::istream& in, std::size_t classes) {
  DecisionTree tree;
  const auto count = binary::get<std::uint64_t>(in);
  if (count == 0 || count > (1u << 26)) throw InputError("corrupt tree in model container");
  tree.nodes_.resize(count);
  for (auto& n : tree.nodes_) {
    n.feature = binary::get<std::int32_t>(in);
    if (n.feature >= 0) {
      n.threshold = binary::get<double>(in);
      n.left = binary::get<std::int32_t>(in);
      n.right = binary::get<std::int32_t>(in);
      if (n.left <= 0 || n.right <= 0 || std::uint64_t(n.left) >= count ||
          std::uint64_t(n.right) >= count) {
        throw InputError("corrupt tree link in model container");
      }
    } else {
      n.class_counts.resize(classes);
      for (double& c : n.class_counts) c = binary::get<double>(in);
    }
  }
  return tree;
}

void RandomForest::fit(const Eigen::MatrixXd& X, std::span<const int> y, std::size_t classes,
                       const ForestParams& params, std::uint64_t seed) {
  if (params.trees <= 0) throw InvalidArgument("a forest needs at least one tree");
  classes_ = classes;
  features_ = static_cast<std::size_t>(X.cols());
  const auto n = static_cast<std::size_t>(X.rows());
  trees_.assign(std::size_t(params.trees), DecisionTree{});
  parallel_for(trees_.size(), [&](std::size_t t) {
    Rng rng(derive_seed(seed, 0x7733, t));
    std::vector<std::size_t> sample(n);
    for (auto& s : sample) s = std::size_t(rng.below(n));
    trees_[t] = DecisionTree::grow(X, y, classes, sample, params, rng.next());
  });
}

std::vector<double> RandomForest::scores(std::span<const double> row) const {
  std::vector<double> votes(classes_, 0.0);
  for (const auto& tree : trees_) votes[std::size_t(tree.vote(row))] += 1;
  for (double& v : votes) v /= double(trees_.size());
  return votes;
}

void RandomForest::write(std::ostream& out) const {
  binary::put<std::uint64_t>(out, classes_);
  binary::put<std::uint64_t>(out, features_);
  binary::put<std::uint64_t>(out, trees_.size());
  for (const auto& t : trees_) t.write(out);
}

std::unique_ptr<RandomForest> RandomForest::read(std::istream& in) {
  auto forest = std::make_unique<RandomForest>();
  forest->classes_ = binary::get<std::uint64_t>(in);
  forest->features_ = binary::get<std::uint64_t>(in);
  const auto trees = binary::get<std::uint64_t>(in);
  if (forest->classes_ < 2 || forest->classes_ > 64 || trees == 0 || trees > 100000) {
    throw InputError("corrupt forest header in model container");
  }
  for (std::uint64_t t = 0; t < trees; ++t) {
    forest->trees_.push_back(DecisionTree::read(in, forest->classes_));
  }
  return forest;
}

}  // namespace collusion
