#include "collusion/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "collusion/error.hpp"

namespace collusion {

double precision(double tp, double fp) { return tp + fp > 0 ? tp / (tp + fp) : 0.0; }
double recall(double tp, double fn) { return tp + fn > 0 ? tp / (tp + fn) : 0.0; }
double f_measure(double p, double r) { return p + r > 0 ? 2 * p * r / (p + r) : 0.0; }

ConfusionMatrix::ConfusionMatrix(std::size_t classes)
    : classes_(classes), counts_(classes * classes, 0) {}

void ConfusionMatrix::add(int actual, int predicted, std::size_t times) {
  if (actual < 0 || predicted < 0 || std::size_t(actual) >= classes_ ||
      std::size_t(predicted) >= classes_) {
    throw InvalidArgument("class id outside the confusion matrix");
  }
  counts_[std::size_t(actual) * classes_ + std::size_t(predicted)] += times;
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& other) {
  if (other.classes_ != classes_) throw InvalidArgument("confusion matrix size mismatch");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

std::size_t ConfusionMatrix::at(int actual, int predicted) const {
  return counts_.at(std::size_t(actual) * classes_ + std::size_t(predicted));
}

std::size_t ConfusionMatrix::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::size_t ConfusionMatrix::trace() const {
  std::size_t t = 0;
  for (std::size_t c = 0; c < classes_; ++c) t += counts_[c * classes_ + c];
  return t;
}

double ConfusionMatrix::accuracy() const {
  const auto n = total();
  return n == 0 ? 0.0 : double(trace()) / double(n);
}

double ConfusionMatrix::precision(int cls) const {
  double tp = double(at(cls, cls)), fp = 0;
  for (std::size_t a = 0; a < classes_; ++a) {
    if (int(a) != cls) fp += double(at(int(a), cls));
  }
  return collusion::precision(tp, fp);
}

double ConfusionMatrix::recall(int cls) const {
  double tp = double(at(cls, cls)), fn = 0;
  for (std::size_t p = 0; p < classes_; ++p) {
    if (int(p) != cls) fn += double(at(cls, int(p)));
  }
  return collusion::recall(tp, fn);
}

double ConfusionMatrix::f_measure(int cls) const {
  return collusion::f_measure(precision(cls), recall(cls));
}

ClassificationMetrics metrics_from(const ConfusionMatrix& cm) {
  ClassificationMetrics m;
  m.accuracy = cm.accuracy();
  if (cm.classes() == 2) {
    m.precision = cm.precision(1);
    m.recall = cm.recall(1);
    m.f_measure = cm.f_measure(1);
    return m;
  }
  const double k = double(cm.classes());
  for (std::size_t c = 0; c < cm.classes(); ++c) {
    m.precision += cm.precision(int(c)) / k;
    m.recall += cm.recall(int(c)) / k;
    m.f_measure += cm.f_measure(int(c)) / k;
  }
  return m;
}

std::optional<double> roc_auc(std::span<const double> scores, std::span<const int> positive) {
  if (scores.size() != positive.size()) throw InvalidArgument("score/label size mismatch");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  double pos = 0, neg = 0;
  for (int p : positive) (p ? pos : neg) += 1;
  if (pos == 0 || neg == 0) return std::nullopt;

  // Lower the threshold one distinct score at a time; each step adds a
  // trapezoid between consecutive (FPR, TPR) points.
  double tp = 0, fp = 0, area = 0;
  std::size_t i = 0;
  while (i < order.size()) {
    const double threshold = scores[order[i]];
    double step_tp = 0, step_fp = 0;
    while (i < order.size() && scores[order[i]] == threshold) {
      (positive[order[i]] ? step_tp : step_fp) += 1;
      ++i;
    }
    area += step_fp * (tp + tp + step_tp) / 2.0;
    tp += step_tp;
    fp += step_fp;
  }
  return area / (pos * neg);
}

}  // namespace collusion
