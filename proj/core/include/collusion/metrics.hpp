#pragma once

#include <optional>
#include <span>
#include <vector>

namespace collusion {

double precision(double tp, double fp);
double recall(double tp, double fn);
/// Harmonic mean of precision and recall; 0 when both are 0.
double f_measure(double precision, double recall);

/// rows = actual class, columns = predicted class.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::size_t classes = 2);

  void add(int actual, int predicted, std::size_t times = 1);
  ConfusionMatrix& operator+=(const ConfusionMatrix& other);

  std::size_t classes() const { return classes_; }
  std::size_t at(int actual, int predicted) const;
  std::size_t total() const;
  std::size_t trace() const;

  double accuracy() const;
  double precision(int cls) const;
  double recall(int cls) const;
  double f_measure(int cls) const;

 private:
  std::size_t classes_;
  std::vector<std::size_t> counts_;
};

struct ClassificationMetrics {
  double accuracy = 0;
  double precision = 0;
  double recall = 0;
  double f_measure = 0;
  std::optional<double> roc_auc;  // binary tasks only
};

/// Binary: metrics of class 1. Multi-class: unweighted mean over classes.
ClassificationMetrics metrics_from(const ConfusionMatrix& cm);

/// Area under the ROC curve from a threshold sweep over the scores (tied
/// scores move together), integrated with the trapezoid rule. nullopt when
/// either class is absent.
std::optional<double> roc_auc(std::span<const double> scores, std::span<const int> positive);

}  // namespace collusion
