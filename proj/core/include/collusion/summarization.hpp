#pragma once

#include <span>
#include <vector>

#include "collusion/schema.hpp"
#include "collusion/temporal_features.hpp"
#include "collusion/user_features.hpp"

namespace collusion {

struct BucketShares {
  std::vector<double> percentages;  // in scheme order, summing to 100
  bool empty = false;               // no values: all percentages are 0
};

/// Percentage of values per bucket. Throws InvalidArgument when a value falls
/// outside the scheme.
BucketShares bucketize(std::span<const double> values, const BucketScheme& scheme);

struct FeatureStats {
  double mean = 0;
  double var = 0;  // population variance
  double std = 0;
  double min = 0;
  double max = 0;
};

/// Two-pass population moments over the values taken in ascending order, so
/// the result does not depend on input order. Throws InvalidArgument when
/// empty.
FeatureStats feature_stats(std::span<const double> values);

/// Collapses user and slice vectors into one row laid out by `schema`.
/// Incomplete user vectors only count towards incomplete_user_pct. Throws
/// InvalidArgument when there is no complete user vector or no slice vector.
FeatureRow summarize_collection(std::span<const UserFeatureVector> users,
                                std::span<const SliceFeatureVector> slices,
                                const FeatureSchema& schema);

/// Value of a user feature by schema name.
double user_feature_value(const UserFeatureVector& v, std::string_view feature);
/// Value of a slice feature by schema name.
double slice_feature_value(const SliceFeatureVector& v, std::string_view feature);

}  // namespace collusion
