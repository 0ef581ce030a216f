#pragma once

#include <optional>
#include <vector>

#include "collusion/corpus.hpp"
#include "collusion/schema.hpp"
#include "collusion/summarization.hpp"
#include "collusion/text.hpp"

namespace collusion {

struct PipelineOptions {
  int window_days = 7;
  Seconds interval{3600};
  Date cutoff = kDefaultRegistrationCutoff;
  /// Reference date for per-day rates; defaults to the corpus' last day.
  std::optional<Date> today;
};

/// Everything computed for one collection on the way to its feature row.
struct CollectionFeatures {
  Collection collection;
  std::vector<TemporalSlice> slices;
  std::vector<UserFeatureVector> users;
  std::vector<SliceFeatureVector> slice_features;
  FeatureRow row;
  std::size_t incomplete_users = 0;
};

/// Feature row for an already built collection.
CollectionFeatures extract_collection_features(Collection collection, Date today,
                                               const PipelineOptions& options,
                                               const FeatureSchema& schema,
                                               const SentimentScorer& scorer);

/// build_collection + extract_collection_features for one traced hashtag.
CollectionFeatures extract_features(const TweetStore& store, std::string_view traced_hashtag,
                                    const PipelineOptions& options, const FeatureSchema& schema,
                                    const SentimentScorer& scorer);

}  // namespace collusion
