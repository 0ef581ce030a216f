#include "collusion/pipeline.hpp"

#include "collusion/temporal_features.hpp"
#include "collusion/user_features.hpp"

namespace collusion {

CollectionFeatures extract_collection_features(Collection collection, Date today,
                                               const PipelineOptions& options,
                                               const FeatureSchema& schema,
                                               const SentimentScorer& scorer) {
  CollectionFeatures out;
  out.collection = std::move(collection);
  out.slices = partition_intervals(out.collection, options.interval);
  out.users = extract_user_features(out.collection, today, {options.cutoff});
  for (const auto& u : out.users) out.incomplete_users += u.complete ? 0 : 1;
  out.slice_features = extract_temporal_features(out.slices, scorer);
  out.row = summarize_collection(out.users, out.slice_features, schema);
  out.row.collection_id = out.collection.traced_hashtag;
  out.row.labels = out.collection.label;
  return out;
}

CollectionFeatures extract_features(const TweetStore& store, std::string_view traced_hashtag,
                                    const PipelineOptions& options, const FeatureSchema& schema,
                                    const SentimentScorer& scorer) {
  const Date today = options.today.value_or(day_of(store.max_timestamp()));
  return extract_collection_features(build_collection(store, traced_hashtag, options.window_days),
                                     today, options, schema, scorer);
}

}  // namespace collusion
