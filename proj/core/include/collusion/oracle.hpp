#pragma once

#include "collusion/collection.hpp"
#include "collusion/schema.hpp"
#include "collusion/text.hpp"
#include "collusion/time.hpp"

namespace collusion {

/// Brute-force recomputation of a collection's feature row: plain loops over
/// the collection for every feature, with no code shared with the extraction
/// library. Values come back in the schema's column order. Throws Error when
/// no user has a profile or no post carries the traced hashtag.
FeatureRow oracle_extract(const Collection& c, Date today, const FeatureSchema& schema,
                          const SentimentScorer& scorer, Seconds interval = Seconds{3600},
                          Date registration_cutoff = Date{std::chrono::year{2015} / 7 / 1});

}  // namespace collusion
