#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

TEST(Properties, FeatureInvariantsOnRandomCorpora) {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    for (const auto& violation : testing_support::check_invariants(seed)) ADD_FAILURE() << violation;
  }
}

}  // namespace
