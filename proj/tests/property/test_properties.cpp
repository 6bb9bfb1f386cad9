#include <gtest/gtest.h>

#include "../properties.hpp"

TEST(Properties, TwoHundredRandomCases) {
  const props::Outcome out = props::run(20240611u, 200);
  EXPECT_EQ(out.cases, 200u);
  EXPECT_EQ(out.failures, 0u) << out.first;
  EXPECT_GT(out.sign_cases, 0u);
}

TEST(Properties, SecondSeed) {
  const props::Outcome out = props::run(77u, 50);
  EXPECT_EQ(out.failures, 0u) << out.first;
}
