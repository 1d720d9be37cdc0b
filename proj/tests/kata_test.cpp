#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <vector>

#include "microlog/kata.hpp"
#include "support/generators.hpp"

namespace microlog::kata {
namespace {

TEST(TripleTest, Examples) {
  EXPECT_EQ(triple(0), 0u);
  EXPECT_EQ(triple(1), 3u);
  EXPECT_EQ(triple(14), 42u);
  static_assert(triple(14) == 42);
}

TEST(TripleTest, EqualsThreeTimes) {
  for (Nat n = 0; n <= 10000; ++n) ASSERT_EQ(triple(n), 3 * n);
}

TEST(Add42Test, Examples) {
  EXPECT_EQ(add42(std::vector<std::int64_t>{}), std::vector<std::int64_t>{});
  EXPECT_EQ(add42(std::vector<std::int64_t>{0, -42}), (std::vector<std::int64_t>{42, 0}));
  std::vector<std::int64_t> xs{7, -1, 100};
  EXPECT_EQ(sub42(add42(xs)), xs);
}

TEST(Add42Test, RoundTripsRandomLists) {
  testing::Rng rng(42);
  for (int n = 0; n < 10000; ++n) {
    auto xs = testing::random_int_list(rng, 100);
    ASSERT_EQ(sub42(add42(xs)), xs);
    ASSERT_EQ(add42(sub42(xs)), xs);
  }
}

TEST(Add42Test, OverflowThrowsInsteadOfWrapping) {
  constexpr auto max = std::numeric_limits<std::int64_t>::max();
  constexpr auto min = std::numeric_limits<std::int64_t>::min();
  EXPECT_THROW(add42(std::vector<std::int64_t>{max}), std::overflow_error);
  EXPECT_THROW(sub42(std::vector<std::int64_t>{min}), std::overflow_error);
  EXPECT_EQ(sub42(add42(std::vector<std::int64_t>{max - 42})), std::vector<std::int64_t>{max - 42});
}

TEST(Add42Test, WorksForNarrowTypes) {
  std::vector<std::int8_t> xs{0, 85, -128 + 42};
  auto ys = add42(std::span<const std::int8_t>(xs));
  EXPECT_EQ(ys, (std::vector<std::int8_t>{42, 127, -128 + 84}));
  EXPECT_EQ(sub42(std::span<const std::int8_t>(ys)), xs);
}

}  // namespace
}  // namespace microlog::kata
