#include <gtest/gtest.h>

#include "microlog/list.hpp"

namespace microlog {
namespace {

TEST(ListTest, ConsSharesTail) {
  List<int> tail{2, 3};
  List<int> xs = cons(1, tail);
  EXPECT_EQ(xs.head(), 1);
  EXPECT_EQ(xs.tail(), tail);
  EXPECT_EQ(xs.to_vector(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(tail.size(), 2u);
}

TEST(ListTest, EqualityIsStructural) {
  EXPECT_EQ((List<int>{1, 2}), (List<int>{1, 2}));
  EXPECT_NE((List<int>{1, 2}), (List<int>{2, 1}));
  EXPECT_NE((List<int>{1}), (List<int>{1, 1}));
  EXPECT_EQ(List<int>{}, List<int>{});
}

TEST(ListTest, LongListsDestroyWithoutRecursion) {
  List<int> xs;
  for (int k = 0; k < 2'000'000; ++k) xs = cons(k, std::move(xs));
  EXPECT_EQ(xs.head(), 1'999'999);
}

}  // namespace
}  // namespace microlog
