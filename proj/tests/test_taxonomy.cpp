#include <gtest/gtest.h>

#include "oracles.hpp"
#include "smadl/taxonomy.hpp"

namespace smadl {
namespace {

using C = TaxonomyClass;
using testing::enumeratedJoin;
using testing::enumeratedMeet;
using testing::tableLeq;

TEST(ClassLeq, Examples) {
  EXPECT_TRUE(classLeq(C::Isolated, C::Provider));
  EXPECT_TRUE(classLeq(C::Consumer, C::Consumer));
  EXPECT_FALSE(classLeq(C::Provider, C::Consumer));
  EXPECT_FALSE(classLeq(C::Consumer, C::Provider));
  EXPECT_FALSE(classLeq(C::Prosumer, C::Isolated));
}

TEST(ClassJoin, Examples) {
  EXPECT_EQ(classJoin(C::Provider, C::Consumer), C::Prosumer);
  EXPECT_EQ(classJoin(C::Prosumer, C::Consumer), C::Prosumer);
  for (C x : kAllClasses) EXPECT_EQ(classJoin(C::Isolated, x), x);
}

TEST(ClassMeet, Examples) {
  EXPECT_EQ(classMeet(C::Provider, C::Consumer), C::Isolated);
  EXPECT_EQ(classMeet(C::Isolated, C::Provider), C::Isolated);
  for (C x : kAllClasses) EXPECT_EQ(classMeet(C::Prosumer, x), x);
}

TEST(Lattice, MatchesEnumeratedOrder) {
  for (C a : kAllClasses) {
    for (C b : kAllClasses) {
      EXPECT_EQ(classLeq(a, b), tableLeq(a, b));
      EXPECT_EQ(classJoin(a, b), enumeratedJoin(a, b));
      EXPECT_EQ(classMeet(a, b), enumeratedMeet(a, b));
    }
  }
}

TEST(Lattice, Laws) {
  for (C a : kAllClasses) {
    EXPECT_EQ(classJoin(a, a), a);
    EXPECT_EQ(classMeet(a, a), a);
    for (C b : kAllClasses) {
      EXPECT_EQ(classJoin(a, b), classJoin(b, a));
      EXPECT_EQ(classMeet(a, b), classMeet(b, a));
      EXPECT_EQ(classJoin(a, classMeet(a, b)), a);
      EXPECT_EQ(classMeet(a, classJoin(a, b)), a);
      EXPECT_EQ(classLeq(a, b), classJoin(a, b) == b);
      EXPECT_EQ(classLeq(a, b), classMeet(a, b) == a);
      for (C c : kAllClasses) {
        EXPECT_EQ(classJoin(a, classJoin(b, c)), classJoin(classJoin(a, b), c));
        EXPECT_EQ(classMeet(a, classMeet(b, c)), classMeet(classMeet(a, b), c));
      }
    }
  }
}

TEST(Lattice, BoundsAndAntisymmetry) {
  for (C a : kAllClasses) {
    EXPECT_TRUE(classLeq(C::Isolated, a));
    EXPECT_TRUE(classLeq(a, C::Prosumer));
    for (C b : kAllClasses)
      if (classLeq(a, b) && classLeq(b, a)) EXPECT_EQ(a, b);
  }
}

TEST(ClassName, RoundTrips) {
  for (C c : kAllClasses) {
    EXPECT_EQ(parseClassName(className(c)), c);
    EXPECT_EQ(parseClassName(classNameLower(c)), c);
  }
  EXPECT_FALSE(parseClassName("Mashup"));
}

}  // namespace
}  // namespace smadl
