#include <gtest/gtest.h>

#include "e2g/groupoid.hpp"

using namespace e2g;

namespace {

// A small diagram over a one-object base: fiber = C3 acting on itself by
// left translation, base = trivial group.
GroupoidDiagram<int, int, int, int> one_object_base() {
  GroupoidDiagram<int, int, int, int> D;
  D.base_objects = {0};
  D.base_generators = {{"e", 0}};
  D.base_target = [](int, int y) { return y; };
  D.base_compose = [](int, int) { return 0; };
  D.base_inverse = [](int) { return 0; };
  D.base_equal = [](int a, int b) { return a == b; };
  D.fiber_objects = [](int) { return std::vector<int>{0, 1, 2}; };
  D.fiber_generators = {{"t1", 1}};
  D.fiber_target = [](int f, int x) { return (x + f) % 3; };
  D.fiber_compose = [](int a, int b) { return (a + b) % 3; };
  D.fiber_inverse = [](int a) { return (3 - a) % 3; };
  D.fiber_equal = [](int a, int b) { return a == b; };
  D.functor_obj = [](int, int, int x) { return x; };
  D.functor_mor = [](int, int, int f) { return f; };
  return D;
}

}  // namespace

TEST(Grothendieck, TrivialBaseGivesFiber) {
  const auto D = one_object_base();
  const auto P = grothendieck(D, 0, 0);
  ASSERT_EQ(P.objects.size(), 3u);
  for (const auto& a : P.generators) {
    if (a.label != "t1") continue;
    EXPECT_EQ(P.objects[a.target].second, (P.objects[a.source].second + 1) % 3);
  }
  const auto m = P.compose({0, 1}, {0, 1}, {0, 0});
  EXPECT_EQ(m.second, 2);
}

TEST(Grothendieck, TrivialFibersGiveBase) {
  GroupoidDiagram<int, int, int, int> D;
  D.base_objects = {0, 1};
  D.base_generators = {{"s", 1}};
  D.base_target = [](int g, int y) { return (y + g) % 2; };
  D.base_compose = [](int a, int b) { return (a + b) % 2; };
  D.base_inverse = [](int a) { return a; };
  D.base_equal = [](int a, int b) { return a == b; };
  D.fiber_objects = [](int) { return std::vector<int>{0}; };
  D.fiber_generators = {};
  D.fiber_target = [](int, int x) { return x; };
  D.fiber_compose = [](int, int) { return 0; };
  D.fiber_inverse = [](int) { return 0; };
  D.fiber_equal = [](int, int) { return true; };
  D.functor_obj = [](int, int, int x) { return x; };
  D.functor_mor = [](int, int, int f) { return f; };
  const auto P = grothendieck(D, 0, 0);
  ASSERT_EQ(P.objects.size(), 2u);
  for (const auto& a : P.generators) EXPECT_NE(P.objects[a.source].first, P.objects[a.target].first);
}

TEST(Grothendieck, FunctorialityViolationThrows) {
  auto D = one_object_base();
  D.functor_obj = [](int, int, int x) { return (2 * x) % 3; };  // not compatible with translation
  EXPECT_THROW(grothendieck(D, 0, 0), FunctorialityError);
}

TEST(Grothendieck, HurwitzDiagramMatchesDirectModel) {
  for (auto [spec, r] : std::vector<std::pair<const char*, int>>{{"C1", 2}, {"S3", 1}, {"S3", 2}, {"C2xC2", 3}}) {
    const auto rep = compare_hurwitz_grothendieck(make_group(spec), r);
    EXPECT_TRUE(rep.ok()) << spec << " r=" << r << (rep.witnesses.empty() ? "" : " " + rep.witnesses[0]);
    EXPECT_GT(rep.pairs_checked, 0u);
  }
}

TEST(Grothendieck, CompositionSpecializes) {
  const auto G = make_group("S3");
  const auto D = hurwitz_diagram(G, 3);
  const auto P = grothendieck(D, BraidWord::identity(3), Elem{0});
  const std::pair<Permutation, Tuple> x{Permutation(3), {1, 2, 3}};
  const std::pair<BraidWord, Elem> m0{BraidWord(3, {1}), 2}, m1{BraidWord(3, {-2}), 4};
  const auto c = P.compose(m1, m0, x);
  EXPECT_TRUE(braid_equal(c.first, BraidWord(3, {-2, 1})));
  EXPECT_EQ(c.second, G.mul(4, 2));
}
