#include <gtest/gtest.h>

#include <random>
#include <set>

#include "e2g/relations.hpp"
#include "support.hpp"

using namespace e2g;

namespace {

GTree P(const std::string& s) { return parse_tree(s); }

}  // namespace

TEST(Trees, OutputColor) {
  const auto G = make_group("S3");
  EXPECT_EQ(output_color(G, P("leaf:1:3")), 3);
  EXPECT_EQ(output_color(G, P("U")), 0);
  EXPECT_EQ(output_color(G, P("T(L[1](leaf:1:2), leaf:2:4)")), G.mul(G.conj(1, 2), 4));
  EXPECT_EQ(output_color(G, P("L[5](T(leaf:1:1, U))")), G.conj(5, 1));
}

TEST(Trees, ParsePrintRoundTrip) {
  for (auto s : {"U", "leaf:1:0", "T(L[3](leaf:2:1), T(U, leaf:1:5))", "L[1](L[2](U))"}) {
    EXPECT_EQ(P(s).str(), s);
    EXPECT_EQ(P(P(s).str()), P(s));
  }
  const auto G = make_group("S3");
  TreeParseContext ctx{element_resolver(G), nullptr};
  const auto t = parse_tree("T(L[(12)](leaf:1:(13)), leaf:2:e)", ctx);
  EXPECT_EQ(t.str(&G), "T(L[(12)](leaf:1:(13)), leaf:2:e)");
}

TEST(Trees, ParseErrorsCarryColumn) {
  try {
    P("T(leaf:1:0 leaf:2:0)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 11u);
  }
  EXPECT_THROW(P("T(U, U) extra"), ParseError);
  EXPECT_THROW(P("L[](U)"), ParseError);
  EXPECT_THROW(P("X"), ParseError);
  EXPECT_THROW(P("leaf::1"), ParseError);
}

TEST(Trees, SlotValidation) {
  EXPECT_THROW(P("T(leaf:1:0, leaf:1:0)").validate(), TreeError);
  EXPECT_THROW(P("leaf:2:0").validate(), TreeError);
  EXPECT_NO_THROW(P("T(leaf:2:0, leaf:1:0)").validate());
}

TEST(Trees, NormalizeExamples) {
  const auto G = make_group("S3");
  auto nf = normalize(G, P("leaf:1:4"));
  EXPECT_EQ(nf.sigma, Permutation(1));
  EXPECT_EQ(nf.b, Tuple{0});
  nf = normalize(G, P("T(U, leaf:1:4)"));
  EXPECT_EQ(nf.b, Tuple{0});
  EXPECT_EQ(nf.signature.output, 4);
  nf = normalize(G, P("T(L[1](leaf:1:2), leaf:2:4)"));
  EXPECT_EQ(nf.sigma, Permutation(2));
  EXPECT_EQ(nf.b, (Tuple{1, 0}));
  EXPECT_EQ(nf.signature.output, G.mul(G.conj(1, 2), 4));
  // slot 2 sits left of slot 1
  nf = normalize(G, P("T(leaf:2:1, leaf:1:3)"));
  EXPECT_EQ(nf.sigma, Permutation::from_one_line({2, 1}));
  EXPECT_EQ(normalize(G, P("U")).b.size(), 0u);
}

TEST(Trees, LabelAccumulationFollowsGamma) {
  // L[h2](L[h1](x)) accumulates h2 h1, matching gamma: L[h2]L[h1] -> L[h2 h1].
  const auto G = make_group("S3");
  const Elem h2 = 1, h1 = 2;
  const auto t = GTree::label(h2, GTree::label(h1, GTree::leaf(1, 3)));
  EXPECT_EQ(normalize(G, t).b, Tuple{G.mul(h2, h1)});
  EXPECT_EQ(apply_step(G, t, parse_step("gamma@")), GTree::label(G.mul(h2, h1), GTree::leaf(1, 3)));
  EXPECT_NE(G.mul(h2, h1), G.mul(h1, h2));
}

TEST(Trees, NormalFormSatisfiesColorCondition) {
  std::mt19937 rng(1);
  for (auto spec : {"S3", "D4", "C2xC3"}) {
    const auto G = make_group(spec);
    for (int t = 0; t < 300; ++t) {
      const auto tree = support::random_tree(G, rng, t % 5, t % 3, 0.3);
      const auto nf = normalize(G, tree);
      EXPECT_EQ(color_condition(G, nf.sigma, nf.b, nf.signature.inputs), nf.signature.output);
      EXPECT_EQ(normalize(G, denormalize(nf)), nf);
    }
  }
}

TEST(Trees, RewritingIsConfluent) {
  std::mt19937 rng(2);
  for (auto spec : {"C2", "S3", "C6"}) {
    const auto G = make_group(spec);
    for (int t = 0; t < 200; ++t) {
      const int r = t % 5, units = (t / 5) % 3;
      if (r + units > 6) continue;
      const auto tree = support::random_tree(G, rng, r, units, 0.35);
      const auto direct = normalize(G, tree);
      for (int strat = 0; strat < 4; ++strat) {
        std::mt19937 pick_rng(static_cast<unsigned>(strat * 7919 + t));
        auto pick = [&](std::size_t n) -> std::size_t {
          if (strat == 0) return 0;
          if (strat == 1) return n - 1;
          return pick_rng() % n;
        };
        EXPECT_EQ(normalize_by_rewriting(G, tree, pick), direct) << tree.str();
      }
      // The rewriting sequence is a morphism with trivial braid.
      const auto m = rewrite_to_standard(G, tree, [](std::size_t) { return 0; });
      const auto I = interpret_morphism(G, m);
      EXPECT_TRUE(I.braid.letters.empty());
      EXPECT_EQ(I.source, I.target);
      EXPECT_EQ(m.target(G), denormalize(direct));
    }
  }
}

TEST(Trees, Graft) {
  const auto G = make_group("S3");
  const auto t = P("T(leaf:1:1, L[2](leaf:2:3))");
  EXPECT_EQ(graft(G, P("leaf:1:1"), 1, P("T(leaf:1:1, U)")), P("T(leaf:1:1, U)"));
  EXPECT_EQ(graft(G, t, 2, P("leaf:1:3")), t);
  const auto inner = P("T(leaf:2:1, leaf:1:0)");  // color 1
  EXPECT_EQ(graft(G, t, 1, inner), P("T(T(leaf:2:1, leaf:1:0), L[2](leaf:3:3))"));
  EXPECT_THROW(graft(G, t, 1, P("leaf:1:2")), TreeError);
  EXPECT_THROW(graft(G, t, 3, P("leaf:1:1")), TreeError);
  EXPECT_EQ(graft(G, P("T(leaf:1:0, L[2](leaf:2:3))"), 1, P("L[1](U)")), P("T(L[1](U), L[2](leaf:1:3))"));
  // arity-zero inner: the later slot takes the freed number
  EXPECT_EQ(graft(G, P("T(leaf:2:1, leaf:1:0)"), 1, P("U")), P("T(leaf:1:1, U)"));
}

TEST(Trees, StepParsing) {
  auto s = parse_step("gamma^-1(1,2)@01");
  EXPECT_EQ(s.gen, Gen::Gamma);
  EXPECT_TRUE(s.inverse);
  EXPECT_EQ(s.args, (std::vector<Elem>{1, 2}));
  EXPECT_EQ(s.path, "01");
  EXPECT_EQ(parse_step(s.str()), s);
  EXPECT_THROW(parse_step("zeta@"), ParseError);
  EXPECT_THROW(parse_step("c@2"), ParseError);
  EXPECT_THROW(parse_step("c"), ParseError);
}

TEST(Trees, IllTypedSteps) {
  const auto G = make_group("S3");
  EXPECT_THROW(apply_step(G, P("leaf:1:0"), parse_step("alpha@")), IllTyped);
  EXPECT_THROW(apply_step(G, P("L[1](leaf:1:0)"), parse_step("delta@")), IllTyped);
  EXPECT_THROW(apply_step(G, P("T(L[1](leaf:1:0), L[2](leaf:2:0))"), parse_step("beta@")), IllTyped);
  EXPECT_THROW(apply_step(G, P("T(leaf:1:0, leaf:2:0)"), parse_step("c@1")), IllTyped);
  EXPECT_THROW(apply_step(G, P("T(L[2](leaf:2:0), leaf:1:1)"), parse_step("c^-1@")), IllTyped);
  EXPECT_NO_THROW(apply_step(G, P("T(L[1](leaf:2:0), leaf:1:1)"), parse_step("c^-1@")));
  EXPECT_THROW(apply_step(G, P("L[1](leaf:1:0)"), parse_step("gamma^-1(1,1)@")), IllTyped);
}

TEST(Trees, InterpretExamples) {
  const auto G = make_group("S3");
  const auto two = P("T(leaf:1:1, leaf:2:3)");
  auto I = interpret_morphism(G, {two, {}});
  EXPECT_TRUE(I.braid.letters.empty());
  EXPECT_EQ(I.source, I.target);
  I = interpret_morphism(G, {two, parse_steps("c@")});
  EXPECT_EQ(I.braid.letters, (std::vector<int>{1}));
  EXPECT_EQ(component_act(G, I.braid, I.source.tuple(), I.source.signature.inputs), I.target.tuple());
  EXPECT_EQ(I.target.b, (Tuple{0, 1}));
  const auto four = P("T(T(T(leaf:1:1, leaf:2:2), leaf:3:3), leaf:4:4)");
  I = interpret_morphism(G, {four, parse_steps("alpha@ alpha@")});
  EXPECT_TRUE(I.braid.letters.empty());
  EXPECT_EQ(I.source.tuple(), I.target.tuple());
  // Block crossing: two strands past one.
  I = interpret_morphism(G, {P("T(T(leaf:1:1, leaf:2:2), leaf:3:3)"), parse_steps("c@")});
  EXPECT_EQ(I.braid.letters, (std::vector<int>{1, 2}));
  I = interpret_morphism(G, {P("T(leaf:1:1, T(leaf:2:2, leaf:3:3))"), parse_steps("c@")});
  EXPECT_EQ(I.braid.letters, (std::vector<int>{2, 1}));
}

TEST(Trees, RandomMorphismsCarrySourceToTarget) {
  std::mt19937 rng(4);
  for (auto spec : {"S3", "D4"}) {
    const auto G = make_group(spec);
    for (int t = 0; t < 40; ++t) {
      const auto tree = support::random_tree(G, rng, 1 + t % 4, t % 2, 0.2);
      const auto m = support::random_walk(G, tree, rng, 10);
      const auto I = interpret_morphism(G, m);
      EXPECT_EQ(component_act(G, I.braid, I.source.tuple(), I.source.signature.inputs), I.target.tuple());
      EXPECT_EQ(I.source.signature, I.target.signature);
      EXPECT_EQ(underlying_permutation(I.braid) * I.source.sigma, I.target.sigma);
    }
  }
}

TEST(Relations, TableParses) {
  const auto table = relation_table();
  std::set<std::string> names;
  for (const auto& r : table) names.insert(r.name);
  for (auto n : {"pentagon", "triangle", "hexagon-left", "hexagon-right", "G1", "G2", "G3.1", "G3.2", "G4", "G5",
                 "G6", "G7", "G8", "G9", "G10.1", "G10.2"})
    EXPECT_TRUE(names.count(n)) << n;
  const auto v = relation_variables(find_relation("G4"));
  EXPECT_EQ(v.objects, std::vector<std::string>{"x"});
  EXPECT_EQ(v.labels, (std::vector<std::string>{"h3", "h2", "h1"}));
}

TEST(Relations, TrivialGroupAllPass) {
  const auto G = make_group("C1");
  for (const auto& rep : check_all_relations(G)) EXPECT_EQ(rep.failure_count, 0u) << rep.relation;
}

TEST(Relations, AllPassSmallGroups) {
  for (auto spec : {"C2", "C3", "S3"}) {
    const auto G = make_group(spec);
    for (const auto& rep : check_all_relations(G)) {
      EXPECT_EQ(rep.failure_count, 0u) << spec << " " << rep.relation
                                       << (rep.failures.empty() ? "" : ": " + rep.failures[0].reason);
      EXPECT_GT(rep.assignments_checked, 0u);
    }
  }
}

TEST(Relations, UnitArities) {
  // Unit relations are exercised at r = 0, 1, 2 through U-instances.
  const auto G = make_group("S3");
  for (auto name : {"G2", "G5", "G6", "G7", "triangle"}) {
    const auto rel = find_relation(name);
    std::set<int> arities;
    for (const auto& a : all_assignments(G, rel, 100000)) {
      arities.insert(instantiate(G, rel, a).lhs.source.arity());
      EXPECT_TRUE(check_relation(G, rel, a).ok);
    }
    EXPECT_TRUE(arities.count(0) || std::string(name) == "G2" || std::string(name) == "triangle" ||
                std::string(name) == "G5" || std::string(name) == "G6" || std::string(name) == "G7");
    EXPECT_TRUE(arities.count(0) + arities.count(1) + arities.count(2) >= 1);
  }
  EXPECT_TRUE(check_relation(G, "G5", {{"x", -1}, {"y", -1}}).ok);
  EXPECT_TRUE(check_relation(G, "G5", {{"x", 2}, {"y", -1}}).ok);
  EXPECT_TRUE(check_relation(G, "G5", {{"x", 2}, {"y", 3}}).ok);
}

TEST(Relations, FlippedBraidingIsDetected) {
  const auto G = make_group("S3");
  RelationOptions opt;
  opt.flip_braiding = true;
  std::size_t hexagon_failures = 0;
  for (const auto& rep : check_all_relations(G, opt)) {
    if (rep.relation.rfind("hexagon", 0) == 0 || rep.relation == "G9") hexagon_failures += rep.failure_count;
    if (rep.relation == "pentagon") EXPECT_EQ(rep.failure_count, 0u);
  }
  EXPECT_GT(hexagon_failures, 0u);
}

TEST(Relations, HexagonSidesGiveEqualBraids) {
  const auto G = make_group("S3");
  const auto rel = find_relation("hexagon-right");
  const auto inst = instantiate(G, rel, {{"x", 1}, {"y", 2}, {"z", 3}});
  const auto L = interpret_morphism(G, inst.lhs), R = interpret_morphism(G, inst.rhs);
  EXPECT_EQ(L.braid.letters, (std::vector<int>{1, 2}));
  EXPECT_TRUE(braid_equal(L.braid, R.braid));
}

TEST(Relations, MalformedAssignment) {
  const auto G = make_group("S3");
  EXPECT_THROW(check_relation(G, "G9", {{"x", 1}}), std::invalid_argument);
  EXPECT_THROW(check_relation(G, "G9", {{"x", 1}, {"y", 1}, {"h", 9}}), std::invalid_argument);
  EXPECT_THROW(check_relation(G, "G99", {}), std::invalid_argument);
}
