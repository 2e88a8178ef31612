#include <gtest/gtest.h>

#include "e2g/operad.hpp"

using namespace e2g;

namespace {

NormalForm nf(const FiniteGroup& G, const std::string& tree) { return normalize(G, parse_tree(tree)); }

const AxiomReport& find(const std::vector<AxiomReport>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.axiom == name) return r;
  throw std::logic_error("no axiom " + name);
}

}  // namespace

TEST(Operad, ComposeMatchesHandExample) {
  const auto G = make_group("S3");
  const auto f = nf(G, "T(leaf:2:1, L[3](leaf:1:2))");
  const auto g = nf(G, "T(leaf:2:2, leaf:1:0)");
  ASSERT_EQ(g.signature.output, f.signature.inputs[0]);
  const auto c = compose_normal(G, f, 1, g);
  // slot 1 of f sits at position 1 under label 3
  EXPECT_EQ(c.sigma, Permutation::from_images({2, 1, 0}));
  EXPECT_EQ(c.b, (Tuple{3, 3, 0}));
  EXPECT_EQ(c.signature.inputs, (Tuple{0, 2, 1}));
  EXPECT_EQ(c, compose_by_graft(G, f, 1, g));
}

TEST(Operad, ComposeRejectsColorMismatch) {
  const auto G = make_group("S3");
  const auto f = nf(G, "T(leaf:1:1, leaf:2:2)");
  const auto g = nf(G, "leaf:1:3");
  EXPECT_THROW(compose_normal(G, f, 1, g), SignatureMismatch);
  EXPECT_THROW(compose_by_graft(G, f, 1, g), SignatureMismatch);
  EXPECT_THROW(compose_normal(G, f, 3, g), std::out_of_range);
}

TEST(Operad, FastPathMatchesGraftC3) {
  const auto G = make_group("C3");
  const auto rep = check_fast_path(G, Bounds{3, 6, 100000000});
  EXPECT_GT(rep.instances, 0u);
  EXPECT_EQ(rep.failures, 0u) << (rep.witnesses.empty() ? "" : rep.witnesses[0]);
}

TEST(Operad, FastPathMatchesGraftS3Arity2) {
  const auto G = make_group("S3");
  const auto rep = check_fast_path(G, Bounds{2, 6, 100000000});
  EXPECT_EQ(rep.failures, 0u) << (rep.witnesses.empty() ? "" : rep.witnesses[0]);
}

TEST(Operad, AxiomsHoldC2Arity3) {
  const auto G = make_group("C2");
  for (const auto& r : check_operad_axioms(pi0_operad(G), Bounds{3, 6, 100000000})) {
    EXPECT_GT(r.instances, 0u) << r.axiom;
    EXPECT_EQ(r.failures, 0u) << r.axiom << ": " << (r.witnesses.empty() ? "" : r.witnesses[0]);
  }
}

TEST(Operad, AxiomsHoldS3Arity2) {
  const auto G = make_group("S3");
  for (const auto& r : check_operad_axioms(pi0_operad(G), Bounds{2, 6, 100000000}, 2))
    EXPECT_EQ(r.failures, 0u) << r.axiom << ": " << (r.witnesses.empty() ? "" : r.witnesses[0]);
}

TEST(Operad, UnpremultipliedLabelsAreCaught) {
  const auto G = make_group("S3");
  const auto reps = check_operad_axioms(NormalFormModel{&G, false}, Bounds{2, 6, 100000000});
  EXPECT_GT(find(reps, "closure").failures, 0u);
  // conjugation is trivial in an abelian group, so the mistake is invisible there
  const auto A = make_group("C3");
  const auto ab = check_operad_axioms(NormalFormModel{&A, false}, Bounds{2, 6, 100000000});
  EXPECT_EQ(find(ab, "closure").failures, 0u);
}

TEST(Operad, CapIsEnforced) {
  const auto G = make_group("S3");
  EXPECT_THROW(check_operad_axioms(pi0_operad(G), Bounds{2, 6, 1000}), CapExceeded);
  const auto S4 = make_group("S4");
  EXPECT_THROW(check_operad_axioms(pi0_operad(S4), Bounds{1, 6, 1000}), CapExceeded);
}

TEST(Operad, TrivialGroupGivesPermutations) {
  const auto G = make_group("C1");
  for (int r = 0; r <= 4; ++r) {
    std::size_t fact = 1;
    for (int k = 2; k <= r; ++k) fact *= static_cast<std::size_t>(k);
    EXPECT_EQ(enumerate_ops(G, r).size(), fact);
  }
  // composition is block substitution of permutations
  const NFOp f = to_op({Permutation::from_images({1, 0}), {0, 0}, {{0, 0}, 0}});
  const NFOp g = to_op({Permutation::from_images({1, 2, 0}), {0, 0, 0}, {{0, 0, 0}, 0}});
  const auto c = to_normal_form(compose_op(G, f, 2, g));
  EXPECT_EQ(c.sigma, perm_compose(Permutation::from_images({1, 0}), 2, Permutation::from_images({1, 2, 0})));
}

TEST(Operad, Pi0OperationsOfSignature) {
  const auto G = make_group("S3");
  const ColorSignature sig{{1, 1}, 0};
  std::size_t n = 0;
  for (const auto& op : enumerate_ops(G, 2))
    if (op.g[0] == 1 && op.g[1] == 1 && op.h == 0) ++n;
  EXPECT_EQ(pi0_operations(G, sig).size(), n);
}

TEST(Operad, ActionMatchesTreeRelabeling) {
  const auto G = make_group("S3");
  const auto t = parse_tree("T(L[2](leaf:3:1), T(leaf:1:4, L[5](leaf:2:3)))");
  const auto pi = Permutation::from_images({2, 0, 1});
  // slot i of t.pi is slot pi(i) of t: 3 -> 1, 1 -> 2, 2 -> 3
  const auto u = parse_tree("T(L[2](leaf:1:1), T(leaf:2:4, L[5](leaf:3:3)))");
  EXPECT_EQ(act_normal(normalize(G, t), pi), normalize(G, u));
}

TEST(Operad, MorphismCompositionUsesCabling) {
  const auto G = make_group("S3");
  const auto rep = check_morphism_composition(G, 2);
  EXPECT_GT(rep.instances, 0u);
  EXPECT_EQ(rep.failures, 0u) << (rep.witnesses.empty() ? "" : rep.witnesses[0]);
}
