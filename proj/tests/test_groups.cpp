#include <gtest/gtest.h>

#include <sstream>

#include "e2g/group.hpp"
#include "oracle.hpp"

using namespace e2g;

namespace {

Elem s3(const oracle::Perm& p) { return static_cast<Elem>(oracle::lex_rank(p)); }

void expect_axioms(const FiniteGroup& G) {
  for (Elem a = 0; a < G.order(); ++a) {
    EXPECT_EQ(G.mul(a, G.inv(a)), 0);
    EXPECT_EQ(G.mul(0, a), a);
    for (Elem b = 0; b < G.order(); ++b)
      for (Elem c = 0; c < G.order(); ++c) EXPECT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c)));
  }
}

}  // namespace

TEST(Groups, NamedOrders) {
  EXPECT_EQ(make_group("C1").order(), 1u);
  EXPECT_EQ(make_group("S3").order(), 6u);
  EXPECT_EQ(make_group("D4").order(), 8u);
  EXPECT_EQ(make_group("C2xC2").order(), 4u);
  EXPECT_EQ(make_group("C2 x S3").order(), 12u);
  EXPECT_FALSE(make_group("S3").is_abelian());
  EXPECT_TRUE(make_group("C2xC3").is_abelian());
  EXPECT_FALSE(make_group("D4").is_abelian());
}

TEST(Groups, AxiomsHold) {
  for (auto spec : {"C1", "C5", "S3", "S4", "D3", "D4", "D5", "C2xC2", "C2xS3"}) expect_axioms(make_group(spec));
}

TEST(Groups, S3ProductMatchesOracle) {
  const auto G = make_group("S3");
  const auto t12 = oracle::transposition(3, 1, 2), t13 = oracle::transposition(3, 1, 3);
  const auto t23 = oracle::transposition(3, 2, 3);
  // (12)(13) = (132): 1->3, 3->2, 2->1
  const oracle::Perm c132{2, 0, 1};
  EXPECT_EQ(oracle::compose(t12, t13), c132);
  EXPECT_EQ(G.mul(s3(t12), s3(t13)), s3(c132));
  EXPECT_EQ(G.element_name(s3(c132)), "(132)");
  EXPECT_EQ(G.conj(s3(t12), s3(t13)), s3(t23));
  // Whole table against the oracle.
  std::vector<oracle::Perm> all;
  oracle::Perm p{0, 1, 2};
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  for (const auto& a : all)
    for (const auto& b : all) EXPECT_EQ(G.mul(s3(a), s3(b)), s3(oracle::compose(a, b)));
}

TEST(Groups, GroupElementOps) {
  auto G = make_group_ptr("S3");
  auto H = make_group_ptr("C6");
  GroupElement a(G, 1), b(G, 2), c(H, 1);
  EXPECT_EQ(product(a, inverse(a)).index, 0);
  EXPECT_EQ(product(GroupElement(G, 0), b).index, b.index);
  EXPECT_EQ(conjugate(GroupElement(G, 0), b).index, b.index);
  EXPECT_THROW(product(a, c), GroupMismatch);
  EXPECT_THROW(conjugate(a, c), GroupMismatch);
  EXPECT_THROW(GroupElement(G, 6), GroupError);
}

TEST(Groups, ConjugationIsAutomorphismAndAction) {
  for (auto spec : {"S3", "D4", "C2xC3"}) {
    const auto G = make_group(spec);
    for (Elem h = 0; h < G.order(); ++h)
      for (Elem a = 0; a < G.order(); ++a)
        for (Elem b = 0; b < G.order(); ++b) {
          EXPECT_EQ(G.conj(h, G.mul(a, b)), G.mul(G.conj(h, a), G.conj(h, b)));
          EXPECT_EQ(G.conj(b, G.conj(h, a)), G.conj(G.mul(b, h), a));
        }
    if (G.is_abelian())
      for (Elem h = 0; h < G.order(); ++h)
        for (Elem a = 0; a < G.order(); ++a) EXPECT_EQ(G.conj(h, a), a);
  }
}

TEST(Groups, DirectProductIndexing) {
  const auto A = make_group("C2"), B = make_group("C3");
  const auto P = direct_product(A, B);
  for (Elem a1 = 0; a1 < 2; ++a1)
    for (Elem b1 = 0; b1 < 3; ++b1)
      for (Elem a2 = 0; a2 < 2; ++a2)
        for (Elem b2 = 0; b2 < 3; ++b2)
          EXPECT_EQ(P.mul(a1 * 3 + b1, a2 * 3 + b2), A.mul(a1, a2) * 3 + B.mul(b1, b2));
}

TEST(Groups, TableFileParsing) {
  std::istringstream ok("2\n0 1\n1 0\n");
  EXPECT_EQ(read_group_table(ok).order(), 2u);

  // 0 1 2 / 1 0 0 / ... : not a group
  std::istringstream bad("3\n0 1 2\n1 2 0\n2 1 0\n");
  try {
    read_group_table(bad);
    FAIL() << "expected an axiom violation";
  } catch (const GroupAxiomError& e) {
    EXPECT_FALSE(e.witness().empty());
  }

  std::istringstream short_row("2\n0 1\n1\n");
  EXPECT_THROW(read_group_table(short_row), GroupError);
  std::istringstream range("2\n0 1\n1 5\n");
  EXPECT_THROW(read_group_table(range), GroupError);
}

TEST(Groups, NonAssociativeTableReportsTriple) {
  // Identity and inverses exist but (1*1)*2 != 1*(1*2).
  std::vector<std::vector<Elem>> t = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 1, 2, 0}};
  try {
    FiniteGroup G(t, "bad");
    FAIL();
  } catch (const GroupAxiomError& e) {
    EXPECT_NE(std::string(e.what()).find("associativity"), std::string::npos);
    EXPECT_EQ(e.witness().size(), 3u);
  }
}

TEST(Groups, BadSpecs) {
  EXPECT_THROW(make_group("Q8"), GroupError);
  EXPECT_THROW(make_group("D2"), GroupError);
  EXPECT_THROW(make_group("C"), GroupError);
  EXPECT_THROW(make_group("C2x"), GroupError);
  EXPECT_THROW(make_group("S9"), GroupError);
}

TEST(Groups, ConjugacyClasses) {
  EXPECT_EQ(make_group("S3").conjugacy_classes().size(), 3u);
  EXPECT_EQ(make_group("D4").conjugacy_classes().size(), 5u);
  EXPECT_EQ(make_group("C5").conjugacy_classes().size(), 5u);
}
