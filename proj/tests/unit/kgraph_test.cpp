#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kgraph/error.hpp"
#include "oracle.hpp"

namespace kgraph {
namespace {

using testing::bflip;
using testing::path;
using testing::word;

template <class T>
bool has_violation(const std::vector<Violation>& list) {
  for (const Violation& v : list) {
    if (std::holds_alternative<T>(v)) return true;
  }
  return false;
}

std::vector<Violation> violations_of(Skeleton s) {
  auto result = KGraph::validate(std::move(s));
  if (auto* list = std::get_if<std::vector<Violation>>(&result)) return *list;
  return {};
}

TEST(KGraph, FixturesValidate) {
  for (const Skeleton& s : {testing::delta_skeleton(), testing::bflip_skeleton(),
                            testing::mono2_skeleton(), testing::flip2_skeleton(),
                            testing::rot5_skeleton(), testing::union_skeleton()}) {
    EXPECT_TRUE(std::holds_alternative<KGraph>(KGraph::validate(s)));
  }
}

TEST(KGraph, BrokenCubeIsRejected) {
  auto violations = violations_of(testing::broken_cube_skeleton());
  ASSERT_FALSE(violations.empty());
  EXPECT_TRUE(has_violation<violation::CubeInconsistent>(violations));
  EXPECT_THROW(KGraph::from_skeleton(testing::broken_cube_skeleton()), Error);
}

TEST(KGraph, MissingSquareIsNotBijective) {
  Skeleton s = SkeletonBuilder(2)
                   .vertex("o")
                   .edge("b1", 1, "o", "o")
                   .edge("b2", 1, "o", "o")
                   .edge("r", 2, "o", "o")
                   .square("b1", "r", "r", "b1")
                   .build();
  EXPECT_TRUE(has_violation<violation::SquareNotBijective>(violations_of(s)));
}

TEST(KGraph, SameColorSquareIsMalformed) {
  Skeleton s = testing::mono2_skeleton();
  s.add_square({0, 1, 1, 0});
  EXPECT_TRUE(has_violation<violation::SquareMalformed>(violations_of(s)));
}

TEST(KGraph, DeletingAnEdgeLosesSourceFreeness) {
  Skeleton s = SkeletonBuilder(2)
                   .vertex("u")
                   .vertex("v")
                   .edge("e", 1, "u", "u")
                   .edge("f", 1, "v", "v")
                   .edge("h", 2, "v", "u")
                   .square("e", "h", "h", "f")
                   .build();
  auto violations = violations_of(s);
  bool found = false;
  for (const Violation& v : violations) {
    if (auto* nsf = std::get_if<violation::NotSourceFree>(&v)) {
      found = found || (nsf->v == 1 && nsf->color == 1);
    }
  }
  EXPECT_TRUE(found);
}

TEST(KGraph, BflipNormalForm) {
  KGraph g = bflip();
  Morphism m = g.normal_form(word(g, "e h f g"));
  EXPECT_EQ(g.format(m), "[e,e|h,g]");
  EXPECT_EQ(m.degree(), (Degree{2, 2}));
  EXPECT_EQ(g.vertex_name(m.range()), "u");
  EXPECT_EQ(g.vertex_name(m.source()), "u");
}

TEST(KGraph, ComposeCollapsesSquareSpellings) {
  KGraph g = bflip();
  Morphism eh = g.compose(path(g, "e"), path(g, "h"));
  Morphism hf = g.compose(path(g, "h"), path(g, "f"));
  EXPECT_EQ(eh, hf);
  EXPECT_EQ(g.format(eh), "[e|h]");

  KGraph f2 = testing::flip2();
  EXPECT_EQ(f2.format(f2.compose(path(f2, "r"), path(f2, "b1"))), "[b2|r]");
}

TEST(KGraph, ComposeRequiresMatchingEndpoints) {
  KGraph g = bflip();
  EXPECT_THROW(g.normal_form(word(g, "e f")), Error);
  EXPECT_THROW(g.compose(path(g, "e"), path(g, "f")), Error);
}

TEST(KGraph, FactorizeRecomposes) {
  KGraph g = bflip();
  Morphism lambda = path(g, "e h f g");
  for (const Degree& m : degrees_up_to(lambda.degree())) {
    auto [mu, nu] = g.factorize(lambda, m);
    EXPECT_EQ(mu.degree(), m);
    EXPECT_EQ(g.compose(mu, nu), lambda);
  }
  EXPECT_EQ(g.format(g.segment(lambda, Degree{0, 0}, Degree{1, 1})), "[e|h]");
  EXPECT_THROW(g.factorize(lambda, Degree{3, 0}), Error);
}

TEST(KGraph, EnumerateCounts) {
  KGraph g = bflip();
  auto u = *g.skeleton().find_vertex("u");
  auto at_u = g.enumerate(u, Degree{1, 1});
  ASSERT_EQ(at_u.size(), 1u);
  EXPECT_EQ(g.format(at_u[0]), "[e|h]");
  KGraph m = testing::mono2();
  EXPECT_EQ(m.enumerate(0, Degree{2, 0}).size(), 4u);
}

TEST(KGraph, LambdaMinExamples) {
  KGraph g = bflip();
  auto exts = g.lambda_min(path(g, "e"), path(g, "h"));
  ASSERT_EQ(exts.size(), 1u);
  EXPECT_EQ(g.format_word(exts[0].alpha), "h");
  EXPECT_EQ(g.format_word(exts[0].beta), "f");

  Morphism lambda = path(g, "e h");
  auto self = g.lambda_min(lambda, lambda);
  ASSERT_EQ(self.size(), 1u);
  EXPECT_EQ(self[0].alpha, g.vertex(lambda.source()));

  KGraph m = testing::mono2();
  EXPECT_TRUE(m.lambda_min(path(m, "b1"), path(m, "b2")).empty());
  EXPECT_EQ(m.lambda_min(path(m, "b1"), path(m, "r")).size(), 1u);
  EXPECT_EQ(m.lambda_min(path(m, "b2"), path(m, "r")).size(), 1u);
}

TEST(KGraph, Properties) {
  GraphProperties p = bflip().properties();
  EXPECT_TRUE(p.source_free);
  EXPECT_TRUE(p.strongly_connected);
  EXPECT_TRUE(p.finite);
  GraphProperties m = testing::mono2().properties();
  EXPECT_TRUE(m.source_free && m.strongly_connected && m.finite);
  EXPECT_FALSE(testing::union_graph().properties().strongly_connected);
}

TEST(KGraph, EnumerateMatchesBruteForce) {
  for (const KGraph& g : {bflip(), testing::mono2(), testing::flip2(), testing::delta(),
                          testing::rot5()}) {
    oracle::RawRewriter raw(g.skeleton());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (const Degree& n : degrees_up_to(Degree{2, 2})) {
        std::set<oracle::Word> mine;
        for (const Morphism& m : g.enumerate(v, n)) mine.insert(m.edges());
        EXPECT_EQ(mine, oracle::brute_enumerate(raw, v, n)) << n.to_string();
      }
    }
  }
}

}  // namespace
}  // namespace kgraph
