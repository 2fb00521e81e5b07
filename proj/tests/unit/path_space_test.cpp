#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kgraph/error.hpp"
#include "oracle.hpp"

namespace kgraph {
namespace {

using testing::ep;
using testing::path;
using testing::word;

class BflipPaths : public ::testing::Test {
 protected:
  KGraph g = testing::bflip();
  PathSpace space{g};
  InfinitePath x = ep(space, "e h f g");
  InfinitePath y = ep(space, "f g e h");

  bool same(const InfinitePath& a, const InfinitePath& b) const { return space.equal(a, b).same(); }
};

TEST_F(BflipPaths, Segments) {
  EXPECT_EQ(g.format(space.segment(x, Degree{1, 1})), "[e|h]");
  EXPECT_EQ(g.format(space.segment(x, Degree{0, 0})), "u");
  EXPECT_EQ(g.format(space.segment(y, Degree{1, 1})), "[f|g]");
}

TEST_F(BflipPaths, ShiftAndPrefix) {
  EXPECT_TRUE(same(space.shift(x, Degree{1, 1}), y));
  EXPECT_TRUE(same(space.shift(y, Degree{1, 1}), x));
  EXPECT_TRUE(same(space.shift(x, Degree{1, 0}), x));
  EXPECT_TRUE(same(space.prefix(path(g, "e"), x), x));
  EXPECT_TRUE(same(space.prefix(path(g, "h"), y), x));
  EXPECT_THROW(space.prefix(path(g, "e"), y), Error);
}

TEST_F(BflipPaths, Equality) {
  EXPECT_EQ(space.equal(x, y).verdict, Equality::NotEqual);
  EXPECT_EQ(space.equal(space.shift(x, Degree{2, 2}), x).verdict, Equality::Equal);
  // Different spellings of the same path.
  EXPECT_EQ(space.equal(ep(space, "e h g", ""), x).verdict, Equality::Equal);
  EXPECT_EQ(space.equal(ep(space, "e h f g", "e"), x).verdict, Equality::Equal);
}

TEST_F(BflipPaths, Periodicity) {
  Periodicity p = space.is_aperiodic(x, Degree{4, 4});
  ASSERT_TRUE(p.periodic);
  EXPECT_TRUE(p.exact);
  EXPECT_NE(p.m, p.n);
  EXPECT_TRUE(same(space.shift(x, p.m), space.shift(x, p.n)));
}

TEST_F(BflipPaths, SameOrbitWitness) {
  auto w = space.in_same_orbit(x, y);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(space.check_witness(*w));
  EXPECT_TRUE(same(space.shift(x, w->m), space.shift(y, w->l)));
}

TEST_F(BflipPaths, OrbitAndEventuallyPeriodicPaths) {
  auto orbit = space.orbit_enumerate(x, Degree{2, 2});
  ASSERT_EQ(orbit.size(), 2u);
  EXPECT_TRUE(same(orbit[0], x));
  EXPECT_TRUE(same(orbit[1], y));
  auto all = space.ep_paths(Degree{0, 0}, Degree{2, 2});
  ASSERT_EQ(all.size(), 2u);
  EXPECT_TRUE(same(all[0], x) != same(all[1], x));
  EXPECT_TRUE(same(all[0], y) || same(all[1], y));
}

TEST_F(BflipPaths, TailClosureIsFinite) {
  auto tails = space.tail_closure(x);
  ASSERT_FALSE(tails.empty());
  for (const auto& [tail, n] : tails) EXPECT_TRUE(same(tail, space.shift(x, n)));
}

TEST(PathSpace, CycleMustCoverEveryColor) {
  KGraph g = testing::mono2();
  PathSpace space(g);
  try {
    space.periodic(path(g, "b1 b2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidPath);
  }
}

TEST(PathSpace, SegmentsMatchRawRewriting) {
  struct Case {
    KGraph g;
    std::string prefix;
    std::string cycle;
  };
  std::vector<Case> cases{{testing::bflip(), "", "e h f g"},
                          {testing::bflip(), "h", "f g e h"},
                          {testing::mono2(), "b2", "b1 r"},
                          {testing::mono2(), "", "b1 b2 r"},
                          {testing::flip2(), "b1", "b1 r b2"},
                          {testing::rot5(), "b3 r", "b0 r r b2"},
                          {testing::delta(), "", "b r"}};
  for (const Case& c : cases) {
    PathSpace space(c.g);
    InfinitePath x = ep(space, c.cycle, c.prefix);
    oracle::RawRewriter raw(c.g.skeleton());
    auto prefix = word(c.g, c.prefix);
    auto cycle = word(c.g, c.cycle);
    for (const Degree& n : degrees_up_to(Degree{4, 4})) {
      EXPECT_EQ(space.segment(x, n).edges(), oracle::raw_segment(raw, prefix, cycle, n))
          << c.cycle << " at " << n.to_string();
    }
  }
}

TEST(PathSpace, MonoTwoOrbits) {
  KGraph g = testing::mono2();
  PathSpace space(g);
  InfinitePath one = ep(space, "b1 r");
  InfinitePath two = ep(space, "b2 r");
  EXPECT_FALSE(space.in_same_orbit(one, two).has_value());

  Periodicity p = space.is_aperiodic(one, Degree{3, 3});
  ASSERT_TRUE(p.periodic);
  EXPECT_TRUE(space.equal(space.shift(one, p.m), space.shift(one, p.n)).same());
  EXPECT_TRUE(space.equal(space.shift(one, Degree{1, 1}), one).same());

  auto all = space.ep_paths(Degree{0, 0}, Degree{1, 1});
  EXPECT_EQ(all.size(), 2u);
}

TEST(PathSpace, DeltaHasOnePath) {
  KGraph g = testing::delta();
  PathSpace space(g);
  InfinitePath w = ep(space, "b r");
  EXPECT_EQ(space.orbit_enumerate(w, Degree{3, 3}).size(), 1u);
  EXPECT_EQ(space.ep_paths(Degree{0, 0}, Degree{1, 1}).size(), 1u);
}

TEST(PathSpace, OrbitEnumerationMatchesBruteDedup) {
  std::vector<std::pair<KGraph, std::string>> cases{{testing::mono2(), "b1 r"},
                                                    {testing::flip2(), "b1 r"},
                                                    {testing::bflip(), "e h f g"},
                                                    {testing::rot5(), "b0 r"}};
  for (const auto& [g, cycle] : cases) {
    PathSpace space(g);
    InfinitePath omega = ep(space, cycle);
    for (const Degree& bound : {Degree{1, 1}, Degree{2, 1}}) {
      EXPECT_EQ(space.orbit_enumerate(omega, bound).size(), oracle::brute_orbit(space, omega, bound).size())
          << cycle << " " << bound.to_string();
    }
  }
}

// Orbit oracle: σ^m(x) = σ^l(y) for some m, l ≤ bound.
bool brute_same_orbit(const PathSpace& space, const InfinitePath& x, const InfinitePath& y,
                      const Degree& bound) {
  for (const Degree& m : degrees_up_to(bound)) {
    InfinitePath sx = space.shift(x, m);
    for (const Degree& l : degrees_up_to(bound)) {
      if (space.equal(sx, space.shift(y, l)).same()) return true;
    }
  }
  return false;
}

TEST(PathSpace, SameOrbitMatchesBruteSearch) {
  for (const KGraph& g : {testing::rot5(), testing::flip2(), testing::mono2()}) {
    PathSpace space(g);
    auto paths = space.ep_paths(Degree{1, 0}, Degree{1, 1});
    if (paths.size() > 8) paths.resize(8, paths.front());
    for (const InfinitePath& x : paths) {
      for (const InfinitePath& y : paths) {
        auto w = space.in_same_orbit(x, y);
        EXPECT_EQ(w.has_value(), brute_same_orbit(space, x, y, Degree{6, 6}))
            << space.format(x) << " vs " << space.format(y);
        if (w) {
          EXPECT_TRUE(space.check_witness(*w));
        }
      }
    }
  }
}

// The equality verdict for periodic paths must agree with a comparison of
// much longer segments.
TEST(PathSpace, EqualityBoundMatchesDeepComparison) {
  for (const KGraph& g : {testing::rot5(), testing::flip2(), testing::bflip()}) {
    PathSpace space(g);
    auto paths = space.ep_paths(Degree{1, 1}, Degree{2, 1});
    if (paths.size() > 24) paths.erase(paths.begin() + 24, paths.end());
    for (const InfinitePath& x : paths) {
      for (const InfinitePath& y : paths) {
        if (x.range() != y.range()) continue;
        Degree deep{24, 24};
        bool segments = space.segment(x, deep) == space.segment(y, deep);
        EXPECT_EQ(space.equal(x, y).same(), segments) << space.format(x) << " vs " << space.format(y);
      }
    }
  }
}

class ThueMorse : public ::testing::Test {
 protected:
  KGraph g = testing::mono2();
  PathSpace space{g};
  EdgeId b1 = word(g, "b1")[0];
  EdgeId b2 = word(g, "b2")[0];
  InfinitePath x = space.lazy(space.thue_morse(b1, b2, 1, Degree{20, 20}));
};

TEST_F(ThueMorse, BlueLettersFollowTheSequence) {
  EXPECT_EQ(g.format(space.segment(x, Degree{2, 0})), "[b1,b2|]");
  Morphism blue = space.segment(x, Degree{16, 0});
  for (std::size_t n = 0; n < 16; ++n) {
    EdgeId expected = __builtin_popcountll(n) % 2 ? b2 : b1;
    EXPECT_EQ(blue.edges()[n], expected) << n;
  }
}

TEST_F(ThueMorse, RedDirectionIsPeriodic) {
  // The only red edge is the loop r, so shifting by red leaves x unchanged.
  Periodicity p = space.is_aperiodic(x, Degree{8, 8});
  ASSERT_TRUE(p.periodic);
  EXPECT_FALSE(p.exact);
  EXPECT_TRUE(space.equal(space.shift(x, Degree{0, 1}), x).same());
}

TEST_F(ThueMorse, BlueShiftsAreDistinct) {
  for (std::uint32_t a = 0; a <= 6; ++a) {
    for (std::uint32_t b = a + 1; b <= 6; ++b) {
      EXPECT_FALSE(space.equal(space.shift(x, Degree{a, 0}), space.shift(x, Degree{b, 0})).same())
          << a << " " << b;
    }
  }
}

TEST_F(ThueMorse, DepthIsBounded) {
  try {
    space.segment(x, Degree{1000, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DepthExceeded);
  }
}

TEST_F(ThueMorse, DisjointFromPeriodicOrbits) {
  InfinitePath one = ep(space, "b1 r");
  try {
    auto w = space.in_same_orbit(x, one);
    EXPECT_FALSE(w.has_value());
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Undecided);
  }
}

}  // namespace
}  // namespace kgraph
