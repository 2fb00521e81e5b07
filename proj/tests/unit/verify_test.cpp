#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kgraph/verify.hpp"

namespace kgraph {
namespace {

using testing::orbit_spec;

std::string failures(const CheckReport& r) {
  std::string out;
  for (const CheckFailure& f : r.failures()) out += f.relation + " at " + f.instance + ": " + f.witness + "\n";
  return out;
}

struct Case {
  std::string name;
  AtomicRepSpec spec;
};

std::vector<Case> clean_cases() {
  std::vector<Case> out;
  for (std::uint32_t mult : {1u, 2u}) {
    std::string m = std::to_string(mult);
    out.push_back({"delta" + m, orbit_spec(testing::delta(), "b r", mult, Degree{3, 3})});
    out.push_back({"bflip" + m, orbit_spec(testing::bflip(), "e h f g", mult, Degree{3, 3})});
    out.push_back({"mono2" + m, orbit_spec(testing::mono2(), "b1 r", mult, Degree{2, 2})});
    out.push_back({"flip2" + m, orbit_spec(testing::flip2(), "b1 r", mult, Degree{2, 2})});
  }
  out.push_back({"rot5", orbit_spec(testing::rot5(), "b0 r", 1, Degree{1, 1})});
  return out;
}

const Degree kBound{2, 2};

Degree bound_for(const Representation& rep) { return meet(rep.spec().window, kBound); }

TEST(Verify, CkRelationsHold) {
  for (const Case& c : clean_cases()) {
    Representation rep(c.spec);
    CheckReport r = verify_ck(rep, rep.window(), bound_for(rep));
    EXPECT_TRUE(r.ok()) << c.name << "\n" << failures(r);
    for (const char* rel : {"CK1", "CK2", "CK3", "CK4", "CK4-min"}) {
      EXPECT_GT(r.tallies().at(rel).passed, 0u) << c.name << " " << rel;
    }
  }
}

TEST(Verify, PvmIdentitiesHold) {
  for (const Case& c : clean_cases()) {
    Representation rep(c.spec);
    CheckReport r = verify_pvm_identities(rep, rep.window(), bound_for(rep));
    EXPECT_TRUE(r.ok()) << c.name << "\n" << failures(r);
    EXPECT_GT(r.instances(), 0u);
  }
}

TEST(Verify, PurelyAtomicAndPermutative) {
  for (const Case& c : clean_cases()) {
    Representation rep(c.spec);
    CheckReport atomic = verify_purely_atomic(rep);
    CheckReport perm = verify_permutative(rep, rep.window(), bound_for(rep));
    CheckReport semi = as_semibranching(rep, rep.window(), bound_for(rep));
    EXPECT_TRUE(atomic.ok()) << c.name << "\n" << failures(atomic);
    EXPECT_TRUE(perm.ok()) << c.name << "\n" << failures(perm);
    EXPECT_TRUE(semi.ok()) << c.name << "\n" << failures(semi);
  }
}

TEST(Verify, ThueMorseSampleHolds) {
  Representation rep(testing::thue_morse_spec(1, Degree{4, 4}));
  auto sample = sample_points(rep, 40);
  CheckReport r = verify_ck(rep, sample, Degree{1, 1});
  r.merge(verify_permutative(rep, sample, Degree{1, 1}));
  EXPECT_TRUE(r.ok()) << failures(r);
}

TEST(Verify, SwappedSigmaIsCaught) {
  KGraph g = testing::mono2();
  AtomicRepSpec spec = orbit_spec(g, "b1 r", 1, Degree{2, 2});
  spec.swap_mutations = testing::word(g, "b1");
  Representation rep(spec);
  CheckReport r = verify_ck(rep, rep.window(), kBound);
  ASSERT_FALSE(r.ok());
  const CheckFailure& f = r.failures().front();
  EXPECT_FALSE(f.instance.empty());
  EXPECT_FALSE(f.witness.empty());
  EXPECT_FALSE(verify_permutative(rep, rep.window(), kBound).ok());
}

TEST(Verify, ReportTalliesAndMerge) {
  CheckReport a;
  a.check("r", true, [] { return std::pair<std::string, std::string>{"", ""}; });
  a.check("r", false, [] { return std::pair<std::string, std::string>{"at", "why"}; });
  CheckReport b;
  b.check("s", true, [] { return std::pair<std::string, std::string>{"", ""}; });
  a.merge(b);
  EXPECT_FALSE(a.ok());
  EXPECT_EQ(a.instances(), 3u);
  EXPECT_EQ(a.tallies().at("r").failed, 1u);
  EXPECT_EQ(a.tallies().at("s").passed, 1u);
  ASSERT_EQ(a.failures().size(), 1u);
  EXPECT_EQ(a.failures()[0].instance, "at");
  EXPECT_EQ(a.failures()[0].witness, "why");
}

}  // namespace
}  // namespace kgraph
