#include "kgraph/decompose.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

constexpr std::uint32_t kSampleSeed = 0x6b677261;

std::vector<IndexPoint> subsample(const std::vector<IndexPoint>& points, std::size_t limit) {
  if (points.size() <= limit) return points;
  std::vector<IndexPoint> out;
  std::mt19937 rng(kSampleSeed);
  std::sample(points.begin(), points.end(), std::back_inserter(out), limit, rng);
  return out;
}

// Points with equal encodings to `depth`, refined one unit step at a time.
// Returns false when two points stay unseparated until the window runs out.
bool separates(const Representation& rep, const std::vector<IndexPoint>& points,
               const Degree& start, std::string& witness) {
  const std::size_t rank = rep.graph().rank();
  std::vector<std::vector<IndexPoint>> groups{points};
  Degree n = start;
  for (int step = 0; step < 64 && !groups.empty(); ++step) {
    std::vector<std::vector<IndexPoint>> next;
    for (const auto& group : groups) {
      std::map<Morphism, std::vector<IndexPoint>> split;
      for (IndexPoint i : group) {
        try {
          split[rep.encoding(i, n)].push_back(i);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::WindowExceeded) throw;
          witness = rep.format(group[0]) + " and " + rep.format(group[1]) +
                    " agree to depth " + n.to_string();
          return false;
        }
      }
      for (auto& [code, members] : split) {
        if (members.size() > 1) next.push_back(std::move(members));
      }
    }
    groups = std::move(next);
    n = n + Degree::filled(rank, 1);
  }
  if (groups.empty()) return true;
  witness = rep.format(groups[0][0]) + " and " + rep.format(groups[0][1]) + " share every segment up to " +
            n.to_string();
  return false;
}

}  // namespace

SliceDecomposition decompose_slices(const Representation& rep, const Degree& bound,
                                    std::size_t sample_limit) {
  SliceDecomposition out;
  const auto& orbits = rep.spec().orbits;
  const auto morphisms = rep.graph().morphisms_up_to(bound);

  for (const OrbitSpec& o : orbits) {
    out.base_periodicity.push_back(rep.space().is_aperiodic(o.base, rep.spec().window));
  }

  std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> index;
  for (const IndexPoint& i : rep.window()) {
    auto key = std::make_pair(rep.orbit_of(i.point), i.fiber);
    auto [it, fresh] = index.emplace(key, out.slices.size());
    if (fresh) out.slices.push_back(Slice{key.first, key.second, {}, false, false});
    out.slices[it->second].points.push_back(i);
  }

  for (Slice& slice : out.slices) {
    std::string name = "orbit " + std::to_string(slice.orbit + 1) + ", fiber " +
                       std::to_string(slice.fiber);
    bool invariant = true;
    for (IndexPoint i : subsample(slice.points, sample_limit)) {
      Vec e = Vec::basis(i);
      for (const Morphism& lambda : morphisms) {
        for (const Vec& image : {rep.t(lambda, e), rep.t_star(lambda, e)}) {
          for (const auto& [j, c] : image.terms()) {
            bool inside = j.fiber == slice.fiber && rep.orbit_of(j.point) == slice.orbit;
            invariant = invariant && inside;
            out.report.check("slice invariance", inside, [&, i, j] {
              return std::make_pair(name + ", l = " + rep.graph().format(lambda) + " on e" +
                                        rep.format(i),
                                    "image has component e" + rep.format(j));
            });
          }
        }
      }
    }
    slice.invariant = invariant;

    std::string witness;
    bool injective = separates(rep, slice.points, Degree::zero(rep.graph().rank()), witness);
    slice.encoding_injective = injective;
    out.report.check("encoding injective", injective,
                     [&] { return std::make_pair(name, witness); });
  }
  return out;
}

}  // namespace kgraph
