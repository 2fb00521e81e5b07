#include "kgraph/decisions.hpp"

#include "kgraph/error.hpp"
#include "kgraph/linear.hpp"

namespace kgraph {

bool is_irreducible(const AtomicRepSpec& spec) {
  return spec.orbits.size() == 1 && spec.orbits.front().multiplicity == 1;
}

bool is_monic(const AtomicRepSpec& spec) {
  for (const OrbitSpec& o : spec.orbits) {
    if (o.multiplicity != 1) return false;
  }
  return true;
}

namespace {

void require_same_graph(const AtomicRepSpec& a, const AtomicRepSpec& b) {
  if (!(a.graph.skeleton() == b.graph.skeleton())) {
    throw Error(ErrorCode::InvalidSpec, "representations are over different graphs");
  }
}

// Orbit-class incidence: meets[i][j] iff orbit i of a and orbit j of b coincide.
std::vector<std::vector<bool>> incidence(const AtomicRepSpec& a, const AtomicRepSpec& b) {
  require_same_graph(a, b);
  PathSpace space(a.graph);
  std::vector<std::vector<bool>> meets(a.orbits.size(), std::vector<bool>(b.orbits.size()));
  for (std::size_t i = 0; i < a.orbits.size(); ++i) {
    for (std::size_t j = 0; j < b.orbits.size(); ++j) {
      meets[i][j] = space.in_same_orbit(a.orbits[i].base, b.orbits[j].base).has_value();
    }
  }
  return meets;
}

}  // namespace

bool are_disjoint(const AtomicRepSpec& a, const AtomicRepSpec& b) {
  for (const auto& row : incidence(a, b)) {
    for (bool m : row) {
      if (m) return false;
    }
  }
  return true;
}

EquivalenceVerdict unitarily_equivalent(const AtomicRepSpec& a, const AtomicRepSpec& b) {
  auto meets = incidence(a, b);
  EquivalenceVerdict verdict;
  // Orbits within one spec are pairwise distinct, so each row and column has
  // at most one hit.
  std::vector<bool> b_used(b.orbits.size(), false);
  bool support = a.orbits.size() == b.orbits.size();
  bool multiplicity = true;
  for (std::size_t i = 0; i < a.orbits.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < b.orbits.size(); ++j) {
      if (!meets[i][j]) continue;
      found = true;
      b_used[j] = true;
      verdict.matched.emplace_back(i, j);
      if (a.orbits[i].multiplicity != b.orbits[j].multiplicity) multiplicity = false;
    }
    if (!found) support = false;
  }
  for (bool used : b_used) {
    if (!used) support = false;
  }
  verdict.equivalent = support && multiplicity;
  if (!support) verdict.reason = "support";
  else if (!multiplicity) verdict.reason = "multiplicity";
  return verdict;
}

std::optional<std::size_t> orbit_containing(const AtomicRepSpec& spec, const InfinitePath& x) {
  PathSpace space(spec.graph);
  std::optional<Error> undecided;
  for (std::size_t o = 0; o < spec.orbits.size(); ++o) {
    try {
      if (space.in_same_orbit(x, spec.orbits[o].base)) return o;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Undecided) throw;
      undecided = e;
    }
  }
  if (undecided) throw *undecided;
  return std::nullopt;
}

CyclicVector cyclic_vector(const Representation& rep) {
  CyclicVector out;
  const auto& window = rep.window();
  out.dimension = window.size();
  mpq_class weight(1, 2);
  for (const IndexPoint& i : window) {
    out.xi.add(i, Scalar(weight));
    weight /= 2;
  }

  std::vector<Vec> span;
  for (const Morphism& lambda : rep.graph().morphisms_up_to(rep.spec().window)) {
    Vec v = rep.pvm(SetExpr::cylinder(lambda), out.xi);
    if (!v.is_zero()) span.push_back(std::move(v));
  }
  std::map<IndexPoint, std::size_t> column;
  for (std::size_t c = 0; c < window.size(); ++c) column.emplace(window[c], c);
  Matrix m(span.size(), window.size());
  for (std::size_t r = 0; r < span.size(); ++r) {
    for (const auto& [i, c] : span[r].terms()) m(r, column.at(i)) = c;
  }
  out.rank = rank(std::move(m));
  return out;
}

mpq_class atom_mass(const Representation& rep, const Vec& xi, const InfinitePath& x) {
  return rep.pvm(SetExpr::atom(x), xi).norm_squared();
}

}  // namespace kgraph
