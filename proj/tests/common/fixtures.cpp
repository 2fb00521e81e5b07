#include "fixtures.hpp"

#include <sstream>

namespace kgraph::testing {

Skeleton delta_skeleton() {
  return SkeletonBuilder(2)
      .vertex("z")
      .edge("b", 1, "z", "z")
      .edge("r", 2, "z", "z")
      .square("b", "r", "r", "b")
      .build();
}

Skeleton bflip_skeleton() {
  return SkeletonBuilder(2)
      .vertex("u")
      .vertex("v")
      .edge("e", 1, "u", "u")
      .edge("f", 1, "v", "v")
      .edge("h", 2, "v", "u")
      .edge("g", 2, "u", "v")
      .square("e", "h", "h", "f")
      .square("f", "g", "g", "e")
      .build();
}

Skeleton mono2_skeleton() {
  return SkeletonBuilder(2)
      .vertex("o")
      .edge("b1", 1, "o", "o")
      .edge("b2", 1, "o", "o")
      .edge("r", 2, "o", "o")
      .square("b1", "r", "r", "b1")
      .square("b2", "r", "r", "b2")
      .build();
}

Skeleton flip2_skeleton() {
  return SkeletonBuilder(2)
      .vertex("o")
      .edge("b1", 1, "o", "o")
      .edge("b2", 1, "o", "o")
      .edge("r", 2, "o", "o")
      .square("b1", "r", "r", "b2")
      .square("b2", "r", "r", "b1")
      .build();
}

Skeleton rot5_skeleton() {
  SkeletonBuilder b(2);
  b.vertex("o");
  for (int k = 0; k < 5; ++k) b.edge("b" + std::to_string(k), 1, "o", "o");
  b.edge("r", 2, "o", "o");
  for (int k = 0; k < 5; ++k) {
    b.square("b" + std::to_string(k), "r", "r", "b" + std::to_string((k + 1) % 5));
  }
  return b.build();
}

Skeleton broken_cube_skeleton() {
  return SkeletonBuilder(3)
      .vertex("o")
      .edge("a1", 1, "o", "o")
      .edge("a2", 1, "o", "o")
      .edge("b1", 2, "o", "o")
      .edge("b2", 2, "o", "o")
      .edge("c", 3, "o", "o")
      .square("a1", "b1", "b1", "a1")
      .square("a1", "b2", "b2", "a2")
      .square("a2", "b1", "b1", "a2")
      .square("a2", "b2", "b2", "a1")
      .square("a1", "c", "c", "a1")
      .square("a2", "c", "c", "a2")
      .square("b1", "c", "c", "b2")
      .square("b2", "c", "c", "b1")
      .build();
}

Skeleton union_skeleton() {
  return SkeletonBuilder(2)
      .vertex("u")
      .vertex("v")
      .vertex("o")
      .edge("e", 1, "u", "u")
      .edge("f", 1, "v", "v")
      .edge("h", 2, "v", "u")
      .edge("g", 2, "u", "v")
      .edge("b1", 1, "o", "o")
      .edge("b2", 1, "o", "o")
      .edge("r", 2, "o", "o")
      .square("e", "h", "h", "f")
      .square("f", "g", "g", "e")
      .square("b1", "r", "r", "b1")
      .square("b2", "r", "r", "b2")
      .build();
}

KGraph delta() { return KGraph::from_skeleton(delta_skeleton()); }
KGraph bflip() { return KGraph::from_skeleton(bflip_skeleton()); }
KGraph mono2() { return KGraph::from_skeleton(mono2_skeleton()); }
KGraph flip2() { return KGraph::from_skeleton(flip2_skeleton()); }
KGraph rot5() { return KGraph::from_skeleton(rot5_skeleton()); }
KGraph union_graph() { return KGraph::from_skeleton(union_skeleton()); }

std::string fixture(const std::string& name) { return std::string(KGRAPH_FIXTURE_DIR) + "/" + name; }

std::vector<EdgeId> word(const KGraph& g, const std::string& names) {
  std::istringstream in(names);
  std::vector<EdgeId> out;
  std::string name;
  while (in >> name) out.push_back(*g.skeleton().find_edge(name));
  return out;
}

Morphism path(const KGraph& g, const std::string& names) { return g.normal_form(word(g, names)); }

InfinitePath ep(const PathSpace& space, const std::string& cycle, const std::string& prefix) {
  Morphism c = path(space.graph(), cycle);
  if (prefix.empty()) return space.periodic(c);
  return space.periodic(path(space.graph(), prefix), c);
}

AtomicRepSpec orbit_spec(const KGraph& g, const std::string& cycle, std::uint32_t mult,
                         const Degree& window, const std::string& prefix) {
  PathSpace space(g);
  return AtomicRepSpec{g, {{ep(space, cycle, prefix), mult}}, window, {}};
}

AtomicRepSpec thue_morse_spec(std::uint32_t mult, const Degree& window) {
  KGraph g = mono2();
  PathSpace space(g);
  auto source = space.thue_morse(word(g, "b1")[0], word(g, "b2")[0], 1,
                                 window + Degree::filled(2, 1));
  return AtomicRepSpec{g, {{space.lazy(source), mult}}, window, {}};
}

}  // namespace kgraph::testing
