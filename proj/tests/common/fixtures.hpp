#pragma once

#include <string>
#include <vector>

#include "kgraph/representation.hpp"

namespace kgraph::testing {

// Builders for the small graphs used throughout the tests. Colors: 1 blue,
// 2 red (3 for the extra color of the broken cube).
Skeleton delta_skeleton();
Skeleton bflip_skeleton();
Skeleton mono2_skeleton();
Skeleton flip2_skeleton();
Skeleton rot5_skeleton();
Skeleton broken_cube_skeleton();
Skeleton union_skeleton();

KGraph delta();
KGraph bflip();
KGraph mono2();
KGraph flip2();
KGraph rot5();
KGraph union_graph();

/// Absolute path of a file in tests/fixtures.
std::string fixture(const std::string& name);

/// Edge ids for space-separated names.
std::vector<EdgeId> word(const KGraph& g, const std::string& names);
Morphism path(const KGraph& g, const std::string& names);
/// cycle^∞ or prefix·cycle^∞ from edge names.
InfinitePath ep(const PathSpace& space, const std::string& cycle, const std::string& prefix = "");

AtomicRepSpec orbit_spec(const KGraph& g, const std::string& cycle, std::uint32_t mult,
                         const Degree& window, const std::string& prefix = "");
/// Thue–Morse base on mono2: b1/b2 carry the letters, red is the cycle color.
AtomicRepSpec thue_morse_spec(std::uint32_t mult, const Degree& window);

}  // namespace kgraph::testing
