#pragma once

#include <functional>
#include <vector>

#include "solv/pcpres.hpp"
#include "solv/pcsubgroup.hpp"

namespace solv {

// Orbit-stabilizer for a pc group acting on hashable points (serialized as
// u32 vectors). The action must satisfy act(act(x, g), h) = act(x, gh).
struct PcOrbit {
  std::vector<std::vector<u32>> points;     // orbit, BFS order, points[0] = start
  std::vector<PcElement> transversal;       // points[0] * transversal[i] = points[i]
  PcSubgroup stabilizer;                    // of points[0] in <acting_gens>
};

PcOrbit orbit_stabilizer_pc(const PcPresPtr& G, const std::vector<PcElement>& acting_gens,
                            const std::vector<u32>& start,
                            const std::function<std::vector<u32>(const std::vector<u32>&, const PcElement&)>& act);

// U cap V via the action of U on left cosets of V.
PcSubgroup subgroup_intersection(const PcSubgroup& U, const PcSubgroup& V);

}  // namespace solv
