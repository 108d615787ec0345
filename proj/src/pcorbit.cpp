#include "solv/pcorbit.hpp"

#include <cassert>
#include <unordered_map>

#include "solv/config.hpp"

namespace solv {

namespace {
struct VecHash {
  size_t operator()(const std::vector<u32>& v) const {
    return hash_bytes(v.data(), v.size() * sizeof(u32));
  }
};
}  // namespace

PcOrbit orbit_stabilizer_pc(const PcPresPtr& G, const std::vector<PcElement>& acting_gens,
                            const std::vector<u32>& start,
                            const std::function<std::vector<u32>(const std::vector<u32>&, const PcElement&)>& act) {
  PcOrbit res;
  PcSubgroup acting = PcSubgroup::from_generators(G, acting_gens);
  u64 acting_order = acting.order();

  std::unordered_map<std::vector<u32>, size_t, VecHash> index;
  res.points.push_back(start);
  res.transversal.push_back(G->identity());
  index.emplace(start, 0);
  IgsBuilder stab(G);

  for (size_t i = 0; i < res.points.size(); ++i) {
    for (const PcElement& g : acting_gens) {
      std::vector<u32> img = act(res.points[i], g);
      auto it = index.find(img);
      if (it == index.end()) {
        if (res.points.size() >= budgets().orbit_points)
          throw cap_error(cap_kind::orbit_budget, "orbit exceeds budget");
        index.emplace(img, res.points.size());
        res.points.push_back(std::move(img));
        res.transversal.push_back(G->mul(res.transversal[i], g));
      } else {
        PcElement s = G->mul(G->mul(res.transversal[i], g), G->inverse(res.transversal[it->second]));
        if (!stab.contains(s)) stab.add(s);
      }
    }
  }
  res.stabilizer = stab.build();
  assert(res.stabilizer.order() * res.points.size() == acting_order);
  return res;
}

PcSubgroup subgroup_intersection(const PcSubgroup& U, const PcSubgroup& V) {
  // U acts on left cosets xV via act(x, g) = canonical((g^{-1} x) V); the
  // stabilizer of the trivial coset is U cap V.
  const PcPresPtr& G = U.owner();
  auto act = [&](const std::vector<u32>& pt, const PcElement& g) {
    PcElement x{pt};
    return V.coset_reduce(G->mul(G->inverse(g), x)).e;
  };
  PcOrbit o = orbit_stabilizer_pc(G, U.igs(), G->identity().e, act);
  return o.stabilizer;
}

}  // namespace solv
