#include "solv/pciso.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "solv/config.hpp"
#include "solv/pcstruct.hpp"

namespace solv {

std::vector<u64> abelian_invariants(const PcPresPtr& G) {
  // ranks of successive p^k-power layers give the number of cyclic factors
  // of each prime power order
  std::vector<u64> inv;
  std::vector<PcElement> gens;
  for (int i = 0; i < G->n(); ++i) gens.push_back(G->generator(i));
  for (u64 p : prime_divisors(G->order())) {
    // chain H_k = G^{p^k}; rank drops give factor counts
    std::vector<u64> layer_rank;
    PcSubgroup cur = PcSubgroup::full(G);
    // restrict to the p-part
    {
      u64 cop = 1, o = G->order();
      while (o % p == 0) o /= p;
      cop = o;
      std::vector<PcElement> pg;
      for (const PcElement& g : gens) pg.push_back(G->power(g, static_cast<long long>(cop)));
      cur = PcSubgroup::from_generators(G, pg);
    }
    while (!cur.is_trivial()) {
      std::vector<PcElement> pw;
      for (const PcElement& u : cur.igs()) pw.push_back(G->power(u, static_cast<long long>(p)));
      PcSubgroup next = PcSubgroup::from_generators(G, pw);
      u64 rank = 0, q = cur.order() / next.order();
      while (q > 1) {
        q /= p;
        ++rank;
      }
      layer_rank.push_back(rank);
      cur = next;
    }
    // layer_rank[k] = number of factors of order >= p^{k+1}
    for (size_t k = 0; k < layer_rank.size(); ++k) {
      u64 here = layer_rank[k] - (k + 1 < layer_rank.size() ? layer_rank[k + 1] : 0);
      u64 val = 1;
      for (size_t t = 0; t <= k; ++t) val *= p;
      for (u64 c = 0; c < here; ++c) inv.push_back(val);
    }
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

std::vector<u64> abelianization_invariants(const PcPresPtr& G) {
  PcSubgroup d = derived_subgroup(G, PcSubgroup::full(G));
  if (d.is_trivial()) return abelian_invariants(G);
  QuotientMap qm = quotient(G, d);
  return abelian_invariants(qm.quotient);
}

namespace {

struct IsoSearch {
  const PcPresPtr& G;
  const PcPresPtr& H;
  std::vector<PcElement> h_elems;
  std::vector<PcElement> images;  // per G-generator
  u64 nodes = 0;

  explicit IsoSearch(const PcPresPtr& g, const PcPresPtr& h) : G(g), H(h) {}

  bool assign(int level, const IgsBuilder& deeper) {
    if (++nodes > 50'000'000ULL) throw cap_error(cap_kind::oracle_cap, "isomorphism search node budget");
    if (level < 0) return true;
    u32 p = G->rel_order(level);
    // required value of x^p from the already assigned deeper images
    PcElement pw_target = H->identity();
    for (auto& [g, e] : G->power_word(level)) pw_target = H->mul(pw_target, H->power(images[g], e));
    for (const PcElement& x : h_elems) {
      if (!(H->power(x, p) == pw_target)) continue;
      bool ok = true;
      for (int j = level + 1; j < G->n() && ok; ++j) {
        PcElement lhs = H->conj(images[j], x);
        PcElement rhs = H->identity();
        for (auto& [g, e] : G->conjugate_word(level, j)) rhs = H->mul(rhs, H->power(images[g], e));
        if (!(lhs == rhs)) ok = false;
      }
      if (!ok) continue;
      IgsBuilder b = deeper;
      b.add(x);
      u64 expect = 1;
      for (int t = level; t < G->n(); ++t) expect *= G->rel_order(t);
      if (b.current_order() != expect) continue;  // injectivity on the tail subgroup
      images[level] = x;
      if (assign(level - 1, b)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<GroupHom> brute_force_isomorphic(const PcPresPtr& G, const PcPresPtr& H) {
  if (G->order() != H->order()) return std::nullopt;
  if (G->order() > budgets().oracle_order)
    throw cap_error(cap_kind::oracle_cap, "isomorphism oracle beyond configured cap");
  if (G->order() == 1) return GroupHom{G, H, {}};

  // cheap invariants first
  if (abelianization_invariants(G) != abelianization_invariants(H)) return std::nullopt;
  if (derived_subgroup(G, PcSubgroup::full(G)).order() != derived_subgroup(H, PcSubgroup::full(H)).order())
    return std::nullopt;
  auto order_multiset = [](const PcPresPtr& X) {
    std::map<u64, u64> m;
    for (const PcElement& x : PcSubgroup::full(X).elements()) ++m[X->element_order(x)];
    return m;
  };
  if (order_multiset(G) != order_multiset(H)) return std::nullopt;

  IsoSearch s(G, H);
  s.h_elems = PcSubgroup::full(H).elements();
  s.images.assign(G->n(), H->identity());
  IgsBuilder empty(H);
  if (!s.assign(G->n() - 1, empty)) return std::nullopt;
  GroupHom hom{G, H, s.images};
  return hom;
}

}  // namespace solv
