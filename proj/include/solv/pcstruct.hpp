#pragma once

#include <optional>
#include <vector>

#include "solv/gmodule.hpp"
#include "solv/pcpres.hpp"
#include "solv/pcsubgroup.hpp"

namespace solv {

// Product of the distinct primes dividing n; core_of(1) = 1.
u64 core_of(u64 n);
std::vector<u64> prime_divisors(u64 n);

PcSubgroup derived_subgroup(const PcPresPtr& G, const PcSubgroup& H);
std::vector<PcSubgroup> derived_series(const PcPresPtr& G);

// Normal series G = T_0 > T_1 > ... > 1 with every T_i normal in G and each
// factor elementary abelian.
std::vector<PcSubgroup> elementary_series(const PcPresPtr& G);

bool is_nilpotent(const PcPresPtr& G, const PcSubgroup& H);

// Presentation of a subgroup on its induced sequence, with the inclusion hom.
struct SubgroupPresentation {
  PcPresPtr pres;
  GroupHom inclusion;  // pres -> owner, generator i -> sequence element i
  std::vector<u32> coords(const PcElement& x_in_owner) const;  // sequence exponents
  PcElement to_sub(const PcElement& x_in_owner) const;
};
SubgroupPresentation subgroup_presentation(const PcPresPtr& G, const PcSubgroup& H);

PcSubgroup o_p_subgroup(const PcPresPtr& G, u64 p);
PcSubgroup fitting_subgroup(const PcPresPtr& G);
PcSubgroup sylow_subgroup(const PcPresPtr& G, u64 p);
PcSubgroup frattini_subgroup(const PcPresPtr& G);

// Centralizer of A in G. Uses the conjugation-action kernel when A is an
// elementary abelian normal subgroup, otherwise enumerates G (with cap).
PcSubgroup centralizer_in(const PcPresPtr& G, const PcSubgroup& A);

struct FSeries {
  std::vector<PcSubgroup> terms;  // [G, nu_0 = F(G), nu_1, ..., 1]
  int f_class = 0;
  u64 f_rank = 0;  // |nu_0 / nu_1| when f_class >= 1, else 0
};
FSeries f_series(const PcPresPtr& G);

std::vector<PcElement> minimal_generating_set(const PcPresPtr& G);

// Complement generators to an elementary abelian normal subgroup A in G, or
// nullopt when the extension does not split over A.
std::optional<std::vector<PcElement>> complement_to_elem_abelian(const PcPresPtr& G, const PcSubgroup& A);

}  // namespace solv
