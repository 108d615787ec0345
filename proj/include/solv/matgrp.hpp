#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "solv/fpmatrix.hpp"
#include "solv/pcpres.hpp"

namespace solv {

// Element of Aut(A) = GL(d_1,p_1) x ... x GL(d_r,p_r): one block per factor.
struct FactorSpec {
  int d;
  u32 p;
  bool operator==(const FactorSpec& o) const { return d == o.d && p == o.p; }
};
using MatTuple = std::vector<FpMatrix>;

u64 gl_order(int d, u32 p);
u32 primitive_root(u32 p);
// Generators of GL(d, p): a transvection, a cycle and a diagonal torus
// generator; empty for the trivial cases.
std::vector<FpMatrix> gl_generators(int d, u32 p);

MatTuple tuple_identity(const std::vector<FactorSpec>& f);
MatTuple tuple_mul(const MatTuple& a, const MatTuple& b);
MatTuple tuple_inverse(const MatTuple& a);
bool tuple_is_identity(const MatTuple& a);
std::string tuple_key(const MatTuple& a);
u64 tuple_order(const MatTuple& a);

// Full ambient group with generators embedded per factor.
struct MatAmbient {
  std::vector<FactorSpec> factors;
  std::vector<MatTuple> gens;
  u64 order = 1;
  static MatAmbient full(const std::vector<FactorSpec>& f);
};

// Deterministic BFS closure; throws cap_error(closure_budget) above cap.
std::vector<MatTuple> mat_closure(const std::vector<FactorSpec>& f, const std::vector<MatTuple>& gens,
                                  u64 cap);

// Canonical key of the subgroup generated by the given closed element list:
// the sorted serialized elements.
std::string subgroup_key(const std::vector<MatTuple>& elements);

struct MatOrbit {
  std::vector<std::string> points;
  std::vector<MatTuple> transversal;
  std::vector<MatTuple> stab_gens;  // generate the full point stabilizer
  bool stab_certified = false;      // order cross-checked via |orbit|*|stab|
  u64 stab_order = 0;               // valid when certified
  std::unordered_set<std::string> point_set;
};

// Orbit of start under <gens> with Schreier stabilizer generators.
// acting_order 0 means unknown (stabilizer generators are then reduced only
// by deduplication or by a best-effort closure).
MatOrbit mat_orbit_stabilizer(const std::vector<FactorSpec>& f, const std::vector<MatTuple>& gens,
                              u64 acting_order, const std::string& start,
                              const std::function<std::string(const std::string&, const MatTuple&)>& act,
                              bool want_stabilizer = true);

// Conjugacy class of a solvable subgroup: representative with its chain,
// elements, normalizer and the ambient orbit of its key.
struct SubgroupClass {
  std::vector<FactorSpec> factors;
  std::vector<std::pair<MatTuple, u32>> chain;  // (x_s, q_s): H_s = <H_{s-1}, x_s>, index q_s
  std::vector<MatTuple> elements;               // sorted by key
  u64 order = 1;
  std::vector<MatTuple> normalizer_gens;
  u64 normalizer_order = 0;
  std::unordered_set<std::string> orbit_keys;   // ambient conjugates of the subgroup key
};

// All conjugacy classes of solvable subgroups of order exactly m in GL(d,p),
// with normalizers. Cyclic extension over the divisors of m; prime-order
// classes come from rational canonical forms.
std::vector<SubgroupClass> solvable_subgroups_of_order(int d, u32 p, u64 m);

// Same, inside a small ambient subgroup P (given by its element list) with
// conjugacy and normalizers taken in the group generated by conj_gens
// (which must normalize P). conj_order 0 = unknown.
std::vector<SubgroupClass> solvable_subgroup_classes_in(const std::vector<FactorSpec>& f,
                                                        const std::vector<MatTuple>& ambient_elements,
                                                        const std::vector<MatTuple>& conj_gens,
                                                        u64 conj_order, u64 m);

// Subdirect products: classes U <= P_1 x ... x P_r of order m with surjective
// projections, up to conjugacy under R = R_1 x ... x R_r.
struct FactorClassRef {
  const SubgroupClass* cls;
};
std::vector<SubgroupClass> subdirect_products(const std::vector<FactorSpec>& f,
                                              const std::vector<const SubgroupClass*>& per_factor,
                                              u64 m);

// Largest normal p-subgroup of a small matrix group given by its elements.
std::vector<MatTuple> max_normal_p_part(const std::vector<FactorSpec>& f,
                                        const std::vector<MatTuple>& elements, u64 p);

// O(U) = prod O_{p_i}(sigma_i(U)); trivial iff U is F-relevant.
bool compute_OU_trivial(const std::vector<FactorSpec>& f, const std::vector<MatTuple>& elements);

// Pc presentation of a solvable matrix subgroup built from its chain,
// together with the generator matrices and an element lookup table.
struct MatGroupPc {
  PcPresPtr pres;
  std::vector<MatTuple> gen_mats;  // per pc generator
  std::unordered_map<std::string, PcElement> lookup;
  std::vector<FactorSpec> factors;

  PcElement element_of(const MatTuple& m) const;
  MatTuple matrix_of(const PcElement& x) const;
};
MatGroupPc matrix_group_to_pc(const std::vector<FactorSpec>& f, const SubgroupClass& cls);

}  // namespace solv
