#pragma once

#include <optional>
#include <vector>

#include "solv/pcpres.hpp"

namespace solv {

// Subgroup of a pc group, stored as its canonical induced generating
// sequence: strictly increasing leading depths, leading exponents 1, and at
// the leading column of every deeper sequence element the exponent 0. Two
// subgroups are equal as sets iff their sequences are identical.
class PcSubgroup {
public:
  PcSubgroup() = default;
  explicit PcSubgroup(PcPresPtr owner) : owner_(std::move(owner)) {}

  static PcSubgroup trivial(PcPresPtr owner) { return PcSubgroup(std::move(owner)); }
  static PcSubgroup full(PcPresPtr owner);
  static PcSubgroup from_generators(PcPresPtr owner, const std::vector<PcElement>& gens);

  const PcPresPtr& owner() const { return owner_; }
  const std::vector<PcElement>& igs() const { return igs_; }
  u64 order() const;
  bool is_trivial() const { return igs_.empty(); }

  bool contains(const PcElement& x) const;
  bool contains(const PcSubgroup& other) const;
  bool operator==(const PcSubgroup& o) const { return igs_ == o.igs_; }
  bool operator<(const PcSubgroup& o) const { return igs_ < o.igs_; }

  // Left-sift x through the sequence; identity residue iff x is a member.
  PcElement sift(PcElement x) const;

  // Canonical coset representative of xH (kills the leading columns of H).
  PcElement coset_reduce(PcElement x) const;

  bool is_normal_in_full_group() const;
  PcSubgroup conjugate(const PcElement& g) const;

  // Elements with leading depth >= d generate H  intersected with the tail
  // subgroup <g_d, ..., g_n>.
  PcSubgroup tail_intersection(int d) const;

  std::vector<PcElement> elements(u64 cap = 0) const;

  size_t hash() const;

private:
  friend class IgsBuilder;
  PcPresPtr owner_;
  std::vector<PcElement> igs_;
};

// Incremental induced-sequence construction by sifting with closure under
// powers and mutual conjugation.
class IgsBuilder {
public:
  explicit IgsBuilder(PcPresPtr owner);
  // Returns true if the subgroup grew.
  bool add(const PcElement& x);
  bool contains(const PcElement& x) const;
  u64 current_order() const;
  PcSubgroup build() const;  // canonicalizes

private:
  PcPresPtr owner_;
  std::vector<std::optional<PcElement>> slot_;
  void insert_closed(const PcElement& x, std::vector<PcElement>& work);
};

PcSubgroup normal_closure(const PcPresPtr& G, const std::vector<PcElement>& gens);

// [A, B] as a subgroup of the full group; valid when the commutator group is
// normalized by the supplied closure generators (e.g. both A and B normal in
// G and closure_gens generating G).
PcSubgroup commutator_subgroup(const PcPresPtr& G, const PcSubgroup& A, const PcSubgroup& B,
                               const std::vector<PcElement>& closure_gens);

// Subgroup generated by k-th powers of H's sequence together with base,
// normal-closed under closure_gens. Correct for the F-central series steps
// where H/base is abelian.
PcSubgroup power_subgroup_mod(const PcPresPtr& G, const PcSubgroup& H, u64 k, const PcSubgroup& base,
                              const std::vector<PcElement>& closure_gens);

struct GroupHom {
  PcPresPtr source;
  PcPresPtr target;
  std::vector<PcElement> images;  // one per source generator

  PcElement apply(const PcElement& x) const;
  bool verify() const;  // respects all source relations
  bool is_isomorphism() const;
  PcSubgroup image_subgroup() const;
};

GroupHom compose(const GroupHom& f, const GroupHom& g);  // x -> g(f(x))

// Quotient G/N for N normal: consistent presentation on the retained depths
// plus the natural projection data.
struct QuotientMap {
  PcPresPtr source;
  PcPresPtr quotient;
  PcSubgroup kernel;
  std::vector<int> retained;  // source depth of each quotient generator

  PcElement project(const PcElement& x) const;
  PcElement lift(const PcElement& q) const;
  GroupHom projection_hom() const;
};

QuotientMap quotient(const PcPresPtr& G, const PcSubgroup& N);

}  // namespace solv
