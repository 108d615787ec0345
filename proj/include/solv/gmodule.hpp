#pragma once

#include <vector>

#include "solv/fpmatrix.hpp"
#include "solv/pcpres.hpp"
#include "solv/pcsubgroup.hpp"

namespace solv {

// Action of a pc group on GF(p)^d; one matrix per generator, acting on row
// vectors from the right, so the generator map extends to a homomorphism.
struct GModule {
  PcPresPtr group;
  u32 p = 2;
  int dim = 0;
  std::vector<FpMatrix> action;

  FpMatrix act_of(const PcElement& g) const;
  bool verify() const;  // matrices satisfy every defining relation
  GModule restricted_to(const PcPresPtr& sub, const GroupHom& inclusion) const;
};

// Coordinates on an elementary abelian section A/B of a pc group. A and B
// must be normal in the full group with A/B of prime exponent.
struct SectionBasis {
  PcPresPtr G;
  PcSubgroup A, B;
  u32 p = 2;
  std::vector<PcElement> basis;  // sequence elements of A at depths outside B

  static SectionBasis make(const PcPresPtr& G, const PcSubgroup& A, const PcSubgroup& B);
  static SectionBasis over_trivial(const PcPresPtr& G, const PcSubgroup& A);

  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<u32> coords(const PcElement& x) const;
  PcElement from_coords(const std::vector<u32>& v) const;
  FpMatrix action_of(const PcElement& g) const;
  GModule module() const;  // conjugation action of the full group
};

// Conjugation action of G on an elementary abelian normal section, as matrices.
GModule conjugation_action_on_module(const PcPresPtr& G, const PcSubgroup& A, const PcSubgroup& B);

}  // namespace solv
