#pragma once

#include <optional>
#include <vector>

#include "solv/gmodule.hpp"
#include "solv/pcpres.hpp"
#include "solv/pcsubgroup.hpp"

namespace solv {

// Cocycles are relation tails: one module element per defining relation of
// the acting group's presentation (all power relations, then all conjugate
// relations in lexicographic order), concatenated over GF(p).

int relation_count(const PcPresentation& u);
int relation_index_power(const PcPresentation& u, int i);
int relation_index_conj(const PcPresentation& u, int i, int j);

// Extension presentation of A by U with the given tails appended to U's
// relations; generators 0..n-1 are U's, generators n..n+d-1 span A.
struct ExtensionLayout {
  PcPresPtr ext;
  PcPresPtr base;  // U
  GModule mod;     // action of U on A
  int n_u = 0;
  int d = 0;
  u32 p = 2;

  PcElement embed(const std::vector<u32>& v) const;
  std::vector<u32> module_part(const PcElement& x) const;
  bool in_module(const PcElement& x) const;
  PcElement lift(const PcElement& u_elt) const;     // zero module part
  PcElement project_u(const PcElement& x) const;    // drop module part
};

ExtensionLayout build_extension(const PcPresPtr& U, const GModule& A, const std::vector<u32>& tails,
                                bool check = true);

// Tails of an extension presented in ExtensionLayout shape, re-extracted by
// evaluating U's relations on the first n_u generators.
std::vector<u32> extract_tails(const ExtensionLayout& E);

// Values of U's defining relations at substituted elements xs (in any group):
// pow i gives xs_i^{p_i} * w_i(xs)^{-1}; conj (i,j) gives xs_j^{xs_i} * w_ij(xs)^{-1}.
std::vector<PcElement> relation_values(const PcPresentation& U, const std::vector<PcElement>& xs,
                                       const PcPresentation& target);

struct CohomologySpace {
  PcPresPtr u;
  GModule mod;
  int tail_dim = 0;   // relation_count * d
  FpMatrix z2;        // rows: basis of 2-cocycles (tail vectors)
  FpMatrix b2;        // rows: basis of 2-coboundaries
  FpMatrix h2;        // rows: transversal basis, b2 + h2 spans z2
  FpMatrix z1;        // rows: derivations as generator-value tuples (n_u * d)
  FpMatrix b1;        // rows: inner derivations u -> a*(act(u) - 1)
  FpMatrix coboundary;  // (n_u*d) x tail_dim, row (i,k) = tails of the unit 1-cochain

  int dim_h2() const { return h2.rows(); }
  int dim_z2() const { return z2.rows(); }
  int dim_b2() const { return b2.rows(); }
  int dim_z1() const { return z1.rows(); }

  bool in_z2(const std::vector<u32>& tails) const;
  // Coordinates of a cocycle's class in the h2 transversal basis.
  std::vector<u32> project_h2(const std::vector<u32>& tails) const;
  std::vector<u32> h2_rep(const std::vector<u32>& h2_coords) const;  // tail vector
  // 1-cochain c with tails = delta + coboundary(c), if one exists.
  std::optional<std::vector<u32>> cochain_between(const std::vector<u32>& delta,
                                                  const std::vector<u32>& tails) const;
};

CohomologySpace cohomology(const PcPresPtr& U, const GModule& A);

// Left-action matrix on h2 coordinates (column convention, so the map
// g -> matrix is a homomorphism) of a module automorphism g that normalizes
// the image of U: u_images[i] must be the element representing u_i^g in U.
// Throws not_normalizing_error when the data is not an automorphism pair.
FpMatrix normalizer_action_on_h2(const CohomologySpace& cs, const FpMatrix& gmap,
                                 const std::vector<PcElement>& u_images);

}  // namespace solv
