#pragma once

#include <optional>
#include <set>
#include <vector>

#include "solv/fpmatrix.hpp"

namespace solv {

// Subspace of GF(p)^d in canonical form: the basis is the rref of any
// generating set, so two subspaces are equal as sets iff their canonical
// bases are identical.
class Subspace {
public:
  Subspace() : dim_amb_(0), p_(2) {}
  Subspace(int ambient_dim, u32 p) : dim_amb_(ambient_dim), p_(p), basis_(0, ambient_dim, p) {}
  static Subspace span(const FpMatrix& generators);
  static Subspace full(int ambient_dim, u32 p);

  int ambient_dim() const { return dim_amb_; }
  u32 p() const { return p_; }
  int dim() const { return basis_.rows(); }
  const FpMatrix& basis() const { return basis_; }

  bool contains(const std::vector<u32>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator<(const Subspace& o) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  // Reduce v modulo the subspace (kill pivot coordinates).
  std::vector<u32> reduce(const std::vector<u32>& v) const;

  std::vector<u32> serialize() const;
  size_t hash() const;

private:
  int dim_amb_;
  u32 p_;
  FpMatrix basis_;  // rref, no zero rows
};

// Number of k-dimensional subspaces of GF(p)^d.
u64 gaussian_binomial(int d, int k, u32 p);

// Every subspace of GF(p)^d with dimension in dim_filter (all dims when
// nullopt), each exactly once, ordered by (dim, pivot columns, free entries).
// Throws cap_error(subspace_budget) when the count exceeds the budget.
std::vector<Subspace> enumerate_subspaces(int d, u32 p,
                                          const std::optional<std::set<int>>& dim_filter = std::nullopt);

// Smallest subspace containing seed and closed under every action matrix
// (spinning). Matrices act on row vectors from the right.
Subspace invariant_subspace_closure(const Subspace& seed, const std::vector<FpMatrix>& action);

// All subspaces invariant under every action matrix, by closing {0} upward
// with minimal invariant subspaces of successive quotients.
std::vector<Subspace> all_invariant_subspaces(int d, u32 p, const std::vector<FpMatrix>& action);

// Minimal nonzero invariant subspaces.
std::vector<Subspace> minimal_invariant_subspaces(int d, u32 p, const std::vector<FpMatrix>& action);

}  // namespace solv
