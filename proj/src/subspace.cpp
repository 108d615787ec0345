#include "solv/subspace.hpp"

#include <algorithm>
#include <cassert>

#include "solv/config.hpp"

namespace solv {

Subspace Subspace::span(const FpMatrix& generators) {
  Subspace s(generators.cols(), generators.p());
  s.basis_ = row_space(generators);
  return s;
}

Subspace Subspace::full(int ambient_dim, u32 p) {
  return span(FpMatrix::identity(ambient_dim, p));
}

bool Subspace::contains(const std::vector<u32>& v) const {
  return vec_is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  for (int r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

bool Subspace::operator<(const Subspace& o) const { return basis_ < o.basis_; }

Subspace Subspace::sum(const Subspace& o) const {
  assert(dim_amb_ == o.dim_amb_ && p_ == o.p_);
  FpMatrix stack(dim() + o.dim(), dim_amb_, p_);
  for (int r = 0; r < dim(); ++r) stack.set_row(r, basis_.row(r));
  for (int r = 0; r < o.dim(); ++r) stack.set_row(dim() + r, o.basis_.row(r));
  return span(stack);
}

Subspace Subspace::intersect(const Subspace& o) const {
  // Zassenhaus: row-reduce [A A; B 0]; rows with zero left half carry the
  // intersection in the right half.
  assert(dim_amb_ == o.dim_amb_ && p_ == o.p_);
  int d = dim_amb_;
  FpMatrix stack(dim() + o.dim(), 2 * d, p_);
  for (int r = 0; r < dim(); ++r) {
    auto v = basis_.row(r);
    for (int c = 0; c < d; ++c) {
      stack.at(r, c) = v[c];
      stack.at(r, d + c) = v[c];
    }
  }
  for (int r = 0; r < o.dim(); ++r) {
    auto v = o.basis_.row(r);
    for (int c = 0; c < d; ++c) stack.at(dim() + r, c) = v[c];
  }
  RrefResult rr = rref(stack);
  std::vector<std::vector<u32>> inter;
  for (int r = 0; r < rr.rank; ++r) {
    bool left_zero = true;
    for (int c = 0; c < d && left_zero; ++c)
      if (rr.m.at(r, c)) left_zero = false;
    if (left_zero) {
      std::vector<u32> v(d);
      for (int c = 0; c < d; ++c) v[c] = rr.m.at(r, d + c);
      inter.push_back(v);
    }
  }
  return span(FpMatrix::from_rows(inter, p_, d));
}

std::vector<u32> Subspace::reduce(const std::vector<u32>& v) const {
  std::vector<u32> w = v;
  for (int r = 0; r < dim(); ++r) {
    int lead = -1;
    for (int c = 0; c < dim_amb_; ++c)
      if (basis_.at(r, c)) { lead = c; break; }
    if (lead < 0) continue;
    u32 f = w[lead];
    if (!f) continue;
    for (int c = lead; c < dim_amb_; ++c) w[c] = fp_sub(w[c], fp_mul(f, basis_.at(r, c), p_), p_);
  }
  return w;
}

std::vector<u32> Subspace::serialize() const {
  std::vector<u32> out;
  out.push_back(static_cast<u32>(dim()));
  for (u32 x : basis_.data()) out.push_back(x);
  return out;
}

size_t Subspace::hash() const {
  auto s = serialize();
  return hash_bytes(s.data(), s.size() * sizeof(u32));
}

static u64 ipow(u64 b, int e) {
  u64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

u64 gaussian_binomial(int d, int k, u32 p) {
  if (k < 0 || k > d) return 0;
  // prod_{i=0}^{k-1} (p^{d-i}-1)/(p^{i+1}-1); each partial product is integral.
  u64 result = 1;
  for (int i = 0; i < k; ++i) {
    u64 n = ipow(p, d - i) - 1, m = ipow(p, i + 1) - 1;
    result = result * n / m;
  }
  return result;
}

std::vector<Subspace> enumerate_subspaces(int d, u32 p, const std::optional<std::set<int>>& dim_filter) {
  u64 total = 0;
  for (int k = 0; k <= d; ++k) {
    if (dim_filter && !dim_filter->count(k)) continue;
    total += gaussian_binomial(d, k, p);
    if (total > budgets().subspace_count)
      throw cap_error(cap_kind::subspace_budget, "subspace enumeration exceeds budget");
  }
  std::vector<Subspace> out;
  out.reserve(total);
  for (int k = 0; k <= d; ++k) {
    if (dim_filter && !dim_filter->count(k)) continue;
    if (k == 0) {
      out.emplace_back(d, p);
      continue;
    }
    // Iterate pivot column sets in lexicographic order, then free entries.
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      // free positions: (row r, col c) with c > piv[r], c not a pivot
      std::vector<std::pair<int, int>> free_pos;
      std::vector<char> is_piv(d, 0);
      for (int c : piv) is_piv[c] = 1;
      for (int r = 0; r < k; ++r)
        for (int c = piv[r] + 1; c < d; ++c)
          if (!is_piv[c]) free_pos.emplace_back(r, c);
      std::vector<u32> vals(free_pos.size(), 0);
      while (true) {
        FpMatrix b(k, d, p);
        for (int r = 0; r < k; ++r) b.at(r, piv[r]) = 1;
        for (size_t i = 0; i < free_pos.size(); ++i) b.at(free_pos[i].first, free_pos[i].second) = vals[i];
        out.push_back(Subspace::span(b));
        // odometer over free entries
        size_t i = 0;
        for (; i < vals.size(); ++i) {
          if (++vals[i] < p) break;
          vals[i] = 0;
        }
        if (i == vals.size()) break;
      }
      // next pivot combination
      int i = k - 1;
      while (i >= 0 && piv[i] == d - k + i) --i;
      if (i < 0) break;
      ++piv[i];
      for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return out;
}

Subspace invariant_subspace_closure(const Subspace& seed, const std::vector<FpMatrix>& action) {
  Subspace cur = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const FpMatrix& m : action) {
      for (int r = 0; r < cur.dim(); ++r) {
        std::vector<u32> img = m.apply(cur.basis().row(r));
        if (!cur.contains(img)) {
          FpMatrix stack(cur.dim() + 1, cur.ambient_dim(), cur.p());
          for (int rr = 0; rr < cur.dim(); ++rr) stack.set_row(rr, cur.basis().row(rr));
          stack.set_row(cur.dim(), img);
          cur = Subspace::span(stack);
          grew = true;
        }
      }
    }
  }
  return cur;
}

std::vector<Subspace> minimal_invariant_subspaces(int d, u32 p, const std::vector<FpMatrix>& action) {
  // Spin every line; keep the inclusion-minimal results. Fine for p^d within
  // desk scale, which is all the engine needs.
  std::vector<Subspace> spins;
  if (d == 0) return spins;
  u64 count = 1;
  for (int i = 0; i < d; ++i) {
    count *= p;
    if (count > budgets().subspace_count)
      throw cap_error(cap_kind::subspace_budget, "minimal submodule search exceeds budget");
  }
  std::vector<u32> v(d, 0);
  std::set<Subspace> seen;
  while (true) {
    size_t i = 0;
    for (; i < v.size(); ++i) {
      if (++v[i] < p) break;
      v[i] = 0;
    }
    if (i == v.size()) break;
    // skip non-normalized line representatives: first nonzero entry must be 1
    int lead = -1;
    for (int j = 0; j < d; ++j)
      if (v[j]) { lead = j; break; }
    if (lead < 0 || v[lead] != 1) continue;
    Subspace line = Subspace::span(FpMatrix::from_rows({v}, p, d));
    Subspace spun = invariant_subspace_closure(line, action);
    seen.insert(spun);
  }
  std::vector<Subspace> out;
  for (const Subspace& s : seen) {
    bool minimal = true;
    for (const Subspace& t : seen)
      if (!(t == s) && s.contains(t) && t.dim() > 0) { minimal = false; break; }
    if (minimal && s.dim() > 0) out.push_back(s);
  }
  return out;
}

std::vector<Subspace> all_invariant_subspaces(int d, u32 p, const std::vector<FpMatrix>& action) {
  // BFS upward: extend each known submodule X by preimages of minimal
  // submodules of V/X. Stays well below the budget on desk-scale modules.
  std::set<Subspace> known;
  known.insert(Subspace(d, p));
  std::vector<Subspace> work = {Subspace(d, p)};
  while (!work.empty()) {
    Subspace x = work.back();
    work.pop_back();
    if (x.dim() == d) continue;
    // quotient module: basis = complement coordinates; build quotient action
    // via a section. Use coordinates on non-pivot columns of x.
    std::vector<char> is_piv(d, 0);
    for (int r = 0; r < x.dim(); ++r)
      for (int c = 0; c < d; ++c)
        if (x.basis().at(r, c)) { is_piv[c] = 1; break; }
    std::vector<int> rest;
    for (int c = 0; c < d; ++c)
      if (!is_piv[c]) rest.push_back(c);
    int dq = static_cast<int>(rest.size());
    std::vector<FpMatrix> qact;
    for (const FpMatrix& m : action) {
      FpMatrix q(dq, dq, p);
      for (int i = 0; i < dq; ++i) {
        std::vector<u32> e(d, 0);
        e[rest[i]] = 1;
        std::vector<u32> img = x.reduce(m.apply(e));
        for (int j = 0; j < dq; ++j) q.at(i, j) = img[rest[j]];
      }
      qact.push_back(q);
    }
    for (const Subspace& mq : minimal_invariant_subspaces(dq, p, qact)) {
      // lift back: rows of mq in rest-coordinates + basis of x
      std::vector<std::vector<u32>> rows;
      for (int r = 0; r < x.dim(); ++r) rows.push_back(x.basis().row(r));
      for (int r = 0; r < mq.dim(); ++r) {
        std::vector<u32> v(d, 0);
        for (int j = 0; j < dq; ++j) v[rest[j]] = mq.basis().at(r, j);
        rows.push_back(v);
      }
      Subspace bigger = Subspace::span(FpMatrix::from_rows(rows, p, d));
      if (known.insert(bigger).second) {
        work.push_back(bigger);
        if (known.size() > budgets().subspace_count)
          throw cap_error(cap_kind::subspace_budget, "submodule lattice exceeds budget");
      }
    }
  }
  return std::vector<Subspace>(known.begin(), known.end());
}

}  // namespace solv
