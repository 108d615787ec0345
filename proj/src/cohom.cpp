#include "solv/cohom.hpp"

#include <cassert>

#include "solv/config.hpp"

namespace solv {

int relation_count(const PcPresentation& u) { return u.n() + u.n() * (u.n() - 1) / 2; }

int relation_index_power(const PcPresentation& u, int i) {
  (void)u;
  return i;
}

int relation_index_conj(const PcPresentation& u, int i, int j) {
  // pairs (i,j), i<j, lexicographic, after the n power relations
  int n = u.n();
  assert(i < j);
  return n + i * n - i * (i + 1) / 2 + (j - i - 1);
}

PcElement ExtensionLayout::embed(const std::vector<u32>& v) const {
  PcElement x = ext->identity();
  for (int k = 0; k < d; ++k) x.e[n_u + k] = v[k] % p;
  return x;
}

std::vector<u32> ExtensionLayout::module_part(const PcElement& x) const {
  std::vector<u32> v(d);
  for (int k = 0; k < d; ++k) v[k] = x.e[n_u + k];
  return v;
}

bool ExtensionLayout::in_module(const PcElement& x) const {
  for (int i = 0; i < n_u; ++i)
    if (x.e[i]) return false;
  return true;
}

PcElement ExtensionLayout::lift(const PcElement& u_elt) const {
  PcElement x = ext->identity();
  for (int i = 0; i < n_u; ++i) x.e[i] = u_elt.e[i];
  return x;
}

PcElement ExtensionLayout::project_u(const PcElement& x) const {
  PcElement u = base->identity();
  for (int i = 0; i < n_u; ++i) u.e[i] = x.e[i];
  return u;
}

ExtensionLayout build_extension(const PcPresPtr& U, const GModule& A, const std::vector<u32>& tails,
                                bool check) {
  int n = U->n(), d = A.dim;
  u32 p = A.p;
  int R = relation_count(*U);
  assert(static_cast<int>(tails.size()) == static_cast<int>(R * d));

  std::vector<u32> orders(n + d);
  for (int i = 0; i < n; ++i) orders[i] = U->rel_order(i);
  for (int k = 0; k < d; ++k) orders[n + k] = p;

  auto module_word = [&](const std::vector<u32>& v) {
    PcWord w;
    for (int k = 0; k < d; ++k)
      if (v[k] % p) w.emplace_back(n + k, v[k] % p);
    return w;
  };
  auto tail_at = [&](int rel) {
    std::vector<u32> v(d);
    for (int k = 0; k < d; ++k) v[k] = tails[rel * d + k] % p;
    return v;
  };

  std::vector<PcWord> powers(n + d);
  std::vector<std::vector<std::optional<PcWord>>> conj(n + d, std::vector<std::optional<PcWord>>(n + d));
  for (int i = 0; i < n; ++i) {
    PcWord w = U->power_word(i);
    for (auto& [g, e] : module_word(tail_at(relation_index_power(*U, i)))) w.emplace_back(g, e);
    powers[i] = w;
    for (int j = i + 1; j < n; ++j) {
      PcWord wc = U->conjugate_word(i, j);
      std::vector<u32> t = tail_at(relation_index_conj(*U, i, j));
      bool trivial_word = wc.size() == 1 && wc[0].first == j && wc[0].second == 1;
      if (!vec_is_zero(t) || !trivial_word) {
        for (auto& [g, e] : module_word(t)) wc.emplace_back(g, e);
        conj[i][j] = wc;
      }
    }
    for (int k = 0; k < d; ++k) {
      std::vector<u32> row = A.action[i].row(k);
      bool trivial = true;
      for (int c = 0; c < d; ++c)
        if (row[c] != (c == static_cast<int>(k) ? 1u : 0u)) trivial = false;
      if (!trivial) conj[i][n + k] = module_word(row);
    }
  }
  ExtensionLayout E;
  E.ext = PcPresentation::make(std::move(orders), std::move(powers), std::move(conj), check);
  E.base = U;
  E.mod = A;
  E.n_u = n;
  E.d = d;
  E.p = p;
  return E;
}

std::vector<PcElement> relation_values(const PcPresentation& U, const std::vector<PcElement>& xs,
                                       const PcPresentation& target) {
  std::vector<PcElement> vals;
  vals.reserve(relation_count(U));
  auto word_at = [&](const PcWord& w) {
    PcElement r = target.identity();
    for (auto& [g, e] : w) r = target.mul(r, target.power(xs[g], e));
    return r;
  };
  // relation g^.. = w * m(tail), so the tail is the left quotient w^{-1} * value
  for (int i = 0; i < U.n(); ++i)
    vals.push_back(target.mul(target.inverse(word_at(U.power_word(i))), target.power(xs[i], U.rel_order(i))));
  for (int i = 0; i < U.n(); ++i)
    for (int j = i + 1; j < U.n(); ++j)
      vals.push_back(target.mul(target.inverse(word_at(U.conjugate_word(i, j))), target.conj(xs[j], xs[i])));
  return vals;
}

std::vector<u32> extract_tails(const ExtensionLayout& E) {
  std::vector<PcElement> xs(E.n_u);
  for (int i = 0; i < E.n_u; ++i) xs[i] = E.ext->generator(i);
  std::vector<PcElement> vals = relation_values(*E.base, xs, *E.ext);
  std::vector<u32> tails;
  tails.reserve(vals.size() * E.d);
  for (const PcElement& v : vals) {
    assert(E.in_module(v));
    for (u32 c : E.module_part(v)) tails.push_back(c);
  }
  return tails;
}

// Defects of the collection overlap tests restricted to base-generator
// indices; all zero iff the tails form a 2-cocycle.
static std::vector<u32> overlap_defects(const ExtensionLayout& E) {
  const PcPresentation& X = *E.ext;
  int n = E.n_u;
  u32 p = E.p;
  std::vector<u32> out;
  auto push_defect = [&](const PcElement& lhs, const PcElement& rhs) {
    for (int i = 0; i < n; ++i) assert(lhs.e[i] == rhs.e[i]);
    std::vector<u32> l = E.module_part(lhs), r = E.module_part(rhs);
    for (int k = 0; k < E.d; ++k) out.push_back(fp_sub(l[k], r[k], p));
  };
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i)
        push_defect(X.mul(X.generator(k), X.mul_gen(X.generator(j), i)),
                    X.mul_gen(X.mul_gen(X.generator(k), j), i));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      push_defect(X.mul_gen(X.from_word(X.power_word(j)), i),
                  X.mul(X.mul_gen(X.identity(), j, X.rel_order(j) - 1), X.mul_gen(X.generator(j), i)));
      push_defect(X.mul(X.generator(j), X.from_word(X.power_word(i))),
                  X.mul_gen(X.mul_gen(X.generator(j), i), i, X.rel_order(i) - 1));
    }
  for (int i = 0; i < n; ++i)
    push_defect(X.mul_gen(X.from_word(X.power_word(i)), i), X.mul(X.generator(i), X.from_word(X.power_word(i))));
  return out;
}

CohomologySpace cohomology(const PcPresPtr& U, const GModule& A) {
  assert(A.verify());
  CohomologySpace cs;
  cs.u = U;
  cs.mod = A;
  int n = U->n(), d = A.dim;
  u32 p = A.p;
  int R = relation_count(*U);
  cs.tail_dim = R * d;

  cs.z2 = FpMatrix(0, cs.tail_dim, p);
  if (cs.tail_dim > 0) {
    std::vector<u32> zero(cs.tail_dim, 0);
    std::vector<u32> base = overlap_defects(build_extension(U, A, zero, false));
    assert(vec_is_zero(base));
    FpMatrix defect(cs.tail_dim, static_cast<int>(base.size()), p);
    for (int t = 0; t < cs.tail_dim; ++t) {
      std::vector<u32> unit(cs.tail_dim, 0);
      unit[t] = 1;
      defect.set_row(t, overlap_defects(build_extension(U, A, unit, false)));
    }
    cs.z2 = nullspace(defect.transpose());
  }

  cs.coboundary = FpMatrix(n * d, cs.tail_dim, p);
  cs.z1 = FpMatrix(0, n * d, p);
  if (n * d > 0) {
    ExtensionLayout split = build_extension(U, A, std::vector<u32>(cs.tail_dim, 0), false);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < d; ++k) {
        std::vector<PcElement> xs(n);
        for (int t = 0; t < n; ++t) xs[t] = split.ext->generator(t);
        std::vector<u32> unit(d, 0);
        unit[k] = 1;
        xs[i] = split.ext->mul(xs[i], split.embed(unit));
        std::vector<PcElement> vals = relation_values(*U, xs, *split.ext);
        std::vector<u32> row;
        row.reserve(cs.tail_dim);
        for (const PcElement& v : vals) {
          assert(split.in_module(v));
          for (u32 c : split.module_part(v)) row.push_back(c);
        }
        cs.coboundary.set_row(i * d + k, row);
      }
    cs.z1 = nullspace(cs.coboundary.transpose());
  }
  {
    FpMatrix inner(d, n * d, p);
    for (int k = 0; k < d; ++k) {
      std::vector<u32> row(n * d, 0);
      for (int i = 0; i < n; ++i) {
        std::vector<u32> e(d, 0);
        e[k] = 1;
        std::vector<u32> diff = vec_sub(A.action[i].apply(e), e, p);
        for (int c = 0; c < d; ++c) row[i * d + c] = diff[c];
      }
      inner.set_row(k, row);
    }
    cs.b1 = row_space(inner);
    for (int r = 0; r < cs.b1.rows(); ++r) {
      auto in_z1 = (cs.z1.rows() == 0) ? vec_is_zero(cs.b1.row(r)) : solve_left(cs.z1, cs.b1.row(r)).has_value();
      assert(in_z1);
      (void)in_z1;
    }
  }
  cs.b2 = row_space(cs.coboundary);
  for (int r = 0; r < cs.b2.rows(); ++r) assert(cs.in_z2(cs.b2.row(r)));

  // transversal: extend the b2 basis inside z2
  {
    std::vector<std::vector<u32>> chosen;
    FpMatrix stack = cs.b2;
    int rank = cs.b2.rows();
    for (int r = 0; r < cs.z2.rows(); ++r) {
      FpMatrix trial(stack.rows() + 1, cs.tail_dim, p);
      for (int i = 0; i < stack.rows(); ++i) trial.set_row(i, stack.row(i));
      trial.set_row(stack.rows(), cs.z2.row(r));
      if (rank_of(trial) > rank) {
        chosen.push_back(cs.z2.row(r));
        stack = trial;
        ++rank;
      }
    }
    cs.h2 = FpMatrix(static_cast<int>(chosen.size()), cs.tail_dim, p);
    for (size_t i = 0; i < chosen.size(); ++i) cs.h2.set_row(static_cast<int>(i), chosen[i]);
  }
  assert(cs.h2.rows() == cs.z2.rows() - cs.b2.rows());
  return cs;
}

bool CohomologySpace::in_z2(const std::vector<u32>& tails) const {
  if (tail_dim == 0) return vec_is_zero(tails);
  if (z2.rows() == 0) return vec_is_zero(tails);
  return solve_left(z2, tails).has_value();
}

std::vector<u32> CohomologySpace::project_h2(const std::vector<u32>& tails) const {
  if (h2.rows() == 0) return {};
  FpMatrix stack(b2.rows() + h2.rows(), tail_dim, mod.p);
  for (int i = 0; i < b2.rows(); ++i) stack.set_row(i, b2.row(i));
  for (int i = 0; i < h2.rows(); ++i) stack.set_row(b2.rows() + i, h2.row(i));
  auto sol = solve_left(stack, tails);
  assert(sol);
  return std::vector<u32>(sol->begin() + b2.rows(), sol->end());
}

std::vector<u32> CohomologySpace::h2_rep(const std::vector<u32>& coords) const {
  std::vector<u32> tails(tail_dim, 0);
  for (int i = 0; i < h2.rows(); ++i)
    if (coords[i]) tails = vec_add(tails, vec_scale(h2.row(i), coords[i], mod.p), mod.p);
  return tails;
}

std::optional<std::vector<u32>> CohomologySpace::cochain_between(const std::vector<u32>& delta,
                                                                 const std::vector<u32>& tails) const {
  std::vector<u32> diff = vec_sub(tails, delta, mod.p);
  if (coboundary.rows() == 0) return vec_is_zero(diff) ? std::make_optional(std::vector<u32>{}) : std::nullopt;
  return solve_left(coboundary, diff);
}

FpMatrix normalizer_action_on_h2(const CohomologySpace& cs, const FpMatrix& gmap,
                                 const std::vector<PcElement>& u_images) {
  const PcPresPtr& U = cs.u;
  u32 p = cs.mod.p;
  GroupHom alpha{U, U, u_images};
  if (!alpha.verify() || !alpha.is_isomorphism())
    throw not_normalizing_error("conjugation does not induce an automorphism of the subgroup");
  auto ginv = gmap.inverse();
  if (!ginv) throw not_normalizing_error("module map not invertible");
  for (int i = 0; i < U->n(); ++i) {
    FpMatrix lhs = cs.mod.act_of(u_images[i]);
    FpMatrix rhs = *ginv * cs.mod.action[i] * gmap;
    if (!(lhs == rhs)) throw not_normalizing_error("module map is not compatible with the action");
  }

  int h = cs.h2.rows();
  FpMatrix rows(h, h, p);
  for (int r = 0; r < h; ++r) {
    ExtensionLayout E = build_extension(U, cs.mod, cs.h2.row(r), false);
    std::vector<PcElement> xs(U->n());
    for (int i = 0; i < U->n(); ++i) xs[i] = E.lift(u_images[i]);
    std::vector<PcElement> vals = relation_values(*U, xs, *E.ext);
    std::vector<u32> tails;
    tails.reserve(cs.tail_dim);
    for (const PcElement& v : vals) {
      assert(E.in_module(v));
      for (u32 c : gmap.apply(E.module_part(v))) tails.push_back(c);
    }
    rows.set_row(r, cs.project_h2(tails));
  }
  // acts on coordinate row vectors from the right; with row-convention matrix
  // products on both sides the map g -> matrix is a homomorphism
  return rows;
}

}  // namespace solv
