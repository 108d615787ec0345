#include "solv/pcstruct.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "solv/config.hpp"
#include "solv/pcorbit.hpp"
#include "solv/subspace.hpp"

namespace solv {

u64 core_of(u64 n) {
  u64 c = 1;
  for (u64 p : prime_divisors(n)) c *= p;
  return c;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> ps;
  for (u64 q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      ps.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

static std::vector<PcElement> full_gens(const PcPresPtr& G) {
  std::vector<PcElement> gens;
  for (int i = 0; i < G->n(); ++i) gens.push_back(G->generator(i));
  return gens;
}

PcSubgroup derived_subgroup(const PcPresPtr& G, const PcSubgroup& H) {
  return commutator_subgroup(G, H, H, H.igs());
}

std::vector<PcSubgroup> derived_series(const PcPresPtr& G) {
  std::vector<PcSubgroup> s{PcSubgroup::full(G)};
  while (!s.back().is_trivial()) {
    PcSubgroup next = derived_subgroup(G, s.back());
    if (next == s.back()) break;  // cannot happen for pc groups
    s.push_back(next);
  }
  return s;
}

std::vector<PcSubgroup> elementary_series(const PcPresPtr& G) {
  std::vector<PcElement> gens = full_gens(G);
  std::vector<PcSubgroup> out{PcSubgroup::full(G)};
  std::vector<PcSubgroup> ds = derived_series(G);
  // refine each abelian layer of the derived series
  for (size_t i = 0; i + 1 < ds.size(); ++i) {
    const PcSubgroup& bottom = ds[i + 1];
    PcSubgroup cur = ds[i];
    while (!(cur == bottom)) {
      u64 f = cur.order() / bottom.order();
      u64 p = prime_divisors(f)[0];
      PcSubgroup mid = power_subgroup_mod(G, cur, p, bottom, gens);
      assert(!(mid == cur));
      out.push_back(mid);
      cur = mid;
    }
  }
  return out;
}

bool is_nilpotent(const PcPresPtr& G, const PcSubgroup& H) {
  PcSubgroup cur = H;
  while (!cur.is_trivial()) {
    PcSubgroup next = commutator_subgroup(G, H, cur, H.igs());
    if (next == cur) return false;
    cur = next;
  }
  return true;
}

SubgroupPresentation subgroup_presentation(const PcPresPtr& G, const PcSubgroup& H) {
  SubgroupPresentation sp;
  const auto& seq = H.igs();
  int m = static_cast<int>(seq.size());
  std::vector<u32> orders(m);
  for (int i = 0; i < m; ++i) orders[i] = G->rel_order(seq[i].depth());

  // coordinates by sifting, recording exponents
  auto coords = [&](PcElement x) {
    std::vector<u32> v(m, 0);
    while (!x.is_identity()) {
      int d = x.depth();
      int idx = -1;
      for (int i = 0; i < m; ++i)
        if (seq[i].depth() == d) { idx = i; break; }
      if (idx < 0) throw std::invalid_argument("element not in subgroup");
      v[idx] = x.e[d];
      x = G->mul(G->power(seq[idx], -static_cast<long long>(x.e[d])), x);
    }
    return v;
  };
  auto word_of = [&](const PcElement& x) {
    std::vector<u32> v = coords(x);
    PcWord w;
    for (int i = 0; i < m; ++i)
      if (v[i]) w.emplace_back(i, v[i]);
    return w;
  };

  std::vector<PcWord> powers(m);
  std::vector<std::vector<std::optional<PcWord>>> conj(m, std::vector<std::optional<PcWord>>(m));
  for (int i = 0; i < m; ++i) {
    powers[i] = word_of(G->power(seq[i], orders[i]));
    for (int j = i + 1; j < m; ++j) {
      PcWord w = word_of(G->conj(seq[j], seq[i]));
      if (!(w.size() == 1 && w[0].first == j && w[0].second == 1)) conj[i][j] = w;
    }
  }
  sp.pres = PcPresentation::make(std::move(orders), std::move(powers), std::move(conj), false);
  sp.inclusion.source = sp.pres;
  sp.inclusion.target = G;
  sp.inclusion.images = seq;
  return sp;
}

std::vector<u32> SubgroupPresentation::coords(const PcElement& x) const {
  return to_sub(x).e;
}

PcElement SubgroupPresentation::to_sub(const PcElement& x) const {
  const PcPresPtr& G = inclusion.target;
  const auto& seq = inclusion.images;
  PcElement r = x;
  PcElement out = pres->identity();
  while (!r.is_identity()) {
    int d = r.depth();
    int idx = -1;
    for (size_t i = 0; i < seq.size(); ++i)
      if (seq[i].depth() == d) { idx = static_cast<int>(i); break; }
    if (idx < 0) throw std::invalid_argument("element not in subgroup");
    out.e[idx] = r.e[d];
    r = G->mul(G->power(seq[idx], -static_cast<long long>(r.e[d])), r);
  }
  return out;
}

// Kernel of the conjugation action of G on the elementary abelian normal A.
static PcSubgroup action_kernel_on_section(const PcPresPtr& G, const SectionBasis& sec) {
  // act on the image of the matrix representation by right multiplication;
  // the stabilizer of the identity matrix is the kernel
  int d = sec.dim();
  u32 p = sec.p;
  std::vector<FpMatrix> gen_mats;
  for (int i = 0; i < G->n(); ++i) gen_mats.push_back(sec.action_of(G->generator(i)));
  auto act = [&](const std::vector<u32>& pt, const PcElement& g) {
    FpMatrix m(d, d, p);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m.at(r, c) = pt[r * d + c];
    // orbit generators are exactly the presentation generators
    int gi = g.depth();
    FpMatrix img = m * gen_mats[gi];
    return img.data();
  };
  PcOrbit o = orbit_stabilizer_pc(G, full_gens(G), FpMatrix::identity(d, p).data(), act);
  return o.stabilizer;
}

PcSubgroup centralizer_in(const PcPresPtr& G, const PcSubgroup& A) {
  bool elem_ab_normal = A.is_normal_in_full_group();
  if (elem_ab_normal) {
    u32 p0 = 0;
    for (const PcElement& u : A.igs()) {
      u32 q = G->rel_order(u.depth());
      if (!p0) p0 = q;
      if (q != p0) { elem_ab_normal = false; break; }
    }
    if (elem_ab_normal && !A.is_trivial()) {
      // exponent-p abelian check
      for (const PcElement& u : A.igs())
        if (!G->power(u, p0).is_identity()) { elem_ab_normal = false; break; }
      for (size_t i = 0; i < A.igs().size() && elem_ab_normal; ++i)
        for (size_t j = i + 1; j < A.igs().size(); ++j)
          if (!G->comm(A.igs()[i], A.igs()[j]).is_identity()) { elem_ab_normal = false; break; }
    }
  }
  if (elem_ab_normal) {
    if (A.is_trivial()) return PcSubgroup::full(G);
    return action_kernel_on_section(G, SectionBasis::over_trivial(G, A));
  }
  if (G->order() > budgets().closure_elements)
    throw cap_error(cap_kind::closure_budget, "centralizer enumeration too large");
  PcSubgroup full = PcSubgroup::full(G);
  std::vector<PcElement> cent;
  for (const PcElement& x : full.elements()) {
    bool ok = true;
    for (const PcElement& a : A.igs())
      if (!(G->mul(x, a) == G->mul(a, x))) { ok = false; break; }
    if (ok) cent.push_back(x);
  }
  return PcSubgroup::from_generators(G, cent);
}

PcSubgroup o_p_subgroup(const PcPresPtr& G, u64 p) {
  if (G->order() == 1) return PcSubgroup::trivial(G);
  bool is_p_group = true;
  for (int i = 0; i < G->n(); ++i)
    if (G->rel_order(i) != p) { is_p_group = false; break; }
  if (is_p_group) return PcSubgroup::full(G);

  std::vector<PcSubgroup> series = elementary_series(G);
  const PcSubgroup& N = series[series.size() - 2];  // last nontrivial, elem ab
  u64 q = G->rel_order(N.igs()[0].depth());
  QuotientMap qm = quotient(G, N);
  PcSubgroup opq = o_p_subgroup(qm.quotient, p);
  // preimage K of O_p(G/N)
  std::vector<PcElement> kgens;
  for (const PcElement& u : opq.igs()) kgens.push_back(qm.lift(u));
  for (const PcElement& u : N.igs()) kgens.push_back(u);
  PcSubgroup K = PcSubgroup::from_generators(G, kgens);

  if (K.order() < G->order()) {
    // O_p(G) = O_p(K) since O_p(K) is characteristic in K which is normal in G
    SubgroupPresentation sp = subgroup_presentation(G, K);
    PcSubgroup inner = o_p_subgroup(sp.pres, p);
    std::vector<PcElement> gens;
    for (const PcElement& u : inner.igs()) gens.push_back(sp.inclusion.apply(u));
    return PcSubgroup::from_generators(G, gens);
  }
  // K = G: G/N is a p-group with N an elementary abelian q-group
  if (q == p) return PcSubgroup::full(G);
  PcSubgroup C = centralizer_in(G, N);
  if (C.order() < G->order()) {
    SubgroupPresentation sp = subgroup_presentation(G, C);
    PcSubgroup inner = o_p_subgroup(sp.pres, p);
    std::vector<PcElement> gens;
    for (const PcElement& u : inner.igs()) gens.push_back(sp.inclusion.apply(u));
    return PcSubgroup::from_generators(G, gens);
  }
  // N central and coprime: the p-elements form O_p, generated by |N|-th powers
  std::vector<PcElement> gens;
  u64 nn = N.order();
  for (int i = 0; i < G->n(); ++i) gens.push_back(G->power(G->generator(i), static_cast<long long>(nn)));
  PcSubgroup P = PcSubgroup::from_generators(G, gens);
  // strip q-parts: P = G^{|N|} contains all p-elements and no q-part of N
  assert(P.order() * N.order() == G->order());
  return P;
}

PcSubgroup fitting_subgroup(const PcPresPtr& G) {
  std::vector<PcElement> gens;
  for (u64 p : prime_divisors(G->order())) {
    PcSubgroup op = o_p_subgroup(G, p);
    for (const PcElement& u : op.igs()) gens.push_back(u);
  }
  return PcSubgroup::from_generators(G, gens);
}

std::optional<std::vector<PcElement>> complement_to_elem_abelian(const PcPresPtr& G, const PcSubgroup& A) {
  if (A.is_trivial()) return full_gens(G);
  QuotientMap qm = quotient(G, A);
  const PcPresPtr& Q = qm.quotient;
  SectionBasis sec = SectionBasis::over_trivial(G, A);
  u32 p = sec.p;
  int dA = sec.dim();
  int nQ = Q->n();

  // relation values of Q evaluated on lifted generators, as vectors over A
  auto relation_tails = [&](const std::vector<PcElement>& x) {
    std::vector<u32> t;
    for (int i = 0; i < nQ; ++i) {
      PcElement w = G->identity();
      for (auto& [g, e] : Q->power_word(i)) w = G->mul(w, G->power(x[g], e));
      PcElement val = G->mul(G->power(x[i], Q->rel_order(i)), G->inverse(w));
      for (u32 c : sec.coords(val)) t.push_back(c);
      for (int j = i + 1; j < nQ; ++j) {
        PcElement w2 = G->identity();
        for (auto& [g, e] : Q->conjugate_word(i, j)) w2 = G->mul(w2, G->power(x[g], e));
        PcElement val2 = G->mul(G->conj(x[j], x[i]), G->inverse(w2));
        for (u32 c : sec.coords(val2)) t.push_back(c);
      }
    }
    return t;
  };

  std::vector<PcElement> base(nQ);
  for (int i = 0; i < nQ; ++i) base[i] = qm.lift(Q->generator(i));
  std::vector<u32> t0 = relation_tails(base);
  int rows = static_cast<int>(t0.size());
  // columns: derivative of the tails in each generator correction direction
  FpMatrix D(nQ * dA, rows, p);
  for (int i = 0; i < nQ; ++i)
    for (int k = 0; k < dA; ++k) {
      std::vector<PcElement> x = base;
      std::vector<u32> unit(dA, 0);
      unit[k] = 1;
      x[i] = G->mul(x[i], sec.from_coords(unit));
      std::vector<u32> t = relation_tails(x);
      D.set_row(i * dA + k, vec_sub(t, t0, p));
    }
  // solve a * D = -t0
  auto sol = solve_left(D, vec_scale(t0, p - 1, p));
  if (!sol) return std::nullopt;
  std::vector<PcElement> comp(nQ);
  for (int i = 0; i < nQ; ++i) {
    std::vector<u32> corr(sol->begin() + i * dA, sol->begin() + (i + 1) * dA);
    comp[i] = G->mul(base[i], sec.from_coords(corr));
  }
  PcSubgroup K = PcSubgroup::from_generators(G, comp);
  assert(K.order() == Q->order());
  return comp;
}

PcSubgroup sylow_subgroup(const PcPresPtr& G, u64 p) {
  u64 ppart = 1, o = G->order();
  while (o % p == 0) {
    o /= p;
    ppart *= p;
  }
  if (ppart == 1) return PcSubgroup::trivial(G);
  if (ppart == G->order()) return PcSubgroup::full(G);

  std::vector<PcSubgroup> series = elementary_series(G);
  const PcSubgroup& N = series[series.size() - 2];
  u64 q = G->rel_order(N.igs()[0].depth());
  QuotientMap qm = quotient(G, N);
  PcSubgroup Pq = sylow_subgroup(qm.quotient, p);
  std::vector<PcElement> kgens;
  for (const PcElement& u : Pq.igs()) kgens.push_back(qm.lift(u));
  for (const PcElement& u : N.igs()) kgens.push_back(u);
  PcSubgroup K = PcSubgroup::from_generators(G, kgens);
  if (q == p) {
    assert(K.order() == ppart);
    return K;
  }
  // complement to N inside K (coprime indices, N elementary abelian)
  SubgroupPresentation sp = subgroup_presentation(G, K);
  PcSubgroup Nin = PcSubgroup::from_generators(sp.pres, [&] {
    std::vector<PcElement> v;
    for (const PcElement& u : N.igs()) v.push_back(sp.to_sub(u));
    return v;
  }());
  auto comp = complement_to_elem_abelian(sp.pres, Nin);
  assert(comp);
  std::vector<PcElement> gens;
  for (const PcElement& u : *comp) gens.push_back(sp.inclusion.apply(u));
  PcSubgroup P = PcSubgroup::from_generators(G, gens);
  assert(P.order() == ppart);
  return P;
}

FSeries f_series(const PcPresPtr& G) {
  FSeries fs;
  if (G->order() == 1) {
    fs.terms = {PcSubgroup::trivial(G)};
    fs.f_class = 0;
    fs.f_rank = 0;
    return fs;
  }
  std::vector<PcElement> gens = full_gens(G);
  PcSubgroup F = fitting_subgroup(G);
  u64 k = core_of(F.order());
  fs.terms.push_back(PcSubgroup::full(G));
  fs.terms.push_back(F);
  PcSubgroup cur = F;
  while (!cur.is_trivial()) {
    PcSubgroup comm = commutator_subgroup(G, F, cur, gens);
    PcSubgroup next = power_subgroup_mod(G, cur, k, comm, gens);
    fs.terms.push_back(next);
    cur = next;
  }
  fs.f_class = static_cast<int>(fs.terms.size()) - 2;  // nu_c = 1 at terms[c+2-1]... terms[1]=nu_0
  fs.f_rank = fs.terms[1].order() / fs.terms[2].order();
  return fs;
}

PcSubgroup frattini_subgroup(const PcPresPtr& G) {
  if (G->order() == 1) return PcSubgroup::trivial(G);
  std::vector<PcElement> gens = full_gens(G);
  PcSubgroup F = fitting_subgroup(G);
  u64 k = core_of(F.order());
  PcSubgroup ff = power_subgroup_mod(G, F, k, derived_subgroup(G, F), gens);  // Frat(F(G))
  if (!ff.is_trivial()) {
    QuotientMap qm = quotient(G, ff);
    PcSubgroup fq = frattini_subgroup(qm.quotient);
    std::vector<PcElement> pre;
    for (const PcElement& u : fq.igs()) pre.push_back(qm.lift(u));
    for (const PcElement& u : ff.igs()) pre.push_back(u);
    return PcSubgroup::from_generators(G, pre);
  }
  // Frat(F(G)) trivial: split off a minimal normal subgroup A; the maximal
  // subgroups are the preimages from G/A together with the complements of A.
  std::vector<PcSubgroup> series = elementary_series(G);
  const PcSubgroup& bottom = series[series.size() - 2];
  SectionBasis sec = SectionBasis::over_trivial(G, bottom);
  std::vector<FpMatrix> act;
  for (int i = 0; i < G->n(); ++i) act.push_back(sec.action_of(G->generator(i)));
  std::vector<Subspace> mins = minimal_invariant_subspaces(sec.dim(), sec.p, act);
  assert(!mins.empty());
  std::vector<PcElement> agens;
  for (int r = 0; r < mins[0].dim(); ++r) agens.push_back(sec.from_coords(mins[0].basis().row(r)));
  PcSubgroup A = PcSubgroup::from_generators(G, agens);

  QuotientMap qm = quotient(G, A);
  PcSubgroup fq = frattini_subgroup(qm.quotient);
  std::vector<PcElement> pre;
  for (const PcElement& u : fq.igs()) pre.push_back(qm.lift(u));
  for (const PcElement& u : A.igs()) pre.push_back(u);
  PcSubgroup upstairs = PcSubgroup::from_generators(G, pre);

  // intersect with all complements of A, when they exist
  SectionBasis asec = SectionBasis::over_trivial(G, A);
  u32 p = asec.p;
  int dA = asec.dim();
  const PcPresPtr& Q = qm.quotient;
  int nQ = Q->n();
  std::vector<PcElement> base(nQ);
  for (int i = 0; i < nQ; ++i) base[i] = qm.lift(Q->generator(i));
  auto relation_tails = [&](const std::vector<PcElement>& x) {
    std::vector<u32> t;
    for (int i = 0; i < nQ; ++i) {
      PcElement w = G->identity();
      for (auto& [g, e] : Q->power_word(i)) w = G->mul(w, G->power(x[g], e));
      for (u32 c : asec.coords(G->mul(G->power(x[i], Q->rel_order(i)), G->inverse(w)))) t.push_back(c);
      for (int j = i + 1; j < nQ; ++j) {
        PcElement w2 = G->identity();
        for (auto& [g, e] : Q->conjugate_word(i, j)) w2 = G->mul(w2, G->power(x[g], e));
        for (u32 c : asec.coords(G->mul(G->conj(x[j], x[i]), G->inverse(w2)))) t.push_back(c);
      }
    }
    return t;
  };
  std::vector<u32> t0 = relation_tails(base);
  FpMatrix D(nQ * dA, static_cast<int>(t0.size()), p);
  for (int i = 0; i < nQ; ++i)
    for (int kk = 0; kk < dA; ++kk) {
      std::vector<PcElement> x = base;
      std::vector<u32> unit(dA, 0);
      unit[kk] = 1;
      x[i] = G->mul(x[i], asec.from_coords(unit));
      D.set_row(i * dA + kk, vec_sub(relation_tails(x), t0, p));
    }
  auto sol = solve_left(D, vec_scale(t0, p - 1, p));
  if (!sol) return upstairs;  // no complements

  // one complement K0
  std::vector<PcElement> comp(nQ);
  for (int i = 0; i < nQ; ++i) {
    std::vector<u32> corr(sol->begin() + i * dA, sol->begin() + (i + 1) * dA);
    comp[i] = G->mul(base[i], asec.from_coords(corr));
  }
  // derivations = kernel of D; the intersection of all complements is the
  // preimage in K0 of the common kernel of the derivations
  FpMatrix Z1 = nullspace(D.transpose());
  int z = Z1.rows();
  if (z == 0) {
    PcSubgroup K0 = PcSubgroup::from_generators(G, comp);
    return subgroup_intersection(upstairs, K0);
  }
  // evaluate each derivation along elements of Q: phi(q1 q2) = phi(q1)*act(q2) + phi(q2)
  std::vector<FpMatrix> gen_act(nQ, FpMatrix());
  for (int i = 0; i < nQ; ++i) gen_act[i] = asec.action_of(qm.lift(Q->generator(i)));
  auto phi_of = [&](int which, const PcElement& q) {
    std::vector<u32> val(dA, 0);
    std::vector<u32> zrow = Z1.row(which);
    for (int i = 0; i < nQ; ++i)
      for (u32 rep = 0; rep < q.e[i]; ++rep) {
        std::vector<u32> phig(zrow.begin() + i * dA, zrow.begin() + (i + 1) * dA);
        val = vec_add(gen_act[i].apply(val), phig, p);
      }
    return val;
  };
  // stabilizer of the zero tuple under the affine action v_j -> v_j*act(q) + phi_j(q)
  auto act_fun = [&](const std::vector<u32>& pt, const PcElement& q) {
    std::vector<u32> out;
    out.reserve(pt.size());
    FpMatrix mq = asec.action_of(qm.lift(q));
    for (int j = 0; j < z; ++j) {
      std::vector<u32> v(pt.begin() + j * dA, pt.begin() + (j + 1) * dA);
      std::vector<u32> img = vec_add(mq.apply(v), phi_of(j, q), p);
      for (u32 c : img) out.push_back(c);
    }
    return out;
  };
  std::vector<PcElement> qgens;
  for (int i = 0; i < nQ; ++i) qgens.push_back(Q->generator(i));
  PcOrbit orb = orbit_stabilizer_pc(Q, qgens, std::vector<u32>(z * dA, 0), act_fun);
  // map the stabilizer into K0 via the iso Q -> K0
  GroupHom qtok{Q, G, comp};
  std::vector<PcElement> igens;
  for (const PcElement& u : orb.stabilizer.igs()) igens.push_back(qtok.apply(u));
  PcSubgroup inter = PcSubgroup::from_generators(G, igens);
  return subgroup_intersection(upstairs, inter);
}

std::vector<PcElement> minimal_generating_set(const PcPresPtr& G) {
  if (G->order() == 1) return {};
  std::vector<PcSubgroup> series = elementary_series(G);
  // generators modulo series[1], then lift through each layer T_i/T_{i+1};
  // a generating tuple of the quotient of minimal size lifts to one of the
  // same size or needs exactly one extra generator
  std::vector<PcElement> gens;
  {
    SectionBasis top = SectionBasis::make(G, series[0], series[1]);
    for (const PcElement& b : top.basis) gens.push_back(b);
  }
  for (size_t layer = 1; layer + 1 < series.size(); ++layer) {
    const PcSubgroup& below = series[layer + 1];
    const PcSubgroup& mid = series[layer];
    bool at_bottom = below.is_trivial();
    QuotientMap qm;
    if (!at_bottom) qm = quotient(G, below);
    PcPresPtr target = at_bottom ? G : qm.quotient;
    u64 target_order = target->order();
    auto generates = [&](const std::vector<PcElement>& cand) {
      IgsBuilder b(target);
      for (const PcElement& c : cand) b.add(at_bottom ? c : qm.project(c));
      return b.current_order() == target_order;
    };

    SectionBasis lsec = SectionBasis::make(G, mid, below);
    int dl = lsec.dim();
    u32 pl = lsec.p;
    u64 layer_size = 1;
    for (int i = 0; i < dl; ++i) layer_size *= pl;

    if (generates(gens)) continue;
    int d = static_cast<int>(gens.size());
    auto coords_of = [&](u64 v) {
      std::vector<u32> c(dl);
      for (int i = 0; i < dl; ++i) {
        c[i] = static_cast<u32>(v % pl);
        v /= pl;
      }
      return c;
    };
    bool found = false;
    for (int extra = 0; extra <= 1 && !found; ++extra) {
      double total = 1;
      for (int i = 0; i < d + extra; ++i) total *= static_cast<double>(layer_size);
      if (total > 4e6) throw cap_error(cap_kind::generic, "minimal generating set search too large");
      std::vector<u64> idx(d + extra, 0);
      while (true) {
        std::vector<PcElement> cand(d + extra, G->identity());
        for (int i = 0; i < d; ++i) cand[i] = G->mul(gens[i], lsec.from_coords(coords_of(idx[i])));
        if (extra) cand[d] = lsec.from_coords(coords_of(idx[d]));
        if (generates(cand)) {
          gens = cand;
          found = true;
          break;
        }
        size_t i = 0;
        for (; i < idx.size(); ++i) {
          if (++idx[i] < layer_size) break;
          idx[i] = 0;
        }
        if (i == idx.size()) break;
      }
    }
    if (!found) throw cap_error(cap_kind::generic, "generating set lift failed");
  }
  return gens;
}

}  // namespace solv
