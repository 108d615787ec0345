#include "solv/pcsubgroup.hpp"

#include <algorithm>
#include <cassert>

#include "solv/config.hpp"

namespace solv {

PcSubgroup PcSubgroup::full(PcPresPtr owner) {
  std::vector<PcElement> gens;
  for (int i = 0; i < owner->n(); ++i) gens.push_back(owner->generator(i));
  return from_generators(std::move(owner), gens);
}

PcSubgroup PcSubgroup::from_generators(PcPresPtr owner, const std::vector<PcElement>& gens) {
  IgsBuilder b(std::move(owner));
  for (const PcElement& g : gens) b.add(g);
  return b.build();
}

u64 PcSubgroup::order() const {
  u64 o = 1;
  for (const PcElement& u : igs_) o *= owner_->rel_order(u.depth());
  return o;
}

PcElement PcSubgroup::sift(PcElement x) const {
  const PcPresentation& G = *owner_;
  size_t t = 0;
  while (!x.is_identity()) {
    int d = x.depth();
    while (t < igs_.size() && igs_[t].depth() < d) ++t;
    if (t == igs_.size() || igs_[t].depth() != d) return x;
    u32 e = x.e[d];
    x = G.mul(G.power(igs_[t], -static_cast<long long>(e)), x);
  }
  return x;
}

bool PcSubgroup::contains(const PcElement& x) const { return sift(x).is_identity(); }

bool PcSubgroup::contains(const PcSubgroup& other) const {
  for (const PcElement& u : other.igs_)
    if (!contains(u)) return false;
  return true;
}

PcElement PcSubgroup::coset_reduce(PcElement x) const {
  const PcPresentation& G = *owner_;
  for (const PcElement& u : igs_) {
    int d = u.depth();
    u32 e = x.e[d];
    if (e) x = G.mul(x, G.power(u, -static_cast<long long>(e)));
  }
  return x;
}

bool PcSubgroup::is_normal_in_full_group() const {
  const PcPresentation& G = *owner_;
  for (int i = 0; i < G.n(); ++i) {
    PcElement g = G.generator(i);
    PcElement gi = G.inverse(g);
    for (const PcElement& u : igs_) {
      if (!contains(G.conj(u, g))) return false;
      if (!contains(G.conj(u, gi))) return false;
    }
  }
  return true;
}

PcSubgroup PcSubgroup::conjugate(const PcElement& g) const {
  std::vector<PcElement> gens;
  for (const PcElement& u : igs_) gens.push_back(owner_->conj(u, g));
  return from_generators(owner_, gens);
}

PcSubgroup PcSubgroup::tail_intersection(int d) const {
  PcSubgroup r(owner_);
  for (const PcElement& u : igs_)
    if (u.depth() >= d) r.igs_.push_back(u);
  return r;
}

std::vector<PcElement> PcSubgroup::elements(u64 cap) const {
  u64 o = order();
  if (cap && o > cap) throw cap_error(cap_kind::closure_budget, "subgroup too large to enumerate");
  std::vector<PcElement> out;
  out.reserve(o);
  out.push_back(owner_->identity());
  for (const PcElement& u : igs_) {
    u32 p = owner_->rel_order(u.depth());
    size_t base = out.size();
    PcElement pw = u;
    for (u32 k = 1; k < p; ++k) {
      for (size_t i = 0; i < base; ++i) out.push_back(owner_->mul(out[i], pw));
      if (k + 1 < p) pw = owner_->mul(pw, u);
    }
  }
  return out;
}

size_t PcSubgroup::hash() const {
  size_t h = 0x51ab5b1f;
  for (const PcElement& u : igs_) h = hash_bytes(u.e.data(), u.e.size() * sizeof(u32), h);
  return h;
}

IgsBuilder::IgsBuilder(PcPresPtr owner) : owner_(std::move(owner)), slot_(owner_->n()) {}

bool IgsBuilder::contains(const PcElement& x) const {
  const PcPresentation& G = *owner_;
  PcElement r = x;
  while (!r.is_identity()) {
    int d = r.depth();
    if (!slot_[d]) return false;
    r = G.mul(G.power(*slot_[d], -static_cast<long long>(r.e[d])), r);
  }
  return true;
}

u64 IgsBuilder::current_order() const {
  u64 o = 1;
  for (int d = 0; d < owner_->n(); ++d)
    if (slot_[d]) o *= owner_->rel_order(d);
  return o;
}

void IgsBuilder::insert_closed(const PcElement& x, std::vector<PcElement>& work) {
  const PcPresentation& G = *owner_;
  int d = x.depth();
  u32 p = G.rel_order(d);
  // normalize the leading exponent to 1
  u32 k = fp_inv(x.e[d], p);
  PcElement u = G.power(x, k);
  assert(u.e[d] == 1);
  slot_[d] = u;
  work.push_back(G.power(u, p));
  for (int t = 0; t < G.n(); ++t) {
    if (t == d || !slot_[t]) continue;
    work.push_back(G.conj(*slot_[t], u));
    work.push_back(G.conj(u, *slot_[t]));
  }
}

bool IgsBuilder::add(const PcElement& x) {
  const PcPresentation& G = *owner_;
  std::vector<PcElement> work{x};
  bool grew = false;
  while (!work.empty()) {
    PcElement y = work.back();
    work.pop_back();
    // sift
    while (!y.is_identity()) {
      int d = y.depth();
      if (!slot_[d]) break;
      y = G.mul(G.power(*slot_[d], -static_cast<long long>(y.e[d])), y);
    }
    if (y.is_identity()) continue;
    insert_closed(y, work);
    grew = true;
  }
  return grew;
}

PcSubgroup IgsBuilder::build() const {
  const PcPresentation& G = *owner_;
  PcSubgroup H(owner_);
  for (int d = 0; d < G.n(); ++d)
    if (slot_[d]) H.igs_.push_back(*slot_[d]);
  // canonical reduction: zero each sequence row at the leading columns of the
  // deeper rows, left to right
  for (size_t s = 0; s < H.igs_.size(); ++s)
    for (size_t t = s + 1; t < H.igs_.size(); ++t) {
      int dt = H.igs_[t].depth();
      u32 e = H.igs_[s].e[dt];
      if (e) H.igs_[s] = G.mul(H.igs_[s], G.power(H.igs_[t], -static_cast<long long>(e)));
    }
  return H;
}

PcSubgroup normal_closure(const PcPresPtr& G, const std::vector<PcElement>& gens) {
  IgsBuilder b(G);
  for (const PcElement& g : gens) b.add(g);
  bool changed = true;
  while (changed) {
    changed = false;
    PcSubgroup cur = b.build();
    for (int i = 0; i < G->n(); ++i) {
      PcElement g = G->generator(i), gi = G->inverse(G->generator(i));
      for (const PcElement& u : cur.igs()) {
        if (b.add(G->conj(u, g))) changed = true;
        if (b.add(G->conj(u, gi))) changed = true;
      }
    }
  }
  return b.build();
}

PcSubgroup commutator_subgroup(const PcPresPtr& G, const PcSubgroup& A, const PcSubgroup& B,
                               const std::vector<PcElement>& closure_gens) {
  IgsBuilder b(G);
  for (const PcElement& a : A.igs())
    for (const PcElement& x : B.igs()) b.add(G->comm(a, x));
  bool changed = true;
  while (changed) {
    changed = false;
    PcSubgroup cur = b.build();
    for (const PcElement& g : closure_gens) {
      PcElement gi = G->inverse(g);
      for (const PcElement& u : cur.igs()) {
        if (b.add(G->conj(u, g))) changed = true;
        if (b.add(G->conj(u, gi))) changed = true;
      }
    }
  }
  return b.build();
}

PcSubgroup power_subgroup_mod(const PcPresPtr& G, const PcSubgroup& H, u64 k, const PcSubgroup& base,
                              const std::vector<PcElement>& closure_gens) {
  IgsBuilder b(G);
  for (const PcElement& u : base.igs()) b.add(u);
  for (const PcElement& u : H.igs()) b.add(G->power(u, static_cast<long long>(k)));
  bool changed = true;
  while (changed) {
    changed = false;
    PcSubgroup cur = b.build();
    for (const PcElement& g : closure_gens) {
      PcElement gi = G->inverse(g);
      for (const PcElement& u : cur.igs()) {
        if (b.add(G->conj(u, g))) changed = true;
        if (b.add(G->conj(u, gi))) changed = true;
      }
    }
  }
  return b.build();
}

PcElement GroupHom::apply(const PcElement& x) const {
  PcElement r = target->identity();
  for (int i = 0; i < source->n(); ++i)
    if (x.e[i]) r = target->mul(r, target->power(images[i], x.e[i]));
  return r;
}

bool GroupHom::verify() const {
  const PcPresentation& S = *source;
  for (int i = 0; i < S.n(); ++i) {
    PcElement lhs = target->power(images[i], S.rel_order(i));
    PcElement rhs = apply(S.from_word(S.power_word(i)));
    if (!(lhs == rhs)) return false;
    for (int j = i + 1; j < S.n(); ++j) {
      PcElement l2 = target->conj(images[j], images[i]);
      PcElement r2 = apply(S.from_word(S.conjugate_word(i, j)));
      if (!(l2 == r2)) return false;
    }
  }
  return true;
}

PcSubgroup GroupHom::image_subgroup() const { return PcSubgroup::from_generators(target, images); }

bool GroupHom::is_isomorphism() const {
  return source->order() == target->order() && verify() && image_subgroup().order() == target->order();
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  assert(f.target == g.source || f.target->order() == g.source->order());
  GroupHom h;
  h.source = f.source;
  h.target = g.target;
  for (const PcElement& im : f.images) h.images.push_back(g.apply(im));
  return h;
}

QuotientMap quotient(const PcPresPtr& G, const PcSubgroup& N) {
  if (!N.is_normal_in_full_group()) throw not_normal_error("quotient by non-normal subgroup");
  QuotientMap qm;
  qm.source = G;
  qm.kernel = N;
  std::vector<char> in_n(G->n(), 0);
  for (const PcElement& u : N.igs()) in_n[u.depth()] = 1;
  for (int d = 0; d < G->n(); ++d)
    if (!in_n[d]) qm.retained.push_back(d);
  int m = static_cast<int>(qm.retained.size());
  std::vector<int> pos(G->n(), -1);
  for (int i = 0; i < m; ++i) pos[qm.retained[i]] = i;

  auto word_of = [&](const PcElement& reduced) {
    PcWord w;
    for (int i = 0; i < m; ++i) {
      u32 e = reduced.e[qm.retained[i]];
      if (e) w.emplace_back(i, e);
    }
    return w;
  };

  std::vector<u32> orders(m);
  for (int i = 0; i < m; ++i) orders[i] = G->rel_order(qm.retained[i]);
  std::vector<PcWord> powers(m);
  std::vector<std::vector<std::optional<PcWord>>> conj(m, std::vector<std::optional<PcWord>>(m));
  for (int i = 0; i < m; ++i) {
    int d = qm.retained[i];
    powers[i] = word_of(N.coset_reduce(G->power(G->generator(d), orders[i])));
    for (int j = i + 1; j < m; ++j) {
      int d2 = qm.retained[j];
      PcWord w = word_of(N.coset_reduce(G->conj(G->generator(d2), G->generator(d))));
      if (!(w.size() == 1 && w[0].first == j && w[0].second == 1)) conj[i][j] = w;
    }
  }
  qm.quotient = PcPresentation::make(std::move(orders), std::move(powers), std::move(conj));
  return qm;
}

PcElement QuotientMap::project(const PcElement& x) const {
  PcElement red = kernel.coset_reduce(x);
  PcElement q = quotient->identity();
  for (size_t i = 0; i < retained.size(); ++i) q.e[i] = red.e[retained[i]];
  return q;
}

PcElement QuotientMap::lift(const PcElement& q) const {
  PcElement x = source->identity();
  for (size_t i = 0; i < retained.size(); ++i)
    if (q.e[i]) x = source->mul(x, source->power(source->generator(retained[i]), q.e[i]));
  return x;
}

GroupHom QuotientMap::projection_hom() const {
  GroupHom h;
  h.source = source;
  h.target = quotient;
  for (int i = 0; i < source->n(); ++i) h.images.push_back(project(source->generator(i)));
  return h;
}

}  // namespace solv
