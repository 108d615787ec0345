#include "solv/gmodule.hpp"

#include <cassert>
#include <stdexcept>

namespace solv {

FpMatrix GModule::act_of(const PcElement& g) const {
  FpMatrix m = FpMatrix::identity(dim, p);
  for (int i = 0; i < group->n(); ++i)
    for (u32 k = 0; k < g.e[i]; ++k) m = m * action[i];
  return m;
}

bool GModule::verify() const {
  const PcPresentation& G = *group;
  auto word_matrix = [&](const PcWord& w) {
    FpMatrix m = FpMatrix::identity(dim, p);
    for (auto& [g, e] : w)
      for (u32 k = 0; k < e; ++k) m = m * action[g];
    return m;
  };
  for (int i = 0; i < G.n(); ++i) {
    FpMatrix lhs = FpMatrix::identity(dim, p);
    for (u32 k = 0; k < G.rel_order(i); ++k) lhs = lhs * action[i];
    if (!(lhs == word_matrix(G.power_word(i)))) return false;
    auto inv = action[i].inverse();
    if (!inv) return false;
    for (int j = i + 1; j < G.n(); ++j) {
      FpMatrix conj = *inv * action[j] * action[i];
      if (!(conj == word_matrix(G.conjugate_word(i, j)))) return false;
    }
  }
  return true;
}

GModule GModule::restricted_to(const PcPresPtr& sub, const GroupHom& inclusion) const {
  GModule m;
  m.group = sub;
  m.p = p;
  m.dim = dim;
  for (int i = 0; i < sub->n(); ++i) m.action.push_back(act_of(inclusion.images[i]));
  return m;
}

SectionBasis SectionBasis::make(const PcPresPtr& G, const PcSubgroup& A, const PcSubgroup& B) {
  SectionBasis s;
  s.G = G;
  s.A = A;
  s.B = B;
  std::vector<char> in_b(G->n(), 0);
  for (const PcElement& u : B.igs()) in_b[u.depth()] = 1;
  u32 p = 0;
  for (const PcElement& u : A.igs()) {
    if (in_b[u.depth()]) continue;
    s.basis.push_back(u);
    u32 q = G->rel_order(u.depth());
    if (p == 0) p = q;
    if (p != q) throw std::invalid_argument("section is not homogeneous of prime exponent");
  }
  s.p = p ? p : 2;
  return s;
}

SectionBasis SectionBasis::over_trivial(const PcPresPtr& G, const PcSubgroup& A) {
  return make(G, A, PcSubgroup::trivial(G));
}

std::vector<u32> SectionBasis::coords(const PcElement& x) const {
  std::vector<u32> v(basis.size(), 0);
  PcElement r = x;
  size_t next = 0;
  while (!r.is_identity()) {
    int d = r.depth();
    // reduce through the full sequence of A in depth order, recording the
    // exponents used at basis positions
    const PcElement* u = nullptr;
    bool is_basis = false;
    size_t bidx = 0;
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i].depth() == d) {
        u = &basis[i];
        is_basis = true;
        bidx = i;
        break;
      }
    if (!u)
      for (const PcElement& w : B.igs())
        if (w.depth() == d) {
          u = &w;
          break;
        }
    if (!u) throw std::invalid_argument("element not in section subgroup");
    u32 e = r.e[d];
    if (is_basis) v[bidx] = e;
    r = G->mul(G->power(*u, -static_cast<long long>(e)), r);
    (void)next;
  }
  return v;
}

PcElement SectionBasis::from_coords(const std::vector<u32>& v) const {
  PcElement x = G->identity();
  for (size_t i = 0; i < basis.size(); ++i)
    if (v[i] % p) x = G->mul(x, G->power(basis[i], v[i] % p));
  return x;
}

FpMatrix SectionBasis::action_of(const PcElement& g) const {
  FpMatrix m(dim(), dim(), p);
  for (int i = 0; i < dim(); ++i) m.set_row(i, coords(G->conj(basis[i], g)));
  return m;
}

GModule SectionBasis::module() const {
  GModule m;
  m.group = G;
  m.p = p;
  m.dim = dim();
  for (int i = 0; i < G->n(); ++i) m.action.push_back(action_of(G->generator(i)));
  return m;
}

GModule conjugation_action_on_module(const PcPresPtr& G, const PcSubgroup& A, const PcSubgroup& B) {
  return SectionBasis::make(G, A, B).module();
}

}  // namespace solv
