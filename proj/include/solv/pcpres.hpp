#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "solv/fpmatrix.hpp"

namespace solv {

// A word in pc generators: (generator index, exponent) with strictly
// increasing indices and 0 < exponent < rel_order. The empty word is the
// identity.
using PcWord = std::vector<std::pair<int, u32>>;

// Collected normal form: one exponent per generator, 0 <= e[i] < p_i.
struct PcElement {
  std::vector<u32> e;
  bool operator==(const PcElement& o) const { return e == o.e; }
  bool operator<(const PcElement& o) const { return e < o.e; }
  bool is_identity() const {
    for (u32 x : e)
      if (x) return false;
    return true;
  }
  // Index of the first nonzero exponent, or n for the identity.
  int depth() const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) return static_cast<int>(i);
    return static_cast<int>(e.size());
  }
  size_t hash() const { return hash_bytes(e.data(), e.size() * sizeof(u32)); }
};

// Consistent polycyclic presentation with prime relative orders:
//   g_i^{p_i} = powers[i]          (word in generators > i)
//   g_j^{g_i} = conjugates[i][j]   (word in generators > i), i < j
// Missing conjugate relations default to g_j (the generators commute).
class PcPresentation : public std::enable_shared_from_this<PcPresentation> {
public:
  static std::shared_ptr<PcPresentation> make(std::vector<u32> rel_orders,
                                              std::vector<PcWord> powers,
                                              std::vector<std::vector<std::optional<PcWord>>> conjugates,
                                              bool check_consistency = true);

  // Trivial group.
  static std::shared_ptr<PcPresentation> trivial();

  // Direct product of elementary abelian groups: one block per (p, d).
  static std::shared_ptr<PcPresentation> elementary_product(const std::vector<std::pair<u32, int>>& blocks);

  int n() const { return n_; }
  u64 order() const { return order_; }
  u32 rel_order(int i) const { return rel_orders_[i]; }
  const std::vector<u32>& rel_orders() const { return rel_orders_; }
  const PcWord& power_word(int i) const { return powers_[i]; }
  // Conjugate g_j^{g_i} for i < j, resolved to the default when absent.
  PcWord conjugate_word(int i, int j) const;
  bool has_conjugate_relation(int i, int j) const { return conjugates_[i][j].has_value(); }

  PcElement identity() const { return PcElement{std::vector<u32>(n_, 0)}; }
  PcElement generator(int i) const;
  PcElement from_word(const PcWord& w) const;

  // Collection: all operations return collected normal forms.
  PcElement mul(const PcElement& a, const PcElement& b) const;
  PcElement mul_gen(PcElement a, int i, u32 exp = 1) const;
  PcElement inverse(const PcElement& a) const;
  PcElement power(const PcElement& a, long long k) const;
  PcElement conj(const PcElement& a, const PcElement& g) const;  // g^{-1} a g
  PcElement comm(const PcElement& a, const PcElement& b) const;  // a^{-1} b^{-1} a b
  u64 element_order(const PcElement& a) const;

  // Evaluate a word with arbitrary integer exponents.
  PcElement evaluate(const std::vector<std::pair<int, long long>>& word) const;

  // Normal word for a collected element.
  PcWord to_word(const PcElement& a) const;

  bool check_consistency(std::string* why = nullptr) const;

  // Collection statistics are not kept; presentations are immutable and safe
  // to share across threads.

private:
  PcPresentation() = default;
  void finalize();  // caches generator inverses

  int n_ = 0;
  u64 order_ = 1;
  std::vector<u32> rel_orders_;
  std::vector<PcWord> powers_;
  std::vector<std::vector<std::optional<PcWord>>> conjugates_;  // [i][j], i<j
  std::vector<PcElement> gen_inverse_;
};

using PcPresPtr = std::shared_ptr<const PcPresentation>;

// Text format, line oriented:
//   pc <n>
//   orders p1 p2 ... pn
//   pow i: word
//   conj i j: word
// where word is `j1^e1 * j2^e2 * ...` (1-based indices, strictly increasing),
// an empty word denotes the identity, and `#` starts a comment. Lines for
// trivial relations (g_i^{p_i} = 1 and commuting conjugates) are omitted on
// output; round-trips of emitted text are bit-exact.
std::string write_pc_presentation(const PcPresentation& pres);
PcPresPtr parse_pc_presentation(const std::string& text);

}  // namespace solv
