#include "solv/pcpres.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

#include "solv/config.hpp"

namespace solv {

std::shared_ptr<PcPresentation> PcPresentation::make(
    std::vector<u32> rel_orders, std::vector<PcWord> powers,
    std::vector<std::vector<std::optional<PcWord>>> conjugates, bool check) {
  auto p = std::shared_ptr<PcPresentation>(new PcPresentation());
  p->n_ = static_cast<int>(rel_orders.size());
  p->rel_orders_ = std::move(rel_orders);
  p->powers_ = std::move(powers);
  p->conjugates_ = std::move(conjugates);
  if (static_cast<int>(p->powers_.size()) != p->n_) throw std::invalid_argument("powers size");
  if (static_cast<int>(p->conjugates_.size()) != p->n_) throw std::invalid_argument("conjugates size");
  p->order_ = 1;
  for (int i = 0; i < p->n_; ++i) {
    if (!is_prime(p->rel_orders_[i])) throw std::invalid_argument("relative orders must be prime");
    p->order_ *= p->rel_orders_[i];
  }
  auto validate_word = [&](const PcWord& w, int min_gen) {
    int prev = min_gen;
    for (auto& [g, e] : w) {
      if (g <= prev || g >= p->n_) throw std::invalid_argument("word generator out of range");
      if (e == 0 || e >= p->rel_orders_[g]) throw std::invalid_argument("word exponent out of range");
      prev = g;
    }
  };
  for (int i = 0; i < p->n_; ++i) {
    validate_word(p->powers_[i], i);
    if (static_cast<int>(p->conjugates_[i].size()) != p->n_) throw std::invalid_argument("conjugate row size");
    for (int j = i + 1; j < p->n_; ++j)
      if (p->conjugates_[i][j]) validate_word(*p->conjugates_[i][j], i);
  }
  p->finalize();
  if (check) {
    std::string why;
    if (!p->check_consistency(&why)) throw std::invalid_argument("inconsistent pc presentation: " + why);
  }
  return p;
}

std::shared_ptr<PcPresentation> PcPresentation::trivial() {
  return make({}, {}, {}, false);
}

std::shared_ptr<PcPresentation> PcPresentation::elementary_product(
    const std::vector<std::pair<u32, int>>& blocks) {
  std::vector<u32> orders;
  for (auto& [p, d] : blocks)
    for (int i = 0; i < d; ++i) orders.push_back(p);
  int n = static_cast<int>(orders.size());
  std::vector<PcWord> powers(n);
  std::vector<std::vector<std::optional<PcWord>>> conj(n, std::vector<std::optional<PcWord>>(n));
  return make(std::move(orders), std::move(powers), std::move(conj), false);
}

PcWord PcPresentation::conjugate_word(int i, int j) const {
  assert(i < j);
  if (conjugates_[i][j]) return *conjugates_[i][j];
  return PcWord{{j, 1}};
}

PcElement PcPresentation::generator(int i) const {
  PcElement a = identity();
  a.e[i] = 1;
  return a;
}

PcElement PcPresentation::from_word(const PcWord& w) const {
  PcElement a = identity();
  for (auto& [g, e] : w) a = mul_gen(std::move(a), g, e);
  return a;
}

PcWord PcPresentation::to_word(const PcElement& a) const {
  PcWord w;
  for (int i = 0; i < n_; ++i)
    if (a.e[i]) w.emplace_back(i, a.e[i]);
  return w;
}

PcElement PcPresentation::mul(const PcElement& a, const PcElement& b) const {
  PcElement r = a;
  for (int j = 0; j < n_; ++j)
    if (b.e[j]) r = mul_gen(std::move(r), j, b.e[j]);
  return r;
}

// Right-multiply the collected element a by g_i, once. Recursive calls only
// touch generators of index > i.
PcElement PcPresentation::mul_gen(PcElement a, int i, u32 exp) const {
  assert(i >= 0 && i < n_);
  for (u32 rep = 0; rep < exp; ++rep) {
    // split off the part deeper than i
    PcElement suffix = identity();
    bool have_suffix = false;
    for (int j = i + 1; j < n_; ++j) {
      suffix.e[j] = a.e[j];
      if (a.e[j]) have_suffix = true;
      a.e[j] = 0;
    }
    // bump g_i, applying the power relation on overflow
    if (++a.e[i] == rel_orders_[i]) {
      a.e[i] = 0;
      for (auto& [g, e] : powers_[i]) a = mul_gen(std::move(a), g, e);
    }
    // append the conjugated suffix
    if (have_suffix) {
      for (int j = i + 1; j < n_; ++j) {
        if (!suffix.e[j]) continue;
        if (!conjugates_[i][j]) {
          a = mul_gen(std::move(a), j, suffix.e[j]);
        } else {
          PcElement c = from_word(*conjugates_[i][j]);
          for (u32 rep2 = 0; rep2 < suffix.e[j]; ++rep2) a = mul(a, c);
        }
      }
    }
  }
  return a;
}

PcElement PcPresentation::inverse(const PcElement& a) const {
  PcElement acc = identity();
  for (int i = n_ - 1; i >= 0; --i)
    for (u32 rep = 0; rep < a.e[i]; ++rep) acc = mul(acc, gen_inverse_[i]);
  return acc;
}

PcElement PcPresentation::power(const PcElement& a, long long k) const {
  if (k < 0) return power(inverse(a), -k);
  PcElement base = a, acc = identity();
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

PcElement PcPresentation::conj(const PcElement& a, const PcElement& g) const {
  return mul(mul(inverse(g), a), g);
}

PcElement PcPresentation::comm(const PcElement& a, const PcElement& b) const {
  return mul(mul(inverse(a), inverse(b)), mul(a, b));
}

u64 PcPresentation::element_order(const PcElement& a) const {
  std::vector<u64> primes;
  u64 m = order_;
  for (u64 q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      primes.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) primes.push_back(m);
  u64 d = order_;
  for (u64 q : primes)
    while (d % q == 0 && power(a, static_cast<long long>(d / q)).is_identity()) d /= q;
  return d;
}

PcElement PcPresentation::evaluate(const std::vector<std::pair<int, long long>>& word) const {
  PcElement acc = identity();
  for (auto& [i, k] : word) acc = mul(acc, power(generator(i), k));
  return acc;
}

void PcPresentation::finalize() {
  gen_inverse_.assign(n_, identity());
  for (int i = n_ - 1; i >= 0; --i) {
    // g_i^{-1} = g_i^{p_i - 1} * (g_i^{p_i})^{-1}; the power word only uses
    // deeper generators whose inverses are already cached.
    PcElement x = from_word(powers_[i]);
    PcElement xinv = identity();
    for (int j = n_ - 1; j > i; --j)
      for (u32 rep = 0; rep < x.e[j]; ++rep) xinv = mul(xinv, gen_inverse_[j]);
    PcElement r = mul_gen(identity(), i, rel_orders_[i] - 1);
    gen_inverse_[i] = mul(r, xinv);
  }
}

bool PcPresentation::check_consistency(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int k = 0; k < n_; ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        PcElement lhs = mul(generator(k), mul_gen(generator(j), i));
        PcElement rhs = mul_gen(mul_gen(generator(k), j), i);
        if (!(lhs == rhs))
          return fail("associativity overlap failed at (" + std::to_string(k) + "," +
                      std::to_string(j) + "," + std::to_string(i) + ")");
      }
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < j; ++i) {
      PcElement lhs = mul_gen(from_word(powers_[j]), i);
      PcElement rhs = mul(mul_gen(identity(), j, rel_orders_[j] - 1), mul_gen(generator(j), i));
      if (!(lhs == rhs))
        return fail("power overlap failed at (" + std::to_string(j) + "," + std::to_string(i) + ")");
      PcElement lhs2 = mul(generator(j), from_word(powers_[i]));
      PcElement rhs2 = mul_gen(mul_gen(generator(j), i), i, rel_orders_[i] - 1);
      if (!(lhs2 == rhs2))
        return fail("power overlap (right) failed at (" + std::to_string(j) + "," + std::to_string(i) + ")");
    }
  for (int i = 0; i < n_; ++i) {
    PcElement lhs = mul_gen(from_word(powers_[i]), i);
    PcElement rhs = mul(generator(i), from_word(powers_[i]));
    if (!(lhs == rhs)) return fail("power overlap (self) failed at " + std::to_string(i));
  }
  return true;
}

static std::string word_to_text(const PcWord& w) {
  std::ostringstream os;
  bool first = true;
  for (auto& [g, e] : w) {
    if (!first) os << " * ";
    os << (g + 1) << "^" << e;
    first = false;
  }
  return os.str();
}

std::string write_pc_presentation(const PcPresentation& pres) {
  std::ostringstream os;
  os << "pc " << pres.n() << "\n";
  os << "orders";
  for (int i = 0; i < pres.n(); ++i) os << " " << pres.rel_order(i);
  os << "\n";
  for (int i = 0; i < pres.n(); ++i)
    if (!pres.power_word(i).empty()) os << "pow " << (i + 1) << ": " << word_to_text(pres.power_word(i)) << "\n";
  for (int i = 0; i < pres.n(); ++i)
    for (int j = i + 1; j < pres.n(); ++j)
      if (pres.has_conjugate_relation(i, j))
        os << "conj " << (i + 1) << " " << (j + 1) << ": " << word_to_text(pres.conjugate_word(i, j)) << "\n";
  return os.str();
}

static PcWord parse_word(const std::string& text, int line_no) {
  PcWord w;
  std::istringstream is(text);
  std::string tok;
  bool expect_star = false;
  while (is >> tok) {
    if (expect_star) {
      if (tok != "*") throw std::invalid_argument("expected '*' in word at line " + std::to_string(line_no));
      expect_star = false;
      continue;
    }
    auto caret = tok.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("bad word token at line " + std::to_string(line_no));
    int g = std::stoi(tok.substr(0, caret));
    long long e = std::stoll(tok.substr(caret + 1));
    if (g < 1 || e < 1) throw std::invalid_argument("bad word token at line " + std::to_string(line_no));
    w.emplace_back(g - 1, static_cast<u32>(e));
    expect_star = true;
  }
  return w;
}

PcPresPtr parse_pc_presentation(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = -1;
  std::vector<u32> orders;
  std::vector<PcWord> powers;
  std::vector<std::vector<std::optional<PcWord>>> conj;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "pc") {
      if (!(ls >> n) || n < 0) throw std::invalid_argument("bad pc header");
      powers.assign(n, {});
      conj.assign(n, std::vector<std::optional<PcWord>>(n));
    } else if (kw == "orders") {
      if (n < 0) throw std::invalid_argument("orders before pc header");
      u64 p;
      while (ls >> p) orders.push_back(static_cast<u32>(p));
      if (static_cast<int>(orders.size()) != n) throw std::invalid_argument("orders count mismatch");
    } else if (kw == "pow") {
      std::string rest;
      std::getline(ls, rest);
      auto colon = rest.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("pow line missing ':'");
      int i = std::stoi(rest.substr(0, colon));
      if (i < 1 || i > n) throw std::invalid_argument("pow index out of range");
      powers[i - 1] = parse_word(rest.substr(colon + 1), line_no);
    } else if (kw == "conj") {
      std::string rest;
      std::getline(ls, rest);
      auto colon = rest.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("conj line missing ':'");
      std::istringstream hs(rest.substr(0, colon));
      int i, j;
      if (!(hs >> i >> j) || i < 1 || j <= i || j > n) throw std::invalid_argument("conj indices bad");
      conj[i - 1][j - 1] = parse_word(rest.substr(colon + 1), line_no);
    } else {
      throw std::invalid_argument("unknown keyword '" + kw + "' at line " + std::to_string(line_no));
    }
  }
  if (n < 0) throw std::invalid_argument("missing pc header");
  return PcPresentation::make(std::move(orders), std::move(powers), std::move(conj));
}

}  // namespace solv
