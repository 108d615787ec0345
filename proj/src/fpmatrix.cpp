#include "solv/fpmatrix.hpp"

#include <cassert>
#include <stdexcept>

#include "solv/config.hpp"

namespace solv {

budgets_t& budgets() {
  static budgets_t b;
  return b;
}

u32 fp_pow(u32 a, u64 e, u32 p) {
  u64 r = 1, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

u32 fp_inv(u32 a, u32 p) {
  assert(a % p != 0);
  return fp_pow(a % p, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FpMatrix FpMatrix::identity(int n, u32 p) {
  FpMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<u32>>& rows, u32 p, int cols) {
  FpMatrix m(static_cast<int>(rows.size()), cols, p);
  for (size_t r = 0; r < rows.size(); ++r) {
    assert(static_cast<int>(rows[r].size()) == cols);
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c] % p;
  }
  return m;
}

bool FpMatrix::operator<(const FpMatrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return e_ < o.e_;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  assert(cols_ == o.rows_ && p_ == o.p_);
  FpMatrix r(rows_, o.cols_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      u32 a = at(i, k);
      if (!a) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) = static_cast<u32>((r.at(i, j) + (u64)a * o.at(k, j)) % p_);
    }
  return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_);
  FpMatrix r(rows_, cols_, p_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = fp_add(e_[i], o.e_[i], p_);
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_);
  FpMatrix r(rows_, cols_, p_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = fp_sub(e_[i], o.e_[i], p_);
  return r;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix r(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool FpMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool FpMatrix::is_zero() const {
  for (u32 x : e_)
    if (x) return false;
  return true;
}

std::vector<u32> FpMatrix::row(int r) const {
  return std::vector<u32>(e_.begin() + u64(r) * cols_, e_.begin() + u64(r + 1) * cols_);
}

void FpMatrix::set_row(int r, const std::vector<u32>& v) {
  assert(static_cast<int>(v.size()) == cols_);
  for (int c = 0; c < cols_; ++c) at(r, c) = v[c] % p_;
}

std::vector<u32> FpMatrix::apply(const std::vector<u32>& v) const {
  assert(static_cast<int>(v.size()) == rows_);
  std::vector<u32> r(cols_, 0);
  for (int i = 0; i < rows_; ++i) {
    u32 a = v[i];
    if (!a) continue;
    for (int j = 0; j < cols_; ++j) r[j] = static_cast<u32>((r[j] + (u64)a * at(i, j)) % p_);
  }
  return r;
}

std::optional<FpMatrix> FpMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  int n = rows_;
  FpMatrix a(*this), inv = identity(n, p_);
  for (int col = 0, row = 0; col < n; ++col, ++row) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (a.at(r, col)) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    if (piv != row)
      for (int c = 0; c < n; ++c) {
        std::swap(a.at(piv, c), a.at(row, c));
        std::swap(inv.at(piv, c), inv.at(row, c));
      }
    u32 s = fp_inv(a.at(row, col), p_);
    for (int c = 0; c < n; ++c) {
      a.at(row, c) = fp_mul(a.at(row, c), s, p_);
      inv.at(row, c) = fp_mul(inv.at(row, c), s, p_);
    }
    for (int r = 0; r < n; ++r) {
      if (r == row) continue;
      u32 f = a.at(r, col);
      if (!f) continue;
      for (int c = 0; c < n; ++c) {
        a.at(r, c) = fp_sub(a.at(r, c), fp_mul(f, a.at(row, c), p_), p_);
        inv.at(r, c) = fp_sub(inv.at(r, c), fp_mul(f, inv.at(row, c), p_), p_);
      }
    }
  }
  return inv;
}

size_t hash_bytes(const void* data, size_t len, size_t seed) {
  // FNV-1a with a splitmix finisher; deterministic across runs.
  const unsigned char* b = static_cast<const unsigned char*>(data);
  u64 h = 1469598103934665603ULL ^ seed;
  for (size_t i = 0; i < len; ++i) {
    h ^= b[i];
    h *= 1099511628211ULL;
  }
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return static_cast<size_t>(h);
}

size_t FpMatrix::hash() const {
  size_t h = hash_bytes(e_.data(), e_.size() * sizeof(u32));
  return hash_bytes(&rows_, sizeof(rows_), h);
}

RrefResult rref(const FpMatrix& m) {
  RrefResult res{m, 0, {}};
  FpMatrix& a = res.m;
  u32 p = a.p();
  int rows = a.rows(), cols = a.cols();
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (a.at(r, col)) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < cols; ++c) std::swap(a.at(piv, c), a.at(row, c));
    u32 s = fp_inv(a.at(row, col), p);
    if (s != 1)
      for (int c = 0; c < cols; ++c) a.at(row, c) = fp_mul(a.at(row, c), s, p);
    for (int r = 0; r < rows; ++r) {
      if (r == row) continue;
      u32 f = a.at(r, col);
      if (!f) continue;
      for (int c = col; c < cols; ++c)
        a.at(r, c) = fp_sub(a.at(r, c), fp_mul(f, a.at(row, c), p), p);
    }
    res.pivot_columns.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

bool is_rref(const FpMatrix& m) {
  int prev = -1;
  int r = 0;
  for (; r < m.rows(); ++r) {
    int lead = -1;
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c)) { lead = c; break; }
    if (lead < 0) break;  // zero rows must trail
    if (lead <= prev || m.at(r, lead) != 1) return false;
    for (int rr = 0; rr < m.rows(); ++rr)
      if (rr != r && m.at(rr, lead)) return false;
    prev = lead;
  }
  for (; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c)) return false;
  return true;
}

FpMatrix row_space(const FpMatrix& m) {
  RrefResult r = rref(m);
  FpMatrix out(r.rank, m.cols(), m.p());
  for (int i = 0; i < r.rank; ++i) out.set_row(i, r.m.row(i));
  return out;
}

int rank_of(const FpMatrix& m) { return rref(m).rank; }

FpMatrix nullspace(const FpMatrix& m) {
  RrefResult r = rref(m);
  u32 p = m.p();
  int cols = m.cols();
  std::vector<char> is_pivot(cols, 0);
  for (int c : r.pivot_columns) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FpMatrix basis(static_cast<int>(free_cols.size()), cols, p);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(static_cast<int>(k), fc) = 1;
    for (int i = 0; i < r.rank; ++i) {
      int pc = r.pivot_columns[i];
      basis.at(static_cast<int>(k), pc) = fp_neg(r.m.at(i, fc), p);
    }
  }
  // Rows come out already in echelon shape up to ordering; normalize anyway.
  return row_space(basis);
}

std::optional<std::vector<u32>> solve_left(const FpMatrix& m, const std::vector<u32>& rhs) {
  // x * m = rhs  <=>  m^T * x^T = rhs^T; run elimination on the transpose
  // augmented with rhs.
  FpMatrix t = m.transpose();
  assert(static_cast<int>(rhs.size()) == t.rows());
  u32 p = m.p();
  FpMatrix aug(t.rows(), t.cols() + 1, p);
  for (int i = 0; i < t.rows(); ++i) {
    for (int j = 0; j < t.cols(); ++j) aug.at(i, j) = t.at(i, j);
    aug.at(i, t.cols()) = rhs[i] % p;
  }
  RrefResult r = rref(aug);
  std::vector<u32> x(t.cols(), 0);
  for (int i = 0; i < r.rank; ++i) {
    int pc = r.pivot_columns[i];
    if (pc == t.cols()) return std::nullopt;  // pivot in rhs column
    x[pc] = r.m.at(i, t.cols());
  }
  return x;
}

std::vector<u32> vec_add(const std::vector<u32>& a, const std::vector<u32>& b, u32 p) {
  assert(a.size() == b.size());
  std::vector<u32> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = fp_add(a[i], b[i], p);
  return r;
}

std::vector<u32> vec_sub(const std::vector<u32>& a, const std::vector<u32>& b, u32 p) {
  assert(a.size() == b.size());
  std::vector<u32> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = fp_sub(a[i], b[i], p);
  return r;
}

std::vector<u32> vec_scale(const std::vector<u32>& a, u32 c, u32 p) {
  std::vector<u32> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = fp_mul(a[i], c, p);
  return r;
}

bool vec_is_zero(const std::vector<u32>& a) {
  for (u32 x : a)
    if (x) return false;
  return true;
}

}  // namespace solv
