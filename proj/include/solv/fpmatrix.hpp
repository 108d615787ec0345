#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace solv {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Arithmetic in GF(p), p prime, p <= 2^31. Values are residues in [0, p).
inline u32 fp_add(u32 a, u32 b, u32 p) { u32 s = a + b; return s >= p ? s - p : s; }
inline u32 fp_sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 fp_neg(u32 a, u32 p) { return a ? p - a : 0; }
inline u32 fp_mul(u32 a, u32 b, u32 p) { return static_cast<u32>((u64)a * b % p); }
u32 fp_pow(u32 a, u64 e, u32 p);
u32 fp_inv(u32 a, u32 p);
bool is_prime(u64 n);

// Dense matrix over GF(p). Row-major. Module elements are row vectors and
// group actions multiply on the right, so act(gh) = act(g)*act(h).
class FpMatrix {
public:
  FpMatrix() : p_(2), rows_(0), cols_(0) {}
  FpMatrix(int rows, int cols, u32 p) : p_(p), rows_(rows), cols_(cols), e_(u64(rows) * cols, 0) {}

  static FpMatrix identity(int n, u32 p);
  static FpMatrix from_rows(const std::vector<std::vector<u32>>& rows, u32 p, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  u32 p() const { return p_; }
  u32 at(int r, int c) const { return e_[u64(r) * cols_ + c]; }
  u32& at(int r, int c) { return e_[u64(r) * cols_ + c]; }
  const std::vector<u32>& data() const { return e_; }

  bool operator==(const FpMatrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator<(const FpMatrix& o) const;

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  std::vector<u32> row(int r) const;
  void set_row(int r, const std::vector<u32>& v);

  // Row vector times matrix.
  std::vector<u32> apply(const std::vector<u32>& v) const;

  std::optional<FpMatrix> inverse() const;
  size_t hash() const;

private:
  u32 p_;
  int rows_, cols_;
  std::vector<u32> e_;
};

struct RrefResult {
  FpMatrix m;
  int rank = 0;
  std::vector<int> pivot_columns;
};

// Row-reduced echelon form: pivots 1, zeros above and below each pivot,
// pivot columns strictly increasing. Row space is preserved.
RrefResult rref(const FpMatrix& m);

// Predicate form of the invariant above.
bool is_rref(const FpMatrix& m);

// Basis (rref rows) of {v : m * v^T = 0}, i.e. the right nullspace as row vectors.
FpMatrix nullspace(const FpMatrix& m);

// Row-space basis in rref with zero rows dropped.
FpMatrix row_space(const FpMatrix& m);

// Solve x * m = rhs for the row vector x; nullopt when inconsistent.
std::optional<std::vector<u32>> solve_left(const FpMatrix& m, const std::vector<u32>& rhs);

// Rank of the affine system stack; helper for dimension checks.
int rank_of(const FpMatrix& m);

// Vector helpers over GF(p).
std::vector<u32> vec_add(const std::vector<u32>& a, const std::vector<u32>& b, u32 p);
std::vector<u32> vec_sub(const std::vector<u32>& a, const std::vector<u32>& b, u32 p);
std::vector<u32> vec_scale(const std::vector<u32>& a, u32 c, u32 p);
bool vec_is_zero(const std::vector<u32>& a);

size_t hash_bytes(const void* data, size_t len, size_t seed = 0x9e3779b97f4a7c15ULL);

}  // namespace solv
