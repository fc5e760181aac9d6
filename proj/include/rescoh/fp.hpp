#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rescoh {

bool is_prime(std::uint32_t n);

// Raw residue arithmetic mod an odd prime p. These are the workhorses used
// by the matrix code; the Fp wrapper below adds modulus checking at API
// boundaries.
namespace modp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

// Reduce an arbitrary signed value into {0, ..., p-1}.
inline std::uint32_t reduce(std::int64_t x, std::uint32_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

}  // namespace modp

// Coordinate vector of residues sharing one modulus (carried by context).
using Vec = std::vector<std::uint32_t>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b, std::uint32_t p);
Vec vec_sub(const Vec& a, const Vec& b, std::uint32_t p);
Vec vec_scaled(const Vec& v, std::uint32_t c, std::uint32_t p);
// acc += c * v
void vec_accumulate(Vec& acc, const Vec& v, std::uint32_t c, std::uint32_t p);

// Scalar in F_p, p an odd prime > 2. All arithmetic is exact; combining
// scalars with different moduli throws std::invalid_argument.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return Fp(*this, modp::neg(v_, p_)); }
  Fp inv() const;
  Fp pow(std::uint64_t e) const { return Fp(*this, modp::pow(v_, e, p_)); }

  friend Fp operator+(Fp a, Fp b);
  friend Fp operator-(Fp a, Fp b);
  friend Fp operator*(Fp a, Fp b);
  friend Fp operator/(Fp a, Fp b);
  friend bool operator==(const Fp&, const Fp&) = default;

 private:
  Fp(const Fp& like, std::uint32_t raw) : v_(raw), p_(like.p_) {}
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 3;
};

// Dense matrix over F_p, row-major, one shared modulus.
class FpMat {
 public:
  FpMat(std::size_t rows, std::size_t cols, std::uint32_t p);
  static FpMat identity(std::size_t n, std::uint32_t p);
  static FpMat from_rows(const std::vector<Vec>& rows, std::size_t cols, std::uint32_t p);
  static FpMat from_columns(const std::vector<Vec>& cols, std::size_t rows, std::uint32_t p);
  // Builds from Fp entries; mixed moduli across entries are rejected.
  static FpMat from_scalars(std::size_t rows, std::size_t cols, std::span<const Fp> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  Vec flattened() const { return a_; }

  FpMat transposed() const;
  FpMat operator*(const FpMat& o) const;
  FpMat pow(std::uint64_t e) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  bool is_zero() const;

  friend bool operator==(const FpMat&, const FpMat&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::uint32_t p_ = 3;
  Vec a_;
};

struct RrefResult {
  FpMat mat;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form with deterministic pivoting (first nonzero row
// in column order), so every downstream basis is reproducible byte-for-byte.
RrefResult rref(FpMat m);
std::size_t rank(const FpMat& m);

// Canonical (unique RREF) basis of the null space {v : Mv = 0}.
std::vector<Vec> kernel_basis(const FpMat& m);

// One solution of M x = rhs with free variables set to zero, if consistent.
std::optional<Vec> solve(const FpMat& m, const Vec& rhs);

// Coset representatives completing span(sub) to the full ambient space:
// the standard vectors at the non-pivot columns of rref(sub).
std::vector<Vec> quotient_basis(const std::vector<Vec>& sub, std::size_t ambient_dim,
                                std::uint32_t p);

// Incrementally maintained reduced row echelon span. rows() is the unique
// RREF basis of everything inserted so far, independent of insertion order.
class Echelon {
 public:
  Echelon(std::size_t ambient_dim, std::uint32_t p);

  // Residue of v after reduction against the current rows (not inserted).
  Vec reduce(const Vec& v) const;
  // Reduce and insert if nonzero; true if the span grew.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
  // Coefficients of v in the row basis, or nullopt if v is outside the span.
  std::optional<Vec> coordinates(const Vec& v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return n_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t n_;
  std::uint32_t p_;
  std::vector<Vec> rows_;  // sorted by pivot column, leading coefficient 1
  std::vector<std::size_t> pivots_;
};

// Subspace equality test for two spanning sets of the same ambient space.
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t ambient_dim,
               std::uint32_t p);

}  // namespace rescoh
