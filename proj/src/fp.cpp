#include "rescoh/fp.hpp"

#include <stdexcept>

namespace rescoh {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace modp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t base = a % p, acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::invalid_argument("modp::inv: zero is not invertible");
  // p is prime, so Fermat applies.
  return pow(a % p, p - 2, p);
}

}  // namespace modp

bool vec_is_zero(const Vec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b, std::uint32_t p) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = modp::add(a[i], b[i], p);
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b, std::uint32_t p) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = modp::sub(a[i], b[i], p);
  return r;
}

Vec vec_scaled(const Vec& v, std::uint32_t c, std::uint32_t p) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = modp::mul(v[i], c, p);
  return r;
}

void vec_accumulate(Vec& acc, const Vec& v, std::uint32_t c, std::uint32_t p) {
  if (acc.size() != v.size()) throw std::invalid_argument("vec_accumulate: length mismatch");
  if (c == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] = modp::add(acc[i], modp::mul(v[i], c, p), p);
}

Fp::Fp(std::int64_t value, std::uint32_t modulus) : p_(modulus) {
  if (modulus < 3 || modulus % 2 == 0)
    throw std::invalid_argument("Fp: modulus must be an odd prime > 2");
  v_ = modp::reduce(value, modulus);
}

Fp Fp::inv() const { return Fp(*this, modp::inv(v_, p_)); }

namespace {
void check_moduli(const Fp& a, const Fp& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("Fp: mixed moduli " + std::to_string(a.modulus()) + " and " +
                                std::to_string(b.modulus()));
}
}  // namespace

Fp operator+(Fp a, Fp b) {
  check_moduli(a, b);
  return Fp(a, modp::add(a.v_, b.v_, a.p_));
}

Fp operator-(Fp a, Fp b) {
  check_moduli(a, b);
  return Fp(a, modp::sub(a.v_, b.v_, a.p_));
}

Fp operator*(Fp a, Fp b) {
  check_moduli(a, b);
  return Fp(a, modp::mul(a.v_, b.v_, a.p_));
}

Fp operator/(Fp a, Fp b) {
  check_moduli(a, b);
  return Fp(a, modp::mul(a.v_, modp::inv(b.v_, a.p_), a.p_));
}

FpMat::FpMat(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("FpMat: modulus must be an odd prime > 2");
}

FpMat FpMat::identity(std::size_t n, std::uint32_t p) {
  FpMat m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMat FpMat::from_rows(const std::vector<Vec>& rows, std::size_t cols, std::uint32_t p) {
  FpMat m(rows.size(), cols, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("FpMat::from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j] % p;
  }
  return m;
}

FpMat FpMat::from_columns(const std::vector<Vec>& cols, std::size_t rows, std::uint32_t p) {
  FpMat m(rows, cols.size(), p);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows)
      throw std::invalid_argument("FpMat::from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i] % p;
  }
  return m;
}

FpMat FpMat::from_scalars(std::size_t rows, std::size_t cols, std::span<const Fp> entries) {
  if (entries.size() != rows * cols)
    throw std::invalid_argument("FpMat::from_scalars: entry count mismatch");
  if (entries.empty()) throw std::invalid_argument("FpMat::from_scalars: empty matrix needs a modulus");
  const std::uint32_t p = entries.front().modulus();
  for (const auto& e : entries)
    if (e.modulus() != p)
      throw std::invalid_argument("FpMat::from_scalars: mixed moduli across entries");
  FpMat m(rows, cols, p);
  for (std::size_t k = 0; k < entries.size(); ++k) m.a_[k] = entries[k].value();
  return m;
}

Vec FpMat::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec FpMat::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

FpMat FpMat::transposed() const {
  FpMat t(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

FpMat FpMat::operator*(const FpMat& o) const {
  if (p_ != o.p_) throw std::invalid_argument("FpMat: mixed moduli in product");
  if (cols_ != o.rows_) throw std::invalid_argument("FpMat: shape mismatch in product");
  FpMat r(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = modp::add(r.at(i, j), modp::mul(x, o.at(k, j), p_), p_);
    }
  return r;
}

FpMat FpMat::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("FpMat::pow: square matrix required");
  FpMat acc = identity(rows_, p_);
  FpMat base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Vec FpMat::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("FpMat::apply: length mismatch");
  Vec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<std::uint64_t>(at(i, j)) * v[j];
    r[i] = static_cast<std::uint32_t>(acc % p_);
  }
  return r;
}

bool FpMat::is_zero() const { return vec_is_zero(a_); }

RrefResult rref(FpMat m) {
  const std::uint32_t p = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m.at(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    const std::uint32_t s = modp::inv(m.at(r, c), p);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = modp::mul(m.at(r, j), s, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const std::uint32_t f = m.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = modp::sub(m.at(i, j), modp::mul(f, m.at(r, j), p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const FpMat& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const FpMat& m) {
  const auto [R, piv] = rref(m);
  const std::uint32_t p = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;

  Echelon span(m.cols(), p);
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = modp::neg(R.at(k, f), p);
    span.insert(v);
  }
  return span.rows();
}

std::optional<Vec> solve(const FpMat& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  FpMat aug(m.rows(), m.cols() + 1, m.modulus());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i] % m.modulus();
  }
  const auto [R, piv] = rref(std::move(aug));
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = R.at(k, m.cols());
  return x;
}

std::vector<Vec> quotient_basis(const std::vector<Vec>& sub, std::size_t ambient_dim,
                                std::uint32_t p) {
  for (const auto& v : sub)
    if (v.size() != ambient_dim) throw std::invalid_argument("quotient_basis: dimension mismatch");
  const auto piv = rref(FpMat::from_rows(sub, ambient_dim, p)).pivots;
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (is_pivot[j]) continue;
    Vec v(ambient_dim, 0);
    v[j] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

Echelon::Echelon(std::size_t ambient_dim, std::uint32_t p) : n_(ambient_dim), p_(p) {}

Vec Echelon::reduce(const Vec& v) const {
  if (v.size() != n_) throw std::invalid_argument("Echelon: dimension mismatch");
  Vec w = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint32_t c = w[pivots_[k]];
    if (c != 0)
      for (std::size_t j = 0; j < n_; ++j)
        w[j] = modp::sub(w[j], modp::mul(c, rows_[k][j], p_), p_);
  }
  return w;
}

bool Echelon::insert(const Vec& v) {
  Vec w = reduce(v);
  std::size_t lead = n_;
  for (std::size_t j = 0; j < n_; ++j)
    if (w[j] != 0) {
      lead = j;
      break;
    }
  if (lead == n_) return false;
  const std::uint32_t s = modp::inv(w[lead], p_);
  for (auto& x : w) x = modp::mul(x, s, p_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint32_t c = rows_[k][lead];
    if (c != 0)
      for (std::size_t j = 0; j < n_; ++j)
        rows_[k][j] = modp::sub(rows_[k][j], modp::mul(c, w[j], p_), p_);
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  return true;
}

std::optional<Vec> Echelon::coordinates(const Vec& v) const {
  if (v.size() != n_) throw std::invalid_argument("Echelon: dimension mismatch");
  Vec w = v;
  Vec coords(rows_.size(), 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint32_t c = w[pivots_[k]];
    coords[k] = c;
    if (c != 0)
      for (std::size_t j = 0; j < n_; ++j)
        w[j] = modp::sub(w[j], modp::mul(c, rows_[k][j], p_), p_);
  }
  if (!vec_is_zero(w)) return std::nullopt;
  return coords;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t ambient_dim,
               std::uint32_t p) {
  Echelon ea(ambient_dim, p), eb(ambient_dim, p);
  for (const auto& v : a) ea.insert(v);
  for (const auto& v : b) eb.insert(v);
  if (ea.dim() != eb.dim()) return false;
  for (const auto& v : a)
    if (!eb.contains(v)) return false;
  return true;
}

}  // namespace rescoh
