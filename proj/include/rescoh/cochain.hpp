#pragma once

#include <optional>
#include <string>
#include <utility>

#include "rescoh/superalgebra.hpp"

namespace rescoh {

struct PairIndex {
  std::size_t i, j;
};

struct TripleIndex {
  std::size_t u, v, w;
};

struct SdimPair {
  std::size_t even = 0, odd = 0;
  friend bool operator==(const SdimPair&, const SdimPair&) = default;
};

struct CohomologyClassRep {
  Vec coords;        // in the coordinate system of the reporting space
  std::string name;  // printable linear combination of named basis cochains
  int parity = 0;
};

struct CohomologyReport {
  int degree = 1;
  bool restricted = false;
  SdimPair sdim;
  std::vector<CohomologyClassRep> reps;  // even representatives first
};

// Wedge bases of C^1..C^3 for one algebra, with the differentials
// materialized as matrices. Pair enumeration: even-even (i<j), then
// even-odd, then odd-odd (i<=j). Triples are ordered the analogous way,
// with repeats allowed only at odd positions.
//
// Convention: the dual pairing on an odd diagonal is e^{i,i}(e_i,e_i) = 1.
class CochainBasis {
 public:
  explicit CochainBasis(const LieSuperalgebra& alg);

  const LieSuperalgebra& algebra() const { return *alg_; }
  std::size_t dim1() const { return alg_->dim(); }
  std::size_t dim2() const { return pairs_.size(); }
  std::size_t dim3() const { return triples_.size(); }
  const std::vector<PairIndex>& pairs() const { return pairs_; }
  const std::vector<TripleIndex>& triples() const { return triples_; }

  // Position of the canonical pair (i, j), i <= j; throws if not a basis pair.
  std::size_t pair_position(std::size_t i, std::size_t j) const;
  int pair_parity(std::size_t t) const;
  int triple_parity(std::size_t t) const;

  // Coordinate index and sign such that phi(e_a, e_b) = sign * phi[index],
  // for arbitrary order of (a, b); nullopt when the value is identically 0.
  std::optional<std::pair<std::size_t, std::uint32_t>> pair_coefficient(std::size_t a,
                                                                        std::size_t b) const;
  // phi(e_a, e_b) for arbitrary order of (a, b).
  std::uint32_t pair_value(const Vec& phi, std::size_t a, std::size_t b) const;
  // Bilinear extension with graded signs.
  Fp eval2(const Vec& phi, const Vec& g, const Vec& h) const;

  Vec d1(const Vec& psi) const;
  Vec d2(const Vec& phi) const;
  const FpMat& d1_matrix() const { return d1_; }
  const FpMat& d2_matrix() const { return d2_; }

  std::string pair_name(std::size_t t) const;
  std::string pretty_cochain1(const Vec& psi) const;
  std::string pretty_cochain2(const Vec& phi) const;

  // H^1 = ker d^1 (d^0 = 0) or H^2 = ker d^2 / im d^1, with canonical
  // echelon representatives and the even/odd super-dimension split.
  CohomologyReport cohomology(int degree) const;

  // Canonical basis of Z^2 and of B^2 in C^2 coordinates.
  std::vector<Vec> z2_basis() const;
  std::vector<Vec> b2_basis() const;

 private:
  const LieSuperalgebra* alg_;
  std::vector<PairIndex> pairs_;
  std::vector<TripleIndex> triples_;
  std::vector<std::size_t> pair_pos_;  // n*n lookup, npos when not canonical
  FpMat d1_, d2_;
};

// Parity of a coordinate vector under a per-coordinate parity map: 0 or 1
// when homogeneous (zero counts as even), nullopt when mixed.
template <typename ParityFn>
std::optional<int> coords_parity(const Vec& v, ParityFn parity_of_coord) {
  bool has_even = false, has_odd = false;
  for (std::size_t t = 0; t < v.size(); ++t)
    if (v[t] != 0) (parity_of_coord(t) == 0 ? has_even : has_odd) = true;
  if (has_even && has_odd) return std::nullopt;
  return has_odd ? 1 : 0;
}

}  // namespace rescoh
