#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "rescoh/fp.hpp"

namespace rescoh {

// Ordered homogeneous basis: the even block precedes the odd block.
struct SuperBasis {
  std::vector<std::string> even;
  std::vector<std::string> odd;

  std::size_t dim() const { return even.size() + odd.size(); }
  int parity(std::size_t i) const { return i < even.size() ? 0 : 1; }
  const std::string& label(std::size_t i) const {
    return i < even.size() ? even[i] : odd[i - even.size()];
  }
  std::optional<std::size_t> index_of(std::string_view lbl) const;
  bool labels_unique() const;
};

struct ValidationIssue {
  std::string axiom;  // "skew", "grading", "jacobi", "cube"
  std::string where;  // first violating basis tuple, printable
};

struct ValidationReport {
  bool skew_ok = true;
  bool grading_ok = true;
  bool jacobi_ok = true;
  bool cube_ok = true;  // [g,[g,g]] = 0 for odd g, imposed when p = 3
  std::vector<ValidationIssue> issues;
  bool ok() const { return skew_ok && grading_ok && jacobi_ok && cube_ok; }
};

// Finite-dimensional Lie superalgebra over F_p given by structure constants
// c_{ij}^k for all ordered basis pairs. Treated as immutable once validated.
class LieSuperalgebra {
 public:
  LieSuperalgebra(SuperBasis basis, std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return n_; }
  std::size_t even_dim() const { return basis_.even.size(); }
  std::size_t odd_dim() const { return basis_.odd.size(); }
  int parity(std::size_t i) const { return basis_.parity(i); }
  const SuperBasis& basis() const { return basis_; }

  std::uint32_t c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  void set_structure_constant(std::size_t i, std::size_t j, std::size_t k, std::uint32_t value);

  Vec basis_vector(std::size_t i) const;
  Vec bracket_of_basis(std::size_t i, std::size_t j) const;  // [e_i, e_j]
  Vec bracket(const Vec& g, const Vec& h) const;
  // Left-nested [[...[[g_1,g_2],g_3],...],g_j]; requires at least one element.
  Vec n_fold_bracket(std::span<const Vec> gs) const;
  // Matrix of h |-> [g, h] in the ordered basis.
  FpMat ad(const Vec& g) const;

  // True when the support of v lies in the even block.
  bool is_even_element(const Vec& v) const;
  // 0 or 1 for parity-homogeneous v (zero counts as even), nullopt if mixed.
  std::optional<int> parity_of(const Vec& v) const;

  ValidationReport validate() const;

 private:
  SuperBasis basis_;
  std::size_t n_;
  std::uint32_t p_;
  Vec c_;  // n^3 structure constants, index ((i*n)+j)*n + k
};

}  // namespace rescoh
