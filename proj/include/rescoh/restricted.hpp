#pragma once

#include <memory>
#include <optional>

#include "rescoh/superalgebra.hpp"

namespace rescoh {

// Correction terms s_1..s_{p-1}: i*s_i(g,h) is the coefficient of t^{i-1}
// in (ad(t g + h))^{p-1}(g). Both arguments must be even.
std::vector<Vec> s_coefficients(const LieSuperalgebra& alg, const Vec& g, const Vec& h);

struct RestrictednessReport {
  bool axiom1_ok = true;     // (a g)^[p] = a^p g^[p] on the scalar panel
  bool axiom2_ok = true;     // additivity with s_i corrections, both peel orders
  bool axiom3_ok = true;     // (ad g)^p = ad g^[p] on the even block
  bool odd_module_ok = true; // same matrix identity restricted to the odd block
  std::vector<std::string> failures;  // first counterexample per failed axiom
  bool ok() const { return axiom1_ok && axiom2_ok && axiom3_ok && odd_module_ok; }
};

// p-power operator on the even part, stored by its images on the even basis
// and extended to arbitrary even elements through the semilinearity and
// additivity axioms.
class POperator {
 public:
  POperator(std::shared_ptr<const LieSuperalgebra> algebra, std::vector<Vec> even_images);

  const LieSuperalgebra& algebra() const { return *alg_; }
  const std::shared_ptr<const LieSuperalgebra>& algebra_ptr() const { return alg_; }
  std::size_t even_dim() const { return images_.size(); }
  const Vec& image(std::size_t even_index) const { return images_.at(even_index); }

  // g^[p] for an arbitrary even g, peeling one basis summand at a time in
  // ascending index order. Independent of the peel order for a valid operator.
  Vec p_power(const Vec& g) const;

  RestrictednessReport validate() const;

 private:
  std::shared_ptr<const LieSuperalgebra> alg_;
  std::vector<Vec> images_;
};

struct JacobsonReport {
  bool restrictable = false;
  // One witness z_i per even basis vector with ad z_i = (ad e_i)^p.
  std::vector<Vec> witnesses;
  std::optional<std::size_t> failing_index;
};

// Superized Jacobson test: restrictable iff (ad e_i)^p is inner for every
// even basis vector e_i.
JacobsonReport jacobson_check(const LieSuperalgebra& alg);

}  // namespace rescoh
