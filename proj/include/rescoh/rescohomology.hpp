#pragma once

#include <array>
#include <stdexcept>

#include "rescoh/cochain.hpp"
#include "rescoh/restricted.hpp"

namespace rescoh {

// Restricted 2-cochain (phi, omega) stored as phi plus the Frobenius part of
// omega: omega = tilde(phi) + sum_i frob[i] * ebar^i. Odd cochains carry
// frob = 0 (the coefficient line has no odd part for omega to land in).
struct RestrictedCochain2 {
  Vec phi;   // CochainBasis coordinates
  Vec frob;  // one coordinate per even basis vector
};

struct SixTermReport {
  // H1_res, H1, HomFr, H2_res, H2, HomFr(g_0, H1)
  std::array<std::size_t, 6> dims{};
  // iota1, D, iota2, pi, H
  std::array<std::size_t, 5> ranks{};
  // im = ker at the four interior nodes H1, HomFr, H2_res, H2
  std::array<bool, 4> exact{};
  bool exact_all() const { return exact[0] && exact[1] && exact[2] && exact[3]; }
};

// Raised when a map of the six-term sequence turns out not to be constant on
// cohomology cosets, or a representative falls outside its expected span.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Restricted cochain complex in degree <= 2 bound to one (algebra, [p]) pair.
// Joint coordinates of C^2_res are (phi coordinates, frob coordinates).
class RestrictedComplex {
 public:
  explicit RestrictedComplex(const POperator& op);

  const POperator& op() const { return *op_; }
  const LieSuperalgebra& algebra() const { return op_->algebra(); }
  const CochainBasis& cochains() const { return cb_; }

  std::size_t coord_dim() const { return cb_.dim2() + algebra().even_dim(); }
  Vec flatten(const RestrictedCochain2& z) const;
  RestrictedCochain2 unflatten(const Vec& v) const;
  int coord_parity(std::size_t t) const;  // frob coordinates count as even

  // The unique phi-compatible map vanishing on the even basis, evaluated at
  // an even element by peeling one basis summand per step.
  Fp tilde_eval(const Vec& phi, const Vec& even_g) const;
  // omega(g) = tilde(phi)(g) + sum_i frob[i] * g_i^p.
  Fp omega_eval(const RestrictedCochain2& z, const Vec& even_g) const;

  // ind^1(psi)(e_i) = psi(e_i^[p]) on the even basis.
  Vec ind1(const Vec& psi) const;
  // ind^2(phi)(g,h) = phi(g ^ h^[p]) - phi([g,h,...,h] ^ h) with p-1 copies
  // of h inside the bracket; independent of the omega component.
  Fp ind2(const Vec& phi, const Vec& g, const Vec& even_h) const;
  Fp ind2_of_pair(const RestrictedCochain2& z, const Vec& g, const Vec& even_h) const;

  RestrictedCochain2 d1_res(const Vec& psi) const;

  // Membership in Z^2_res by direct condition evaluation; on failure
  // *violated names the first broken condition.
  bool in_z2(const RestrictedCochain2& z, std::string* violated = nullptr) const;

  std::vector<RestrictedCochain2> z2_basis() const;
  std::vector<RestrictedCochain2> b2_basis() const;

  CohomologyReport h1_res() const;
  CohomologyReport h2_res() const;

  SixTermReport sixterm_verify() const;

  // ind^2 computed from (d1 psi, omega) and from (d1 psi, ind1 psi) must
  // agree on all basis pairs; regression guard on the ind^2 implementation.
  bool lemma_swap_holds(const Vec& psi) const;

  std::string frob_name(std::size_t i) const;
  std::string pretty(const RestrictedCochain2& z) const;

 private:
  const POperator* op_;
  CochainBasis cb_;
  FpMat conditions_;             // stacked d^2 rows and ind^2 basis-pair rows
  std::vector<Vec> nfold_;       // [e_a, e_j x (p-1)] per (a, even j)
  std::vector<FpMat> ad_pow_;    // (ad e_i)^{p-1} per even i, for the map H

  Vec ind2_row(std::size_t a, std::size_t j) const;
};

}  // namespace rescoh
