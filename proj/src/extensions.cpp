#include "rescoh/extensions.hpp"

#include <stdexcept>

namespace rescoh {

namespace {
std::string fresh_central_label(const SuperBasis& basis) {
  std::string label = "c";
  for (int k = 1; basis.index_of(label).has_value(); ++k) label = "c" + std::to_string(k);
  return label;
}
}  // namespace

ExtensionResult central_extension(const POperator& op, const RestrictedCochain2& z,
                                  std::string name) {
  const auto& alg = op.algebra();
  const std::uint32_t p = alg.p();
  const std::size_t n = alg.dim(), m = alg.even_dim();
  RestrictedComplex rc(op);

  const auto parity = coords_parity(rc.flatten(z), [&](std::size_t t) { return rc.coord_parity(t); });
  if (!parity || *parity != 0)
    throw std::invalid_argument(
        "central_extension: only even cocycles yield central extensions (odd ones are trivial)");
  std::string violated;
  if (!rc.in_z2(z, &violated))
    throw std::invalid_argument("central_extension: not a restricted 2-cocycle: " + violated);

  // New even generator c sits at the end of the even block; odd indices
  // shift up by one.
  SuperBasis basis = alg.basis();
  basis.even.push_back(fresh_central_label(basis));
  auto ext = std::make_shared<LieSuperalgebra>(std::move(basis), p);
  const std::size_t c_idx = m;
  auto remap = [&](std::size_t i) { return i < m ? i : i + 1; };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec w = alg.bracket_of_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (w[k] != 0) ext->set_structure_constant(remap(i), remap(j), remap(k), w[k]);
      const std::uint32_t extra = rc.cochains().pair_value(z.phi, i, j);
      if (extra != 0) ext->set_structure_constant(remap(i), remap(j), c_idx, extra);
    }

  // [p]-images: e_i^[p] gains omega(e_i) c = frob_i c; c^[p] = 0.
  std::vector<Vec> images;
  images.reserve(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    Vec img(ext->dim(), 0);
    const Vec& old = op.image(i);
    for (std::size_t k = 0; k < n; ++k) img[remap(k)] = old[k];
    img[c_idx] = z.frob[i];
    images.push_back(std::move(img));
  }
  images.emplace_back(ext->dim(), 0);

  ExtensionResult result{POperator(std::move(ext), std::move(images)), z, std::move(name), false};
  result.split_ordinary = is_split_ordinary(alg, z.phi);
  return result;
}

bool is_split_ordinary(const LieSuperalgebra& alg, const Vec& phi) {
  CochainBasis cb(alg);
  if (!vec_is_zero(cb.d2(phi))) throw std::invalid_argument("is_split_ordinary: not a cocycle");
  Echelon span(cb.dim2(), alg.p());
  for (std::size_t k = 0; k < alg.dim(); ++k) span.insert(cb.d1_matrix().column(k));
  return span.contains(phi);
}

bool cocycles_equivalent(const POperator& op, const RestrictedCochain2& z1,
                         const RestrictedCochain2& z2) {
  RestrictedComplex rc(op);
  std::string violated;
  for (const auto* z : {&z1, &z2}) {
    const auto parity =
        coords_parity(rc.flatten(*z), [&](std::size_t t) { return rc.coord_parity(t); });
    if (!parity || *parity != 0)
      throw std::invalid_argument("cocycles_equivalent: even cocycles required");
    if (!rc.in_z2(*z, &violated))
      throw std::invalid_argument("cocycles_equivalent: not a restricted 2-cocycle: " + violated);
  }
  Echelon boundaries(rc.coord_dim(), op.algebra().p());
  for (const auto& b : rc.b2_basis()) boundaries.insert(rc.flatten(b));
  return boundaries.contains(vec_sub(rc.flatten(z1), rc.flatten(z2), op.algebra().p()));
}

std::vector<ExtensionResult> extension_catalog(const FamilyAlgebra& fam) {
  const auto& op = fam.op;
  const auto& alg = op.algebra();
  const std::size_t m_even = alg.even_dim();
  CochainBasis cb(alg);

  auto frob_cocycle = [&](std::size_t i) {
    RestrictedCochain2 z{Vec(cb.dim2(), 0), Vec(m_even, 0)};
    z.frob[i] = 1;
    return z;
  };
  auto wedge_cocycle = [&](std::size_t a, std::size_t b) {
    RestrictedCochain2 z{Vec(cb.dim2(), 0), Vec(m_even, 0)};
    z.phi[cb.pair_position(a, b)] = 1;
    return z;
  };
  auto idx = [](std::size_t one_based) { return one_based - 1; };

  std::vector<ExtensionResult> out;
  if (fam.kind == FamilyKind::HeisenbergEven) {
    const std::size_t m = fam.m, n = fam.n;
    for (std::size_t i = 1; i <= 2 * m + 1; ++i)
      out.push_back(central_extension(op, frob_cocycle(idx(i)), "H_" + std::to_string(i)));
    for (std::size_t s = 1; s <= 2 * m; ++s)
      for (std::size_t t = s + 1; t <= 2 * m; ++t)
        out.push_back(central_extension(op, wedge_cocycle(idx(s), idx(t)),
                                        "X_{" + std::to_string(s) + "," + std::to_string(t) + "}"));
    // All odd-odd wedges except y^{n,n}, whose class is dependent on the
    // others modulo the coboundary of the centre's dual.
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t l = k; l <= n; ++l) {
        if (k == n && l == n) continue;
        out.push_back(
            central_extension(op, wedge_cocycle(2 * m + 1 + idx(k), 2 * m + 1 + idx(l)),
                              "Y_{" + std::to_string(k) + "," + std::to_string(l) + "}"));
      }
  } else {
    const std::size_t n = fam.n;
    for (std::size_t i = 1; i <= n; ++i)
      out.push_back(central_extension(op, frob_cocycle(idx(i)), "H_" + std::to_string(i)));
    for (std::size_t s = 1; s <= n; ++s)
      for (std::size_t t = s + 1; t <= n; ++t)
        out.push_back(central_extension(op, wedge_cocycle(idx(s), idx(t)),
                                        "X_{" + std::to_string(s) + "," + std::to_string(t) + "}"));
    for (std::size_t s = 1; s <= n; ++s)
      for (std::size_t t = s; t <= n; ++t)
        out.push_back(central_extension(op, wedge_cocycle(n + idx(s), n + idx(t)),
                                        "Y_{" + std::to_string(s) + "," + std::to_string(t) + "}"));
  }
  return out;
}

}  // namespace rescoh
