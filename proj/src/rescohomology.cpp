#include "rescoh/rescohomology.hpp"

namespace rescoh {

namespace {
std::string pretty_terms(const Vec& coords, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t t = 0; t < coords.size(); ++t) {
    if (coords[t] == 0) continue;
    if (!out.empty()) out += " + ";
    if (coords[t] != 1) out += std::to_string(coords[t]) + "*";
    out += names[t];
  }
  return out.empty() ? "0" : out;
}
}  // namespace

RestrictedComplex::RestrictedComplex(const POperator& op)
    : op_(&op), cb_(op.algebra()), conditions_(1, 1, op.algebra().p()) {
  const auto& alg = op.algebra();
  const std::uint32_t p = alg.p();
  const std::size_t n = alg.dim(), m = alg.even_dim();
  const std::size_t k2 = cb_.dim2(), k3 = cb_.dim3();

  // [e_a, e_j, ..., e_j] with p-1 copies of e_j, per (a, even j).
  nfold_.reserve(n * m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < m; ++j) {
      Vec acc = alg.basis_vector(a);
      const Vec ej = alg.basis_vector(j);
      for (std::uint32_t k = 0; k + 1 < p; ++k) acc = alg.bracket(acc, ej);
      nfold_.push_back(std::move(acc));
    }

  ad_pow_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) ad_pow_.push_back(alg.ad(alg.basis_vector(i)).pow(p - 1));

  // Z^2_res is the joint kernel of d^2 and of ind^2 evaluated on all basis
  // pairs (e_a, e_j) with j even. Neither condition involves the frob
  // coordinates, which therefore stay free.
  conditions_ = FpMat(k3 + n * m, k2 + m, p);
  const auto& d2m = cb_.d2_matrix();
  for (std::size_t r = 0; r < k3; ++r)
    for (std::size_t t = 0; t < k2; ++t) conditions_.at(r, t) = d2m.at(r, t);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec row = ind2_row(a, j);
      for (std::size_t t = 0; t < k2; ++t) conditions_.at(k3 + a * m + j, t) = row[t];
    }
}

Vec RestrictedComplex::ind2_row(std::size_t a, std::size_t j) const {
  const auto& alg = op_->algebra();
  const std::uint32_t p = alg.p();
  Vec row(cb_.dim2(), 0);
  const Vec& ppj = op_->image(j);
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    if (ppj[b] != 0)
      if (const auto pc = cb_.pair_coefficient(a, b))
        row[pc->first] = modp::add(row[pc->first], modp::mul(ppj[b], pc->second, p), p);
    const std::uint32_t nf = nfold_[a * alg.even_dim() + j][b];
    if (nf != 0)
      if (const auto pc = cb_.pair_coefficient(b, j))
        row[pc->first] = modp::sub(row[pc->first], modp::mul(nf, pc->second, p), p);
  }
  return row;
}

Vec RestrictedComplex::flatten(const RestrictedCochain2& z) const {
  if (z.phi.size() != cb_.dim2() || z.frob.size() != algebra().even_dim())
    throw std::invalid_argument("flatten: coordinate-length mismatch");
  Vec v = z.phi;
  v.insert(v.end(), z.frob.begin(), z.frob.end());
  return v;
}

RestrictedCochain2 RestrictedComplex::unflatten(const Vec& v) const {
  if (v.size() != coord_dim()) throw std::invalid_argument("unflatten: coordinate-length mismatch");
  RestrictedCochain2 z;
  z.phi.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(cb_.dim2()));
  z.frob.assign(v.begin() + static_cast<std::ptrdiff_t>(cb_.dim2()), v.end());
  return z;
}

int RestrictedComplex::coord_parity(std::size_t t) const {
  return t < cb_.dim2() ? cb_.pair_parity(t) : 0;
}

Fp RestrictedComplex::tilde_eval(const Vec& phi, const Vec& even_g) const {
  const auto& alg = op_->algebra();
  if (!alg.is_even_element(even_g)) throw std::invalid_argument("tilde_eval: argument must be even");
  const std::uint32_t p = alg.p();
  const std::size_t bits = p - 2;

  // Correction sum of the compatibility rule for omega(g + h): over all
  // {g,h}-sequences g_1..g_p with g_1 = g, g_2 = h, add
  // (1/#(g)) phi([g_1,...,g_{p-1}] ^ g_p).
  auto correction = [&](const Vec& g, const Vec& h) {
    std::uint32_t total = 0;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
      std::uint32_t count_g = 1;  // position 1 is g
      for (std::size_t b = 0; b < bits; ++b)
        if (((mask >> b) & 1) == 0) ++count_g;
      Vec cur = alg.bracket(g, h);
      for (std::size_t b = 0; b + 1 < bits; ++b) cur = alg.bracket(cur, ((mask >> b) & 1) ? h : g);
      const Vec& wedge = ((mask >> (bits - 1)) & 1) ? h : g;
      const std::uint32_t v = cb_.eval2(phi, cur, wedge).value();
      if (v != 0) total = modp::add(total, modp::mul(modp::inv(count_g, p), v, p), p);
    }
    return total;
  };

  std::uint32_t acc = 0;
  Vec prefix(alg.dim(), 0);
  bool have_prefix = false;
  for (std::size_t i = 0; i < alg.even_dim(); ++i) {
    if (even_g[i] == 0) continue;
    Vec term(alg.dim(), 0);
    term[i] = even_g[i];
    if (have_prefix) acc = modp::add(acc, correction(prefix, term), p);
    prefix[i] = even_g[i];
    have_prefix = true;
  }
  return Fp(acc, p);
}

Fp RestrictedComplex::omega_eval(const RestrictedCochain2& z, const Vec& even_g) const {
  const std::uint32_t p = algebra().p();
  std::uint32_t acc = tilde_eval(z.phi, even_g).value();
  for (std::size_t i = 0; i < z.frob.size(); ++i)
    acc = modp::add(acc, modp::mul(z.frob[i], modp::pow(even_g[i], p, p), p), p);
  return Fp(acc, p);
}

Vec RestrictedComplex::ind1(const Vec& psi) const {
  const auto& alg = op_->algebra();
  if (psi.size() != alg.dim()) throw std::invalid_argument("ind1: cochain length mismatch");
  const std::uint32_t p = alg.p();
  Vec out(alg.even_dim(), 0);
  for (std::size_t i = 0; i < alg.even_dim(); ++i) {
    const Vec& img = op_->image(i);
    std::uint32_t acc = 0;
    for (std::size_t k = 0; k < alg.dim(); ++k)
      if (img[k] != 0) acc = modp::add(acc, modp::mul(psi[k], img[k], p), p);
    out[i] = acc;
  }
  return out;
}

Fp RestrictedComplex::ind2(const Vec& phi, const Vec& g, const Vec& even_h) const {
  const auto& alg = op_->algebra();
  if (!alg.is_even_element(even_h)) throw std::invalid_argument("ind2: second argument must be even");
  const std::uint32_t p = alg.p();
  const std::uint32_t t1 = cb_.eval2(phi, g, op_->p_power(even_h)).value();
  Vec acc = g;
  for (std::uint32_t k = 0; k + 1 < p; ++k) acc = alg.bracket(acc, even_h);
  const std::uint32_t t2 = cb_.eval2(phi, acc, even_h).value();
  return Fp(modp::sub(t1, t2, p), p);
}

Fp RestrictedComplex::ind2_of_pair(const RestrictedCochain2& z, const Vec& g,
                                   const Vec& even_h) const {
  return ind2(z.phi, g, even_h);
}

RestrictedCochain2 RestrictedComplex::d1_res(const Vec& psi) const {
  // The tilde part of ind^1(psi) vanishes on basis vectors, so the frob
  // coordinates are exactly psi(e_i^[p]).
  return {cb_.d1(psi), ind1(psi)};
}

bool RestrictedComplex::in_z2(const RestrictedCochain2& z, std::string* violated) const {
  const auto& alg = op_->algebra();
  if (z.phi.size() != cb_.dim2() || z.frob.size() != alg.even_dim())
    throw std::invalid_argument("in_z2: coordinate-length mismatch");
  if (!vec_is_zero(cb_.d2(z.phi))) {
    if (violated) *violated = "d2(phi) != 0";
    return false;
  }
  for (std::size_t a = 0; a < alg.dim(); ++a)
    for (std::size_t j = 0; j < alg.even_dim(); ++j)
      if (!ind2(z.phi, alg.basis_vector(a), alg.basis_vector(j)).is_zero()) {
        if (violated)
          *violated = "ind2(phi) != 0 at (" + alg.basis().label(a) + "," + alg.basis().label(j) + ")";
        return false;
      }
  return true;
}

std::vector<RestrictedCochain2> RestrictedComplex::z2_basis() const {
  std::vector<RestrictedCochain2> out;
  for (const auto& v : kernel_basis(conditions_)) {
    if (!coords_parity(v, [&](std::size_t t) { return coord_parity(t); }))
      throw std::logic_error("z2_basis: non-homogeneous kernel vector");
    out.push_back(unflatten(v));
  }
  return out;
}

std::vector<RestrictedCochain2> RestrictedComplex::b2_basis() const {
  Echelon span(coord_dim(), algebra().p());
  for (std::size_t k = 0; k < algebra().dim(); ++k)
    span.insert(flatten(d1_res(algebra().basis_vector(k))));
  std::vector<RestrictedCochain2> out;
  for (const auto& v : span.rows()) out.push_back(unflatten(v));
  return out;
}

CohomologyReport RestrictedComplex::h1_res() const {
  const auto& alg = op_->algebra();
  const std::size_t n = alg.dim();

  // H^1_res is the dual of g / ([g,g] + <g_0^[p]>); its cocycles are the
  // functionals annihilating that subspace.
  std::vector<Vec> spans;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec b = alg.bracket_of_basis(i, j);
      if (!vec_is_zero(b)) spans.push_back(std::move(b));
    }
  for (std::size_t i = 0; i < alg.even_dim(); ++i)
    if (!vec_is_zero(op_->image(i))) spans.push_back(op_->image(i));

  CohomologyReport rep;
  rep.degree = 1;
  rep.restricted = true;
  std::vector<CohomologyClassRep> evens, odds;
  for (const auto& v : kernel_basis(FpMat::from_rows(spans, n, alg.p()))) {
    const auto par = coords_parity(v, [&](std::size_t k) { return alg.parity(k); });
    if (!par) throw std::logic_error("h1_res: non-homogeneous representative");
    auto& bucket = *par == 0 ? evens : odds;
    bucket.push_back({v, cb_.pretty_cochain1(v), *par});
  }
  rep.sdim = {evens.size(), odds.size()};
  rep.reps = std::move(evens);
  rep.reps.insert(rep.reps.end(), odds.begin(), odds.end());
  return rep;
}

std::string RestrictedComplex::frob_name(std::size_t i) const {
  return "frob:" + algebra().basis().label(i);
}

std::string RestrictedComplex::pretty(const RestrictedCochain2& z) const {
  std::vector<std::string> names;
  names.reserve(coord_dim());
  for (std::size_t t = 0; t < cb_.dim2(); ++t) names.push_back(cb_.pair_name(t));
  for (std::size_t i = 0; i < algebra().even_dim(); ++i) names.push_back(frob_name(i));
  return pretty_terms(flatten(z), names);
}

CohomologyReport RestrictedComplex::h2_res() const {
  const auto& alg = op_->algebra();
  const std::uint32_t p = alg.p();
  const std::size_t m = alg.even_dim();
  const std::size_t k2 = cb_.dim2();

  std::vector<Vec> zflat;
  for (const auto& z : z2_basis()) zflat.push_back(flatten(z));
  Echelon zspan(coord_dim(), p);
  for (const auto& v : zflat) zspan.insert(v);

  Echelon reduced(coord_dim(), p);
  for (const auto& b : b2_basis()) {
    const Vec v = flatten(b);
    if (!zspan.contains(v)) throw std::logic_error("h2_res: coboundary outside the cocycles");
    reduced.insert(v);
  }

  auto parity_fn = [&](std::size_t t) { return coord_parity(t); };
  std::vector<CohomologyClassRep> evens, odds;
  auto try_candidate = [&](Vec v, const std::string& name, int parity) {
    if (!zspan.contains(v)) return;
    if (vec_is_zero(reduced.reduce(v))) return;
    reduced.insert(v);
    (parity == 0 ? evens : odds).push_back({std::move(v), name, parity});
  };

  // Prefer the named single-term cocycles as coset representatives; fill
  // whatever is left from the echelon basis of Z^2_res.
  for (std::size_t t = 0; t < k2; ++t) {
    Vec v(coord_dim(), 0);
    v[t] = 1;
    try_candidate(std::move(v), cb_.pair_name(t), cb_.pair_parity(t));
  }
  for (std::size_t i = 0; i < m; ++i) {
    Vec v(coord_dim(), 0);
    v[k2 + i] = 1;
    try_candidate(std::move(v), frob_name(i), 0);
  }
  for (const auto& z : zflat) {
    Vec res = reduced.reduce(z);
    if (vec_is_zero(res)) continue;
    std::size_t lead = 0;
    while (res[lead] == 0) ++lead;
    res = vec_scaled(res, modp::inv(res[lead], p), p);
    const auto par = coords_parity(res, parity_fn);
    if (!par) throw std::logic_error("h2_res: non-homogeneous representative");
    reduced.insert(res);
    (par == 0 ? evens : odds).push_back({res, pretty(unflatten(res)), *par});
  }

  CohomologyReport rep;
  rep.degree = 2;
  rep.restricted = true;
  rep.sdim = {evens.size(), odds.size()};
  rep.reps = std::move(evens);
  rep.reps.insert(rep.reps.end(), odds.begin(), odds.end());
  return rep;
}

SixTermReport RestrictedComplex::sixterm_verify() const {
  const auto& alg = op_->algebra();
  const std::uint32_t p = alg.p();
  const std::size_t n = alg.dim(), m = alg.even_dim();
  const std::size_t k2 = cb_.dim2();

  const auto h1r = h1_res();
  const auto h1 = cb_.cohomology(1);
  Echelon z1(n, p);
  for (const auto& r : h1.reps) z1.insert(r.coords);
  const std::size_t h1dim = h1.reps.size();

  const auto h2r = h2_res();
  const auto h2 = cb_.cohomology(2);

  std::vector<Vec> b2r_flat;
  for (const auto& b : b2_basis()) b2r_flat.push_back(flatten(b));
  const auto b2o = cb_.b2_basis();

  SixTermReport rep;
  rep.dims = {h1r.reps.size(), h1dim, m, h2r.reps.size(), h2.reps.size(), m * h1dim};

  // iota1: inclusion H^1_res -> H^1 in the Z^1 representative basis.
  std::vector<Vec> i1cols;
  for (const auto& r : h1r.reps) {
    const auto coords = z1.coordinates(r.coords);
    if (!coords) throw InternalConsistencyError("sixterm: H1_res representative outside Z^1");
    i1cols.push_back(*coords);
  }
  const FpMat m_iota1 = FpMat::from_columns(i1cols, h1dim, p);

  // D: psi -> (psi(e_i^[p]))_i.
  std::vector<Vec> dcols;
  for (const auto& r : h1.reps) dcols.push_back(ind1(r.coords));
  const FpMat m_d = FpMat::from_columns(dcols, m, p);

  // Coordinates of a cocycle modulo coboundaries in a representative basis.
  auto class_coords = [&](const std::vector<CohomologyClassRep>& reps,
                          const std::vector<Vec>& boundaries, const Vec& v,
                          const char* what) -> Vec {
    std::vector<Vec> cols;
    for (const auto& r : reps) cols.push_back(r.coords);
    for (const auto& b : boundaries) cols.push_back(b);
    const auto sol = solve(FpMat::from_columns(cols, v.size(), p), v);
    if (!sol) throw InternalConsistencyError(std::string("sixterm: ") + what);
    return Vec(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(reps.size()));
  };

  // iota2: f -> class of (0, f).
  std::vector<Vec> i2cols;
  for (std::size_t i = 0; i < m; ++i) {
    Vec v(coord_dim(), 0);
    v[k2 + i] = 1;
    i2cols.push_back(class_coords(h2r.reps, b2r_flat, v, "(0, f) outside Z^2_res"));
  }
  const FpMat m_iota2 = FpMat::from_columns(i2cols, h2r.reps.size(), p);

  // pi: (phi, omega) -> class of phi.
  std::vector<Vec> picols;
  for (const auto& r : h2r.reps) {
    const Vec phi(r.coords.begin(), r.coords.begin() + static_cast<std::ptrdiff_t>(k2));
    picols.push_back(class_coords(h2.reps, b2o, phi, "pi image outside Z^2"));
  }
  const FpMat m_pi = FpMat::from_columns(picols, h2.reps.size(), p);

  // H: phi -> (g -> [h -> phi(g ^ (ad g)^{p-1} h) - phi(g^[p] ^ h)]),
  // evaluated on the even basis, landing in H^1 coordinates.
  auto h_column = [&](const Vec& phi, const char* what) -> Vec {
    Vec col(m * h1dim, 0);
    for (std::size_t i = 0; i < m; ++i) {
      Vec psi(n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        const Vec moved = ad_pow_[i].column(a);
        std::uint32_t acc = 0;
        for (std::size_t b = 0; b < n; ++b) {
          if (moved[b] != 0)
            acc = modp::add(acc, modp::mul(moved[b], cb_.pair_value(phi, i, b), p), p);
          const std::uint32_t img = op_->image(i)[b];
          if (img != 0) acc = modp::sub(acc, modp::mul(img, cb_.pair_value(phi, b, a), p), p);
        }
        psi[a] = acc;
      }
      if (!vec_is_zero(cb_.d1(psi)))
        throw InternalConsistencyError(std::string("sixterm: H value is not a 1-cocycle (") + what +
                                       ")");
      const auto coords = z1.coordinates(psi);
      if (!coords) throw InternalConsistencyError("sixterm: H value outside Z^1");
      for (std::size_t s = 0; s < h1dim; ++s) col[i * h1dim + s] = (*coords)[s];
    }
    return col;
  };
  // Representative independence: H must vanish on coboundaries.
  for (std::size_t k = 0; k < n; ++k) {
    const Vec cob = cb_.d1_matrix().column(k);
    if (!vec_is_zero(h_column(cob, "coboundary")))
      throw InternalConsistencyError("sixterm: H is not constant on cosets");
  }
  std::vector<Vec> hcols;
  for (const auto& r : h2.reps) hcols.push_back(h_column(r.coords, "representative"));
  const FpMat m_h = FpMat::from_columns(hcols, m * h1dim, p);

  rep.ranks = {rank(m_iota1), rank(m_d), rank(m_iota2), rank(m_pi), rank(m_h)};

  auto image_cols = [](const FpMat& mat) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < mat.cols(); ++j) cols.push_back(mat.column(j));
    return cols;
  };
  auto exact_at = [&](const FpMat& incoming, const FpMat& outgoing) {
    if (incoming.rows() != outgoing.cols())
      throw std::logic_error("sixterm: node dimension mismatch");
    return same_span(image_cols(incoming), kernel_basis(outgoing), incoming.rows(), p);
  };
  rep.exact = {exact_at(m_iota1, m_d), exact_at(m_d, m_iota2), exact_at(m_iota2, m_pi),
               exact_at(m_pi, m_h)};
  return rep;
}

bool RestrictedComplex::lemma_swap_holds(const Vec& psi) const {
  const auto& alg = op_->algebra();
  const RestrictedCochain2 with_arbitrary{cb_.d1(psi), Vec(alg.even_dim(), 1)};
  const RestrictedCochain2 with_ind1{cb_.d1(psi), ind1(psi)};
  for (std::size_t a = 0; a < alg.dim(); ++a)
    for (std::size_t j = 0; j < alg.even_dim(); ++j) {
      const Vec ea = alg.basis_vector(a), ej = alg.basis_vector(j);
      if (!(ind2_of_pair(with_arbitrary, ea, ej) == ind2_of_pair(with_ind1, ea, ej))) return false;
    }
  return true;
}

}  // namespace rescoh
