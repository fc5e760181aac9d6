#include "rescoh/cochain.hpp"

#include <limits>
#include <stdexcept>

namespace rescoh {

namespace {
constexpr std::size_t kNoPos = std::numeric_limits<std::size_t>::max();
}

CochainBasis::CochainBasis(const LieSuperalgebra& alg)
    : alg_(&alg), d1_(1, 1, alg.p()), d2_(1, 1, alg.p()) {
  const std::size_t m = alg.even_dim();
  const std::size_t n = alg.dim();
  const std::uint32_t p = alg.p();

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs_.push_back({i, j});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = m; j < n; ++j) pairs_.push_back({i, j});
  for (std::size_t i = m; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) pairs_.push_back({i, j});

  pair_pos_.assign(n * n, kNoPos);
  for (std::size_t t = 0; t < pairs_.size(); ++t)
    pair_pos_[pairs_[t].i * n + pairs_[t].j] = t;

  // Repeated indices are allowed only at odd positions: for an odd basis
  // vector y the powers y^2, y^3 do not vanish in the super exterior algebra.
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v) {
      if (u == v && alg.parity(u) == 0) continue;
      for (std::size_t w = v; w < n; ++w) {
        if (v == w && alg.parity(v) == 0) continue;
        triples_.push_back({u, v, w});
      }
    }

  // d^1 as a matrix C^1 -> C^2: row t = pair (i,j), column k.
  d1_ = FpMat(pairs_.size(), n, p);
  for (std::size_t t = 0; t < pairs_.size(); ++t)
    for (std::size_t k = 0; k < n; ++k) d1_.at(t, k) = alg.c(pairs_[t].i, pairs_[t].j, k);

  // d^2 as a matrix C^2 -> C^3, one column per basis 2-cochain.
  d2_ = FpMat(triples_.size(), pairs_.size(), p);
  for (std::size_t t = 0; t < pairs_.size(); ++t) {
    Vec unit(pairs_.size(), 0);
    unit[t] = 1;
    const Vec col = d2(unit);
    for (std::size_t r = 0; r < triples_.size(); ++r) d2_.at(r, t) = col[r];
  }
}

std::size_t CochainBasis::pair_position(std::size_t i, std::size_t j) const {
  const std::size_t n = alg_->dim();
  if (i >= n || j >= n || pair_pos_[i * n + j] == kNoPos)
    throw std::invalid_argument("pair_position: not a canonical basis pair");
  return pair_pos_[i * n + j];
}

int CochainBasis::pair_parity(std::size_t t) const {
  const auto& pr = pairs_.at(t);
  return (alg_->parity(pr.i) + alg_->parity(pr.j)) % 2;
}

int CochainBasis::triple_parity(std::size_t t) const {
  const auto& tr = triples_.at(t);
  return (alg_->parity(tr.u) + alg_->parity(tr.v) + alg_->parity(tr.w)) % 2;
}

std::optional<std::pair<std::size_t, std::uint32_t>> CochainBasis::pair_coefficient(
    std::size_t a, std::size_t b) const {
  const std::size_t n = alg_->dim();
  const std::uint32_t p = alg_->p();
  if (a == b) {
    if (alg_->parity(a) == 0) return std::nullopt;  // even diagonal vanishes
    return std::make_pair(pair_pos_[a * n + a], 1u);
  }
  if (a < b) return std::make_pair(pair_pos_[a * n + b], 1u);
  // Swapped pair: phi(e_a, e_b) = -(-1)^{|a||b|} phi(e_b, e_a).
  const bool both_odd = alg_->parity(a) == 1 && alg_->parity(b) == 1;
  return std::make_pair(pair_pos_[b * n + a], both_odd ? 1u : p - 1);
}

std::uint32_t CochainBasis::pair_value(const Vec& phi, std::size_t a, std::size_t b) const {
  const auto pc = pair_coefficient(a, b);
  if (!pc) return 0;
  return modp::mul(phi.at(pc->first), pc->second, alg_->p());
}

Fp CochainBasis::eval2(const Vec& phi, const Vec& g, const Vec& h) const {
  const std::uint32_t p = alg_->p();
  if (phi.size() != pairs_.size()) throw std::invalid_argument("eval2: cochain length mismatch");
  if (g.size() != alg_->dim() || h.size() != alg_->dim())
    throw std::invalid_argument("eval2: coordinate-length mismatch");
  std::uint32_t acc = 0;
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (g[a] == 0) continue;
    for (std::size_t b = 0; b < h.size(); ++b) {
      if (h[b] == 0) continue;
      const std::uint32_t v = pair_value(phi, a, b);
      if (v != 0) acc = modp::add(acc, modp::mul(modp::mul(g[a], h[b], p), v, p), p);
    }
  }
  return Fp(acc, p);
}

Vec CochainBasis::d1(const Vec& psi) const {
  if (psi.size() != alg_->dim()) throw std::invalid_argument("d1: cochain length mismatch");
  return d1_.apply(psi);
}

Vec CochainBasis::d2(const Vec& phi) const {
  const std::uint32_t p = alg_->p();
  if (phi.size() != pairs_.size()) throw std::invalid_argument("d2: cochain length mismatch");
  Vec out(triples_.size(), 0);
  for (std::size_t t = 0; t < triples_.size(); ++t) {
    const auto [u, v, w] = triples_[t];
    const int pu = alg_->parity(u), pv = alg_->parity(v), pw = alg_->parity(w);
    // phi([e_u,e_v] ^ e_w) - (-1)^{|w||v|} phi([e_u,e_w] ^ e_v)
    //   + (-1)^{|u|(|v|+|w|)} phi([e_v,e_w] ^ e_u)
    std::uint32_t acc = 0;
    auto term = [&](std::size_t x, std::size_t y, std::size_t wedge) {
      std::uint32_t s = 0;
      for (std::size_t k = 0; k < alg_->dim(); ++k) {
        const std::uint32_t ck = alg_->c(x, y, k);
        if (ck != 0) s = modp::add(s, modp::mul(ck, pair_value(phi, k, wedge), p), p);
      }
      return s;
    };
    acc = term(u, v, w);
    const std::uint32_t t2 = term(u, w, v);
    acc = (pw * pv) % 2 == 1 ? modp::add(acc, t2, p) : modp::sub(acc, t2, p);
    const std::uint32_t t3 = term(v, w, u);
    acc = (pu * (pv + pw)) % 2 == 1 ? modp::sub(acc, t3, p) : modp::add(acc, t3, p);
    out[t] = acc;
  }
  return out;
}

std::string CochainBasis::pair_name(std::size_t t) const {
  const auto& pr = pairs_.at(t);
  return alg_->basis().label(pr.i) + "^" + alg_->basis().label(pr.j);
}

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

std::string CochainBasis::pretty_cochain1(const Vec& psi) const {
  std::vector<std::string> names;
  names.reserve(alg_->dim());
  for (std::size_t k = 0; k < alg_->dim(); ++k) names.push_back(alg_->basis().label(k));
  return pretty_terms(psi, names);
}

std::string CochainBasis::pretty_cochain2(const Vec& phi) const {
  std::vector<std::string> names;
  names.reserve(pairs_.size());
  for (std::size_t t = 0; t < pairs_.size(); ++t) names.push_back(pair_name(t));
  return pretty_terms(phi, names);
}

std::vector<Vec> CochainBasis::z2_basis() const { return kernel_basis(d2_); }

std::vector<Vec> CochainBasis::b2_basis() const {
  Echelon span(pairs_.size(), alg_->p());
  for (std::size_t k = 0; k < alg_->dim(); ++k) span.insert(d1_.column(k));
  return span.rows();
}

CohomologyReport CochainBasis::cohomology(int degree) const {
  const std::uint32_t p = alg_->p();
  CohomologyReport rep;
  rep.degree = degree;
  rep.restricted = false;

  auto classify = [&](const std::vector<Vec>& raw_reps, auto parity_fn, auto name_fn) {
    std::vector<CohomologyClassRep> evens, odds;
    for (const auto& v : raw_reps) {
      const auto par = coords_parity(v, parity_fn);
      if (!par) throw std::logic_error("cohomology: non-homogeneous representative");
      auto& bucket = *par == 0 ? evens : odds;
      bucket.push_back({v, name_fn(v), *par});
    }
    rep.sdim = {evens.size(), odds.size()};
    rep.reps = std::move(evens);
    rep.reps.insert(rep.reps.end(), odds.begin(), odds.end());
  };

  if (degree == 1) {
    // d^0 = 0, so H^1 = ker d^1.
    classify(kernel_basis(d1_), [&](std::size_t k) { return alg_->parity(k); },
             [&](const Vec& v) { return pretty_cochain1(v); });
    return rep;
  }
  if (degree != 2) throw std::invalid_argument("cohomology: degree must be 1 or 2");

  const auto z = z2_basis();
  Echelon zspan(pairs_.size(), p);
  for (const auto& v : z) zspan.insert(v);
  Echelon reduced(pairs_.size(), p);
  for (const auto& b : b2_basis()) {
    if (!zspan.contains(b)) throw std::logic_error("cohomology: coboundary outside the cocycles");
    reduced.insert(b);
  }

  std::vector<Vec> reps;
  for (const auto& v : z) {
    Vec res = reduced.reduce(v);
    if (vec_is_zero(res)) continue;
    std::size_t lead = 0;
    while (res[lead] == 0) ++lead;
    res = vec_scaled(res, modp::inv(res[lead], p), p);
    reps.push_back(res);
    reduced.insert(res);
  }
  classify(reps, [&](std::size_t t) { return pair_parity(t); },
           [&](const Vec& v) { return pretty_cochain2(v); });
  return rep;
}

}  // namespace rescoh
