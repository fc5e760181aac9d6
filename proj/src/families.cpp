#include "rescoh/families.hpp"

#include <random>
#include <stdexcept>

namespace rescoh {

namespace {
void check_prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("family: p must be an odd prime > 2");
}

std::vector<std::string> numbered(const std::string& stem, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}
}  // namespace

FamilyAlgebra heisenberg_even(const HeisenbergEvenParams& params) {
  const auto [m, n, p, lambda] = params;
  if (m < 1 || n < 1) throw std::invalid_argument("heisenberg_even: m, n >= 1 required");
  check_prime(p);
  if (lambda.size() != 2 * m + 1)
    throw std::invalid_argument("heisenberg_even: lambda must have 2m+1 entries");

  SuperBasis basis{numbered("x", 2 * m + 1), numbered("y", n)};
  auto alg = std::make_shared<LieSuperalgebra>(std::move(basis), p);
  const std::size_t centre = 2 * m;  // x_{2m+1}
  for (std::size_t i = 0; i < m; ++i) {
    alg->set_structure_constant(i, m + i, centre, 1);
    alg->set_structure_constant(m + i, i, centre, p - 1);
  }
  for (std::size_t j = 0; j < n; ++j)
    alg->set_structure_constant(2 * m + 1 + j, 2 * m + 1 + j, centre, 1);

  std::vector<Vec> images;
  images.reserve(2 * m + 1);
  for (std::size_t i = 0; i < 2 * m + 1; ++i) {
    Vec img(alg->dim(), 0);
    img[centre] = lambda[i] % p;
    images.push_back(std::move(img));
  }
  return {FamilyKind::HeisenbergEven, m, n, POperator(std::move(alg), std::move(images))};
}

FamilyAlgebra heisenberg_odd(const HeisenbergOddParams& params) {
  const auto [n, p] = params;
  if (n < 1) throw std::invalid_argument("heisenberg_odd: n >= 1 required");
  check_prime(p);

  SuperBasis basis{numbered("x", n), numbered("y", n + 1)};
  auto alg = std::make_shared<LieSuperalgebra>(std::move(basis), p);
  const std::size_t centre = 2 * n;  // y_{n+1}
  for (std::size_t i = 0; i < n; ++i) {
    alg->set_structure_constant(i, n + i, centre, 1);
    alg->set_structure_constant(n + i, i, centre, p - 1);
  }
  std::vector<Vec> images(n, Vec(alg->dim(), 0));
  return {FamilyKind::HeisenbergOdd, 0, n, POperator(std::move(alg), std::move(images))};
}

SdimPair expected_sdim_h1_even_family(std::size_t m, std::size_t n) { return {2 * m, n}; }

SdimPair expected_sdim_h2_even_family(std::size_t m, std::size_t n) {
  return {2 * m * m - m + (n * n + n) / 2 - 1, 2 * m * n};
}

SdimPair expected_sdim_h2res_even_family(std::size_t m, std::size_t n) {
  return {2 * m * m + m + (n * n + n) / 2, 2 * m * n};
}

SdimPair expected_sdim_h1_odd_family(std::size_t n) { return {n, n}; }

SdimPair expected_sdim_h2_odd_family(std::size_t n) {
  return {n * n, n * n - 1 + (n == 1 ? 1 : 0)};
}

SdimPair expected_sdim_h2res_odd_family(std::size_t n) {
  return {n * n + n, n * n - 1 + (n == 1 ? 1 : 0)};
}

Vec lambda_from_seed(std::size_t m, std::uint32_t p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Vec lambda(2 * m + 1);
  for (auto& x : lambda) x = static_cast<std::uint32_t>(gen() % p);
  return lambda;
}

}  // namespace rescoh
