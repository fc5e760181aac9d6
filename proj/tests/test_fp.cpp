#include <doctest.h>

#include <random>
#include <stdexcept>

#include "rescoh/fp.hpp"

using namespace rescoh;

namespace {
FpMat random_matrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::mt19937& gen) {
  FpMat m(rows, cols, p);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = gen() % p;
  return m;
}
}  // namespace

TEST_CASE("scalar arithmetic over small primes") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t a = 1; a < p; ++a) {
      CHECK((Fp(a, p) * Fp(a, p).inv()).value() == 1);
      CHECK(Fp(a, p).pow(p).value() == a);  // Fermat
    }
    CHECK(Fp(-1, p).value() == p - 1);
    CHECK((Fp(p - 1, p) + Fp(1, p)).is_zero());
  }
  CHECK_THROWS_AS(Fp(1, 3) + Fp(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(Fp(0, 3).inv(), std::invalid_argument);
  CHECK_THROWS_AS(Fp(1, 4), std::invalid_argument);
}

TEST_CASE("rank on pinned examples") {
  CHECK(rank(FpMat::identity(3, 5)) == 3);
  CHECK(rank(FpMat(2, 3, 3)) == 0);
  FpMat m(2, 2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4 % 3;
  CHECK(rank(m) == 1);  // second row is 2x the first
}

TEST_CASE("mixed moduli are rejected") {
  const Fp entries[4] = {Fp(1, 3), Fp(2, 3), Fp(0, 3), Fp(1, 5)};
  CHECK_THROWS_AS(FpMat::from_scalars(2, 2, entries), std::invalid_argument);
  const Fp good[4] = {Fp(1, 3), Fp(2, 3), Fp(0, 3), Fp(1, 3)};
  CHECK(FpMat::from_scalars(2, 2, good).at(0, 1) == 2);
}

TEST_CASE("kernel basis on pinned examples") {
  CHECK(kernel_basis(FpMat::identity(3, 3)).empty());

  const auto full = kernel_basis(FpMat(2, 2, 3));
  REQUIRE(full.size() == 2);
  CHECK(full[0] == Vec{1, 0});
  CHECK(full[1] == Vec{0, 1});

  FpMat row(1, 2, 3);
  row.at(0, 0) = 1;
  row.at(0, 1) = 1;
  const auto k = kernel_basis(row);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{1, 2});  // normalized representative of v1 + v2 = 0
}

TEST_CASE("quotient basis on pinned examples") {
  CHECK(quotient_basis({}, 2, 3) == std::vector<Vec>{{1, 0}, {0, 1}});
  CHECK(quotient_basis({{1, 0}, {0, 1}}, 2, 3).empty());
  CHECK(quotient_basis({{1, 0, 0}}, 3, 5) == std::vector<Vec>{{0, 1, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(quotient_basis({{1, 0}}, 3, 3), std::invalid_argument);
}

TEST_CASE("randomized linear algebra properties") {
  std::mt19937 gen(20240811);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int round = 0; round < 40; ++round) {
      const std::size_t rows = 1 + gen() % 6, cols = 1 + gen() % 6;
      const FpMat m = random_matrix(rows, cols, p, gen);

      CHECK(rank(m) == rank(m.transposed()));

      const auto k = kernel_basis(m);
      CHECK(k.size() == cols - rank(m));
      for (const auto& v : k) CHECK(vec_is_zero(m.apply(v)));
      CHECK(rank(FpMat::from_rows(k, cols, p)) == k.size());

      // quotient_basis completes the row space to the ambient space
      std::vector<Vec> sub;
      for (std::size_t i = 0; i < rows; ++i) sub.push_back(m.row(i));
      auto q = quotient_basis(sub, cols, p);
      CHECK(q.size() == cols - rank(m));
      auto stacked = sub;
      stacked.insert(stacked.end(), q.begin(), q.end());
      CHECK(rank(FpMat::from_rows(stacked, cols, p)) == cols);

      // solve returns a solution whenever one was planted
      Vec x(cols);
      for (auto& e : x) e = gen() % p;
      const Vec rhs = m.apply(x);
      const auto sol = solve(m, rhs);
      REQUIRE(sol.has_value());
      CHECK(m.apply(*sol) == rhs);
    }
  }
}

TEST_CASE("echelon span is canonical and order-independent") {
  std::mt19937 gen(7);
  const std::uint32_t p = 5;
  std::vector<Vec> vs;
  for (int i = 0; i < 6; ++i) {
    Vec v(4);
    for (auto& e : v) e = gen() % p;
    vs.push_back(v);
  }
  Echelon fwd(4, p), rev(4, p);
  for (const auto& v : vs) fwd.insert(v);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) rev.insert(*it);
  CHECK(fwd.rows() == rev.rows());

  for (const auto& v : vs) {
    CHECK(fwd.contains(v));
    const auto coords = fwd.coordinates(v);
    REQUIRE(coords.has_value());
    Vec rebuilt(4, 0);
    for (std::size_t k = 0; k < coords->size(); ++k)
      vec_accumulate(rebuilt, fwd.rows()[k], (*coords)[k], p);
    CHECK(rebuilt == v);
  }
}
