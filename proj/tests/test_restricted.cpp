#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace rescoh;
using rescoh::testing::abelian;
using rescoh::testing::for_all_vectors;
using rescoh::testing::zero_p_operator;

namespace {

// Reverse-order peeling through the public API; must agree with p_power for
// any valid operator.
Vec p_power_reversed(const POperator& op, const Vec& g) {
  const auto& alg = op.algebra();
  const std::uint32_t p = alg.p();
  Vec result(alg.dim(), 0);
  Vec prefix(alg.dim(), 0);
  bool have = false;
  for (std::size_t ii = alg.even_dim(); ii-- > 0;) {
    if (g[ii] == 0) continue;
    Vec term(alg.dim(), 0);
    term[ii] = g[ii];
    if (have)
      for (const auto& s : s_coefficients(alg, prefix, term)) result = vec_add(result, s, p);
    vec_accumulate(result, op.image(ii), modp::pow(g[ii], p, p), p);
    prefix[ii] = g[ii];
    have = true;
  }
  return result;
}

Vec even_vector(const LieSuperalgebra& alg, const Vec& even_coords) {
  Vec v(alg.dim(), 0);
  for (std::size_t i = 0; i < even_coords.size(); ++i) v[i] = even_coords[i];
  return v;
}

}  // namespace

TEST_CASE("s coefficients vanish when brackets do") {
  const auto alg = abelian(3, 0, 5);
  const Vec g = {1, 2, 3}, h = {4, 0, 1};
  for (const auto& s : s_coefficients(*alg, g, h)) CHECK(vec_is_zero(s));

  const auto fam = heisenberg_even({2, 1, 7, Vec(5, 3)});
  const auto& halg = fam.op.algebra();
  const Vec ge = even_vector(halg, {1, 2, 0, 4, 5});
  const Vec he = even_vector(halg, {0, 1, 1, 0, 2});
  for (const auto& s : s_coefficients(halg, ge, he)) CHECK(vec_is_zero(s));
}

TEST_CASE("s coefficients of the solvable algebra over F_3") {
  // [e1, e2] = e2, g = e1, h = e2: (ad(t e1 + e2))^2(e1) = -t e2, so
  // s_1 = 0 and s_2 = (-1) * inv(2) e2 = e2.
  const auto alg = rescoh::testing::solvable2(3);
  const auto s = s_coefficients(*alg, alg->basis_vector(0), alg->basis_vector(1));
  REQUIRE(s.size() == 2);
  CHECK(vec_is_zero(s[0]));
  CHECK(s[1] == Vec{0, 1});

  CHECK_THROWS_AS(s_coefficients(*heisenberg_odd({1, 3}).op.algebra_ptr(),
                                 heisenberg_odd({1, 3}).op.algebra().basis_vector(1),
                                 heisenberg_odd({1, 3}).op.algebra().basis_vector(0)),
                  std::invalid_argument);
}

TEST_CASE("p-power evaluation matches the family closed form") {
  std::mt19937 gen(99);
  for (std::uint32_t p : {3u, 5u}) {
    for (std::size_t m : {1u, 2u}) {
      Vec lambda(2 * m + 1);
      for (auto& x : lambda) x = gen() % p;
      const auto fam = heisenberg_even({m, 1, p, lambda});
      const auto& alg = fam.op.algebra();

      CHECK(vec_is_zero(fam.op.p_power(Vec(alg.dim(), 0))));

      for (int round = 0; round < 10; ++round) {
        Vec coords(2 * m + 1);
        for (auto& x : coords) x = gen() % p;
        const Vec g = even_vector(alg, coords);
        // (sum a_i x_i)^[p] = (sum a_i^p lambda_i) x_{2m+1}
        std::uint32_t expect = 0;
        for (std::size_t i = 0; i < coords.size(); ++i)
          expect = modp::add(expect, modp::mul(modp::pow(coords[i], p, p), lambda[i], p), p);
        Vec expected(alg.dim(), 0);
        expected[2 * m] = expect;
        CHECK(fam.op.p_power(g) == expected);
      }
    }
  }

  const auto ba = heisenberg_odd({3, 5});
  const Vec g = even_vector(ba.op.algebra(), {1, 4, 2});
  CHECK(vec_is_zero(ba.op.p_power(g)));
  CHECK_THROWS_AS(ba.op.p_power(ba.op.algebra().basis_vector(3)), std::invalid_argument);
}

TEST_CASE("restrictedness validation") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    CHECK(heisenberg_even({1, 2, p, Vec{1, 0, 2}}).op.validate().ok());
    CHECK(heisenberg_odd({2, p}).op.validate().ok());
  }

  // Any nonzero [p] on ba_n must break the odd-module condition.
  {
    const auto ba = heisenberg_odd({2, 3});
    std::vector<Vec> images(2, Vec(ba.op.algebra().dim(), 0));
    images[0][0] = 1;  // x1^[p] = x1
    const POperator bad(ba.op.algebra_ptr(), images);
    const auto rep = bad.validate();
    CHECK_FALSE(rep.odd_module_ok);
    CHECK(rep.axiom3_ok);  // the even block is abelian, so ad is blind there
  }

  // On an abelian algebra every assignment of even images is restricted.
  {
    std::mt19937 gen(5);
    auto alg = abelian(3, 1, 5);
    std::vector<Vec> images;
    for (int i = 0; i < 3; ++i) {
      Vec img(alg->dim(), 0);
      for (std::size_t k = 0; k < 3; ++k) img[k] = gen() % 5;
      images.push_back(img);
    }
    CHECK(POperator(alg, images).validate().ok());
  }

  CHECK_THROWS_AS(POperator(abelian(1, 1, 3), {Vec{0, 1}}), std::invalid_argument);
}

TEST_CASE("Jacobson restrictability test") {
  const auto h = heisenberg_even({2, 1, 3, Vec(5, 0)});
  CHECK(jacobson_check(h.op.algebra()).restrictable);

  const auto ba = heisenberg_odd({2, 5});
  const auto rep = jacobson_check(ba.op.algebra());
  REQUIRE(rep.restrictable);
  for (const auto& w : rep.witnesses) CHECK(vec_is_zero(w));

  const auto ab = abelian(2, 0, 3);
  const auto arep = jacobson_check(*ab);
  REQUIRE(arep.restrictable);
  for (const auto& w : arep.witnesses) CHECK(vec_is_zero(w));

  // Witnesses really satisfy ad(z) = (ad e_i)^p.
  const auto s = rescoh::testing::solvable2(7);
  const auto srep = jacobson_check(*s);
  REQUIRE(srep.restrictable);
  for (std::size_t i = 0; i < s->even_dim(); ++i)
    CHECK(s->ad(srep.witnesses[i]) == s->ad(s->basis_vector(i)).pow(7));
}

TEST_CASE("p-power additivity with corrections") {
  // Exhaustive over F_3 on the even part of h_{1,1}.
  const auto fam = heisenberg_even({1, 1, 3, Vec{1, 2, 0}});
  const auto& alg = fam.op.algebra();
  for_all_vectors(3, 3, [&](const Vec& a) {
    for_all_vectors(3, 3, [&](const Vec& b) {
      const Vec g = even_vector(alg, a), h = even_vector(alg, b);
      Vec rhs = vec_add(fam.op.p_power(g), fam.op.p_power(h), 3);
      for (const auto& s : s_coefficients(alg, g, h)) rhs = vec_add(rhs, s, 3);
      CHECK(fam.op.p_power(vec_add(g, h, 3)) == rhs);
    });
  });

  // Random samples for the solvable algebra at p in {3, 5}.
  for (std::uint32_t p : {3u, 5u}) {
    const auto op = rescoh::testing::solvable2_p_operator(p);
    std::mt19937 gen(13 + p);
    for (int round = 0; round < 50; ++round) {
      const Vec g = {static_cast<std::uint32_t>(gen() % p), static_cast<std::uint32_t>(gen() % p)};
      const Vec h = {static_cast<std::uint32_t>(gen() % p), static_cast<std::uint32_t>(gen() % p)};
      Vec rhs = vec_add(op.p_power(g), op.p_power(h), p);
      for (const auto& s : s_coefficients(op.algebra(), g, h)) rhs = vec_add(rhs, s, p);
      CHECK(op.p_power(vec_add(g, h, p)) == rhs);
    }
  }
}

TEST_CASE("p-power is independent of the peeling order") {
  std::mt19937 gen(17);
  for (std::uint32_t p : {3u, 5u}) {
    const auto fam = heisenberg_even({2, 1, p, lambda_from_seed(2, p, 4)});
    const auto solv = rescoh::testing::solvable2_p_operator(p);
    for (int round = 0; round < 30; ++round) {
      Vec coords(5);
      for (auto& x : coords) x = gen() % p;
      const Vec g = even_vector(fam.op.algebra(), coords);
      CHECK(fam.op.p_power(g) == p_power_reversed(fam.op, g));

      const Vec gs = {static_cast<std::uint32_t>(gen() % p), static_cast<std::uint32_t>(gen() % p)};
      CHECK(solv.p_power(gs) == p_power_reversed(solv, gs));
    }
  }
}
