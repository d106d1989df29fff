#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lrk/symfunc.hpp"
#include "test_support.hpp"

using lrk::partition;
using lrk::sparse_polynomial;
using lrk::weight_vector;

namespace {

sparse_polynomial random_poly(std::mt19937& rng, std::size_t nvars, int nterms) {
  sparse_polynomial p(nvars);
  for (int t = 0; t < nterms; ++t) {
    weight_vector e(nvars);
    for (auto& x : e) x = rng() % 4;
    p.add_term(e, static_cast<std::int64_t>(rng() % 9) - 4);
  }
  return p;
}

}  // namespace

TEST_CASE("schur polynomial examples") {
  sparse_polynomial s11 = lrk::schur_polynomial(partition{1, 1}, 2);
  REQUIRE(s11.terms().size() == 1);
  CHECK(s11.coeff({1, 1}) == 1);

  sparse_polynomial s2 = lrk::schur_polynomial(partition{2}, 2);
  CHECK(s2.terms().size() == 3);
  CHECK(s2.coeff({2, 0}) == 1);
  CHECK(s2.coeff({1, 1}) == 1);
  CHECK(s2.coeff({0, 2}) == 1);

  sparse_polynomial s1 = lrk::schur_polynomial(partition{1}, 4);
  CHECK(s1.terms().size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    weight_vector e(4, 0);
    e[i] = 1;
    CHECK(s1.coeff(e) == 1);
  }

  CHECK(lrk::schur_polynomial(partition{}, 2) == sparse_polynomial::constant(2, 1));
  CHECK(lrk::schur_polynomial(partition{1, 1, 1}, 3).terms().size() == 1);
  CHECK_THROWS_AS(lrk::schur_polynomial(partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("complete homogeneous polynomials") {
  CHECK(lrk::complete_homogeneous(0, 3) == sparse_polynomial::constant(3, 1));
  CHECK(lrk::complete_homogeneous(1, 3) == lrk::schur_polynomial(partition{1}, 3));
  CHECK(lrk::complete_homogeneous(2, 2) == lrk::schur_polynomial(partition{2}, 2));
  CHECK(lrk::complete_homogeneous(3, 2).terms().size() == 4);
  CHECK_THROWS_AS(lrk::complete_homogeneous(-1, 2), std::invalid_argument);
}

TEST_CASE("multiplication") {
  std::mt19937 rng(20240812);
  sparse_polynomial one = sparse_polynomial::constant(3, 1);
  for (int t = 0; t < 20; ++t) {
    sparse_polynomial p = random_poly(rng, 3, 6);
    CHECK(multiply(p, one) == p);
  }

  sparse_polynomial h1 = lrk::complete_homogeneous(1, 2);
  sparse_polynomial sq = multiply(h1, h1);
  CHECK(sq.coeff({2, 0}) == 1);
  CHECK(sq.coeff({1, 1}) == 2);
  CHECK(sq.coeff({0, 2}) == 1);

  sparse_polynomial s1 = lrk::schur_polynomial(partition{1}, 2);
  sparse_polynomial expected =
      lrk::schur_polynomial(partition{2}, 2) + lrk::schur_polynomial(partition{1, 1}, 2);
  CHECK(multiply(s1, s1) == expected);

  CHECK_THROWS_AS(multiply(sparse_polynomial(2), sparse_polynomial(3)),
                  std::invalid_argument);
}

TEST_CASE("multiply is commutative and associative on random inputs") {
  std::mt19937 rng(99);
  for (int t = 0; t < 25; ++t) {
    sparse_polynomial a = random_poly(rng, 3, 5);
    sparse_polynomial b = random_poly(rng, 3, 5);
    sparse_polynomial c = random_poly(rng, 3, 5);
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("schur polynomials are symmetric") {
  for (std::int64_t m = 0; m <= 8; ++m)
    for (const partition& lambda : lrk::enumerate_partitions(m, 4))
      CHECK(lrk::schur_polynomial(lambda, 4).is_symmetric());

  sparse_polynomial lopsided(2);
  lopsided.add_term({1, 0}, 1);
  CHECK_FALSE(lopsided.is_symmetric());
}

TEST_CASE("bialternant identity: det(x^(lambda+rho)) = S_lambda * det(x^rho)") {
  for (std::size_t n = 1; n <= 3; ++n) {
    weight_vector rho = lrk::staircase(n);
    sparse_polynomial vandermonde = lrk::alternant(rho, n);
    for (std::int64_t m = 0; m <= 6; ++m) {
      for (const partition& lambda : lrk::enumerate_partitions(m, n)) {
        sparse_polynomial lhs = lrk::alternant(lrk::vec_add(lambda.padded(n), rho), n);
        sparse_polynomial rhs = multiply(lrk::schur_polynomial(lambda, n), vandermonde);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("schur_decompose round trips and classical identities") {
  for (const partition& lambda : {partition{3, 1}, partition{2, 2}, partition{4}}) {
    lrk::schur_expansion e = lrk::schur_decompose(lrk::schur_polynomial(lambda, 3));
    REQUIRE(e.terms().size() == 1);
    CHECK(e.coeff(lambda) == 1);
  }

  // h_1^2 = s_2 + s_11
  sparse_polynomial h1 = lrk::complete_homogeneous(1, 2);
  lrk::schur_expansion h1sq = lrk::schur_decompose(multiply(h1, h1));
  REQUIRE(h1sq.terms().size() == 2);
  CHECK(h1sq.coeff(partition{2}) == 1);
  CHECK(h1sq.coeff(partition{1, 1}) == 1);

  sparse_polynomial prod = multiply(lrk::schur_polynomial(partition{5, 3, 2}, 3),
                                    lrk::schur_polynomial(partition{4, 3, 3}, 3));
  CHECK(lrk::schur_decompose(prod).coeff(partition{9, 6, 5}) == 1);

  CHECK(lrk::schur_decompose(sparse_polynomial(3)).empty());

  sparse_polynomial not_symmetric(2);
  not_symmetric.add_term({2, 0}, 1);
  CHECK_THROWS_AS(lrk::schur_decompose(not_symmetric), std::invalid_argument);

  sparse_polynomial not_homogeneous = sparse_polynomial::constant(2, 1);
  not_homogeneous.add_term({1, 1}, 1);
  CHECK_THROWS_AS(lrk::schur_decompose(not_homogeneous), std::invalid_argument);
}

TEST_CASE("complete homogeneous products decompose with Kostka coefficients") {
  const std::size_t n = 3;
  for (std::int64_t m = 0; m <= 6; ++m) {
    for (const partition& mu : lrk::enumerate_partitions(m, n)) {
      sparse_polynomial h = sparse_polynomial::constant(n, 1);
      for (std::size_t i = 0; i < mu.num_parts(); ++i)
        h = multiply(h, lrk::complete_homogeneous(mu.part(i), n));
      lrk::schur_expansion e = lrk::schur_decompose(h);
      for (const partition& lambda : lrk::enumerate_partitions(m, n))
        CHECK(e.coeff(lambda) == lrk::kostka_ssyt(lambda, mu));
    }
  }
}

TEST_CASE("schur polynomial at all ones counts bounded SSYT") {
  for (std::int64_t m = 0; m <= 6; ++m)
    for (const partition& lambda : lrk::enumerate_partitions(m, 3))
      CHECK(lrk::schur_polynomial(lambda, 3).evaluate_ones() ==
            lrk::ssyt_count_bounded(lambda, 3));
}

TEST_CASE("cauchy identity, truncated") {
  CHECK(lrk::cauchy_truncated_check(1, 4));
  CHECK(lrk::cauchy_truncated_check(2, 4));
  CHECK(lrk::cauchy_truncated_check(2, 0));
  CHECK_THROWS_AS(lrk::cauchy_truncated_check(4, 2), lrk::bounds_error);
  CHECK_THROWS_AS(lrk::cauchy_truncated_check(2, 9), lrk::bounds_error);
}

TEST_CASE("polynomial term bookkeeping") {
  sparse_polynomial p(2);
  p.add_term({1, 0}, 3);
  p.add_term({1, 0}, -3);
  CHECK(p.is_zero());  // cancelled terms are pruned

  p.add_term({0, 1}, 2);
  CHECK(p.homogeneous_degree() == 1);
  p.add_term({1, 1}, 1);
  CHECK_FALSE(p.homogeneous_degree().has_value());
  CHECK(p.total_degree() == 2);
  CHECK_THROWS_AS(p.add_term({1, 2, 3}, 1), std::invalid_argument);
}
