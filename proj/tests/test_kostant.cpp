#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <thread>

#include "lrk/kostant.hpp"
#include "test_support.hpp"

using lrk::kostant_partition;
using lrk::weight_vector;

TEST_CASE("kostant partition function examples") {
  CHECK(kostant_partition({0, 0, 0}) == 1);
  CHECK(kostant_partition({1, 0, -1}) == 2);
  CHECK(kostant_partition({2, 0, -2}) == 3);
  for (std::int64_t k = 0; k <= 10; ++k)
    CHECK(kostant_partition({k, -k}) == 1);
  CHECK(kostant_partition({}) == 1);
}

TEST_CASE("zero when coordinates do not sum to zero") {
  CHECK(kostant_partition({1, 0, 0}) == 0);
  CHECK(kostant_partition({1, 1, -1}) == 0);
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    weight_vector v(3);
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % 9) - 4;
    if (lrk::vec_sum(v) != 0) CHECK(kostant_partition(v) == 0);
  }
}

TEST_CASE("zero when a prefix sum is negative") {
  CHECK(kostant_partition({-1, 1}) == 0);
  CHECK(kostant_partition({1, -2, 1}) == 0);
  CHECK(kostant_partition({-2, 1, 1}) == 0);
}

TEST_CASE("matches the exhaustive peeling oracle") {
  for (std::size_t n = 1; n <= 4; ++n) {
    weight_vector v(n, -4);
    while (true) {
      if (lrk::vec_sum(v) == 0)
        CHECK(kostant_partition(v) == testsupport::kostant_oracle(v));
      std::size_t i = 0;
      while (i < n && v[i] == 4) v[i++] = -4;
      if (i == n) break;
      ++v[i];
    }
  }
}

TEST_CASE("linear family P(k,0,-k) = k+1") {
  for (std::int64_t k = 0; k <= 10; ++k) {
    weight_vector v{k, 0, -k};
    CHECK(kostant_partition(v) == k + 1);
    CHECK(testsupport::kostant_oracle(v) == k + 1);
  }
}

TEST_CASE("shared cache gives identical results and is reusable") {
  lrk::kostant_cache cache;
  for (std::int64_t k = 0; k <= 6; ++k) {
    weight_vector v{k, 1, -1 - k};
    CHECK(kostant_partition(v, cache) == kostant_partition(v));
  }
  CHECK(cache.size() > 0);
  // rerun against the warm cache
  for (std::int64_t k = 0; k <= 6; ++k) {
    weight_vector v{k, 1, -1 - k};
    CHECK(kostant_partition(v, cache) == kostant_partition(v));
  }
}

TEST_CASE("shared cache is safe under concurrent use") {
  std::vector<weight_vector> inputs;
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b)
      for (std::int64_t c = -3; c <= 3; ++c)
        if (a + b + c + (-a - b - c) == 0) inputs.push_back({a, b, c, -a - b - c});

  std::vector<std::int64_t> expected;
  expected.reserve(inputs.size());
  for (const auto& v : inputs) expected.push_back(kostant_partition(v));

  lrk::kostant_cache cache;
  std::vector<std::vector<std::int64_t>> got(4, std::vector<std::int64_t>(inputs.size()));
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = 0; i < inputs.size(); ++i)
        got[t][i] = kostant_partition(inputs[i], cache);
    });
  }
  for (auto& w : workers) w.join();
  for (int t = 0; t < 4; ++t) CHECK(got[t] == expected);
}
