#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "corridor/dp.hpp"
#include "corridor/transfer_matrix.hpp"

using namespace corridor;

TEST_CASE("step matrix shape") {
  CountMatrix m = step_matrix(4);
  for (int r = 0; r <= 4; ++r)
    for (int c = 0; c <= 4; ++c) {
      CHECK(m(r, c) == (std::abs(r - c) == 1 ? 1 : 0));
      CHECK(m(r, c) == m(c, r));
    }
  CHECK(step_matrix(0).dim() == 1);
}

TEST_CASE("count vector examples") {
  auto v = tm_count_vector(4, 1, 12);
  CHECK(v[3] == 364);
  CHECK(v[1] == 3281);

  auto unit = tm_count_vector(5, 2, 0);
  for (int l = 0; l <= 5; ++l) CHECK(unit[static_cast<std::size_t>(l)] == (l == 2 ? 1 : 0));

  CHECK(tm_count_vector(5, 0, 16)[0] == 1341);
  CHECK(tm_count_vector(5, 0, 16)[4] == 2380);
}

TEST_CASE("window sums") {
  CHECK(tm_count_window(4, 2, 2, 1, 9) == 162);
  CHECK(tm_count_window(3, 0, 1, 2, 10) == 89);
  CHECK(tm_count_window(4, 3, 3, 0, 0) == 1);
  CHECK(tm_count_window(4, 3, 3, -1, 0) == 0);
}

TEST_CASE("matrix power agrees with the recurrence, spot powers included") {
  for (int h = 0; h <= 8; ++h) {
    for (long long n : {0LL, 1LL, 2LL, 5LL, 12LL, 20LL, 63LL, 64LL, 127LL}) {
      for (int i = 0; i <= h; ++i) {
        INFO("h=" << h << " i=" << i << " n=" << n);
        CHECK(tm_count_vector(h, i, n) == dp_count_vector(h, i, n));
      }
    }
  }
  CHECK(tm_count_vector(6, 3, 1000) == dp_count_vector(6, 3, 1000));
}

TEST_CASE("power splits multiplicatively") {
  std::mt19937 rng(20240917);
  for (int h = 0; h <= 6; ++h) {
    CountMatrix m = step_matrix(h);
    for (int trial = 0; trial < 20; ++trial) {
      auto a = static_cast<unsigned long long>(rng() % 33);
      auto b = static_cast<unsigned long long>(rng() % 32);
      CHECK(m.pow(a + b) == m.pow(a) * m.pow(b));
    }
  }
}

TEST_CASE("modular ladder matches the exact counts") {
  const std::uint64_t mod = 1'000'000'007ULL;
  for (int h = 0; h <= 6; ++h)
    for (long long n : {0LL, 7LL, 64LL, 200LL})
      for (int i = 0; i <= h; ++i) {
        auto exact = tm_count_vector(h, i, n);
        auto reduced = tm_count_vector_mod(h, i, n, mod);
        for (int l = 0; l <= h; ++l)
          CHECK(Count(reduced[static_cast<std::size_t>(l)]) ==
                exact[static_cast<std::size_t>(l)] % mod);
      }
  CHECK_THROWS_AS(tm_count_vector_mod(4, 0, 5, 0), std::domain_error);
}
