#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "corridor/dp.hpp"
#include "corridor/enumerate.hpp"
#include "corridor/path.hpp"

using namespace corridor;

TEST_CASE("path text round-trip") {
  Path p = Path::parse("1:DUDUDUUUUUDU");
  CHECK(p.base == 1);
  CHECK(p.length() == 12);
  CHECK(p.end() == 5);
  CHECK(p.str() == "1:DUDUDUUUUUDU");
  CHECK(Path::parse("3:").steps.empty());
  CHECK_THROWS_AS(Path::parse("1DUDU"), std::invalid_argument);
  CHECK_THROWS_AS(Path::parse("x:UD"), std::invalid_argument);
  CHECK_THROWS_AS(Path::parse("1:UXD"), std::invalid_argument);
}

TEST_CASE("path validity") {
  CHECK(Path::parse("1:UUDUUDDDDUUU").valid_in(4));
  CHECK_FALSE(Path::parse("1:UUDUUDDDDUUU").valid_in(3));
  CHECK_FALSE(Path::parse("0:D").valid_in(4));
}

TEST_CASE("validate_instance") {
  auto inst = [](int h, long long n, int i, int k, int j) {
    return Instance{Corridor{h}, n, i, Window{k, j}};
  };
  auto v = validate_instance(inst(4, 9, 2, 2, 1));
  CHECK(v.counting_valid);
  CHECK(v.theorem_valid);

  // i = 2 exceeds min(k+1, h-k) = 1 for k = 3
  v = validate_instance(inst(4, 9, 2, 3, 1));
  CHECK(v.counting_valid);
  CHECK_FALSE(v.theorem_valid);

  v = validate_instance(inst(0, 0, 0, 0, 0));
  CHECK(v.theorem_valid);

  // degenerate centered-below-the-floor case
  CHECK(theorem_valid(4, -1, 0, 0));
  CHECK_FALSE(theorem_valid(4, -1, 1, 0));
  CHECK_FALSE(theorem_valid(4, -2, 0, 0));
  CHECK_FALSE(theorem_valid(4, 5, 0, 0));

  CHECK_FALSE(validate_instance(inst(4, -1, 0, 0, 0)).counting_valid);
  CHECK_FALSE(validate_instance(inst(4, 2, 5, 0, 0)).counting_valid);
  CHECK(validate_instance(inst(4, 2, 0, 0, -1)).counting_valid);
}

TEST_CASE("feasible_endpoints") {
  CHECK(feasible_endpoints(4, 12, 1, 2, 1) == std::vector<int>{1, 3});
  CHECK(feasible_endpoints(4, 1, 0, 0, 0) == std::vector<int>{1});
  CHECK(feasible_endpoints(5, 6, 0, 2, 3) == std::vector<int>{0, 2, 4});
  CHECK(feasible_endpoints(4, 3, 0, 2, -1).empty());
  CHECK(feasible_endpoints(2, 4, 0, 8, 1).empty());  // window beyond the corridor
}

TEST_CASE("dp endpoint examples") {
  CHECK(dp_count_endpoint(4, 1, 3, 12) == 364);
  CHECK(dp_count_endpoint(4, 2, 2, 16) == 4374);
  CHECK(dp_count_endpoint(4, 0, 1, 2) == 0);  // parity mismatch
  CHECK(dp_count_endpoint(4, 5, 0, 2) == 0);  // start outside the corridor
  CHECK(dp_count_endpoint(4, 0, 0, 0) == 1);
  CHECK(dp_count_endpoint(4, 0, 2, 0) == 0);
}

TEST_CASE("dp window examples") {
  CHECK(dp_count_window(4, 2, 2, 1, 9) == 162);
  CHECK(dp_count_window(4, 1, 3, 2, 9) == 121);
  CHECK(dp_count_window(4, 2, 3, 1, 9) == 81);
  CHECK(dp_count_window(3, 0, 1, 2, 10) == 89);
  CHECK(dp_count_window(4, 2, 2, -1, 9) == 0);
}

TEST_CASE("zero-step window boundary condition") {
  for (int h = 0; h <= 4; ++h)
    for (int i = 0; i <= h; ++i)
      for (int k = -1; k <= h + 1; ++k)
        for (int j = -1; j <= h; ++j) {
          Count want = (j >= 0 && k - j <= i && i <= k + j + 1) ? 1 : 0;
          INFO("h=" << h << " i=" << i << " k=" << k << " j=" << j);
          CHECK(dp_count_window(h, i, k, j, 0) == want);
        }
}

TEST_CASE("parity invariant") {
  for (int h = 0; h <= 5; ++h)
    for (int i = 0; i <= h; ++i)
      for (long long n = 0; n <= 10; ++n) {
        auto v = dp_count_vector(h, i, n);
        for (int l = 0; l <= h; ++l)
          if (((n + i) & 1) != (l & 1)) CHECK(v[static_cast<std::size_t>(l)] == 0);
      }
}

// Splitting off the last step widens or narrows the target window. The plain
// two-term form needs the window spots inside [0..h]; a window containing the
// phantom spots -1 or h+1 picks up paths parked at the boundary, which the
// corrected form subtracts. (The stretched top spot k+j+1 counts as inside.)
TEST_CASE("window recurrence in the half-width") {
  for (int h = 0; h <= 5; ++h)
    for (long long n = 1; n <= 9; ++n)
      for (int i = 0; i <= h; ++i) {
        auto prev = dp_count_vector(h, i, n - 1);
        for (int k = -2; k <= h + 2; ++k)
          for (int j = 0; j <= h + 2; ++j) {
            INFO("h=" << h << " n=" << n << " i=" << i << " k=" << k << " j=" << j);
            Count rhs =
                dp_count_window(h, i, k, j - 1, n - 1) + dp_count_window(h, i, k, j + 1, n - 1);
            if (k - j <= h + 1 && h + 1 <= k + j + 1) rhs -= prev[static_cast<std::size_t>(h)];
            if (k - j <= -1 && -1 <= k + j + 1) rhs -= prev[0];
            CHECK(dp_count_window(h, i, k, j, n) == rhs);
            if (k - j >= 0 && k + j + 1 <= h)
              CHECK(dp_count_window(h, i, k, j, n) ==
                    dp_count_window(h, i, k, j - 1, n - 1) +
                        dp_count_window(h, i, k, j + 1, n - 1));
          }
      }
}

TEST_CASE("recurrence in the start ordinate") {
  for (int h = 0; h <= 5; ++h)
    for (long long n = 1; n <= 9; ++n)
      for (int i = 0; i <= h; ++i)
        for (int k = 0; k <= h; ++k)
          for (int j = 0; j <= h; ++j) {
            INFO("h=" << h << " n=" << n << " i=" << i << " k=" << k << " j=" << j);
            CHECK(dp_count_window(h, i, k, j, n) ==
                  dp_count_window(h, i - 1, k, j, n - 1) + dp_count_window(h, i + 1, k, j, n - 1));
          }
}

TEST_CASE("row sums equal the full-window count and grow with h") {
  for (int h = 0; h <= 6; ++h)
    for (int i = 0; i <= h; ++i)
      for (long long n = 0; n <= 10; ++n) {
        auto v = dp_count_vector(h, i, n);
        Count total = 0;
        for (const auto& c : v) total += c;
        Window full = full_corridor_window(h);
        CHECK(total == dp_count_window(h, i, full.k, full.j, n));
        if (h > 0 && i <= h - 1) {
          Window prev = full_corridor_window(h - 1);
          CHECK(total >= dp_count_window(h - 1, i, prev.k, prev.j, n));
        }
      }
}

TEST_CASE("enumeration examples") {
  auto two = enumerate_paths(4, 1, 2, std::set<int>{1});
  REQUIRE(two.size() == 2);
  CHECK(two[0].str() == "1:DU");  // SE sorts before NE
  CHECK(two[1].str() == "1:UD");

  CHECK(enumerate_paths(4, 1, 12, std::set<int>{3}).size() == 364);

  auto forced = enumerate_paths(1, 0, 5);
  REQUIRE(forced.size() == 1);
  CHECK(forced[0].str() == "0:UDUDU");

  CHECK(enumerate_paths(0, 0, 3).empty());
  CHECK(enumerate_paths(3, 0, 0).size() == 1);
  CHECK(enumerate_paths(3, 0, 0, std::set<int>{2}).empty());
}

TEST_CASE("enumeration refuses above the cap") {
  CHECK_THROWS_AS(PathStream(6, 3, 20, std::nullopt, 1000), EnumerationCapExceeded);
  try {
    PathStream(6, 3, 20, std::nullopt, 1000);
  } catch (const EnumerationCapExceeded& e) {
    CHECK(e.predicted() > 1000);
  }
  // a filter can bring the same sweep under the cap
  CHECK_NOTHROW(PathStream(6, 3, 4, std::set<int>{3}, 1000));
}

TEST_CASE("enumeration agrees with the recurrence") {
  for (int h = 0; h <= 5; ++h)
    for (int i = 0; i <= h; ++i)
      for (long long n = 0; n <= 8; ++n) {
        auto v = dp_count_vector(h, i, n);
        std::vector<Count> histogram(static_cast<std::size_t>(h) + 1);
        std::set<std::string> seen;
        PathStream stream(h, i, n);
        while (auto p = stream.next()) {
          CHECK(p->valid_in(h));
          CHECK(p->base == i);
          CHECK(p->length() == n);
          CHECK(seen.insert(p->str()).second);  // no duplicates
          ++histogram[static_cast<std::size_t>(p->end())];
        }
        INFO("h=" << h << " i=" << i << " n=" << n);
        CHECK(histogram == v);
      }
}
