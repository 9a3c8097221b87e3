#include "corridor/dp.hpp"

#include <stdexcept>
#include <utility>

namespace corridor {

std::vector<Count> dp_count_vector(int h, int i, long long n) {
  if (h < 0) throw std::domain_error("dp_count_vector: negative corridor height");
  if (n < 0) throw std::domain_error("dp_count_vector: negative step count");
  std::vector<Count> v(static_cast<std::size_t>(h) + 1);
  if (i < 0 || i > h) return v;
  v[static_cast<std::size_t>(i)] = 1;
  std::vector<Count> next(v.size());
  for (long long step = 0; step < n; ++step) {
    for (int y = 0; y <= h; ++y) {
      Count c;
      if (y > 0) c += v[static_cast<std::size_t>(y) - 1];
      if (y < h) c += v[static_cast<std::size_t>(y) + 1];
      next[static_cast<std::size_t>(y)] = std::move(c);
    }
    v.swap(next);
  }
  return v;
}

Count dp_count_endpoint(int h, int i, int l, long long n) {
  if (h < 0 || i < 0 || i > h || l < 0 || l > h) return 0;
  return dp_count_vector(h, i, n)[static_cast<std::size_t>(l)];
}

Count dp_count_window(int h, int i, int k, int j, long long n) {
  if (h < 0 || i < 0 || i > h || j < 0) return 0;
  auto v = dp_count_vector(h, i, n);
  Count total = 0;
  for (int l : feasible_endpoints(h, n, i, k, j)) total += v[static_cast<std::size_t>(l)];
  return total;
}

}  // namespace corridor
