#include "corridor/enumerate.hpp"

#include <cstdlib>

#include "corridor/dp.hpp"

namespace corridor {

PathStream::PathStream(int h, int start, long long n, std::optional<std::set<int>> endpoint_filter,
                       long long cap)
    : h_(h), start_(start), n_(n), filter_(std::move(endpoint_filter)) {
  if (!counting_valid(h, n, start, 0)) {
    done_ = true;
    return;
  }
  auto v = dp_count_vector(h_, start_, n_);
  for (int l = 0; l <= h_; ++l)
    if (endpoint_ok(l)) predicted_ += v[static_cast<std::size_t>(l)];
  if (predicted_ > cap) throw EnumerationCapExceeded(predicted_, cap);
  ys_.push_back(start_);
}

bool PathStream::endpoint_ok(int y) const { return !filter_ || filter_->count(y) > 0; }

bool PathStream::reachable(int y, long long remaining) const {
  if (!filter_) return true;
  for (int l : *filter_) {
    if (l < 0 || l > h_) continue;
    long long d = l > y ? l - y : y - l;
    if (d <= remaining && ((remaining - d) & 1) == 0) return true;
  }
  return false;
}

bool PathStream::step_ok(int y, int s, long long remaining_after) const {
  int ny = y + s;
  if (ny < 0 || ny > h_) return false;
  return reachable(ny, remaining_after);
}

// Greedily extend with the smallest feasible step (SE first). The pruning in
// step_ok is exact, so this never dead-ends.
void PathStream::descend(long long depth) {
  for (long long d = depth; d < n_; ++d) {
    int y = ys_.back();
    int s = step_ok(y, -1, n_ - d - 1) ? -1 : 1;
    steps_.push_back(static_cast<std::int8_t>(s));
    ys_.push_back(y + s);
  }
}

std::optional<Path> PathStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!reachable(start_, n_) || (n_ == 0 && !endpoint_ok(start_)) ||
        (n_ > 0 && !step_ok(start_, -1, n_ - 1) && !step_ok(start_, 1, n_ - 1))) {
      done_ = true;
      return std::nullopt;
    }
    descend(0);
    return Path{start_, steps_};
  }
  // Backtrack to the rightmost SE step that can be bumped to NE.
  while (!steps_.empty()) {
    long long d = static_cast<long long>(steps_.size()) - 1;
    std::int8_t last = steps_.back();
    steps_.pop_back();
    ys_.pop_back();
    if (last < 0 && step_ok(ys_.back(), 1, n_ - d - 1)) {
      steps_.push_back(1);
      ys_.push_back(ys_.back() + 1);
      descend(d + 1);
      return Path{start_, steps_};
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Path> enumerate_paths(int h, int start, long long n,
                                  std::optional<std::set<int>> endpoint_filter, long long cap) {
  PathStream stream(h, start, n, std::move(endpoint_filter), cap);
  std::vector<Path> out;
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace corridor
