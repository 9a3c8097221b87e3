#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "corridor/count.hpp"
#include "corridor/path.hpp"

namespace corridor {

inline constexpr long long kDefaultEnumerationCap = 10'000'000;

class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(const Count& predicted, long long cap)
      : std::runtime_error("enumeration too large: " + predicted.str() + " paths exceed cap " +
                           std::to_string(cap)),
        predicted_(predicted) {}

  const Count& predicted() const { return predicted_; }

 private:
  Count predicted_;
};

// Streams every n-step walk from `start` inside [0..h] exactly once, in
// lexicographic step order with SE before NE, optionally restricted to the
// given endpoint set. Single consumer; independent sweeps need their own
// stream. Construction predicts the output size with the recurrence and
// refuses (EnumerationCapExceeded) when it exceeds `cap`.
class PathStream {
 public:
  PathStream(int h, int start, long long n,
             std::optional<std::set<int>> endpoint_filter = std::nullopt,
             long long cap = kDefaultEnumerationCap);

  std::optional<Path> next();
  const Count& predicted_count() const { return predicted_; }

 private:
  bool endpoint_ok(int y) const;
  bool reachable(int y, long long remaining) const;
  bool step_ok(int y, int s, long long remaining_after) const;
  void descend(long long depth);

  int h_;
  int start_;
  long long n_;
  std::optional<std::set<int>> filter_;
  Count predicted_;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::int8_t> steps_;
  std::vector<int> ys_;
};

// Convenience: collect the whole stream.
std::vector<Path> enumerate_paths(int h, int start, long long n,
                                  std::optional<std::set<int>> endpoint_filter = std::nullopt,
                                  long long cap = kDefaultEnumerationCap);

}  // namespace corridor
