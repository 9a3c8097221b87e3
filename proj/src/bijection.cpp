#include "corridor/bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace corridor {

namespace {

void require_source_path(const Path& p, int h, int k, int i, int j, const char* op) {
  if (!theorem_valid(h, k, i, j))
    throw std::domain_error(std::string(op) + ": frame (h,k,i,j) is not theorem-valid");
  if (p.base != i) throw std::domain_error(std::string(op) + ": path does not start at i");
  if (!p.valid_in(h)) throw std::domain_error(std::string(op) + ": path leaves the corridor");
  if (!Window{k, j}.contains(p.end()))
    throw std::domain_error(std::string(op) + ": path does not end in the target window");
}

std::string reversed(const std::string& s) { return {s.rbegin(), s.rend()}; }

Path spatial_reverse(const Path& p) {
  Path out;
  out.base = p.end();
  out.steps.reserve(p.steps.size());
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
    out.steps.push_back(static_cast<std::int8_t>(-*it));
  return out;
}

std::optional<Path> decode_into_window(const TAWord& word, int h, int k, int i) {
  try {
    Path q = ta_decode(word, h);
    if (!Window{k, i}.contains(q.end())) return std::nullopt;
    return q;
  } catch (const DecodeError&) {
    return std::nullopt;
  }
}

}  // namespace

std::string to_string(BijectionCase c) {
  switch (c) {
    case BijectionCase::equal: return "equal";
    case BijectionCase::less: return "less";
    case BijectionCase::greater: return "greater";
    case BijectionCase::less_no_touch: return "less-no-touch";
    case BijectionCase::greater_no_touch: return "greater-no-touch";
  }
  return "?";
}

CorrespondResult correspond(const Path& p, int h, int k, int i, int j) {
  require_source_path(p, h, k, i, j, "correspond");
  if (i == j) return {p, BijectionCase::equal};

  TAWord word = ta_encode(p, k);
  if (i < j) {
    // First vertex at level j, if any; the final vertex counts.
    auto ys = p.ordinates();
    auto hit = std::find(ys.begin(), ys.end(), j);
    if (hit == ys.end())
      return {ta_decode(reverse_word(word, j), h), BijectionCase::less_no_touch};
    auto split = static_cast<std::size_t>(hit - ys.begin());
    TAWord out{k, j, word.labels.substr(split) + reversed(word.labels.substr(0, split))};
    return {ta_decode(out, h), BijectionCase::less};
  }

  BackwardSplit split = backward_window_split(word, j, i);
  switch (split.outcome) {
    case SplitOutcome::never:
      return {ta_decode(reverse_word(word, j), h), BijectionCase::greater_no_touch};
    case SplitOutcome::negative_window:
      // Exhaustive sweeps show this cannot happen for theorem-valid input.
      throw std::logic_error("correspond: backward window scan went negative");
    case SplitOutcome::found: {
      auto idx = static_cast<std::size_t>(split.index);
      TAWord out{k, j, reversed(word.labels.substr(idx)) + word.labels.substr(0, idx)};
      return {ta_decode(out, h), BijectionCase::greater};
    }
  }
  throw std::logic_error("correspond: unreachable");
}

std::optional<Path> alt_full_reverse(const Path& p, int h, int k, int i, int j) {
  require_source_path(p, h, k, i, j, "alt_full_reverse");
  return decode_into_window(reverse_word(ta_encode(p, k), j), h, k, i);
}

std::optional<Path> alt_flip_reverse(const Path& p, int h, int k, int i, int j) {
  require_source_path(p, h, k, i, j, "alt_flip_reverse");
  return decode_into_window(reverse_word(ta_encode(spatial_reverse(p), k), j), h, k, i);
}

bool applicability(int h, long long n, AltVariant variant) {
  bool same_parity = (n % 2) == (h % 2);
  bool odd_h = (h % 2) != 0;
  return variant == AltVariant::full_reverse ? odd_h || same_parity : !odd_h || same_parity;
}

}  // namespace corridor
