#include "corridor/ta.hpp"

#include <algorithm>

namespace corridor {

std::string TAWord::str() const {
  return std::to_string(k) + "/" + std::to_string(base) + ":" + labels;
}

TAWord TAWord::parse(const std::string& text) {
  auto slash = text.find('/');
  auto colon = text.find(':');
  if (slash == std::string::npos || colon == std::string::npos || colon < slash)
    throw std::invalid_argument("TA word text must be <k>/<base>:<labels>: " + text);
  TAWord w;
  try {
    std::size_t used = 0;
    w.k = std::stoi(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("");
    w.base = std::stoi(text.substr(slash + 1, colon - slash - 1), &used);
    if (used != colon - slash - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad TA word header in: " + text);
  }
  w.labels = text.substr(colon + 1);
  for (char c : w.labels)
    if (c != 'T' && c != 'A')
      throw std::invalid_argument(std::string("bad TA label '") + c + "' in: " + text);
  return w;
}

TAWord ta_encode(const Path& path, int k) {
  TAWord w;
  w.k = k;
  w.base = path.base;
  w.labels.reserve(path.steps.size());
  int y = path.base;
  for (auto s : path.steps) {
    bool toward = (y <= k && s > 0) || (y >= k + 1 && s < 0);
    w.labels.push_back(toward ? 'T' : 'A');
    y += s;
  }
  return w;
}

Path ta_decode(const TAWord& word, int h) {
  if (word.base < 0 || word.base > h)
    throw std::domain_error("ta_decode: base outside [0..h]");
  Path p;
  p.base = word.base;
  p.steps.reserve(word.labels.size());
  int y = word.base;
  for (int pos = 0; pos < word.length(); ++pos) {
    bool toward = word.labels[static_cast<std::size_t>(pos)] == 'T';
    int s = (y <= word.k) == toward ? 1 : -1;
    y += s;
    if (y < 0 || y > h)
      throw DecodeError("decode out of corridor at position " + std::to_string(pos), pos);
    p.steps.push_back(static_cast<std::int8_t>(s));
  }
  return p;
}

TAWord reverse_word(const TAWord& word, int new_base) {
  TAWord out;
  out.k = word.k;
  out.base = new_base;
  out.labels.assign(word.labels.rbegin(), word.labels.rend());
  return out;
}

WindowTrace forward_window_trace(const TAWord& word, int w_start) {
  WindowTrace trace;
  trace.reserve(word.labels.size() + 1);
  int w = w_start;
  trace.push_back(w);
  for (char c : word.labels) {
    w = c == 'A' ? w + 1 : std::max(w - 1, 0);
    trace.push_back(w);
  }
  return trace;
}

BackwardSplit backward_window_split(const TAWord& word, int j_end, int i_target) {
  if (j_end < 0 || i_target <= j_end)
    throw std::domain_error("backward_window_split: need 0 <= j_end < i_target");
  int w = j_end;
  int len = word.length();
  for (int t = 1; t <= len; ++t) {
    w += word.labels[static_cast<std::size_t>(len - t)] == 'T' ? 1 : -1;
    if (w < 0) return {SplitOutcome::negative_window, -1};
    if (w == i_target) return {SplitOutcome::found, len - t};
  }
  return {SplitOutcome::never, -1};
}

}  // namespace corridor
