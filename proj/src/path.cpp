#include "corridor/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace corridor {

int Path::end() const {
  int y = base;
  for (auto s : steps) y += s;
  return y;
}

std::vector<int> Path::ordinates() const {
  std::vector<int> ys;
  ys.reserve(steps.size() + 1);
  int y = base;
  ys.push_back(y);
  for (auto s : steps) {
    y += s;
    ys.push_back(y);
  }
  return ys;
}

bool Path::valid_in(int h) const {
  if (base < 0 || base > h) return false;
  int y = base;
  for (auto s : steps) {
    y += s;
    if (y < 0 || y > h) return false;
  }
  return true;
}

std::string Path::str() const {
  std::string out = std::to_string(base);
  out.push_back(':');
  for (auto s : steps) out.push_back(s > 0 ? 'U' : 'D');
  return out;
}

Path Path::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("path text must be <base>:<steps>: " + text);
  Path p;
  try {
    std::size_t used = 0;
    p.base = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad path base in: " + text);
  }
  for (std::size_t pos = colon + 1; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == 'U')
      p.steps.push_back(1);
    else if (c == 'D')
      p.steps.push_back(-1);
    else
      throw std::invalid_argument(std::string("bad path step '") + c + "' in: " + text);
  }
  return p;
}

Validity validate_instance(const Instance& inst) {
  Validity v;
  v.counting_valid = counting_valid(inst.corridor.h, inst.n, inst.i, inst.window.j);
  v.theorem_valid =
      v.counting_valid && theorem_valid(inst.corridor.h, inst.window.k, inst.i, inst.window.j);
  return v;
}

bool counting_valid(int h, long long n, int i, int j) {
  return h >= 0 && n >= 0 && 0 <= i && i <= h && j >= -1;
}

bool theorem_valid(int h, int k, int i, int j) {
  // k = -1 gives min(k+1, h-k) = 0, which forces the degenerate i = j = 0.
  if (k < -1 || k > h) return false;
  int cap = std::min(k + 1, h - k);
  return 0 <= i && i <= cap && 0 <= j && j <= cap;
}

std::vector<int> feasible_endpoints(int h, long long n, int i, int k, int j) {
  std::vector<int> out;
  if (j < 0) return out;
  int lo = std::max(0, k - j);
  int hi = std::min(h, k + j + 1);
  int parity = static_cast<int>((n + i) & 1);
  for (int l = lo; l <= hi; ++l)
    if ((l & 1) == parity) out.push_back(l);
  return out;
}

std::vector<int> feasible_endpoints(const Instance& inst) {
  return feasible_endpoints(inst.corridor.h, inst.n, inst.i, inst.window.k, inst.window.j);
}

Window full_corridor_window(int h) {
  return Window{h / 2, (h + 1) / 2};
}

}  // namespace corridor
