#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace corridor {

// The corridor is the ordinate band H = [0..h]; walks may touch both edges.
struct Corridor {
  int h = 0;

  bool contains(int y) const { return 0 <= y && y <= h; }
};

// A diagonal lattice path: start ordinate plus a sequence of +1 (NE, 'U')
// and -1 (SE, 'D') steps.
struct Path {
  int base = 0;
  std::vector<std::int8_t> steps;

  int length() const { return static_cast<int>(steps.size()); }
  int end() const;
  // All length()+1 vertex ordinates, starting with base.
  std::vector<int> ordinates() const;
  bool valid_in(int h) const;

  // Text form "<base>:<steps>" with steps over {U,D}, e.g. "1:DUDUDUUUUUDU".
  std::string str() const;
  static Path parse(const std::string& text);  // throws std::invalid_argument

  bool operator==(const Path&) const = default;
};

// Endpoint window <k±j> = [k-j .. k+j+1], deliberately of even size 2j+2.
// j = -1 denotes the empty window. The window may overhang the corridor;
// clipping to [0..h] happens when feasible endpoints are enumerated.
struct Window {
  int k = 0;
  int j = -1;

  int lo() const { return k - j; }
  int hi() const { return k + j + 1; }
  bool contains(int y) const { return j >= 0 && lo() <= y && y <= hi(); }
};

struct Instance {
  Corridor corridor;
  long long n = 0;
  int i = 0;
  Window window;
};

struct Validity {
  // Counting operations only need a well-formed corridor, start and window.
  bool counting_valid = false;
  // The symmetry identity additionally needs k in [-1..h] and
  // i, j in [0 .. min(k+1, h-k)]; k = -1 forces i = j = 0 (degenerate case).
  bool theorem_valid = false;
};

Validity validate_instance(const Instance& inst);
bool counting_valid(int h, long long n, int i, int j);
bool theorem_valid(int h, int k, int i, int j);

// Ordinates in <k±j> clipped to [0..h] with the parity of n+i, ascending.
std::vector<int> feasible_endpoints(int h, long long n, int i, int k, int j);
std::vector<int> feasible_endpoints(const Instance& inst);

// The window covering all of [0..h] after clipping: <floor(h/2) ± ceil(h/2)>.
Window full_corridor_window(int h);

}  // namespace corridor
