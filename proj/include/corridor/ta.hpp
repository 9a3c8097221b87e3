#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "corridor/path.hpp"

namespace corridor {

// Toward/Away encoding of a path relative to the center of attraction
// y = k + 1/2: a step from ordinate y is 'T' when it heads toward that line
// ((y <= k and up) or (y >= k+1 and down)) and 'A' otherwise. Steps that
// cross the line (from k up, from k+1 down) are toward. Exactly one of the
// two outgoing steps from any ordinate is 'T', so a base ordinate plus the
// label sequence determines the path uniquely.
struct TAWord {
  int k = 0;
  int base = 0;
  std::string labels;  // over {'T', 'A'}

  int length() const { return static_cast<int>(labels.size()); }

  // Text form "<k>/<base>:<labels>", e.g. "3/1:ATATATTTTATA".
  std::string str() const;
  static TAWord parse(const std::string& text);  // throws std::invalid_argument

  bool operator==(const TAWord&) const = default;
};

class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& msg, int position)
      : std::runtime_error(msg), position_(position) {}

  int position() const { return position_; }

 private:
  int position_;
};

TAWord ta_encode(const Path& path, int k);

// The unique path with the word's labels; throws DecodeError if any
// intermediate ordinate leaves [0..h].
Path ta_decode(const TAWord& word, int h);

// Labels reversed verbatim with a new base; a pure sequence operation.
TAWord reverse_word(const TAWord& word, int new_base);

// Window half-width evolution along a word read forward: 'A' widens
// (w+1), 'T' narrows (max(w-1, 0)). Returns length()+1 values.
using WindowTrace = std::vector<int>;
WindowTrace forward_window_trace(const TAWord& word, int w_start);

// Right-to-left scan from window size j_end, 'T' enlarging and 'A' shrinking
// without saturation. `found` reports the onset of the shortest suffix whose
// window size is i_target; `negative_window` flags a below-zero excursion
// (never observed on theorem-valid inputs) before the target was reached.
enum class SplitOutcome { found, never, negative_window };

struct BackwardSplit {
  SplitOutcome outcome = SplitOutcome::never;
  int index = -1;  // onset of the suffix when outcome == found
};

BackwardSplit backward_window_split(const TAWord& word, int j_end, int i_target);

}  // namespace corridor
