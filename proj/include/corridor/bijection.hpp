#pragma once

#include <optional>
#include <string>

#include "corridor/path.hpp"
#include "corridor/ta.hpp"

namespace corridor {

// Which branch of the correspondence produced the counterpart. The no-touch
// tags mark the "never attained" fallbacks, where the whole word is reversed.
enum class BijectionCase { equal, less, greater, less_no_touch, greater_no_touch };

std::string to_string(BijectionCase c);

struct CorrespondResult {
  Path path;
  BijectionCase tag = BijectionCase::equal;
};

// Maps a path starting at i and ending in <k±j> to its counterpart starting
// at j and ending in <k±i>, splicing reversed TA label segments:
//   i = j : the path itself.
//   i < j : split at the first vertex with ordinate j; the suffix is copied
//           and the reversed prefix appended.
//   i > j : split at the backward window scan's target; the reversed suffix
//           is prepended to the prefix.
// Requires a theorem-valid frame and a path in the source set
// (std::domain_error otherwise).
CorrespondResult correspond(const Path& p, int h, int k, int i, int j);

// Whole-word TA reversal rebased at j. Returns nothing when the decoded walk
// leaves the corridor or misses <k±i>.
std::optional<Path> alt_full_reverse(const Path& p, int h, int k, int i, int j);

// Left-right spatial reversal first, then whole-word TA reversal.
std::optional<Path> alt_flip_reverse(const Path& p, int h, int k, int i, int j);

enum class AltVariant { full_reverse, flip_reverse };

// Parity domains on which the single-reversal shortcuts are claimed to be
// bijections (in attractor-centered frames).
bool applicability(int h, long long n, AltVariant variant);

}  // namespace corridor
