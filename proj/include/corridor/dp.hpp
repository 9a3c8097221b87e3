#pragma once

#include <vector>

#include "corridor/count.hpp"
#include "corridor/path.hpp"

namespace corridor {

// Walk counts by the step recurrence: out-of-corridor start or end counts 0,
// zero steps count [i == l], otherwise the two (n-1)-step counts add up.
// Forward pass over a length-(h+1) vector, O(n*h) big-integer additions.

// Entry l holds the number of n-step walks i -> l inside [0..h].
std::vector<Count> dp_count_vector(int h, int i, long long n);

Count dp_count_endpoint(int h, int i, int l, long long n);

// Sum over the feasible endpoints of <k±j>; the empty window (j = -1) is 0.
Count dp_count_window(int h, int i, int k, int j, long long n);

}  // namespace corridor
