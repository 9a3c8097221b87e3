#pragma once

#include "corridor/count.hpp"
#include "corridor/path.hpp"

namespace corridor {

// Reflection-method counts: alternating binomial sums over mirror images
// across the two corridor boundaries.

// C(n, m) with the convention that any out-of-range m counts 0.
Count binomial(long long n, long long m);

// Monotonic N/E staircase instance: a east steps, b north steps, strictly
// between y = x + s (above) and y = x - t (below). The boundary equalities
// b-a = s and b-a = -t are admitted and count 0.
struct OrthogonalInstance {
  long long a = 0;
  long long b = 0;
  long long s = 1;
  long long t = 1;
};

Count mohanty_count(const OrthogonalInstance& oi);  // throws std::domain_error

// Single-endpoint diagonal count, the staircase formula transported through
// a = (n+i-l)/2, b = (n-i+l)/2, s = h-i+1, t = i+1.
Count cf_count_endpoint(int h, int i, int l, long long n);

// Derived summation indices for the window formula.
struct ClosedFormPlan {
  long long q = 0;  // n + k - i - j
  long long r = 0;  // ceil(q / 2)
  long long p = 0;  // k - j + (q mod 2)
  long long v = 0;  // lowest contributing mirror index
  long long u = 0;  // highest contributing mirror index
};

ClosedFormPlan make_closed_form_plan(int h, int i, int k, int j, long long n);

// Window count: sum over mirror index z in [v..u] and endpoint slot
// sidx in [0..j] with 0 <= 2*sidx + p <= h of
//   C(n, r + z(h+2) + sidx) - C(n, r + z(h+2) + i + sidx + 1).
Count cf_count_window(int h, int i, int k, int j, long long n);

// Walks from the bottom ending anywhere in the corridor (Dyck prefixes of
// height at most h); reduces to the central binomial once h >= n.
Count dyck_prefix_count(int h, long long n);

// Dyck paths of semilength m and height at most h.
Count grossman_dyck_count(int h, long long m);

}  // namespace corridor
