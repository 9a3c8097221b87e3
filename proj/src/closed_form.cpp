#include "corridor/closed_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace corridor {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

// Accumulate C(n, m0 + z*period) - C(n, m0 + off + z*period) over every z
// for which either binomial is nonzero.
Count alternating_binomial_sum(long long n, long long m0, long long off, long long period) {
  long long zlo = ceil_div(-m0 - off, period);
  long long zhi = floor_div(n - m0, period);
  Count total = 0;
  for (long long z = zlo; z <= zhi; ++z) {
    long long m = m0 + z * period;
    total += binomial(n, m);
    total -= binomial(n, m + off);
  }
  return total;
}

}  // namespace

Count binomial(long long n, long long m) {
  if (n < 0) throw std::domain_error("binomial: negative upper index");
  if (m < 0 || m > n) return 0;
  if (m > n - m) m = n - m;
  Count acc = 1;
  for (long long t = 1; t <= m; ++t) {
    acc *= n - m + t;
    acc /= t;  // exact: acc is C(n-m+t, t) here
  }
  return acc;
}

Count mohanty_count(const OrthogonalInstance& oi) {
  if (oi.a < 0 || oi.b < 0) throw std::domain_error("mohanty_count: negative step counts");
  if (oi.s < 1 || oi.t < 1) throw std::domain_error("mohanty_count: gaps must be at least 1");
  long long drift = oi.b - oi.a;
  if (drift < -oi.t || drift > oi.s)
    throw std::domain_error("mohanty_count: endpoint outside the boundary strip");
  return alternating_binomial_sum(oi.a + oi.b, oi.b, oi.t, oi.s + oi.t);
}

Count cf_count_endpoint(int h, int i, int l, long long n) {
  if (h < 0) throw std::domain_error("cf_count_endpoint: negative corridor height");
  if (i < 0 || i > h || l < 0 || l > h)
    throw std::domain_error("cf_count_endpoint: start or end outside [0..h]");
  if (n < 0) throw std::domain_error("cf_count_endpoint: negative step count");
  if (((n - i + l) & 1) != 0) return 0;  // half-integer lower index
  long long m0 = (n - i + l) / 2;
  return alternating_binomial_sum(n, m0, i + 1, h + 2);
}

ClosedFormPlan make_closed_form_plan(int h, int i, int k, int j, long long n) {
  ClosedFormPlan plan;
  plan.q = n + k - i - j;
  plan.r = ceil_div(plan.q, 2);
  long long qmod2 = plan.q - 2 * floor_div(plan.q, 2);
  plan.p = k - j + qmod2;
  plan.v = -floor_div(plan.r + i + j + 1, h + 2);
  plan.u = floor_div(n - plan.r, h + 2);
  return plan;
}

Count cf_count_window(int h, int i, int k, int j, long long n) {
  if (h < 0) throw std::domain_error("cf_count_window: negative corridor height");
  if (i < 0 || i > h) throw std::domain_error("cf_count_window: start outside [0..h]");
  if (n < 0) throw std::domain_error("cf_count_window: negative step count");
  auto plan = make_closed_form_plan(h, i, k, j, n);
  long long period = h + 2;
  Count total = 0;
  for (long long z = plan.v; z <= plan.u; ++z) {
    for (long long sidx = 0; sidx <= j; ++sidx) {
      long long slot = 2 * sidx + plan.p;
      if (slot < 0 || slot > h) continue;
      long long m = plan.r + z * period + sidx;
      total += binomial(n, m);
      total -= binomial(n, m + i + 1);
    }
  }
  return total;
}

Count dyck_prefix_count(int h, long long n) {
  if (h < 0) throw std::domain_error("dyck_prefix_count: negative corridor height");
  if (n < 0) throw std::domain_error("dyck_prefix_count: negative step count");
  auto plan = make_closed_form_plan(h, 0, h / 2, h / 2, n);
  long long period = h + 2;
  Count total = 0;
  for (long long z = plan.v; z <= plan.u; ++z) {
    total += binomial(n, (n + 1) / 2 + z * period);
    total -= binomial(n, (n + 1) / 2 + h / 2 + z * period + 1);
  }
  return total;
}

Count grossman_dyck_count(int h, long long m) {
  if (h < 0) throw std::domain_error("grossman_dyck_count: negative corridor height");
  if (m < 0) throw std::domain_error("grossman_dyck_count: negative semilength");
  long long period = h + 2;
  long long zb = m / period;
  Count total = 0;
  for (long long z = -zb; z <= zb; ++z) {
    total += binomial(2 * m, m + z * period);
    total -= binomial(2 * m, m + z * period + 1);
  }
  return total;
}

}  // namespace corridor
