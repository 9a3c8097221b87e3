#pragma once

#include <string>
#include <utility>
#include <vector>

#include "corridor/count.hpp"
#include "corridor/path.hpp"

namespace corridor {

struct SweepFailure {
  std::string instance;
  std::string lhs;
  std::string rhs;
};

struct SweepReport {
  std::string suite;
  std::string params;
  long long checked = 0;
  std::vector<SweepFailure> failures;

  bool pass() const { return failures.empty(); }
};

// Identity sweeps over the recurrence engine:
//   window-symmetry        F_{i -> <k±j>}(n) = F_{j -> <k±i>}(n), theorem-valid frames
//   up-down-symmetry       F_{i -> <k±j>}(n) = F_{h-i -> <h-k-1±j>}(n)
//   high-start-symmetry    F_{i -> <k±j>}(n) = F_{j -> <h-k-1±(h-i)>}(n), high starts
//   middle-start-equality  total walks from floor(h/2) = total walks from ceil(h/2)
//   unbounded-symmetry     the window symmetry with the ceiling out of reach
//   grand-dyck-doubling    even h, middle start: F(2m) = 2 F(2m-1)
std::vector<SweepReport> check_identities(int h_max, long long n_max);

// Both sides of the window symmetry for one instance, no domain filtering;
// used to inspect excluded frames (e.g. 81 vs 121).
std::pair<Count, Count> window_symmetry_pair(int h, int k, int i, int j, long long n);

// Cross-engine equality: recurrence = reflection formula = matrix power on
// all endpoints and theorem-valid windows up to (h_max, n_max), and all
// three = exhaustive enumeration up to (oracle_h_max, oracle_n_max).
SweepReport check_engines(int h_max, long long n_max, long long oracle_n_max,
                          int oracle_h_max = 5);

// Exhaustive checks of the correspondence (well-defined, bijective, inverted
// by the swapped frame) plus the single-reversal variants on their parity
// domains.
std::vector<SweepReport> check_bijections(int h_max, long long n_max);

// Window counts F(0..n_max) for a fixed frame.
std::vector<Count> sequence(int h, int i, int k, int j, long long n_max);

struct ReferenceSequence {
  std::string label;  // OEIS id
  int offset = 0;     // n of terms[0]
  std::vector<Count> terms;
};

// Embedded reference prefixes for the bottom-start full-corridor families,
// h = 0..10. Lookup is case-insensitive; returns nullptr when unknown.
const ReferenceSequence* find_reference(const std::string& label);
const std::vector<ReferenceSequence>& reference_sequences();

SweepReport compare_sequence(const std::vector<Count>& got, const ReferenceSequence& ref);

// Long-form CSV "i,ell,n,count" of every positive cell, ordered with i
// descending, ell descending, n ascending.
std::string render_table(int h, long long n_max);

// Transcribed expected tables for h = 4 and h = 5, n <= 16.
const std::string& golden_table_csv(int h);

struct GoldenDiff {
  bool match = false;
  std::string first_difference;
};

// Line-by-line comparison; first_difference names the earliest divergence.
GoldenDiff diff_csv(const std::string& got, const std::string& want);

GoldenDiff compare_golden(int h, long long n_max);

}  // namespace corridor
