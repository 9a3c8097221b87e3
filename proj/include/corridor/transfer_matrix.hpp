#pragma once

#include <cstdint>
#include <vector>

#include "corridor/count.hpp"
#include "corridor/path.hpp"

namespace corridor {

// Dense square matrix of exact counts. Corridor step matrices are tiny
// (dimension h+1), so no sparse machinery.
class CountMatrix {
 public:
  explicit CountMatrix(int dim) : dim_(dim), m_(static_cast<std::size_t>(dim) * dim) {}

  static CountMatrix identity(int dim);

  int dim() const { return dim_; }
  Count& operator()(int r, int c) { return m_[static_cast<std::size_t>(r) * dim_ + c]; }
  const Count& operator()(int r, int c) const {
    return m_[static_cast<std::size_t>(r) * dim_ + c];
  }

  CountMatrix operator*(const CountMatrix& other) const;
  CountMatrix pow(unsigned long long e) const;

  bool operator==(const CountMatrix&) const = default;

 private:
  int dim_;
  std::vector<Count> m_;
};

// Adjacency matrix of the corridor's ordinate graph: 1 iff |r-c| = 1.
// Symmetric, tridiagonal, zero diagonal; its n-th power counts n-step walks.
CountMatrix step_matrix(int h);

// Entry l equals the number of n-step walks i -> l inside [0..h]; computed as
// row i of the n-th matrix power, O(h^3 log n) big-integer multiplications.
std::vector<Count> tm_count_vector(int h, int i, long long n);

Count tm_count_window(int h, int i, int k, int j, long long n);

// Modular variant for benchmarking the squaring ladder without big-integer
// cost. Never used by the verification suite.
std::vector<std::uint64_t> tm_count_vector_mod(int h, int i, long long n, std::uint64_t modulus);

}  // namespace corridor
