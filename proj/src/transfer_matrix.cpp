#include "corridor/transfer_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace corridor {

CountMatrix CountMatrix::identity(int dim) {
  CountMatrix m(dim);
  for (int r = 0; r < dim; ++r) m(r, r) = 1;
  return m;
}

CountMatrix CountMatrix::operator*(const CountMatrix& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("CountMatrix: dimension mismatch");
  CountMatrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      Count acc;
      for (int t = 0; t < dim_; ++t) {
        const Count& lhs = (*this)(r, t);
        if (lhs != 0) acc += lhs * other(t, c);
      }
      out(r, c) = std::move(acc);
    }
  }
  return out;
}

CountMatrix CountMatrix::pow(unsigned long long e) const {
  CountMatrix acc = identity(dim_);
  CountMatrix base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CountMatrix step_matrix(int h) {
  if (h < 0) throw std::domain_error("step_matrix: negative corridor height");
  CountMatrix m(h + 1);
  for (int r = 0; r + 1 <= h; ++r) {
    m(r, r + 1) = 1;
    m(r + 1, r) = 1;
  }
  return m;
}

std::vector<Count> tm_count_vector(int h, int i, long long n) {
  if (h < 0) throw std::domain_error("tm_count_vector: negative corridor height");
  if (n < 0) throw std::domain_error("tm_count_vector: negative step count");
  std::vector<Count> out(static_cast<std::size_t>(h) + 1);
  if (i < 0 || i > h) return out;
  CountMatrix mn = step_matrix(h).pow(static_cast<unsigned long long>(n));
  for (int l = 0; l <= h; ++l) out[static_cast<std::size_t>(l)] = mn(i, l);
  return out;
}

Count tm_count_window(int h, int i, int k, int j, long long n) {
  if (h < 0 || i < 0 || i > h || j < 0) return 0;
  auto v = tm_count_vector(h, i, n);
  Count total = 0;
  for (int l : feasible_endpoints(h, n, i, k, j)) total += v[static_cast<std::size_t>(l)];
  return total;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

struct ModMatrix {
  int dim;
  std::vector<std::uint64_t> m;

  explicit ModMatrix(int d) : dim(d), m(static_cast<std::size_t>(d) * d) {}

  std::uint64_t& at(int r, int c) { return m[static_cast<std::size_t>(r) * dim + c]; }
  std::uint64_t at(int r, int c) const { return m[static_cast<std::size_t>(r) * dim + c]; }

  ModMatrix mul(const ModMatrix& other, std::uint64_t mod) const {
    ModMatrix out(dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        std::uint64_t acc = 0;
        for (int t = 0; t < dim; ++t)
          acc = (acc + mulmod(at(r, t), other.at(t, c), mod)) % mod;
        out.at(r, c) = acc;
      }
    return out;
  }
};

}  // namespace

std::vector<std::uint64_t> tm_count_vector_mod(int h, int i, long long n, std::uint64_t modulus) {
  if (h < 0) throw std::domain_error("tm_count_vector_mod: negative corridor height");
  if (n < 0) throw std::domain_error("tm_count_vector_mod: negative step count");
  if (modulus == 0) throw std::domain_error("tm_count_vector_mod: zero modulus");
  std::vector<std::uint64_t> out(static_cast<std::size_t>(h) + 1, 0);
  if (i < 0 || i > h) return out;
  ModMatrix base(h + 1);
  for (int r = 0; r + 1 <= h; ++r) {
    base.at(r, r + 1) = 1 % modulus;
    base.at(r + 1, r) = 1 % modulus;
  }
  ModMatrix acc(h + 1);
  for (int r = 0; r <= h; ++r) acc.at(r, r) = 1 % modulus;
  auto e = static_cast<unsigned long long>(n);
  while (e > 0) {
    if (e & 1) acc = acc.mul(base, modulus);
    base = base.mul(base, modulus);
    e >>= 1;
  }
  for (int l = 0; l <= h; ++l) out[static_cast<std::size_t>(l)] = acc.at(i, l);
  return out;
}

}  // namespace corridor
