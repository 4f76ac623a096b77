#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gqd/states.hpp"

namespace gqd::test {

inline constexpr std::pair<Index, Index> kDims[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {3, 4}};

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline RealMatrix random_symmetric(Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  RealMatrix a(d, d);
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i) a(i, j) = normal(rng);
  return a + a.transpose();
}

inline ComplexMatrix random_complex(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix a(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      a(i, j) = Complex(re, normal(rng));
    }
  return a;
}

/// Mixed-rank random states on one bipartition.
inline std::vector<DensityMatrix> random_states(Index m, Index n, int count, std::uint64_t seed) {
  std::vector<DensityMatrix> out;
  for (int i = 0; i < count; ++i) {
    const Index rank = 1 + static_cast<Index>(i) % (m * n);
    out.push_back(random_bipartite_state(m, n, rank, seed * 1000 + static_cast<std::uint64_t>(i)));
  }
  return out;
}

}  // namespace gqd::test
