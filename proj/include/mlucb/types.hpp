#pragma once

#include <Eigen/Dense>
#include <algorithm>

namespace mlucb {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = DenseMatrix<double>;
using Vector = DenseVector<double>;
using Index = Eigen::Index;

inline double clip(double value, double lo, double hi) {
  return std::clamp(value, lo, hi);
}

/// Elementwise clamp usable inside larger Eigen expressions.
template <typename Derived>
auto clip(const Eigen::MatrixBase<Derived>& values, double lo, double hi) {
  return values.cwiseMax(lo).cwiseMin(hi);
}

/// Index of the largest coefficient; ties resolve to the lowest index.
inline Index argmax_lowest(const Vector& scores) {
  Index best = 0;
  for (Index i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return best;
}

}  // namespace mlucb
