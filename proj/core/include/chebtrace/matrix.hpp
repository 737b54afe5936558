// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_MATRIX_HPP
#define CHEBTRACE_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Core>

namespace chebtrace {

using Complex = std::complex<double>;

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Real symmetric matrix. Symmetry is checked exactly at construction, so
/// every instance satisfies m(i, j) == m(j, i) bit for bit.
class DenseSymmetricMatrix {
 public:
  DenseSymmetricMatrix() = default;
  explicit DenseSymmetricMatrix(RealMatrix m);

  std::size_t order() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const RealMatrix& matrix() const noexcept { return m_; }

 private:
  RealMatrix m_;
};

template <class A, class B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace chebtrace

#endif  // CHEBTRACE_MATRIX_HPP
