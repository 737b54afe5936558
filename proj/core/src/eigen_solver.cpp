// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include "chebtrace/eigen_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chebtrace/error.hpp"

namespace chebtrace {

namespace {

double off_norm(const RealMatrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

SymmetricEigen eigen_symmetric(const DenseSymmetricMatrix& m, double tol, bool want_vectors, int max_sweeps) {
  RealMatrix a = m.matrix();
  const Eigen::Index n = a.rows();
  RealMatrix v;
  if (want_vectors) v = RealMatrix::Identity(n, n);

  const double scale = std::max(1.0, a.norm());
  SymmetricEigen out;
  while (off_norm(a) > tol * scale) {
    if (out.sweeps == max_sweeps) throw Error(ErrorCode::NoConvergence, "Jacobi sweep budget exhausted");
    ++out.sweeps;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation zeroing a(p, q); t is the smaller root of t^2 + 2 theta t - 1 = 0.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        if (want_vectors) {
          for (Eigen::Index k = 0; k < n; ++k) {
            const double vkp = v(k, p);
            const double vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });
  out.values.reserve(order.size());
  for (auto i : order) out.values.push_back(a(i, i));
  if (want_vectors) {
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

std::vector<double> eigenvalues_symmetric(const DenseSymmetricMatrix& m, double tol) {
  return eigen_symmetric(m, tol, false).values;
}

}  // namespace chebtrace
