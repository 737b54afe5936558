// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_BESSEL_HPP
#define CHEBTRACE_BESSEL_HPP

#include <vector>

#include "chebtrace/matrix.hpp"

namespace chebtrace {

// Power-series Bessel functions of integer order, summed in extended
// precision until the term falls below tol times the partial sum. Accurate
// to near machine precision for |z| up to about 20; the alternating J series
// loses digits beyond that. Negative orders use I_{-n} = I_n and
// J_{-n} = (-1)^n J_n. Throws Error{NoConvergence} after 10000 terms.

Complex bessel_i(int n, Complex z, double tol = 1e-18);
Complex bessel_j(int n, Complex z, double tol = 1e-18);

inline double bessel_i(int n, double x, double tol = 1e-18) { return bessel_i(n, Complex(x), tol).real(); }
inline double bessel_j(int n, double x, double tol = 1e-18) { return bessel_j(n, Complex(x), tol).real(); }

/// I_0(z), ..., I_N(z).
std::vector<Complex> bessel_i_all(int N, Complex z);

}  // namespace chebtrace

#endif  // CHEBTRACE_BESSEL_HPP
