// Independent reference computations used by the tests. They share no code
// with the library beyond the matrix type.
#pragma once

#include "sumcap/matcore.hpp"

#include <cmath>
#include <vector>

namespace oracle {

using sumcap::Complex;
using sumcap::ComplexMatrix;

inline double h2(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

inline double entropy(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p)
    if (x > 0) s -= x * std::log2(x);
  return s;
}

// log2 sum_i 2^{c_i}, written out directly.
inline double log2_sum_exp2(const std::vector<double>& c) {
  double s = 0.0;
  for (double x : c) s += std::pow(2.0, x);
  return std::log2(s);
}

// Trace over the second factor of a (da*db)-dim matrix, by index loops.
inline ComplexMatrix trace_second(const ComplexMatrix& m, int da, int db) {
  ComplexMatrix out = ComplexMatrix::Zero(da, da);
  for (int a = 0; a < da; ++a)
    for (int c = 0; c < da; ++c)
      for (int b = 0; b < db; ++b) out(a, c) += m(a * db + b, c * db + b);
  return out;
}

inline ComplexMatrix trace_first(const ComplexMatrix& m, int da, int db) {
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int b = 0; b < db; ++b)
    for (int c = 0; c < db; ++c)
      for (int a = 0; a < da; ++a) out(b, c) += m(a * db + b, a * db + c);
  return out;
}

// Choi matrix sum_ij T(|i><j|) (x) |i><j| from the Kraus list, by loops.
inline ComplexMatrix choi(const std::vector<ComplexMatrix>& kraus) {
  const int dout = static_cast<int>(kraus.front().rows());
  const int din = static_cast<int>(kraus.front().cols());
  ComplexMatrix c = ComplexMatrix::Zero(dout * din, dout * din);
  for (const auto& k : kraus)
    for (int i = 0; i < din; ++i)
      for (int j = 0; j < din; ++j)
        for (int a = 0; a < dout; ++a)
          for (int b = 0; b < dout; ++b) c(a * din + i, b * din + j) += k(a, i) * std::conj(k(b, j));
  return c;
}

inline ComplexMatrix bell_projector() {
  ComplexMatrix b = ComplexMatrix::Zero(4, 4);
  b(0, 0) = b(0, 3) = b(3, 0) = b(3, 3) = 0.5;
  return b;
}

inline ComplexMatrix werner(double f) {
  const ComplexMatrix bell = bell_projector();
  return f * bell + (1 - f) / 3 * (ComplexMatrix::Identity(4, 4) - bell);
}

// Entanglement of formation of a Werner state with singlet fraction f >= 1/2:
// concurrence 2f - 1.
inline double werner_eof(double f) {
  const double c = std::max(0.0, 2 * f - 1);
  return h2(0.5 * (1 + std::sqrt(1 - c * c)));
}

}  // namespace oracle
