// Local search engines behind the information quantities, plus the
// deterministic multi-start scheduler.
#pragma once

#include "sumcap/matcore.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace sumcap::optim {

struct Settings {
  int max_iterations = 10000;
  /// Stop once the objective moves less than this (relative to max(1, |f|))
  /// for several consecutive iterations.
  double objective_tolerance = 1e-9;
};

/// f(x, grad) returns the objective and writes its gradient.
using Objective = std::function<double(const RealVector& x, RealVector& grad)>;

struct Outcome {
  RealVector x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Limited-memory BFGS with Armijo backtracking.
Outcome lbfgs_minimize(const Objective& f, RealVector x0, const Settings& settings);

/// f(U, egrad) on m x r isometries (U^dag U = I); egrad is the Euclidean
/// gradient w.r.t. the real inner product Re tr(A^dag B).
using StiefelObjective = std::function<double(const ComplexMatrix& u, ComplexMatrix& egrad)>;

struct StiefelOutcome {
  ComplexMatrix u;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Riemannian gradient descent with Barzilai-Borwein steps and a polar
/// retraction.
StiefelOutcome stiefel_minimize(const StiefelObjective& f, ComplexMatrix u0,
                                const Settings& settings);

/// Closest isometry to `x` (polar factor).
ComplexMatrix polar_isometry(const ComplexMatrix& x);

/// Worker count from SUMCAP_THREADS, defaulting to the hardware concurrency.
int worker_count();

/// Runs task(0..n-1), possibly on several threads, and returns the results
/// in index order.
template <class R>
std::vector<R> run_indexed(int n, const std::function<R(int)>& task) {
  std::vector<R> results(static_cast<std::size_t>(n));
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) results[i] = task(i);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int i = next++; i < n; i = next++) {
          try {
            results[i] = task(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace sumcap::optim
