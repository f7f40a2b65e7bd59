#include "sumcap/optimize.hpp"

#include <cmath>
#include <cstdlib>
#include <deque>
#include <string>

namespace sumcap::optim {

namespace {

constexpr int kHistory = 10;
constexpr int kStallIterations = 3;
constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 50;

bool small_change(double before, double after, double tol) {
  return std::abs(before - after) <= tol * std::max(1.0, std::abs(after));
}

double real_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.array().conjugate() * b.array()).real().sum();
}

}  // namespace

Outcome lbfgs_minimize(const Objective& f, RealVector x0, const Settings& settings) {
  const Eigen::Index n = x0.size();
  Outcome out;
  out.x = std::move(x0);
  RealVector grad(n);
  out.value = f(out.x, grad);

  std::deque<RealVector> s_hist;
  std::deque<RealVector> y_hist;
  std::deque<double> rho_hist;
  int stalled = 0;
  RealVector trial_grad(n);

  for (int iter = 0; iter < settings.max_iterations; ++iter) {
    out.iterations = iter + 1;
    if (grad.lpNorm<Eigen::Infinity>() < 1e-14) {
      out.converged = true;
      break;
    }

    // Two-loop recursion.
    RealVector q = grad;
    std::vector<double> alpha(s_hist.size());
    for (int k = static_cast<int>(s_hist.size()) - 1; k >= 0; --k) {
      alpha[k] = rho_hist[k] * s_hist[k].dot(q);
      q -= alpha[k] * y_hist[k];
    }
    if (!s_hist.empty()) q *= s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
    for (std::size_t k = 0; k < s_hist.size(); ++k) {
      const double beta = rho_hist[k] * y_hist[k].dot(q);
      q += (alpha[k] - beta) * s_hist[k];
    }
    RealVector dir = -q;
    double slope = dir.dot(grad);
    if (!(slope < 0.0)) {
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      dir = -grad;
      slope = -grad.squaredNorm();
    }

    double step = s_hist.empty() ? std::min(1.0, 1.0 / grad.norm()) : 1.0;
    RealVector trial;
    double trial_value = 0.0;
    bool accepted = false;
    for (int bt = 0; bt < kMaxBacktracks; ++bt) {
      trial = out.x + step * dir;
      trial_value = f(trial, trial_grad);
      if (std::isfinite(trial_value) && trial_value <= out.value + kArmijo * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (!s_hist.empty()) {
        // Retry once from steepest descent before declaring a stall.
        s_hist.clear();
        y_hist.clear();
        rho_hist.clear();
        continue;
      }
      out.converged = true;
      break;
    }

    RealVector s = trial - out.x;
    RealVector y = trial_grad - grad;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > kHistory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    const double before = out.value;
    out.x = std::move(trial);
    out.value = trial_value;
    grad = trial_grad;
    stalled = small_change(before, out.value, settings.objective_tolerance) ? stalled + 1 : 0;
    if (stalled >= kStallIterations) {
      out.converged = true;
      break;
    }
  }
  return out;
}

ComplexMatrix polar_isometry(const ComplexMatrix& x) {
  Eigen::JacobiSVD<ComplexMatrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

StiefelOutcome stiefel_minimize(const StiefelObjective& f, ComplexMatrix u0,
                                const Settings& settings) {
  StiefelOutcome out;
  out.u = polar_isometry(u0);
  ComplexMatrix egrad;
  out.value = f(out.u, egrad);

  auto riemannian = [](const ComplexMatrix& u, const ComplexMatrix& g) -> ComplexMatrix {
    const ComplexMatrix ug = u.adjoint() * g;
    return g - u * (0.5 * (ug + ug.adjoint()));
  };

  ComplexMatrix rgrad = riemannian(out.u, egrad);
  double step = 1.0 / std::max(1.0, std::sqrt(real_inner(rgrad, rgrad)));
  int stalled = 0;
  ComplexMatrix trial_egrad;

  for (int iter = 0; iter < settings.max_iterations; ++iter) {
    out.iterations = iter + 1;
    const double gnorm2 = real_inner(rgrad, rgrad);
    if (gnorm2 < 1e-28) {
      out.converged = true;
      break;
    }
    ComplexMatrix trial;
    double trial_value = 0.0;
    bool accepted = false;
    for (int bt = 0; bt < kMaxBacktracks; ++bt) {
      trial = polar_isometry(out.u - step * rgrad);
      trial_value = f(trial, trial_egrad);
      if (std::isfinite(trial_value) && trial_value <= out.value - kArmijo * step * gnorm2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      out.converged = true;
      break;
    }
    const ComplexMatrix trial_rgrad = riemannian(trial, trial_egrad);
    const ComplexMatrix s = trial - out.u;
    const ComplexMatrix y = trial_rgrad - rgrad;
    const double sy = std::abs(real_inner(s, y));
    const double ss = real_inner(s, s);
    step = sy > 0.0 ? std::clamp(ss / sy, 1e-10, 1e6) : std::min(1e6, step * 2.0);

    const double before = out.value;
    out.u = std::move(trial);
    out.value = trial_value;
    rgrad = trial_rgrad;
    stalled = small_change(before, out.value, settings.objective_tolerance) ? stalled + 1 : 0;
    if (stalled >= kStallIterations) {
      out.converged = true;
      break;
    }
  }
  return out;
}

int worker_count() {
  if (const char* env = std::getenv("SUMCAP_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace sumcap::optim
